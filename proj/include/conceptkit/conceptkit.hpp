#pragma once

// Umbrella header for the conceptkit library.

#include "conceptkit/bitset.hpp"
#include "conceptkit/carrier.hpp"
#include "conceptkit/classic.hpp"
#include "conceptkit/dm.hpp"
#include "conceptkit/enriched.hpp"
#include "conceptkit/equivalence.hpp"
#include "conceptkit/errors.hpp"
#include "conceptkit/gen.hpp"
#include "conceptkit/io.hpp"
#include "conceptkit/laws.hpp"
#include "conceptkit/monotone_map.hpp"
#include "conceptkit/preorder.hpp"
#include "conceptkit/relation.hpp"
#include "conceptkit/summation.hpp"
