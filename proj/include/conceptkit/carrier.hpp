#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "conceptkit/bitset.hpp"
#include "conceptkit/errors.hpp"

namespace conceptkit {

/// A named, ordered set of element names. Element position determines the
/// row/column index of every relation over the carrier.
///
/// Carriers are immutable values: equality is structural (name plus element
/// list), with a shared-pointer fast path, so a carrier written to a file and
/// read back compares equal to the original.
class Carrier {
public:
  Carrier() : data_(empty_data()) {}

  Carrier(std::string name, std::vector<std::string> elements) {
    auto data = std::make_shared<Data>();
    data->name = std::move(name);
    data->elements = std::move(elements);
    data->index.reserve(data->elements.size());
    for (std::size_t i = 0; i < data->elements.size(); ++i) {
      auto [it, fresh] = data->index.emplace(data->elements[i], i);
      if (!fresh)
        throw DuplicateElementError("duplicate element '" + data->elements[i] +
                                    "' in carrier '" + data->name + "'");
    }
    data_ = std::move(data);
  }

  Carrier(std::string name, std::initializer_list<const char*> elements)
      : Carrier(std::move(name),
                std::vector<std::string>(elements.begin(), elements.end())) {}

  const std::string& name() const { return data_->name; }
  std::size_t size() const { return data_->elements.size(); }
  const std::vector<std::string>& elements() const { return data_->elements; }
  const std::string& element(std::size_t i) const { return data_->elements[i]; }

  bool contains(std::string_view name) const {
    return data_->index.find(std::string(name)) != data_->index.end();
  }

  std::size_t index_of(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end())
      throw UnknownElementError("element '" + std::string(name) +
                                "' not in carrier '" + data_->name + "'");
    return it->second;
  }

  Bitset subset(std::initializer_list<const char*> names) const {
    Bitset b(size());
    for (const char* n : names) b.set(index_of(n));
    return b;
  }

  Bitset subset(const std::vector<std::string>& names) const {
    Bitset b(size());
    for (const auto& n : names) b.set(index_of(n));
    return b;
  }

  std::vector<std::string> names_of(const Bitset& b) const {
    std::vector<std::string> out;
    b.for_each([&](std::size_t i) { out.push_back(element(i)); });
    return out;
  }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->name == b.data_->name && a.data_->elements == b.data_->elements;
  }

private:
  struct Data {
    std::string name;
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
  };

  static std::shared_ptr<const Data> empty_data() {
    static const auto shared = std::make_shared<Data>();
    return shared;
  }

  std::shared_ptr<const Data> data_;
};

}  // namespace conceptkit
