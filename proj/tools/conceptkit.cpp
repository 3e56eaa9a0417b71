// conceptkit command line: concept lattices, contextual closures, sums,
// completions and the algebraic law suites over .cxt/.csv context files.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "conceptkit/conceptkit.hpp"

namespace ck = conceptkit;

namespace {

struct GlobalOptions {
  std::string format = "text";
  bool oracle = false;

  bool json() const { return format == "json"; }

  ck::EnumerationOptions enumeration() const {
    ck::EnumerationOptions opt;
    opt.use_oracle = oracle;
    if (const char* bound = std::getenv("CONCEPTKIT_ORACLE_BOUND"))
      opt.oracle_bound = static_cast<std::size_t>(std::strtoull(bound, nullptr, 10));
    return opt;
  }
};

void print_json(const ck::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_concepts(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::ConceptLattice lattice = ck::enumerate_concepts(ctx, g.enumeration());
  if (g.json()) {
    print_json(ck::concepts_json(lattice));
    return 0;
  }
  std::cout << lattice.size() << " concepts\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    std::cout << "#" << i << "  extent=" << ck::render_set(lattice.at(i).extent, ctx.entities)
              << "  intent=" << ck::render_set(lattice.at(i).intent, ctx.attributes)
              << "\n";
  return 0;
}

int run_closure(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::EnrichedContext closure = ck::contextual_closure(ctx.incidence);
  if (g.json()) {
    print_json(ck::context_json(closure));
    return 0;
  }
  std::cout << "source order:\n" << ck::render_matrix(closure.source_order().relation())
            << "\nincidence:\n" << ck::render_matrix(closure.forward())
            << "\nnegation:\n" << ck::render_matrix(closure.backward())
            << "\ntarget order:\n" << ck::render_matrix(closure.target_order().relation());
  return 0;
}

int run_negation(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::Relation neg = ck::negation(ctx.incidence);
  if (g.json()) {
    print_json(ck::relation_json(neg));
    return 0;
  }
  std::cout << ck::render_matrix(neg);
  return 0;
}

int run_sum(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::SumOrder s = ck::sum(ck::contextual_closure(ctx.incidence));
  if (g.json()) {
    print_json(ck::sum_json(s));
    return 0;
  }
  std::cout << ck::render_matrix(s.order().relation());
  return 0;
}

int run_dm(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::EnrichedContext closure = ck::contextual_closure(ctx.incidence);
  ck::QuadLattice dm = ck::dm_of_sum(closure, g.enumeration());
  if (g.json()) {
    print_json(ck::quad_json(dm));
    return 0;
  }
  std::cout << dm.size() << " concepts\n";
  const ck::Carrier& e = ctx.entities;
  const ck::Carrier& a = ctx.attributes;
  for (std::size_t i = 0; i < dm.size(); ++i) {
    const auto& q = dm.at(i);
    std::cout << "#" << i << "  phi0=" << ck::render_set(q.phi0, e)
              << "  phi1=" << ck::render_set(q.phi1, a)
              << "  psi0=" << ck::render_set(q.psi0, e)
              << "  psi1=" << ck::render_set(q.psi1, a) << "\n";
  }
  return 0;
}

int run_verify(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  ck::EquivalenceResult r = ck::verify_equivalence(ctx.incidence, g.enumeration());
  if (g.json())
    print_json(ck::equivalence_json(r));
  else if (r.ok())
    std::cout << "ISOMORPHIC (" << r.lattice.size() << " concepts)\n";
  else {
    std::cout << "NOT ISOMORPHIC\n";
    for (const auto& c : r.counterexamples) std::cout << "  " << c << "\n";
  }
  return r.ok() ? 0 : 1;
}

int run_laws(std::uint64_t seed, std::size_t size, std::size_t instances,
             const GlobalOptions& g) {
  ck::LawOptions opt;
  opt.seed = seed;
  opt.max_size = size;
  opt.instances = instances;
  ck::LawReport report = ck::check_all_laws(opt);
  if (g.json()) {
    print_json(ck::laws_json(report, seed));
  } else {
    for (const auto& l : report.laws) {
      if (l.failed)
        std::cout << "FAIL " << l.name << " (" << l.failed << " of "
                  << (l.passed + l.failed) << " instances)\n      " << l.counterexample
                  << "\n";
      else
        std::cout << "pass " << l.name << " (" << l.passed << " instances)\n";
    }
    std::cout << (report.all_pass() ? "all laws passed"
                                    : std::to_string(report.total_failures()) +
                                          " failing instances")
              << "\n";
  }
  return report.all_pass() ? 0 : 1;
}

int run_dot(const std::string& file, const GlobalOptions& g) {
  ck::ClassicContext ctx = ck::load_context(file).classic();
  std::cout << ck::emit_dot(ck::enumerate_concepts(ctx, g.enumeration()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order-enriched formal concept analysis toolkit"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", global.oracle, "force the brute-force enumerators");

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "context file (.cxt or .csv)")->required();
  };

  auto* concepts = app.add_subcommand("concepts", "list the concept lattice");
  add_file(concepts);
  auto* closure = app.add_subcommand("closure", "print the contextual closure quadrants");
  add_file(closure);
  auto* negation = app.add_subcommand("negation", "print the negation relation");
  add_file(negation);
  auto* sum = app.add_subcommand("sum", "print the sum order matrix");
  add_file(sum);
  auto* dm = app.add_subcommand("dm", "list the completion of the sum as quadruples");
  add_file(dm);
  auto* verify = app.add_subcommand("verify",
                                    "check the lattice/completion isomorphism");
  add_file(verify);
  auto* dot = app.add_subcommand("dot", "emit the lattice as a DOT graph");
  add_file(dot);

  std::uint64_t seed = 7;
  std::size_t size = 5, instances = 200;
  auto* laws = app.add_subcommand("laws", "run the algebraic law suites");
  laws->add_option("--seed", seed, "random seed")->capture_default_str();
  laws->add_option("--size", size, "maximum carrier size")->capture_default_str();
  laws->add_option("--instances", instances, "random instances per law")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (concepts->parsed()) return run_concepts(file, global);
    if (closure->parsed()) return run_closure(file, global);
    if (negation->parsed()) return run_negation(file, global);
    if (sum->parsed()) return run_sum(file, global);
    if (dm->parsed()) return run_dm(file, global);
    if (verify->parsed()) return run_verify(file, global);
    if (dot->parsed()) return run_dot(file, global);
    if (laws->parsed()) return run_laws(seed, size, instances, global);
  } catch (const ck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
