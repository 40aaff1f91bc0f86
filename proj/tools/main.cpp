#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clak/cluster.hpp"
#include "clak/diagcat.hpp"
#include "clak/dot.hpp"
#include "clak/json_io.hpp"
#include "clak/polygon.hpp"
#include "clak/quiver.hpp"
#include "clak/repcat.hpp"
#include "clak/verify.hpp"

namespace {

using clak::ordered_json;

// Ranks above this need --allow-large: the exhaustive commands walk all
// Catalan-many triangulations and get slow quickly.
constexpr int kRankCap = 10;

struct Options {
  int n = 2;
  bool n_given = false;
  std::string tri_file;
  std::string format = "text";
  bool allow_large = false;
};

clak::Triangulation load_triangulation(const Options& o) {
  if (o.tri_file.empty()) return clak::Triangulation::snake(o.n);
  std::ifstream in(o.tri_file);
  if (!in) throw std::invalid_argument("cannot open " + o.tri_file);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw std::invalid_argument(o.tri_file + ": " + e.what());
  }
  const clak::Triangulation t = clak::triangulation_from_json(j);
  if (o.n_given && t.rank() != o.n)
    throw std::invalid_argument("--n " + std::to_string(o.n) +
                                " conflicts with rank " +
                                std::to_string(t.rank()) + " from " +
                                o.tri_file);
  return t;
}

void check_rank(int n, const Options& o) {
  if (n > kRankCap && !o.allow_large)
    throw std::invalid_argument("rank " + std::to_string(n) +
                                " exceeds the default cap " +
                                std::to_string(kRankCap) +
                                "; pass --allow-large to proceed");
}

std::string rel_str(const clak::Relation& rel) {
  const auto path = [](const std::vector<int>& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
      if (i) s += " -> ";
      s += std::to_string(p[i] + 1);
    }
    return s;
  };
  return rel.kind == clak::Relation::Kind::ZeroPath
             ? "zero: " + path(rel.path)
             : "commute: " + path(rel.path) + " = " + path(rel.path2);
}

int run_quiver(const Options& o) {
  const clak::Triangulation t = load_triangulation(o);
  check_rank(t.rank(), o);
  const clak::Quiver q = clak::quiver_from_triangulation(t);
  if (o.format == "dot") {
    std::cout << clak::quiver_dot(q, t);
  } else if (o.format == "json") {
    ordered_json j = clak::quiver_to_json(q);
    j["triangulation"] = clak::triangulation_to_json(t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "triangulation " << t.str() << "\n";
    for (int k = 0; k < t.rank(); ++k)
      std::cout << k + 1 << ": " << t.diagonal(k).str() << "\n";
    for (const auto& [a, b] : q.arrows())
      std::cout << a + 1 << " -> " << b + 1 << "\n";
    for (const clak::Relation& rel : q.relations())
      std::cout << rel_str(rel) << "\n";
  }
  return 0;
}

int run_indec(const Options& o) {
  const clak::Triangulation t = load_triangulation(o);
  check_rank(t.rank(), o);
  const clak::Quiver q = clak::quiver_from_triangulation(t);
  const auto modules = clak::enumerate_indecomposables(q);
  if (o.format == "dot")
    throw std::invalid_argument("indec has no dot format");
  if (o.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& m : modules) {
      ordered_json e;
      auto& supp = e["support"] = ordered_json::array();
      for (int v : m.support) supp.push_back(v + 1);
      const clak::Diagonal d = clak::phi(t, m);
      e["diagonal"] = {d.a(), d.b()};
      j.push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& m : modules)
      std::cout << m.str() << " " << clak::phi(t, m).str() << "\n";
  }
  return 0;
}

int run_ar(const Options& o) {
  const clak::Triangulation t = load_triangulation(o);
  check_rank(t.rank(), o);
  const clak::ARQuiver ar = clak::ar_quiver(t);
  if (o.format == "dot") {
    std::cout << clak::ar_dot(ar);
  } else if (o.format == "json") {
    std::cout << clak::ar_quiver_to_json(ar).dump(2) << "\n";
  } else {
    for (size_t i = 0; i < ar.modules.size(); ++i) {
      std::cout << i << ": " << ar.modules[i].str();
      if (ar.is_projective[i]) std::cout << " P";
      if (ar.is_injective[i]) std::cout << " I";
      if (ar.translate[i] >= 0)
        std::cout << " tau -> " << ar.modules[ar.translate[i]].str();
      std::cout << "\n";
    }
    for (const auto& [a, b] : ar.arrows)
      std::cout << ar.modules[a].str() << " -> " << ar.modules[b].str()
                << "\n";
  }
  return 0;
}

int run_variables(const Options& o) {
  const clak::Triangulation t = load_triangulation(o);
  check_rank(t.rank(), o);
  if (o.format == "dot")
    throw std::invalid_argument("variables has no dot format");
  ordered_json j = ordered_json::array();
  for (const clak::Diagonal& d : clak::all_diagonals(t.rank())) {
    const clak::LaurentPoly w = clak::cluster_variable(t, d);
    if (o.format == "json") {
      ordered_json e;
      e["diagonal"] = {d.a(), d.b()};
      e["variable"] = clak::laurent_to_json(w);
      j.push_back(std::move(e));
    } else {
      std::cout << d.str() << ": " << w.str() << "\n";
    }
  }
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  return 0;
}

int run_orbit(const Options& o) {
  const int n = o.n;
  check_rank(n, o);
  if (o.format == "dot")
    throw std::invalid_argument("orbit has no dot format");
  const auto diagonals = clak::all_diagonals(n);
  // Canonical class list in index order.
  std::vector<clak::OrbitIndex> classes;
  for (const clak::Diagonal& d : diagonals)
    classes.push_back(clak::kappa_of_diagonal(d));
  std::sort(classes.begin(), classes.end());
  if (o.format == "json") {
    ordered_json j;
    auto& ks = j["kappa"] = ordered_json::array();
    for (const clak::Diagonal& d : diagonals) {
      const clak::OrbitIndex c = clak::kappa_of_diagonal(d);
      ks.push_back({{"diagonal", {d.a(), d.b()}}, {"class", {c.i, c.j}}});
    }
    auto& hs = j["hom"] = ordered_json::array();
    for (const clak::OrbitIndex& a : classes)
      for (const clak::OrbitIndex& b : classes)
        hs.push_back({a.i, a.j, b.i, b.j, clak::orbit_hom_dim(n, a, b)});
    auto& es = j["ext"] = ordered_json::array();
    for (const clak::Diagonal& d : diagonals)
      for (const clak::Diagonal& e : diagonals)
        es.push_back({d.a(), d.b(), e.a(), e.b(), clak::ext1(d, e)});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const clak::Diagonal& d : diagonals)
      std::cout << "kappa " << d.str() << " = "
                << clak::kappa_of_diagonal(d).str() << "\n";
    for (const clak::OrbitIndex& a : classes)
      for (const clak::OrbitIndex& b : classes)
        std::cout << "hom " << a.str() << " " << b.str() << " = "
                  << clak::orbit_hom_dim(n, a, b) << "\n";
    for (const clak::Diagonal& d : diagonals)
      for (const clak::Diagonal& e : diagonals)
        std::cout << "ext " << d.str() << " " << e.str() << " = "
                  << clak::ext1(d, e) << "\n";
  }
  return 0;
}

int run_verify(const Options& o, const std::string& suite, int walk_len,
               std::uint64_t seed) {
  const int n = o.n;
  check_rank(n, o);
  std::vector<clak::SuiteReport> reports;
  const bool all = suite == "all";
  if (all) {
    reports.push_back(clak::verify_indec_counts(n));
    reports.push_back(clak::verify_flip_mutation(n));
    reports.push_back(clak::verify_counts(n, true));
    reports.push_back(clak::verify_tau_orbits(n));
  }
  if (all || suite == "denominators")
    reports.push_back(clak::verify_denominators(n));
  if (all || suite == "homs") reports.push_back(clak::verify_homs(n, true));
  if (all || suite == "ar") reports.push_back(clak::verify_ar(n));
  if (all || suite == "orbit") reports.push_back(clak::verify_orbit(n));
  if (all || suite == "lemmas") {
    reports.push_back(clak::verify_lemmas(n));
    reports.push_back(clak::verify_laurent_walks(n, 10, walk_len, seed));
  }
  if (reports.empty())
    throw std::invalid_argument(
        "unknown suite " + suite +
        " (expected denominators, homs, ar, orbit, lemmas, or all)");
  bool failed = false;
  if (o.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) j.push_back(clak::report_to_json(r));
    std::cout << j.dump(2) << "\n";
    for (const auto& r : reports) failed |= !r.ok();
  } else {
    for (const auto& r : reports) {
      std::cout << "suite " << r.suite << ": n=" << r.n
                << " checked=" << r.checked << " "
                << (r.ok() ? "ok" : "FAIL") << "\n";
      for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";
      for (const auto& note : r.notes) std::cout << "  note: " << note << "\n";
      failed |= !r.ok();
    }
  }
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangulation combinatorics of type A cluster algebras"};
  app.require_subcommand(1);

  Options o;
  std::string suite = "all";
  int walk_len = 25;
  std::uint64_t seed = 1;

  const auto add_common = [&](CLI::App* cmd, bool with_tri) {
    auto* nopt = cmd->add_option("--n,-n", o.n, "rank (polygon has n+3 vertices)");
    nopt->check(CLI::PositiveNumber);
    cmd->parse_complete_callback([&o, nopt] { o.n_given = nopt->count() > 0; });
    if (with_tri)
      cmd->add_option("--triangulation,-t", o.tri_file,
                      "JSON file with {\"n\": ..., \"diagonals\": [[a,b],...]}");
    cmd->add_option("--format,-f", o.format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd->add_flag("--allow-large", o.allow_large,
                  "permit ranks above " + std::to_string(kRankCap));
  };

  auto* quiver = app.add_subcommand("quiver", "exchange quiver with relations");
  add_common(quiver, true);
  auto* indec = app.add_subcommand("indec", "indecomposables and their diagonals");
  add_common(indec, true);
  auto* ar = app.add_subcommand("ar", "module quiver with translates");
  add_common(ar, true);
  auto* variables =
      app.add_subcommand("variables", "cluster variables of every diagonal");
  add_common(variables, true);
  auto* orbit = app.add_subcommand("orbit", "orbit classes, Hom and Ext tables");
  add_common(orbit, false);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, false);
  verify->add_option("--suite,-s", suite,
                     "denominators, homs, ar, orbit, lemmas, or all");
  verify->add_option("--walk", walk_len, "steps per random mutation walk")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random walk seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits cleanly; anything else is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(quiver)) return run_quiver(o);
    if (app.got_subcommand(indec)) return run_indec(o);
    if (app.got_subcommand(ar)) return run_ar(o);
    if (app.got_subcommand(variables)) return run_variables(o);
    if (app.got_subcommand(orbit)) return run_orbit(o);
    if (app.got_subcommand(verify)) return run_verify(o, suite, walk_len, seed);
  } catch (const clak::division_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
