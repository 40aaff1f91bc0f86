#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clak {

// Exhaustive desk-scale verification suites. Each returns a report rather
// than throwing on mathematical failure, so callers can render or exit.

struct SuiteReport {
  std::string suite;
  int n = 0;
  long long checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  void fail(const std::string& what);
};

// Every triangulation has n(n+1)/2 indecomposables, matched bijectively by
// crossing supports, with theta and phi mutually inverse.
SuiteReport verify_indec_counts(int n);

// Denominator exponents of every cluster variable against the crossing
// vector and the matched dimension vector, over every cluster; also checks
// flip-strategy independence and reports numerator positivity.
SuiteReport verify_denominators(int n);

// Module-side and geometric Hom agree for all pairs over all
// triangulations; optionally the pivoting-path oracle as a third route.
SuiteReport verify_homs(int n, bool with_mesh_oracle);

// Quiver mutation matches the flipped triangulation's quiver, matrix
// mutation commutes with quiver extraction, and the structural relation
// finder reproduces the per-triangle relations.
SuiteReport verify_flip_mutation(int n);

// Projectives and injectives from rotation against the path-closure route,
// translate defined exactly off projectives, mesh in/out symmetry and
// dimension additivity, arrows carrying nonzero Hom.
SuiteReport verify_ar(int n);

// Orbit index classes: counting, well-definedness of kappa and shift,
// representative independence, ext1 = crossing, and agreement with the fan
// module category on unshifted indices.
SuiteReport verify_orbit(int n);

// Exchange-exponent checks: (a) constancy across clusters, (b) invariance
// under both involutions, (c) zigzag exponents equal root coefficients,
// (d) exponents equal the compatibility degree, (e) connectivity of the
// flip graph with a diagonal pinned, (f) involutions map clusters to
// clusters.
SuiteReport verify_lemmas(int n);

// Triangulation census against the Catalan recurrence, plus support and
// intersection connectivity when asked.
SuiteReport verify_counts(int n, bool with_connectivity);

// Alternating involution orbits reach a negative simple within 2(n+3)
// applications from either starting sign; involutivity, symmetry of the
// compatibility degree, its agreement with crossing, and independence from
// the orientation-class convention.
SuiteReport verify_tau_orbits(int n);

// Random mutation walks from the zigzag seed: every exchange divides
// exactly and the cached matrix tracks the triangulation's quiver.
SuiteReport verify_laurent_walks(int n, int walks, int walk_len,
                                 std::uint64_t rng_seed);

}  // namespace clak
