#pragma once

#include <string>
#include <vector>

#include "clak/polygon.hpp"

namespace clak {

// The category of diagonals attached to a triangulation, and the larger
// orbit-indexed category in which every diagonal lives regardless of the
// triangulation. Hom spaces here are 0- or 1-dimensional.

// Geometric Hom criterion for two diagonals outside the triangulation:
// 1 iff some crossed position i admits endpoint labelings v1, v2 of its
// diagonal and u1 <= u'1, u2 <= u'2 of the arguments with the circular order
// v1 < u1 <= u'1 < v2 < u2 <= u'2 read counterclockwise from v1.
// Throws std::invalid_argument when either argument lies in t.
int hom_dim_diagonals(const Triangulation& t, const Diagonal& d,
                      const Diagonal& d2);

// Independent route to the same number: 1 iff some two-segment pivoting
// path from d to d2 (first segment pivoting at an endpoint of d, second at
// the vertex where it meets d2) stays on diagonals outside t and off the
// border the whole way.
int mesh_normal_form_oracle(const Triangulation& t, const Diagonal& d,
                            const Diagonal& d2);

// Index (i, j) with 1 <= j <= n, taken modulo the glide identification
// (i, j) ~ (i+j+1, n+1-j); twice the glide is the translation i -> i+n+3.
// Instances are stored as the canonical representative: lexicographically
// smallest among the class members with 0 <= i <= n+2.
struct OrbitIndex {
  int i = 0;
  int j = 1;

  std::string str() const;

  friend bool operator==(const OrbitIndex&, const OrbitIndex&) = default;
  friend auto operator<=>(const OrbitIndex&, const OrbitIndex&) = default;
};

// Canonical representative of the class of (i, j) at rank n.
OrbitIndex orbit_index(int rank, int i, int j);

// The class of the diagonal [a, b]: orbit_index(n, a, b - a - 1) computed
// from either endpoint labeling (the two agree under the glide).
OrbitIndex kappa_of_diagonal(const Diagonal& d);

// Suspension on classes: (i, j) -> (i + j, n + 1 - j).
OrbitIndex shift(int rank, const OrbitIndex& idx);

// Hom dimension between classes: fix the canonical representative (i, j) of
// m; the answer is 1 iff some representative of m2 lies in the closed
// parallelogram with corners (i, j), (i, n), (i+j-1, 1), (i+j-1, n-j+1).
int orbit_hom_dim(int rank, const OrbitIndex& m, const OrbitIndex& m2);

// Same computation from an explicit representative instead of the canonical
// one; exposed so representative-independence can be tested.
int orbit_hom_dim_at(int rank, int rep_i, int rep_j, const OrbitIndex& m2);

// Membership of the single lattice point (x, y) in the closed parallelogram
// spanned from the representative (rep_i, rep_j); the class-level Hom above
// ranges this test over all representatives of the target. On unshifted
// indices it reproduces module Hom over the linear quiver directly.
bool orbit_region_contains(int rank, int rep_i, int rep_j, int x, int y);

// Extensions detect crossing: ext1(d, d2) = Hom(kappa(d), shift(kappa(d2))).
int ext1(const Diagonal& d, const Diagonal& d2);

}  // namespace clak
