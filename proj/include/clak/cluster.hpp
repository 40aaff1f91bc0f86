#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clak/laurent.hpp"
#include "clak/polygon.hpp"
#include "clak/quiver.hpp"

namespace clak {

// Exact seed mutation for rank n, with the almost positive roots of A_n as
// the bookkeeping device: negative simple roots name the zigzag base
// cluster, positive roots name everything else.

// A root as its coefficient vector over the simple roots: either minus a
// unit vector or a 0/1 vector supported on a nonempty interval.
struct Root {
  std::vector<int> coeffs;

  std::string str() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

// 0-based index i when the root is -alpha_(i+1); nullopt otherwise.
std::optional<int> negative_simple_index(const Root& r);

// Validates the shape (negative simple or interval of ones).
void check_root(int rank, const Root& r);

// All almost positive roots: the n negative simples, then the positive
// interval roots in lexicographic order of (start, end).
std::vector<Root> almost_positive_roots(int rank);

// Zigzag members map to negative simples; any other diagonal maps to the
// positive root supported on the zigzag positions it crosses.
Root root_of_diagonal(const Diagonal& d);
Diagonal diagonal_of_root(int rank, const Root& r);

// Which alternating-orientation class the odd vertices belong to. The
// default puts them in the plus class; both choices must behave the same and
// the tests exercise that.
struct TauConvention {
  bool odds_are_plus = true;
};

// The involutions tau_+ (sign > 0) and tau_-: negative simples of the
// opposite class stay fixed, everything else gets the product of the simple
// reflections in the chosen class.
Root tau(int rank, const Root& r, int sign, TauConvention conv = {});

// Nonnegative pairing of almost positive roots; computed by alternating
// tau_+ and tau_- on both arguments until the first becomes a negative
// simple, which is guaranteed within 2(n+3) steps (std::logic_error beyond).
int compatibility_degree(int rank, const Root& a, const Root& b,
                         TauConvention conv = {});

// A cluster with its exchange matrix and variables. Variables are Laurent
// polynomials in the coordinates of the seed this one was grown from by
// mutation; a fresh seed's variables are the coordinates themselves.
class Seed {
public:
  explicit Seed(const Triangulation& t);

  const Triangulation& triangulation() const { return tri_; }
  const ExchangeMatrix& matrix() const { return b_; }
  const std::vector<LaurentPoly>& variables() const { return vars_; }
  const LaurentPoly& variable(int k) const;

  friend bool operator==(const Seed&, const Seed&) = default;

private:
  friend Seed mutate_seed(const Seed& s, int k);

  Triangulation tri_;
  ExchangeMatrix b_;
  std::vector<LaurentPoly> vars_;
};

// Flip position k, mutate the matrix, and exchange the variable: the new
// one is (product over positive column entries + product over negative
// ones) divided exactly by the old. A failed division means the Laurent
// property broke and surfaces as division_error.
Seed mutate_seed(const Seed& s, int k);

// Which endpoint of the target diagonal guides the flip sequence.
enum class FlipStrategy { FromA, FromB };

// The variable of d in the coordinates of cluster c: flip the crossed
// diagonal nearest the chosen endpoint until d joins the triangulation; the
// crossing count drops by one each step. Members of c return their own
// coordinate.
LaurentPoly cluster_variable(const Triangulation& c, const Diagonal& d,
                             FlipStrategy strategy = FlipStrategy::FromA);

// Clamped denominator exponents of the normalized fraction, one per cluster
// position. Signed exponents come from LaurentPoly::min_exponents.
std::vector<int> denominator_vector(const LaurentPoly& w);

// Breadth-first closure of the zigzag seed under mutation, one seed per
// distinct diagonal set, in deterministic discovery order. Variables stay
// expressed in the zigzag coordinates.
std::vector<Seed> enumerate_seeds(int rank);

}  // namespace clak
