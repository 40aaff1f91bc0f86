#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace clak {

// Multivariate Laurent polynomials over the integers. Terms live in a map
// from exponent vectors (entries may be negative) to nonzero coefficients,
// so equality of maps is equality of values. Coefficients are 64-bit and
// every arithmetic step is overflow-checked; std::overflow_error is thrown
// rather than wrapping.

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

// Thrown when exact division fails; in the mutation engine this signals a
// broken invariant and must never be swallowed.
struct division_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
  using Terms = std::map<std::vector<int>, std::int64_t>;

  // The zero polynomial in `vars` variables.
  explicit LaurentPoly(int vars);

  static LaurentPoly constant(int vars, std::int64_t c);
  static LaurentPoly variable(int vars, int index);
  static LaurentPoly monomial(std::vector<int> exponents, std::int64_t c);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;

  // Exact quotient; throws division_error if o is zero or does not divide.
  LaurentPoly exact_div(const LaurentPoly& o) const;

  // Smallest exponent of each variable over all terms (zero vector for the
  // zero polynomial). Negated entries are the true denominator exponents.
  std::vector<int> min_exponents() const;

  // Normalized fraction view: `denominator()` clamps the true exponents at
  // zero, and `numerator()` shifts every term by it, so the fraction is in
  // lowest terms with a monomial denominator.
  std::vector<int> denominator() const;
  Terms numerator() const;

  // Rendering like "(1 + u1*u2) / (u1*u2^2)" with 1-based variable names.
  std::string str() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void add_term(const std::vector<int>& e, std::int64_t c);

  int vars_;
  Terms terms_;
};

// p with variable `index` replaced by `value`; negative powers of the
// variable turn into exact divisions by `value` and inherit its exactness
// guarantees.
LaurentPoly substitute(const LaurentPoly& p, int index, const LaurentPoly& value);

LaurentPoly pow(const LaurentPoly& p, int e);

}  // namespace clak
