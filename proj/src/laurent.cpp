#include "clak/laurent.hpp"

#include <algorithm>

namespace clak {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r))
    throw std::overflow_error("integer overflow in negation");
  return r;
}

LaurentPoly::LaurentPoly(int vars) : vars_(vars) {
  if (vars < 1) throw std::invalid_argument("need at least one variable");
}

LaurentPoly LaurentPoly::constant(int vars, std::int64_t c) {
  LaurentPoly p(vars);
  if (c != 0) p.terms_[std::vector<int>(vars, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int vars, int index) {
  LaurentPoly p(vars);
  if (index < 0 || index >= vars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> e(vars, 0);
  e[index] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, std::int64_t c) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  if (c != 0) p.terms_[std::move(exponents)] = c;
  return p;
}

void LaurentPoly::add_term(const std::vector<int>& e, std::int64_t c) {
  if (c == 0) return;
  const auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = checked_neg(c);
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("mixed variable counts in addition");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("mixed variable counts in multiplication");
  LaurentPoly r(vars_);
  std::vector<int> e(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, checked_mul(c1, c2));
    }
  return r;
}

std::vector<int> LaurentPoly::min_exponents() const {
  std::vector<int> mins(vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (first) {
      mins = e;
      first = false;
    } else {
      for (int i = 0; i < vars_; ++i) mins[i] = std::min(mins[i], e[i]);
    }
  }
  return mins;
}

std::vector<int> LaurentPoly::denominator() const {
  std::vector<int> d = min_exponents();
  for (int& x : d) x = std::max(0, -x);
  return d;
}

LaurentPoly::Terms LaurentPoly::numerator() const {
  const std::vector<int> d = denominator();
  Terms shifted;
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2 = e;
    for (int i = 0; i < vars_; ++i) e2[i] += d[i];
    shifted[std::move(e2)] = c;
  }
  return shifted;
}

namespace {

// Exact division of polynomial term maps (all exponents >= 0) by repeated
// cancellation of lexicographically leading terms.
LaurentPoly::Terms divide_poly_terms(int vars, LaurentPoly::Terms num,
                                     const LaurentPoly::Terms& den) {
  LaurentPoly::Terms quot;
  const auto& [lead_e, lead_c] = *den.rbegin();
  while (!num.empty()) {
    const auto& [top_e, top_c] = *num.rbegin();
    std::vector<int> qe(vars);
    for (int i = 0; i < vars; ++i) {
      qe[i] = top_e[i] - lead_e[i];
      if (qe[i] < 0) throw division_error("inexact polynomial division");
    }
    if (top_c % lead_c != 0)
      throw division_error("inexact polynomial division");
    const std::int64_t qc = top_c / lead_c;
    quot[qe] = qc;
    // num -= q-term * den
    for (const auto& [e, c] : den) {
      std::vector<int> e2(vars);
      for (int i = 0; i < vars; ++i) e2[i] = e[i] + qe[i];
      const auto it = num.find(e2);
      const std::int64_t delta = checked_neg(checked_mul(qc, c));
      if (it == num.end()) {
        num[std::move(e2)] = delta;
      } else {
        it->second = checked_add(it->second, delta);
        if (it->second == 0) num.erase(it);
      }
    }
  }
  return quot;
}

}  // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("mixed variable counts in division");
  if (o.is_zero()) throw division_error("division by zero");
  if (is_zero()) return LaurentPoly(vars_);
  // Shift both operands into the polynomial range, divide there, undo the
  // shift on the quotient exponents.
  const std::vector<int> smin = min_exponents();
  const std::vector<int> omin = o.min_exponents();
  Terms num;
  for (const auto& [e, c] : terms_) {
    std::vector<int> e2(vars_);
    for (int i = 0; i < vars_; ++i) e2[i] = e[i] - smin[i];
    num[std::move(e2)] = c;
  }
  Terms den;
  for (const auto& [e, c] : o.terms_) {
    std::vector<int> e2(vars_);
    for (int i = 0; i < vars_; ++i) e2[i] = e[i] - omin[i];
    den[std::move(e2)] = c;
  }
  Terms quot = divide_poly_terms(vars_, std::move(num), den);
  LaurentPoly r(vars_);
  for (const auto& [e, c] : quot) {
    std::vector<int> e2(vars_);
    for (int i = 0; i < vars_; ++i) e2[i] = e[i] + smin[i] - omin[i];
    r.terms_[std::move(e2)] = c;
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  const Terms num = numerator();
  const std::vector<int> den = denominator();
  const auto render_monomial = [&](const std::vector<int>& e,
                                   std::int64_t coeff, bool with_coeff) {
    std::string s;
    bool any = false;
    for (int i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      if (any) s += "*";
      s += "u" + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
      any = true;
    }
    if (!with_coeff) return s;
    if (!any) return std::to_string(coeff);
    if (coeff == 1) return s;
    if (coeff == -1) return "-" + s;
    return std::to_string(coeff) + "*" + s;
  };
  std::string top;
  for (auto it = num.rbegin(); it != num.rend(); ++it) {
    const std::string t = render_monomial(it->first, it->second, true);
    if (top.empty()) {
      top = t;
    } else if (!t.empty() && t[0] == '-') {
      top += " - " + t.substr(1);
    } else {
      top += " + " + t;
    }
  }
  const bool den_trivial =
      std::all_of(den.begin(), den.end(), [](int x) { return x == 0; });
  if (den_trivial) return top;
  if (num.size() > 1) top = "(" + top + ")";
  std::string bottom = render_monomial(den, 1, false);
  if (std::count_if(den.begin(), den.end(), [](int x) { return x != 0; }) > 1)
    bottom = "(" + bottom + ")";
  return top + " / " + bottom;
}

LaurentPoly substitute(const LaurentPoly& p, int index,
                       const LaurentPoly& value) {
  if (index < 0 || index >= p.vars())
    throw std::invalid_argument("substitute: variable index out of range");
  if (p.is_zero()) return p;
  // Collect p as a polynomial in the chosen variable with Laurent
  // coefficients, then evaluate by Horner; a negative lowest power turns
  // into one exact division at the end.
  int kmin = 0;
  int kmax = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    (void)c;
    kmin = first ? e[index] : std::min(kmin, e[index]);
    kmax = first ? e[index] : std::max(kmax, e[index]);
    first = false;
  }
  std::map<int, LaurentPoly> slices;
  for (const auto& [e, c] : p.terms()) {
    std::vector<int> e2 = e;
    const int k = e2[index];
    e2[index] = 0;
    const auto it = slices.find(k);
    if (it == slices.end())
      slices.emplace(k, LaurentPoly::monomial(std::move(e2), c));
    else
      it->second = it->second + LaurentPoly::monomial(std::move(e2), c);
  }
  LaurentPoly acc(p.vars());
  for (int k = kmax; k >= kmin; --k) {
    acc = acc * value;
    const auto it = slices.find(k);
    if (it != slices.end()) acc = acc + it->second;
  }
  if (kmin > 0) acc = acc * pow(value, kmin);
  if (kmin < 0) acc = acc.exact_div(pow(value, -kmin));
  return acc;
}

LaurentPoly pow(const LaurentPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly r = LaurentPoly::constant(p.vars(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace clak
