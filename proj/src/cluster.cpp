#include "clak/cluster.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace clak {

std::string Root::str() const {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coeffs[i]);
  }
  return s + "]";
}

std::optional<int> negative_simple_index(const Root& r) {
  int where = -1;
  for (size_t i = 0; i < r.coeffs.size(); ++i) {
    if (r.coeffs[i] == 0) continue;
    if (r.coeffs[i] != -1 || where >= 0) return std::nullopt;
    where = static_cast<int>(i);
  }
  if (where < 0) return std::nullopt;
  return where;
}

void check_root(int rank, const Root& r) {
  if (static_cast<int>(r.coeffs.size()) != rank)
    throw std::invalid_argument("root has wrong rank");
  if (negative_simple_index(r)) return;
  int start = -1;
  int end = -1;
  for (int i = 0; i < rank; ++i) {
    if (r.coeffs[i] == 0) continue;
    if (r.coeffs[i] != 1)
      throw std::invalid_argument("not an almost positive root: " + r.str());
    if (start < 0) start = i;
    end = i;
  }
  if (start < 0)
    throw std::invalid_argument("zero vector is not a root");
  for (int i = start; i <= end; ++i)
    if (r.coeffs[i] != 1)
      throw std::invalid_argument("positive root support has a gap: " + r.str());
}

std::vector<Root> almost_positive_roots(int rank) {
  std::vector<Root> out;
  for (int i = 0; i < rank; ++i) {
    Root r{std::vector<int>(rank, 0)};
    r.coeffs[i] = -1;
    out.push_back(std::move(r));
  }
  for (int a = 0; a < rank; ++a)
    for (int b = a; b < rank; ++b) {
      Root r{std::vector<int>(rank, 0)};
      for (int i = a; i <= b; ++i) r.coeffs[i] = 1;
      out.push_back(std::move(r));
    }
  return out;
}

Root root_of_diagonal(const Diagonal& d) {
  const int n = d.rank();
  const Triangulation base = Triangulation::snake(n);
  Root r{std::vector<int>(n, 0)};
  const int k = base.index_of(d);
  if (k >= 0) {
    r.coeffs[k] = -1;
    return r;
  }
  for (int pos : base.support(d)) r.coeffs[pos] = 1;
  check_root(n, r);
  return r;
}

Diagonal diagonal_of_root(int rank, const Root& r) {
  check_root(rank, r);
  const Triangulation base = Triangulation::snake(rank);
  if (auto i = negative_simple_index(r)) return base.diagonal(*i);
  for (const auto& d : all_diagonals(rank)) {
    if (base.contains(d)) continue;
    bool match = true;
    const auto supp = base.support(d);
    for (int i = 0; i < rank; ++i) {
      const bool crossed =
          std::binary_search(supp.begin(), supp.end(), i);
      if (crossed != (r.coeffs[i] == 1)) {
        match = false;
        break;
      }
    }
    if (match) return d;
  }
  throw std::logic_error("no diagonal realizes root " + r.str());
}

namespace {

// Simple reflection at 1-based index i for the A_n Cartan matrix.
void reflect(int rank, std::vector<int>& v, int i) {
  const int left = (i >= 2) ? v[i - 2] : 0;
  const int right = (i <= rank - 1) ? v[i] : 0;
  v[i - 1] = left + right - v[i - 1];
}

}  // namespace

Root tau(int rank, const Root& r, int sign, TauConvention conv) {
  check_root(rank, r);
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("tau sign must be +1 or -1");
  // 1-based index i is in the plus class iff (i odd) == conv.odds_are_plus.
  const bool plus_class_odd = conv.odds_are_plus == (sign == 1);
  if (auto k = negative_simple_index(r)) {
    const bool k_in_acting_class = ((*k + 1) % 2 == 1) == plus_class_odd;
    if (!k_in_acting_class) return r;
  }
  Root out = r;
  for (int i = 1; i <= rank; ++i)
    if ((i % 2 == 1) == plus_class_odd) reflect(rank, out.coeffs, i);
  check_root(rank, out);
  return out;
}

int compatibility_degree(int rank, const Root& a, const Root& b,
                         TauConvention conv) {
  check_root(rank, a);
  check_root(rank, b);
  Root x = a;
  Root y = b;
  int sign = 1;
  const int cap = 2 * (rank + 3);
  for (int step = 0; step <= cap; ++step) {
    if (auto k = negative_simple_index(x)) return std::max(y.coeffs[*k], 0);
    x = tau(rank, x, sign, conv);
    y = tau(rank, y, sign, conv);
    sign = -sign;
  }
  throw std::logic_error("compatibility reduction exceeded its step budget");
}

Seed::Seed(const Triangulation& t)
    : tri_(t), b_(b_matrix(quiver_from_triangulation(t))) {
  for (int i = 0; i < t.rank(); ++i)
    vars_.push_back(LaurentPoly::variable(t.rank(), i));
}

const LaurentPoly& Seed::variable(int k) const {
  if (k < 0 || k >= static_cast<int>(vars_.size()))
    throw std::out_of_range("seed variable index out of range");
  return vars_[k];
}

Seed mutate_seed(const Seed& s, int k) {
  const int n = s.tri_.rank();
  if (k < 0 || k >= n) throw std::out_of_range("mutation index out of range");
  LaurentPoly plus = LaurentPoly::constant(n, 1);
  LaurentPoly minus = LaurentPoly::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    const int b = s.b_.at(i, k);
    if (b > 0) plus = plus * pow(s.vars_[i], b);
    if (b < 0) minus = minus * pow(s.vars_[i], -b);
  }
  Seed next = s;
  next.tri_ = s.tri_.flip(k).first;
  next.b_ = mutate_matrix(s.b_, k);
  next.vars_[k] = (plus + minus).exact_div(s.vars_[k]);
  return next;
}

LaurentPoly cluster_variable(const Triangulation& c, const Diagonal& d,
                             FlipStrategy strategy) {
  if (c.rank() != d.rank())
    throw std::invalid_argument("cluster_variable: mismatched ranks");
  const int walk_from = strategy == FlipStrategy::FromA ? d.a() : d.b();
  Seed seed(c);
  size_t crossings = c.support(d).size();
  while (crossings > 0) {
    // The first diagonal crossed on the walk from the chosen endpoint is
    // the side opposite that endpoint in one of its triangles; flipping
    // there replaces it by a diagonal through the endpoint, so the crossing
    // count always drops.
    const Triangulation& t = seed.triangulation();
    const auto tris = t.triangles();
    int pick = -1;
    for (int k : t.support(d)) {
      const Diagonal& e = t.diagonal(k);
      for (const auto& tri : tris) {
        bool match = true;
        for (int v : tri)
          if (v != walk_from && !e.has_endpoint(v)) {
            match = false;
            break;
          }
        if (match) {  // tri is exactly {walk_from, e.a, e.b}
          pick = k;
          break;
        }
      }
      if (pick >= 0) break;
    }
    if (pick < 0)
      throw std::logic_error("no crossed diagonal bounds the endpoint triangle");
    seed = mutate_seed(seed, pick);
    const size_t now = seed.triangulation().support(d).size();
    if (now >= crossings)
      throw std::logic_error("flip toward " + d.str() +
                             " failed to reduce crossings");
    crossings = now;
  }
  const int at = seed.triangulation().index_of(d);
  if (at < 0) throw std::logic_error("target diagonal missing after flips");
  return seed.variable(at);
}

std::vector<int> denominator_vector(const LaurentPoly& w) {
  return w.denominator();
}

std::vector<Seed> enumerate_seeds(int rank) {
  const auto key_of = [](const Triangulation& t) {
    std::vector<Diagonal> ds = t.diagonals();
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  std::vector<Seed> out;
  std::map<std::vector<Diagonal>, size_t> seen;
  out.emplace_back(Triangulation::snake(rank));
  seen[key_of(out[0].triangulation())] = 0;
  for (size_t head = 0; head < out.size(); ++head)
    for (int k = 0; k < rank; ++k) {
      const Seed next = mutate_seed(out[head], k);
      const auto key = key_of(next.triangulation());
      if (seen.find(key) == seen.end()) {
        seen[key] = out.size();
        out.push_back(next);
      }
    }
  return out;
}

}  // namespace clak
