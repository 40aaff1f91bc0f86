#include "clak/repcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace clak {

std::string IndecModule::str() const {
  std::string s = "{";
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(support[i] + 1);
  }
  return s + "}";
}

std::vector<int> dimension_vector(int vertices, const IndecModule& m) {
  std::vector<int> dim(vertices, 0);
  for (int v : m.support) {
    if (v < 0 || v >= vertices)
      throw std::invalid_argument("module support vertex out of range");
    dim[v] = 1;
  }
  return dim;
}

IndecModule theta(const Triangulation& t, const Diagonal& d) {
  if (t.contains(d))
    throw std::invalid_argument("diagonal " + d.str() +
                                " lies in the triangulation");
  return IndecModule{t.support(d)};
}

Diagonal phi(const Triangulation& t, const IndecModule& m) {
  for (const auto& d : all_diagonals(t.rank()))
    if (!t.contains(d) && t.support(d) == m.support) return d;
  throw std::invalid_argument("no diagonal has support " + m.str());
}

namespace {

bool induced_path(const Quiver& q, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  const auto linked = [&](int x, int y) {
    return q.has_arrow(x, y) || q.has_arrow(y, x);
  };
  int edges = 0;
  for (size_t i = 0; i < vs.size(); ++i) {
    int deg = 0;
    for (size_t j = 0; j < vs.size(); ++j)
      if (i != j && linked(vs[i], vs[j])) ++deg;
    if (deg > 2) return false;
    edges += deg;
  }
  edges /= 2;
  if (edges != static_cast<int>(vs.size()) - 1) return false;
  // Acyclic with the right edge count; connectivity remains.
  std::vector<int> seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : vs)
      if (w != v && linked(v, w) &&
          std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
  }
  return seen.size() == vs.size();
}

}  // namespace

std::vector<IndecModule> enumerate_indecomposables(const Quiver& q) {
  const int n = q.vertices();
  if (n > 30)
    throw std::invalid_argument("enumerate_indecomposables: rank too large");
  std::vector<IndecModule> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (induced_path(q, vs)) out.push_back(IndecModule{vs});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int hom_dim_modules(const Quiver& q, const IndecModule& m,
                    const IndecModule& m2) {
  const auto& s = m.support;
  const auto& s2 = m2.support;
  std::vector<int> both;
  std::set_intersection(s.begin(), s.end(), s2.begin(), s2.end(),
                        std::back_inserter(both));
  if (both.empty()) return 0;
  const auto in = [](const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
  };
  for (const auto& [from, to] : q.arrows()) {
    // No arrow from M's remainder into the intersection.
    if (in(s, from) && !in(both, from) && in(both, to)) return 0;
    // No arrow from the intersection into M's' remainder.
    if (in(both, from) && in(s2, to) && !in(both, to)) return 0;
  }
  return 1;
}

namespace {

bool zero_composite(const Quiver& q, int a, int b, int c) {
  for (const auto& r : q.relations())
    if (r.kind == Relation::Kind::ZeroPath && r.path.size() == 3 &&
        r.path[0] == a && r.path[1] == b && r.path[2] == c)
      return true;
  return false;
}

// Vertices reachable from i along oriented paths with no vanishing
// composition. `forward` follows arrows; otherwise they are traversed
// backwards, which computes the injective support.
IndecModule nonzero_path_closure(const Quiver& q, int i, bool forward) {
  if (i < 0 || i >= q.vertices())
    throw std::invalid_argument("vertex out of range");
  std::vector<int> reach{i};
  // State: (vertex, arrow used to get there); the composable next arrows
  // are those not completing a zero relation.
  std::vector<std::pair<int, int>> stack;  // (prev, cur)
  stack.emplace_back(-1, i);
  std::vector<std::pair<int, int>> visited = stack;
  while (!stack.empty()) {
    const auto [prev, cur] = stack.back();
    stack.pop_back();
    for (const auto& [from, to] : q.arrows()) {
      const int tail = forward ? from : to;
      const int head = forward ? to : from;
      if (tail != cur) continue;
      const bool dead =
          prev >= 0 && (forward ? zero_composite(q, prev, cur, head)
                                : zero_composite(q, head, cur, prev));
      if (dead) continue;
      const auto state = std::make_pair(cur, head);
      if (std::find(visited.begin(), visited.end(), state) != visited.end())
        continue;
      visited.push_back(state);
      stack.push_back(state);
      if (std::find(reach.begin(), reach.end(), head) == reach.end())
        reach.push_back(head);
    }
  }
  std::sort(reach.begin(), reach.end());
  return IndecModule{reach};
}

}  // namespace

IndecModule projective(const Quiver& q, int i) {
  return nonzero_path_closure(q, i, true);
}

IndecModule injective(const Quiver& q, int i) {
  return nonzero_path_closure(q, i, false);
}

std::optional<IndecModule> ar_translate(const Triangulation& t,
                                        const IndecModule& m) {
  const Diagonal moved = rotated(phi(t, m), -1);
  if (t.contains(moved)) return std::nullopt;
  return theta(t, moved);
}

ARQuiver ar_quiver(const Triangulation& t) {
  ARQuiver ar;
  ar.modules = enumerate_indecomposables(quiver_from_triangulation(t));
  const int count = static_cast<int>(ar.modules.size());
  const auto index_of = [&](const IndecModule& m) {
    const auto it = std::lower_bound(ar.modules.begin(), ar.modules.end(), m);
    if (it == ar.modules.end() || !(*it == m))
      throw std::logic_error("module " + m.str() + " missing from AR quiver");
    return static_cast<int>(it - ar.modules.begin());
  };
  for (int i = 0; i < count; ++i) {
    const Diagonal d = phi(t, ar.modules[i]);
    for (const auto& mv : pivot_moves(d))
      if (!t.contains(mv.target))
        ar.arrows.emplace_back(i, index_of(theta(t, mv.target)));
  }
  std::sort(ar.arrows.begin(), ar.arrows.end());

  std::vector<IndecModule> projectives;
  std::vector<IndecModule> injectives;
  for (int k = 0; k < t.rank(); ++k) {
    projectives.push_back(theta(t, rotated(t.diagonal(k), +1)));
    injectives.push_back(theta(t, rotated(t.diagonal(k), -1)));
  }
  ar.is_projective.assign(count, 0);
  ar.is_injective.assign(count, 0);
  ar.translate.assign(count, -1);
  for (int i = 0; i < count; ++i) {
    const auto& m = ar.modules[i];
    if (std::find(projectives.begin(), projectives.end(), m) !=
        projectives.end())
      ar.is_projective[i] = 1;
    if (std::find(injectives.begin(), injectives.end(), m) != injectives.end())
      ar.is_injective[i] = 1;
    if (auto tr = ar_translate(t, m)) ar.translate[i] = index_of(*tr);
  }
  return ar;
}

}  // namespace clak
