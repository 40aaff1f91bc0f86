#include "clak/quiver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace clak {

namespace {

void check_vertex(int n, int v, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range");
}

}  // namespace

Quiver::Quiver(int vertices, std::vector<std::pair<int, int>> arrows,
               std::vector<Relation> relations)
    : n_(vertices), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  if (n_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
  std::sort(arrows_.begin(), arrows_.end());
  for (size_t i = 0; i + 1 < arrows_.size(); ++i)
    if (arrows_[i] == arrows_[i + 1])
      throw std::invalid_argument("duplicate arrow");
  for (const auto& [from, to] : arrows_) {
    check_vertex(n_, from, "arrow");
    check_vertex(n_, to, "arrow");
    if (from == to) throw std::invalid_argument("loop arrow at vertex " +
                                                std::to_string(from));
  }
  for (const auto& [from, to] : arrows_)
    if (has_arrow(to, from))
      throw std::invalid_argument("2-cycle between " + std::to_string(from) +
                                  " and " + std::to_string(to));
  for (const auto& r : relations_) {
    const auto check_path = [&](const std::vector<int>& p) {
      if (p.size() < 3)
        throw std::invalid_argument("relation path shorter than two arrows");
      for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!has_arrow(p[i], p[i + 1]))
          throw std::invalid_argument("relation path uses a missing arrow " +
                                      std::to_string(p[i]) + "->" +
                                      std::to_string(p[i + 1]));
    };
    check_path(r.path);
    if (r.kind == Relation::Kind::Commute) check_path(r.path2);
    else if (!r.path2.empty())
      throw std::invalid_argument("zero relation with a second path");
  }
  std::sort(relations_.begin(), relations_.end());
}

bool Quiver::has_arrow(int from, int to) const {
  return std::binary_search(arrows_.begin(), arrows_.end(),
                            std::make_pair(from, to));
}

Quiver quiver_from_triangulation(const Triangulation& t) {
  const int n = t.rank();
  std::vector<std::pair<int, int>> arrows;
  for (const auto& tri : t.triangles()) {
    std::vector<int> sides;
    for (int k = 0; k < n; ++k) {
      const Diagonal& d = t.diagonal(k);
      int on = 0;
      for (int v : tri)
        if (d.has_endpoint(v)) ++on;
      if (on == 2) sides.push_back(k);
    }
    for (size_t a = 0; a < sides.size(); ++a)
      for (size_t b = a + 1; b < sides.size(); ++b) {
        // triangle_less(i, j) means position i precedes j around the shared
        // vertex, which orients the arrow j -> i.
        if (t.triangle_less(sides[a], sides[b]))
          arrows.emplace_back(sides[b], sides[a]);
        else
          arrows.emplace_back(sides[a], sides[b]);
      }
  }
  // Every oriented triangle contributes its three vanishing compositions.
  std::sort(arrows.begin(), arrows.end());
  std::vector<Relation> rels;
  const auto has = [&](int x, int y) {
    return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(x, y));
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::array<int, 3> cyc{};
        if (has(a, b) && has(b, c) && has(c, a)) cyc = {a, b, c};
        else if (has(a, c) && has(c, b) && has(b, a)) cyc = {a, c, b};
        else continue;
        for (int s = 0; s < 3; ++s)
          rels.push_back(Relation{Relation::Kind::ZeroPath,
                                  {cyc[s], cyc[(s + 1) % 3], cyc[(s + 2) % 3]},
                                  {}});
      }
  return Quiver(n, std::move(arrows), std::move(rels));
}

std::vector<Relation> shortest_path_relations(
    int vertices, const std::vector<std::pair<int, int>>& arrows) {
  if (vertices > 30)
    throw std::invalid_argument("shortest_path_relations: vertex count too large");
  std::vector<char> adj(static_cast<size_t>(vertices) * vertices, 0);
  for (const auto& [from, to] : arrows) {
    check_vertex(vertices, from, "shortest_path_relations");
    check_vertex(vertices, to, "shortest_path_relations");
    adj[from * vertices + to] = 1;
  }
  const auto has = [&](int x, int y) { return adj[x * vertices + y] != 0; };
  const auto linked = [&](int x, int y) { return has(x, y) || has(y, x); };

  // Vertex subsets whose induced underlying graph is a single cycle.
  std::vector<std::vector<int>> cycles;
  for (unsigned mask = 0; mask < (1u << vertices); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < vertices; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (vs.size() < 3) continue;
    bool degree_ok = true;
    for (int v : vs) {
      int deg = 0;
      for (int w : vs)
        if (v != w && linked(v, w)) ++deg;
      if (deg != 2) {
        degree_ok = false;
        break;
      }
    }
    if (!degree_ok) continue;
    // All degrees are 2; a connectivity walk separates one cycle from many.
    std::vector<int> seen{vs[0]};
    std::vector<int> stack{vs[0]};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : vs)
        if (v != w && linked(v, w) &&
            std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          stack.push_back(w);
        }
    }
    if (seen.size() == vs.size()) cycles.push_back(vs);
  }

  std::vector<Relation> rels;
  for (const auto& [from, to] : arrows) {
    // Oriented complements of the edge {from,to} inside induced cycles.
    std::vector<std::vector<int>> paths;
    for (const auto& cyc : cycles) {
      if (std::find(cyc.begin(), cyc.end(), from) == cyc.end()) continue;
      if (std::find(cyc.begin(), cyc.end(), to) == cyc.end()) continue;
      if (!linked(from, to)) continue;
      // Walk the cycle from `to` away from `from`; the step is forced since
      // every vertex of an induced cycle has exactly two neighbors in it.
      std::vector<int> path{to};
      int prev = from;
      int cur = to;
      while (cur != from) {
        int next = -1;
        for (int w : cyc)
          if (w != prev && w != cur && linked(cur, w)) {
            next = w;
            break;
          }
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
      }
      if (path.back() != from) continue;
      bool oriented = true;
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!has(path[i], path[i + 1])) {
          oriented = false;
          break;
        }
      if (oriented && path.size() >= 3) paths.push_back(path);
    }
    if (paths.empty()) continue;
    std::sort(paths.begin(), paths.end());
    if (paths.size() == 1)
      rels.push_back(Relation{Relation::Kind::ZeroPath, paths[0], {}});
    else if (paths.size() == 2)
      rels.push_back(Relation{Relation::Kind::Commute, paths[0], paths[1]});
    else
      throw std::domain_error("arrow " + std::to_string(from) + "->" +
                              std::to_string(to) +
                              " has three or more shortest paths");
  }
  std::sort(rels.begin(), rels.end());
  return rels;
}

Quiver mutate_quiver(const Quiver& q, int k) {
  const int n = q.vertices();
  check_vertex(n, k, "mutate_quiver");
  std::vector<std::pair<int, int>> arrows;
  std::vector<std::pair<int, int>> in_k;
  std::vector<std::pair<int, int>> out_k;
  for (const auto& a : q.arrows()) {
    if (a.second == k) {
      in_k.push_back(a);
      arrows.emplace_back(a.second, a.first);
    } else if (a.first == k) {
      out_k.push_back(a);
      arrows.emplace_back(a.second, a.first);
    } else {
      arrows.push_back(a);
    }
  }
  for (const auto& [j, _] : in_k)
    for (const auto& [_2, l] : out_k) {
      const auto back = std::make_pair(l, j);
      const auto it = std::find(arrows.begin(), arrows.end(), back);
      if (it != arrows.end())
        arrows.erase(it);  // composing j -> k -> l cancels the arrow l -> j
      else
        arrows.emplace_back(j, l);
    }
  auto rels = shortest_path_relations(n, arrows);
  return Quiver(n, std::move(arrows), std::move(rels));
}

bool ExchangeMatrix::skew_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

ExchangeMatrix b_matrix(const Quiver& q) {
  ExchangeMatrix b(q.vertices());
  for (const auto& [from, to] : q.arrows()) {
    b.at(from, to) = 1;
    b.at(to, from) = -1;
  }
  return b;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k) {
  check_vertex(b.n, k, "mutate_matrix");
  ExchangeMatrix r(b.n);
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      if (i == k || j == k) {
        r.at(i, j) = -b.at(i, j);
      } else {
        const int ik = b.at(i, k);
        const int kj = b.at(k, j);
        r.at(i, j) = b.at(i, j) + (std::abs(ik) * kj + ik * std::abs(kj)) / 2;
      }
    }
  if (!r.skew_symmetric())
    throw std::logic_error("matrix mutation broke skew-symmetry");
  return r;
}

}  // namespace clak
