#include "clak/diagcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace clak {

namespace {

void require_outside(const Triangulation& t, const Diagonal& d) {
  if (t.contains(d))
    throw std::invalid_argument("diagonal " + d.str() +
                                " lies in the triangulation");
}

}  // namespace

int hom_dim_diagonals(const Triangulation& t, const Diagonal& d,
                      const Diagonal& d2) {
  require_outside(t, d);
  require_outside(t, d2);
  const int m = t.polygon();
  for (int k : t.support(d)) {
    if (!crosses(t.diagonal(k), d2)) continue;
    const Diagonal& c = t.diagonal(k);
    for (const auto& [v1, v2] : {std::pair{c.a(), c.b()}, std::pair{c.b(), c.a()}}) {
      // Positions counterclockwise from v1; crossing places exactly one
      // endpoint of each argument strictly inside each arc of c.
      const auto rel = [&](int v) { return (v - v1 + m) % m; };
      const int cut = rel(v2);
      const auto split = [&](const Diagonal& x) {
        // (inside-arc endpoint, other endpoint) relative to (v1, v2).
        const int ra = rel(x.a());
        const int rb = rel(x.b());
        return ra < cut ? std::pair{ra, rb} : std::pair{rb, ra};
      };
      const auto [u1, u2] = split(d);
      const auto [w1, w2] = split(d2);
      if (u1 >= 1 && u1 <= w1 && w1 < cut && u2 <= w2) return 1;
    }
  }
  return 0;
}

int mesh_normal_form_oracle(const Triangulation& t, const Diagonal& d,
                            const Diagonal& d2) {
  require_outside(t, d);
  require_outside(t, d2);
  const int n = t.rank();
  const int m = t.polygon();
  // Lift the endpoints to integers so each elementary move adds one to a
  // coordinate. A pivoting path is a monotone staircase from (a,b) to a
  // lift (x0,y0) of the target, the exchange relations identify all
  // staircases between the same corners, and a staircase term vanishes as
  // soon as it meets a border edge (gap 1) or a member of t. The class is
  // therefore nonzero iff some target lift spans a rectangle that stays
  // strictly between the border gaps and avoids t entirely.
  for (const auto& [a, b] : {std::pair{d.a(), d.b()}, std::pair{d.b(), d.a() + m}}) {
    for (const auto& [c, e] :
         {std::pair{d2.a(), d2.b()}, std::pair{d2.b(), d2.a() + m}}) {
      for (int s = 0; s <= 2; ++s) {
        const int x0 = c + s * m, y0 = e + s * m;
        if (x0 < a || y0 < b) continue;
        if (b - x0 < 2) continue;       // bottom-right corner hits a border
        if (y0 - a > m - 2) continue;   // top-left corner wraps past one
        bool clear = true;
        for (int x = a; x <= x0 && clear; ++x)
          for (int y = b; y <= y0 && clear; ++y)
            clear = !t.contains(Diagonal(n, x % m, y % m));
        if (clear) return 1;
      }
    }
  }
  return 0;
}

std::string OrbitIndex::str() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

OrbitIndex orbit_index(int rank, int i, int j) {
  const int m = polygon_vertices(rank);
  if (j < 1 || j > rank)
    throw std::invalid_argument("orbit index height " + std::to_string(j) +
                                " outside 1.." + std::to_string(rank));
  const auto reduce = [&](int x) { return ((x % m) + m) % m; };
  const OrbitIndex direct{reduce(i), j};
  const OrbitIndex glided{reduce(i + j + 1), rank + 1 - j};
  return std::min(direct, glided);
}

OrbitIndex kappa_of_diagonal(const Diagonal& d) {
  return orbit_index(d.rank(), d.a(), d.b() - d.a() - 1);
}

OrbitIndex shift(int rank, const OrbitIndex& idx) {
  const OrbitIndex c = orbit_index(rank, idx.i, idx.j);
  return orbit_index(rank, c.i + c.j, rank + 1 - c.j);
}

bool orbit_region_contains(int rank, int rep_i, int rep_j, int x, int y) {
  if (rep_j < 1 || rep_j > rank)
    throw std::invalid_argument("orbit representative height out of range");
  // Column x = rep_i + t for 0 <= t <= rep_j - 1 admits heights
  // rep_j - t .. rank - t; both slanted sides have slope -1.
  const int off = x - rep_i;
  return off >= 0 && off <= rep_j - 1 && y >= rep_j - off && y <= rank - off;
}

int orbit_hom_dim_at(int rank, int rep_i, int rep_j, const OrbitIndex& m2) {
  const int m = polygon_vertices(rank);
  if (rep_j < 1 || rep_j > rank)
    throw std::invalid_argument("orbit representative height out of range");
  // Representatives of m2 with column in range: both glide shapes, all
  // translations by n+3.
  const OrbitIndex c2 = orbit_index(rank, m2.i, m2.j);
  const std::pair<int, int> shapes[2] = {
      {c2.i, c2.j}, {c2.i + c2.j + 1, rank + 1 - c2.j}};
  for (const auto& [si, sj] : shapes) {
    int x = si % m;
    while (x < rep_i) x += m;
    for (; x <= rep_i + rep_j - 1; x += m)
      if (orbit_region_contains(rank, rep_i, rep_j, x, sj)) return 1;
  }
  return 0;
}

int orbit_hom_dim(int rank, const OrbitIndex& m, const OrbitIndex& m2) {
  const OrbitIndex c = orbit_index(rank, m.i, m.j);
  return orbit_hom_dim_at(rank, c.i, c.j, m2);
}

int ext1(const Diagonal& d, const Diagonal& d2) {
  if (d.rank() != d2.rank())
    throw std::invalid_argument("ext1: mismatched polygon ranks");
  const int n = d.rank();
  return orbit_hom_dim(n, kappa_of_diagonal(d), shift(n, kappa_of_diagonal(d2)));
}

}  // namespace clak
