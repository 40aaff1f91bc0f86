#include "clak/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace clak {

int polygon_vertices(int rank) {
  if (rank < 1) throw std::invalid_argument("polygon rank must be >= 1");
  return rank + 3;
}

int vertex_mod(int rank, int v) {
  const int m = polygon_vertices(rank);
  int r = v % m;
  if (r < 0) r += m;
  return r;
}

Diagonal::Diagonal(int rank, int a, int b) : n_(rank) {
  const int m = polygon_vertices(rank);
  a_ = vertex_mod(rank, a);
  b_ = vertex_mod(rank, b);
  if (a_ > b_) std::swap(a_, b_);
  const int gap = b_ - a_;
  if (gap == 0 || gap == 1 || gap == m - 1)
    throw std::invalid_argument("diagonal endpoints " + std::to_string(a) +
                                "," + std::to_string(b) +
                                " are equal or adjacent");
}

std::optional<Diagonal> Diagonal::try_make(int rank, int a, int b) {
  const int m = polygon_vertices(rank);
  int ca = vertex_mod(rank, a);
  int cb = vertex_mod(rank, b);
  if (ca > cb) std::swap(ca, cb);
  const int gap = cb - ca;
  if (gap == 0 || gap == 1 || gap == m - 1) return std::nullopt;
  return Diagonal(rank, ca, cb);
}

int Diagonal::other_endpoint(int v) const {
  if (v == a_) return b_;
  if (v == b_) return a_;
  throw std::invalid_argument("vertex " + std::to_string(v) +
                              " is not an endpoint of " + str());
}

std::string Diagonal::str() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

bool crosses(const Diagonal& d1, const Diagonal& d2) {
  if (d1.rank() != d2.rank())
    throw std::invalid_argument("crosses: mismatched polygon ranks");
  if (d1.has_endpoint(d2.a()) || d1.has_endpoint(d2.b())) return false;
  // With canonical endpoints a < b, the chords cross iff exactly one
  // endpoint of d2 lies strictly between d1's endpoints.
  const auto inside = [&](int x) { return d1.a() < x && x < d1.b(); };
  return inside(d2.a()) != inside(d2.b());
}

Diagonal rotated(const Diagonal& d, int steps) {
  return Diagonal(d.rank(), d.a() + steps, d.b() + steps);
}

std::vector<PivotMove> pivot_moves(const Diagonal& d) {
  std::vector<PivotMove> moves;
  const int ends[2][2] = {{d.a(), d.b()}, {d.b(), d.a()}};
  for (const auto& e : ends) {
    const int pivot = e[0];
    const int free_end = e[1];
    if (auto t = Diagonal::try_make(d.rank(), pivot, free_end + 1))
      moves.push_back(PivotMove{pivot, *t});
  }
  return moves;
}

int DualTree::valence(int triangle) const {
  int v = 0;
  for (const auto& e : edges)
    if (e.first == triangle || e.second == triangle) ++v;
  return v;
}

bool DualTree::is_tree() const {
  const int nodes = static_cast<int>(triangles.size());
  if (static_cast<int>(edges.size()) != nodes - 1) return false;
  // Connectivity check; acyclicity follows from the edge count.
  std::vector<int> seen(nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (const auto& e : edges) {
      int other = -1;
      if (e.first == t) other = e.second;
      if (e.second == t) other = e.first;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::optional<int> DualTree::cut_off_vertex(int edge) const {
  const auto& e = edges.at(edge);
  int leaf = -1;
  if (valence(e.first) == 1)
    leaf = e.first;
  else if (valence(e.second) == 1)
    leaf = e.second;
  if (leaf < 0) return std::nullopt;
  // The ear triangle's vertex that is not on the shared diagonal.
  const int other =
      (valence(e.first) == 1) ? e.second : e.first;
  for (int v : triangles[leaf]) {
    bool shared = false;
    for (int w : triangles[other])
      if (v == w) shared = true;
    if (!shared) return v;
  }
  return std::nullopt;
}

Triangulation::Triangulation(int rank, std::vector<Diagonal> diagonals)
    : n_(rank), diags_(std::move(diagonals)) {
  polygon_vertices(rank);
  if (static_cast<int>(diags_.size()) != rank)
    throw std::invalid_argument("triangulation of rank " +
                                std::to_string(rank) + " needs " +
                                std::to_string(rank) + " diagonals, got " +
                                std::to_string(diags_.size()));
  for (const auto& d : diags_)
    if (d.rank() != rank)
      throw std::invalid_argument("triangulation contains diagonal " +
                                  d.str() + " of a different rank");
  for (size_t i = 0; i < diags_.size(); ++i)
    for (size_t j = i + 1; j < diags_.size(); ++j) {
      if (diags_[i] == diags_[j])
        throw std::invalid_argument("duplicate diagonal " + diags_[i].str());
      if (crosses(diags_[i], diags_[j]))
        throw std::invalid_argument("diagonals " + diags_[i].str() + " and " +
                                    diags_[j].str() + " cross");
    }
}

Triangulation Triangulation::snake(int rank) {
  const int m = polygon_vertices(rank);
  std::vector<Diagonal> ds;
  ds.reserve(rank);
  for (int k = 1; k <= rank; ++k)
    ds.emplace_back(rank, (k + 1) / 2 + 1, (m - k / 2) % m);
  return Triangulation(rank, std::move(ds));
}

Triangulation Triangulation::fan(int rank) {
  std::vector<Diagonal> ds;
  ds.reserve(rank);
  for (int k = 1; k <= rank; ++k) ds.emplace_back(rank, 0, k + 1);
  return Triangulation(rank, std::move(ds));
}

const Diagonal& Triangulation::diagonal(int k) const {
  if (k < 0 || k >= n_)
    throw std::out_of_range("diagonal index " + std::to_string(k) +
                            " out of range for rank " + std::to_string(n_));
  return diags_[k];
}

std::string Triangulation::str() const {
  std::string s = "{";
  for (size_t k = 0; k < diags_.size(); ++k) {
    if (k) s += ",";
    s += diags_[k].str();
  }
  return s + "}";
}

bool Triangulation::contains(const Diagonal& d) const {
  return index_of(d) >= 0;
}

int Triangulation::index_of(const Diagonal& d) const {
  for (size_t k = 0; k < diags_.size(); ++k)
    if (diags_[k] == d) return static_cast<int>(k);
  return -1;
}

std::vector<int> Triangulation::support(const Diagonal& d) const {
  std::vector<int> s;
  for (int k = 0; k < n_; ++k)
    if (crosses(diags_[k], d)) s.push_back(k);
  return s;
}

std::vector<std::array<int, 3>> Triangulation::triangles() const {
  const int m = polygon();
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int v = 0; v < m; ++v) {
    adj[v][(v + 1) % m] = 1;
    adj[(v + 1) % m][v] = 1;
  }
  for (const auto& d : diags_) adj[d.a()][d.b()] = adj[d.b()][d.a()] = 1;
  // In a triangulated convex polygon every 3-clique bounds a face: any
  // vertex between two clique members is cut off by their chord.
  std::vector<std::array<int, 3>> ts;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      if (!adj[x][y]) continue;
      for (int z = y + 1; z < m; ++z)
        if (adj[x][z] && adj[y][z]) ts.push_back({x, y, z});
    }
  return ts;  // lex-sorted by construction
}

std::pair<Triangulation, Diagonal> Triangulation::flip(int k) const {
  const Diagonal& d = diagonal(k);
  // The two triangles adjacent to d form a quadrilateral; the flip replaces
  // d by its other diagonal.
  std::vector<int> apexes;
  for (const auto& t : triangles()) {
    int on = 0;
    for (int v : t)
      if (d.has_endpoint(v)) ++on;
    if (on == 2)
      for (int v : t)
        if (!d.has_endpoint(v)) apexes.push_back(v);
  }
  if (apexes.size() != 2)
    throw std::logic_error("diagonal " + d.str() +
                           " does not bound exactly two triangles");
  Diagonal fresh(n_, apexes[0], apexes[1]);
  std::vector<Diagonal> ds = diags_;
  ds[k] = fresh;
  return {Triangulation(n_, std::move(ds)), fresh};
}

bool Triangulation::triangle_less(int i, int j) const {
  const Diagonal& di = diagonal(i);
  const Diagonal& dj = diagonal(j);
  if (i == j)
    throw std::invalid_argument("triangle_less needs two distinct positions");
  int shared = -1;
  if (dj.has_endpoint(di.a())) shared = di.a();
  if (dj.has_endpoint(di.b())) shared = di.b();
  if (shared < 0)
    throw std::invalid_argument("diagonals " + di.str() + " and " + dj.str() +
                                " do not bound a common triangle");
  const int y = di.other_endpoint(shared);
  const int z = dj.other_endpoint(shared);
  // The third side of the would-be triangle must itself be an edge.
  const int m = polygon();
  const int gap = (z - y + m) % m;
  const bool third_is_edge =
      gap == 1 || gap == m - 1 || contains(Diagonal(n_, y, z));
  if (!third_is_edge)
    throw std::invalid_argument("diagonals " + di.str() + " and " + dj.str() +
                                " do not bound a common triangle");
  // Counterclockwise from the shared vertex, position i comes first iff the
  // minimal rotation taking it to position j is positive.
  return (y - shared + m) % m < (z - shared + m) % m;
}

DualTree Triangulation::dual_tree() const {
  DualTree t;
  t.triangles = triangles();
  for (int k = 0; k < n_; ++k) {
    const Diagonal& d = diags_[k];
    std::vector<int> at;
    for (size_t i = 0; i < t.triangles.size(); ++i) {
      int on = 0;
      for (int v : t.triangles[i])
        if (d.has_endpoint(v)) ++on;
      if (on == 2) at.push_back(static_cast<int>(i));
    }
    if (at.size() != 2)
      throw std::logic_error("diagonal " + d.str() +
                             " does not bound exactly two triangles");
    t.edges.emplace_back(at[0], at[1]);
    t.edge_diagonal.push_back(k);
  }
  return t;
}

std::vector<Diagonal> all_diagonals(int rank) {
  const int m = polygon_vertices(rank);
  std::vector<Diagonal> ds;
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b)
      if (!(a == 0 && b == m - 1)) ds.emplace_back(rank, a, b);
  return ds;
}

namespace {

void extend_triangulation(int rank, const std::vector<Diagonal>& pool,
                          size_t next, std::vector<Diagonal>& chosen,
                          std::vector<Triangulation>& out) {
  if (static_cast<int>(chosen.size()) == rank) {
    out.emplace_back(rank, chosen);
    return;
  }
  for (size_t i = next; i < pool.size(); ++i) {
    bool ok = true;
    for (const auto& c : chosen)
      if (crosses(c, pool[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(pool[i]);
    extend_triangulation(rank, pool, i + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int rank) {
  const std::vector<Diagonal> pool = all_diagonals(rank);
  std::vector<Triangulation> out;
  std::vector<Diagonal> chosen;
  extend_triangulation(rank, pool, 0, chosen, out);
  return out;
}

}  // namespace clak
