#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace clak {

// Combinatorics of a convex polygon with n+3 vertices for rank n >= 1.
// Vertices are labeled 0..n+2 counterclockwise; increasing labels is the
// positive direction. All values are immutable after construction and all
// operations are pure functions.

// Number of polygon vertices (n+3); rejects rank < 1.
int polygon_vertices(int rank);

// Reduce an arbitrary integer to the canonical vertex label 0..n+2.
int vertex_mod(int rank, int v);

// A chord between two non-adjacent polygon vertices, stored canonically with
// a < b. Carries its polygon rank so mixed-rank operations are detected.
class Diagonal {
public:
  // Canonicalizes endpoints modulo n+3; throws std::invalid_argument if the
  // endpoints coincide or are adjacent on the boundary.
  Diagonal(int rank, int a, int b);

  // Non-throwing variant; nullopt for border edges and degenerate pairs.
  static std::optional<Diagonal> try_make(int rank, int a, int b);

  int rank() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }

  bool has_endpoint(int v) const { return v == a_ || v == b_; }
  int other_endpoint(int v) const;

  std::string str() const;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;

private:
  int n_;
  int a_;
  int b_;
};

// True iff the open chords intersect. Sharing an endpoint does not count as
// crossing. Throws std::invalid_argument on mismatched ranks.
bool crosses(const Diagonal& d1, const Diagonal& d2);

// Image of a diagonal under rotating every vertex label by `steps`
// (positive steps = counterclockwise). Always a valid diagonal.
Diagonal rotated(const Diagonal& d, int steps);

// One elementary move: the pivot endpoint stays, the other endpoint advances
// one vertex counterclockwise.
struct PivotMove {
  int pivot;
  Diagonal target;
};

// The at-most-two elementary moves out of d. Moves whose target would be a
// border edge are omitted; targets lying in a triangulation are not filtered
// here.
std::vector<PivotMove> pivot_moves(const Diagonal& d);

struct DualTree {
  // Triangles as ascending vertex triples, sorted lexicographically.
  std::vector<std::array<int, 3>> triangles;
  // Adjacent-triangle pairs (indices into `triangles`, first < second),
  // listed in the order of the diagonal they share.
  std::vector<std::pair<int, int>> edges;
  // edge_diagonal[e] is the triangulation position of the shared diagonal.
  std::vector<int> edge_diagonal;

  int valence(int triangle) const;
  bool is_tree() const;
  // For a leaf edge (one endpoint triangle of valence 1), the polygon vertex
  // cut off by the shared diagonal; nullopt if the edge is not a leaf.
  std::optional<int> cut_off_vertex(int edge) const;
};

// A maximal set of pairwise non-crossing diagonals, stored as an ordered
// list: position k is a stable name across operations, and flip(k) renames
// only position k.
class Triangulation {
public:
  Triangulation(int rank, std::vector<Diagonal> diagonals);

  // The zigzag triangulation whose quiver is the alternating A_n path.
  static Triangulation snake(int rank);
  // All diagonals through vertex 0; its quiver is the linear A_n path with
  // vertex 1 a sink.
  static Triangulation fan(int rank);

  int rank() const { return n_; }
  int polygon() const { return polygon_vertices(n_); }
  const std::vector<Diagonal>& diagonals() const { return diags_; }
  const Diagonal& diagonal(int k) const;
  // "{(0,2),(2,4)}", diagonals in list order.
  std::string str() const;

  bool contains(const Diagonal& d) const;
  // Position of d in the list, or -1 if absent.
  int index_of(const Diagonal& d) const;

  // Positions of the diagonals of this triangulation crossed by d, in
  // increasing order. Empty iff d belongs to the triangulation.
  std::vector<int> support(const Diagonal& d) const;

  // Replace position k by the unique other diagonal of the quadrilateral
  // formed by its two adjacent triangles. Returns the new triangulation and
  // the new diagonal. Throws std::out_of_range for bad k.
  std::pair<Triangulation, Diagonal> flip(int k) const;

  // Order of two diagonals bounding a common triangle: true iff the minimal
  // rotation about their shared vertex taking position i to position j is
  // counterclockwise. Throws std::invalid_argument if the positions do not
  // bound a common triangle.
  bool triangle_less(int i, int j) const;

  // The n+1 triangles as ascending vertex triples, lex-sorted.
  std::vector<std::array<int, 3>> triangles() const;

  DualTree dual_tree() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
  int n_;
  std::vector<Diagonal> diags_;
};

// All (n+3)n/2 diagonals in canonical lexicographic order.
std::vector<Diagonal> all_diagonals(int rank);

// Every triangulation exactly once, in the lexicographic order induced by
// all_diagonals. The diagonal lists are sorted.
std::vector<Triangulation> enumerate_triangulations(int rank);

}  // namespace clak
