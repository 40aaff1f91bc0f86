#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clak/polygon.hpp"

namespace clak {

// Quivers on vertices 0..n-1 with at most one arrow per ordered pair, no
// loops and no 2-cycles, together with the relations carried by type-A
// exchange quivers. Relations are recovered structurally from the quiver
// (see shortest_path_relations), so mutation can recompute them.

struct Relation {
  enum class Kind { ZeroPath, Commute };
  Kind kind;
  // Vertex sequences; path[0] -> path[1] -> ... are arrows of the quiver.
  // ZeroPath uses only `path`; Commute equates `path` with `path2` and
  // stores the lexicographically smaller sequence first.
  std::vector<int> path;
  std::vector<int> path2;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

class Quiver {
public:
  // Arrows as (from, to) pairs; relations may be empty. Validates the
  // no-loop, no-2-cycle and single-arrow invariants and that relation paths
  // follow existing arrows.
  Quiver(int vertices, std::vector<std::pair<int, int>> arrows,
         std::vector<Relation> relations);

  int vertices() const { return n_; }
  // Sorted lexicographically; unique.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }

  bool has_arrow(int from, int to) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;

private:
  int n_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<Relation> relations_;
};

// The exchange quiver of a triangulation: vertex k is position k, and two
// positions bounding a common triangle get the arrow j -> i when position i
// precedes position j counterclockwise around their shared vertex. Relations
// are the three length-2 zero compositions of each oriented triangle.
Quiver quiver_from_triangulation(const Triangulation& t);

// Relations determined by the quiver shape alone: a shortest path for an
// arrow i -> j is an oriented path j ~> i inside an induced subgraph that is
// a cycle. One such path gives a zero relation, two give a commutativity
// relation; three or more are rejected (std::domain_error) since no quiver
// in scope produces them.
std::vector<Relation> shortest_path_relations(int vertices,
                                              const std::vector<std::pair<int, int>>& arrows);

// Mutation at vertex k: arrows incident to k reverse; for every length-2
// path j -> k -> l, the pair j -> l is toggled against an existing l -> j.
// Relations are recomputed from the mutated shape.
Quiver mutate_quiver(const Quiver& q, int k);

struct ExchangeMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major, n*n

  explicit ExchangeMatrix(int size) : n(size), entries(size * size, 0) {}
  int at(int i, int j) const { return entries[i * n + j]; }
  int& at(int i, int j) { return entries[i * n + j]; }
  bool skew_symmetric() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

// Signed adjacency matrix: b_ij = +1 for an arrow i -> j, -1 for j -> i.
ExchangeMatrix b_matrix(const Quiver& q);

// Matrix mutation at index k; preserves skew-symmetry.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

}  // namespace clak
