#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clak/polygon.hpp"
#include "clak/quiver.hpp"

namespace clak {

// Indecomposable representations of a triangulation quiver. Every one is
// multiplicity-free and determined by its support, so a sorted vertex set is
// the whole datum; the dimension vector is its indicator vector.

struct IndecModule {
  std::vector<int> support;  // strictly increasing quiver vertices

  std::string str() const;

  friend bool operator==(const IndecModule&, const IndecModule&) = default;
  friend auto operator<=>(const IndecModule&, const IndecModule&) = default;
};

std::vector<int> dimension_vector(int vertices, const IndecModule& m);

// The module attached to a diagonal outside the triangulation: its support
// collects the positions the diagonal crosses. Throws std::invalid_argument
// for members of the triangulation.
IndecModule theta(const Triangulation& t, const Diagonal& d);

// Inverse of theta: the unique diagonal crossing exactly the support of m.
Diagonal phi(const Triangulation& t, const IndecModule& m);

// All subsets whose full subquiver is a path (connected, acyclic, degrees
// at most 2), in lexicographic support order. For an exchange quiver of rank
// n there are n(n+1)/2 of them.
std::vector<IndecModule> enumerate_indecomposables(const Quiver& q);

// Hom(M, M') is 0 or 1; it is 1 iff the supports meet, no arrow enters the
// intersection from M's remainder, and no arrow leaves it into M's' remainder.
int hom_dim_modules(const Quiver& q, const IndecModule& m, const IndecModule& m2);

// Support of the projective (resp. injective) at vertex i: the endpoints of
// oriented paths out of (resp. into) i avoiding every vanishing composition.
IndecModule projective(const Quiver& q, int i);
IndecModule injective(const Quiver& q, int i);

// Auslander-Reiten translate, realized on diagonals by the clockwise vertex
// rotation; nullopt exactly for projectives (rotated diagonal inside t).
std::optional<IndecModule> ar_translate(const Triangulation& t, const IndecModule& m);

struct ARQuiver {
  std::vector<IndecModule> modules;       // lex-ordered by support
  std::vector<std::pair<int, int>> arrows;  // module indices, sorted
  std::vector<char> is_projective;
  std::vector<char> is_injective;
  // translate[i] is the index of the translate of modules[i], or -1.
  std::vector<int> translate;
};

// Arrows join modules whose diagonals differ by one elementary move; moves
// landing on the triangulation are dropped.
ARQuiver ar_quiver(const Triangulation& t);

}  // namespace clak
