#pragma once

#include <string>

#include "clak/polygon.hpp"
#include "clak/quiver.hpp"
#include "clak/repcat.hpp"

namespace clak {

// Graphviz renderings. Output is deterministic: vertices in index order,
// arrows in the sorted order the structures already carry.

// The exchange quiver with positions labelled 1-based alongside their
// diagonals; relations appear as comment lines.
std::string quiver_dot(const Quiver& q, const Triangulation& t);

// The module quiver with supports as labels; projectives and injectives are
// marked, and translates are drawn as dashed back edges.
std::string ar_dot(const ARQuiver& ar);

}  // namespace clak
