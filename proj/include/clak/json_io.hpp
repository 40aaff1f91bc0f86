#pragma once

#include <json.hpp>

#include "clak/laurent.hpp"
#include "clak/polygon.hpp"
#include "clak/quiver.hpp"
#include "clak/repcat.hpp"
#include "clak/verify.hpp"

namespace clak {

// JSON shapes used by the command line tool. Keys are emitted in a fixed
// order (ordered_json) so output is byte-stable.

using ordered_json = nlohmann::ordered_json;

// {"n": 2, "diagonals": [[0,2],[2,4]]}
ordered_json triangulation_to_json(const Triangulation& t);

// Parses the shape above, reporting the first violation (missing key, bad
// type, invalid diagonal, crossing pair, wrong count) via
// std::invalid_argument.
Triangulation triangulation_from_json(const ordered_json& j);

// {"vertices": 2, "arrows": [[1,2]], "relations": [...]} with 1-based
// positions; relations are {"kind": "zero", "path": [...]} or
// {"kind": "commute", "path": [...], "path2": [...]}.
ordered_json quiver_to_json(const Quiver& q);

// {"modules": [[1],[1,2],...], "arrows": [[0,1],...], "projectives": [...],
//  "injectives": [...], "translate": [...]} with 1-based supports and
// 0-based module indices.
ordered_json ar_quiver_to_json(const ARQuiver& ar);

// {"denominator": [...], "numerator": [[coeff, e1, ..., en], ...]} in the
// normalized fraction view, terms in lexicographic exponent order.
ordered_json laurent_to_json(const LaurentPoly& w);

// {"suite": ..., "n": ..., "checked": ..., "failures": [...], "notes": [...]}
ordered_json report_to_json(const SuiteReport& r);

}  // namespace clak
