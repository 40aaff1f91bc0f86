#include "clak/json_io.hpp"

#include <stdexcept>
#include <string>

namespace clak {

ordered_json triangulation_to_json(const Triangulation& t) {
  ordered_json j;
  j["n"] = t.rank();
  auto& ds = j["diagonals"] = ordered_json::array();
  for (const Diagonal& d : t.diagonals()) ds.push_back({d.a(), d.b()});
  return j;
}

Triangulation triangulation_from_json(const ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  if (!j.contains("n")) throw std::invalid_argument("missing key \"n\"");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (n < 1) throw std::invalid_argument("\"n\" must be at least 1");
  if (!j.contains("diagonals"))
    throw std::invalid_argument("missing key \"diagonals\"");
  if (!j["diagonals"].is_array())
    throw std::invalid_argument("\"diagonals\" must be an array");
  std::vector<Diagonal> diags;
  for (const auto& e : j["diagonals"]) {
    const std::string at = "diagonal " + std::to_string(diags.size() + 1);
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(at + " must be a pair of integers");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    const int m = polygon_vertices(n);
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw std::invalid_argument(at + " has a vertex outside 0.." +
                                  std::to_string(m - 1));
    const auto d = Diagonal::try_make(n, a, b);
    if (!d)
      throw std::invalid_argument(at + " (" + std::to_string(a) + "," +
                                  std::to_string(b) +
                                  ") is a polygon edge or degenerate");
    diags.push_back(*d);
  }
  // The constructor reports duplicate, crossing, and count violations.
  return Triangulation(n, std::move(diags));
}

namespace {

ordered_json path_json(const std::vector<int>& path) {
  ordered_json a = ordered_json::array();
  for (int v : path) a.push_back(v + 1);
  return a;
}

}  // namespace

ordered_json quiver_to_json(const Quiver& q) {
  ordered_json j;
  j["vertices"] = q.vertices();
  auto& as = j["arrows"] = ordered_json::array();
  for (const auto& [a, b] : q.arrows()) as.push_back({a + 1, b + 1});
  auto& rs = j["relations"] = ordered_json::array();
  for (const Relation& rel : q.relations()) {
    ordered_json r;
    if (rel.kind == Relation::Kind::ZeroPath) {
      r["kind"] = "zero";
      r["path"] = path_json(rel.path);
    } else {
      r["kind"] = "commute";
      r["path"] = path_json(rel.path);
      r["path2"] = path_json(rel.path2);
    }
    rs.push_back(std::move(r));
  }
  return j;
}

ordered_json ar_quiver_to_json(const ARQuiver& ar) {
  ordered_json j;
  auto& ms = j["modules"] = ordered_json::array();
  for (const IndecModule& m : ar.modules) ms.push_back(path_json(m.support));
  auto& as = j["arrows"] = ordered_json::array();
  for (const auto& [a, b] : ar.arrows) as.push_back({a, b});
  auto& ps = j["projectives"] = ordered_json::array();
  auto& is = j["injectives"] = ordered_json::array();
  for (size_t i = 0; i < ar.modules.size(); ++i) {
    if (ar.is_projective[i]) ps.push_back(i);
    if (ar.is_injective[i]) is.push_back(i);
  }
  j["translate"] = ar.translate;
  return j;
}

ordered_json laurent_to_json(const LaurentPoly& w) {
  ordered_json j;
  j["denominator"] = w.denominator();
  auto& ts = j["numerator"] = ordered_json::array();
  for (const auto& [e, c] : w.numerator()) {
    ordered_json term = ordered_json::array();
    term.push_back(c);
    for (int x : e) term.push_back(x);
    ts.push_back(std::move(term));
  }
  return j;
}

ordered_json report_to_json(const SuiteReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["n"] = r.n;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["notes"] = r.notes;
  return j;
}

}  // namespace clak
