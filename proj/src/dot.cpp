#include "clak/dot.hpp"

namespace clak {

namespace {

std::string path_str(const std::vector<int>& path) {
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += " -> ";
    s += std::to_string(path[i] + 1);
  }
  return s;
}

}  // namespace

std::string quiver_dot(const Quiver& q, const Triangulation& t) {
  std::string out = "digraph quiver {\n";
  for (const Relation& rel : q.relations())
    out += rel.kind == Relation::Kind::ZeroPath
               ? "  // zero: " + path_str(rel.path) + "\n"
               : "  // commute: " + path_str(rel.path) + " = " +
                     path_str(rel.path2) + "\n";
  for (int k = 0; k < q.vertices(); ++k)
    out += "  v" + std::to_string(k + 1) + " [label=\"" +
           std::to_string(k + 1) + " " + t.diagonal(k).str() + "\"];\n";
  for (const auto& [a, b] : q.arrows())
    out += "  v" + std::to_string(a + 1) + " -> v" + std::to_string(b + 1) +
           ";\n";
  return out + "}\n";
}

std::string ar_dot(const ARQuiver& ar) {
  std::string out = "digraph ar {\n  rankdir=LR;\n";
  for (size_t i = 0; i < ar.modules.size(); ++i) {
    std::string label = ar.modules[i].str();
    if (ar.is_projective[i]) label += " P";
    if (ar.is_injective[i]) label += " I";
    out += "  m" + std::to_string(i) + " [label=\"" + label +
           "\", shape=box];\n";
  }
  for (const auto& [a, b] : ar.arrows)
    out += "  m" + std::to_string(a) + " -> m" + std::to_string(b) + ";\n";
  for (size_t i = 0; i < ar.modules.size(); ++i)
    if (ar.translate[i] >= 0)
      out += "  m" + std::to_string(i) + " -> m" +
             std::to_string(ar.translate[i]) +
             " [style=dashed, constraint=false];\n";
  return out + "}\n";
}

}  // namespace clak
