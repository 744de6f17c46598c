#include "uccasnacs/dot_export.hpp"

#include <sstream>

namespace uccasnacs {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_name(const Passage& p, UnitRef u) {
  std::string id = p.unit_id(u);
  for (char& c : id)
    if (c == '.') c = '_';
  return "n" + id;
}

}  // namespace

std::string passage_to_dot(const Passage& p) {
  std::ostringstream out;
  out << "digraph \"" << escape(p.id()) << "\" {\n";
  out << "  rankdir=TB;\n  ordering=out;\n";
  out << "  node [shape=point, width=0.08];\n";
  for (UnitRef u = p.terminal_count(); u < p.unit_count(); ++u) {
    out << "  " << node_name(p, u);
    if (u == p.root()) out << " [width=0.12]";
    out << ";\n";
  }
  out << "  { rank=same;\n";
  for (const Terminal& t : p.terminals())
    out << "    " << node_name(p, p.terminal_unit(t.position))
        << " [shape=box, label=\"" << escape(t.text) << "\"];\n";
  out << "  }\n";
  // Invisible chain keeps the terminals in sentence order.
  for (int pos = 1; pos + 1 <= p.terminal_count(); ++pos)
    out << "  " << node_name(p, p.terminal_unit(pos)) << " -> "
        << node_name(p, p.terminal_unit(pos + 1)) << " [style=invis, weight=100];\n";
  for (EdgeRef e = 0; e < static_cast<EdgeRef>(p.edges().size()); ++e) {
    const Edge& edge = p.edge(e);
    out << "  " << node_name(p, p.edge_parent(e)) << " -> "
        << node_name(p, p.edge_child(e)) << " [label=\"" << escape(edge.label()) << "\"";
    if (edge.remote) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace uccasnacs
