#include "uccasnacs/xml_import.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "uccasnacs/errors.hpp"

namespace uccasnacs {

namespace {

namespace pt = boost::property_tree;

struct RawEdge {
  std::string from, to;
  std::string type;
  bool remote = false;
};

struct RawNode {
  std::string id;
  std::string type;  // FN, PNCT, LKG
  bool implicit = false;
};

bool attr_true(const pt::ptree& attrs, const char* name) {
  auto v = attrs.get_optional<std::string>(name);
  return v && (*v == "True" || *v == "true" || *v == "1");
}

int terminal_position(const std::string& id, const std::string& source) {
  auto dot = id.find('.');
  if (dot == std::string::npos)
    throw ParseError("malformed terminal id '" + id + "'", source);
  try {
    return std::stoi(id.substr(dot + 1));
  } catch (const std::exception&) {
    throw ParseError("malformed terminal id '" + id + "'", source);
  }
}

}  // namespace

Passage import_ucca_xml(const std::string& xml_text, const Inventory* inventory,
                        const std::string& source_name) {
  pt::ptree tree;
  try {
    std::istringstream in(xml_text);
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  } catch (const pt::ptree_error& e) {
    throw ParseError(std::string("invalid XML: ") + e.what(), source_name);
  }

  auto root_node = tree.get_child_optional("root");
  if (!root_node) throw ParseError("no <root> element", source_name);
  std::string passage_id = root_node->get<std::string>("<xmlattr>.passageID", "");
  if (passage_id.empty()) passage_id = source_name;

  std::map<int, std::string> terminal_texts;
  std::vector<RawNode> nodes;
  std::vector<RawEdge> edges;

  for (const auto& [key, layer] : *root_node) {
    if (key != "layer") continue;
    const std::string layer_id = layer.get<std::string>("<xmlattr>.layerID", "");
    if (layer_id == "0") {
      for (const auto& [nkey, node] : layer) {
        if (nkey != "node") continue;
        const std::string id = node.get<std::string>("<xmlattr>.ID", "");
        const int pos = terminal_position(id, source_name);
        terminal_texts[pos] = node.get<std::string>("attributes.<xmlattr>.text", "");
      }
    } else if (layer_id == "1") {
      for (const auto& [nkey, node] : layer) {
        if (nkey != "node") continue;
        RawNode rn;
        rn.id = node.get<std::string>("<xmlattr>.ID", "");
        rn.type = node.get<std::string>("<xmlattr>.type", "FN");
        if (auto attrs = node.get_child_optional("attributes"))
          rn.implicit = attr_true(*attrs, "<xmlattr>.implicit");
        nodes.push_back(rn);
        for (const auto& [ekey, edge] : node) {
          if (ekey != "edge") continue;
          RawEdge re;
          re.from = rn.id;
          re.to = edge.get<std::string>("<xmlattr>.toID", "");
          re.type = edge.get<std::string>("<xmlattr>.type", "");
          if (auto attrs = edge.get_child_optional("attributes"))
            re.remote = attr_true(*attrs, "<xmlattr>.remote");
          edges.push_back(re);
        }
      }
    }
  }
  if (terminal_texts.empty()) throw ParseError("no layer-0 terminals", source_name);
  int expected = 1;
  for (const auto& [pos, _] : terminal_texts)
    if (pos != expected++)
      throw ParseError("layer-0 terminal positions are not contiguous", source_name);

  // Drop implicit and linkage nodes together with their edges.
  std::set<std::string> dropped;
  for (const RawNode& n : nodes)
    if (n.implicit || n.type == "LKG") dropped.insert(n.id);
  std::erase_if(nodes, [&](const RawNode& n) { return dropped.count(n.id) > 0; });
  std::erase_if(edges, [&](const RawEdge& e) {
    return dropped.count(e.from) > 0 || dropped.count(e.to) > 0;
  });

  std::map<std::string, std::vector<const RawEdge*>> out_edges;
  std::map<std::string, int> primary_in, remote_in;
  for (const RawEdge& e : edges) {
    out_edges[e.from].push_back(&e);
    (e.remote ? remote_in : primary_in)[e.to]++;
  }

  // Root = the layer-1 node with no incoming primary edge.
  std::string root_id;
  for (const RawNode& n : nodes)
    if (primary_in.find(n.id) == primary_in.end()) {
      root_id = n.id;
      break;
    }
  if (root_id.empty()) throw ParseError("no root node in layer 1", source_name);

  // Collapse preterminal wrappers: a non-root node whose single outgoing edge
  // is a Terminal edge and which nothing attaches to remotely.
  std::map<std::string, std::string> collapse_to;  // node id -> terminal unit id
  for (const RawNode& n : nodes) {
    if (n.id == root_id) continue;
    const auto it = out_edges.find(n.id);
    if (it == out_edges.end() || it->second.size() != 1) continue;
    const RawEdge* only = it->second.front();
    if (only->type != "Terminal" || only->remote) continue;
    if (remote_in.count(n.id)) continue;
    collapse_to[n.id] = "0." + std::to_string(terminal_position(only->to, source_name));
  }

  PassageBuilder builder(passage_id);
  for (const auto& [pos, text] : terminal_texts) builder.add_terminal(text);
  for (const RawNode& n : nodes)
    if (!collapse_to.count(n.id)) builder.add_unit(n.id);

  // Merge parallel edges between the same endpoints into one category set.
  std::map<std::tuple<std::string, std::string, bool>, CategorySet> merged;
  std::vector<std::tuple<std::string, std::string, bool>> order;
  for (const RawEdge& e : edges) {
    if (collapse_to.count(e.from)) continue;  // the collapsed Terminal edge
    std::string child = e.to;
    if (auto it = collapse_to.find(child); it != collapse_to.end()) child = it->second;
    std::string category = e.type;
    if (category == "Terminal") {
      // Terminal attachment inside a multiword (or mixed) unit.
      child = "0." + std::to_string(terminal_position(e.to, source_name));
      category = "W";
    }
    if (inventory && !inventory->has_category(category))
      throw ParseError("unknown edge category '" + category + "'", source_name);
    auto key = std::make_tuple(e.from, child, e.remote);
    auto [it, fresh] = merged.emplace(key, CategorySet());
    if (fresh) order.push_back(key);
    it->second.insert(category);
  }
  for (const auto& key : order) {
    const auto& [parent, child, remote] = key;
    builder.add_edge(parent, child, merged.at(key), remote);
  }
  builder.set_root(root_id);
  return builder.build(inventory);
}

Passage read_passage_xml(const std::string& path, const Inventory* inventory) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return import_ucca_xml(buf.str(), inventory, path);
}

}  // namespace uccasnacs
