#include "uccasnacs/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uccasnacs/errors.hpp"

namespace uccasnacs {

using ordered_json = nlohmann::ordered_json;

std::string passage_to_json(const Passage& passage, bool compound_labels, int indent) {
  ordered_json j;
  j["id"] = passage.id();
  j["terminals"] = ordered_json::array();
  for (const Terminal& t : passage.terminals())
    j["terminals"].push_back({{"position", t.position}, {"text", t.text}});
  j["units"] = passage.nonterminal_ids();
  j["root"] = passage.root_id();
  j["edges"] = ordered_json::array();
  for (const Edge& e : passage.edges()) {
    ordered_json je;
    je["parent"] = e.parent;
    je["child"] = e.child;
    if (compound_labels) {
      je["label"] = e.label();
    } else {
      je["categories"] = e.categories.codes();
      if (e.refinement) je["refinement"] = *e.refinement;
    }
    je["remote"] = e.remote;
    if (!compound_labels && e.refinement_source) je["source"] = *e.refinement_source;
    j["edges"].push_back(std::move(je));
  }
  return j.dump(indent) + "\n";
}

Passage passage_from_json(const std::string& text, const Inventory* inventory,
                          const std::string& source_name) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), source_name);
  }
  try {
    PassageBuilder builder(j.at("id").get<std::string>());
    int expected = 1;
    for (const auto& t : j.at("terminals")) {
      if (t.at("position").get<int>() != expected)
        throw ParseError("terminal positions must be contiguous from 1", source_name);
      builder.add_terminal(t.at("text").get<std::string>());
      ++expected;
    }
    for (const auto& u : j.at("units")) builder.add_unit(u.get<std::string>());
    for (const auto& e : j.at("edges")) {
      CategorySet cats;
      std::optional<std::string> refinement;
      if (e.contains("label")) {
        const std::string label = e.at("label").get<std::string>();
        auto bar = label.find('|');
        cats = CategorySet::parse(label.substr(0, bar));
        if (bar != std::string::npos) refinement = label.substr(bar + 1);
      } else {
        for (const auto& c : e.at("categories")) cats.insert(c.get<std::string>());
        if (e.contains("refinement")) refinement = e.at("refinement").get<std::string>();
      }
      std::optional<int> source;
      if (e.contains("source")) source = e.at("source").get<int>();
      if (inventory && refinement && !inventory->has_supersense(*refinement))
        throw ParseError("unknown supersense '" + *refinement + "'", source_name);
      builder.add_edge(e.at("parent").get<std::string>(), e.at("child").get<std::string>(),
                       std::move(cats), e.value("remote", false), std::move(refinement),
                       source);
    }
    builder.set_root(j.at("root").get<std::string>());
    return builder.build(inventory);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what(), source_name);
  }
}

Passage read_passage_json(const std::string& path, const Inventory* inventory) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return passage_from_json(buf.str(), inventory, path);
}

void write_passage_json(const std::string& path, const Passage& passage,
                        bool compound_labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open file for writing", path);
  out << passage_to_json(passage, compound_labels);
}

}  // namespace uccasnacs
