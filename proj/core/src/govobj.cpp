#include "uccasnacs/govobj.hpp"

#include <sstream>

namespace uccasnacs {

const char* to_string(GovObj::Config config) {
  switch (config) {
    case GovObj::Config::Default: return "default";
    case GovObj::Config::Predicative: return "predicative";
    case GovObj::Config::Possessive: return "possessive";
    case GovObj::Config::Subordinating: return "subordinating";
    case GovObj::Config::Stranded: return "stranded";
  }
  return "?";
}

GovObj resolve(const Sentence& sentence, int target) {
  const auto& toks = sentence.tokens;
  const Token& tok = toks.at(target - 1);
  auto head_of = [&](int pos) -> std::optional<int> {
    int h = toks.at(pos - 1).head;
    if (h == 0 || h == target) return std::nullopt;
    return h;
  };

  GovObj result;
  result.target = target;

  if (tok.lexcat == "PRON.POSS" || tok.deprel == "nmod:poss") {
    // The pronoun fuses marker and possessor; no overt object.
    result.config = GovObj::Config::Possessive;
    result.governor = head_of(target);
  } else if (tok.lexcat == "POSS") {
    // Clitic 's: the possessor is the clitic's head.
    result.config = GovObj::Config::Possessive;
    result.object = head_of(target);
    if (result.object) result.governor = head_of(*result.object);
  } else if (tok.deprel == "case") {
    result.object = head_of(target);
    if (result.object) result.governor = head_of(*result.object);
  } else if (tok.deprel == "mark") {
    result.config = GovObj::Config::Subordinating;
    result.object = head_of(target);
    if (result.object) result.governor = head_of(*result.object);
  } else if (tok.deprel == "advmod" || tok.deprel == "compound:prt") {
    result.governor = head_of(target);
  }

  // Governor resolution passes through conj chains to the first conjunct's head.
  int guard = 0;
  while (result.governor && toks.at(*result.governor - 1).deprel == "conj" &&
         ++guard <= static_cast<int>(toks.size())) {
    result.governor = head_of(*result.governor);
  }

  if (result.config == GovObj::Config::Default) {
    const int anchor = result.object ? *result.object : target;
    for (const Token& t : toks)
      if (t.head == anchor && t.deprel == "cop") {
        result.config = GovObj::Config::Predicative;
        break;
      }
  }
  if (result.config == GovObj::Config::Default && !result.object && !result.governor)
    result.config = GovObj::Config::Stranded;
  return result;
}

bool governor_match(const GovObj& gov_obj, EdgeRef refined_edge, const Passage& passage) {
  if (gov_obj.object) {
    const auto& yield = passage.yield_of(passage.edge_child(refined_edge));
    return std::binary_search(yield.begin(), yield.end(), *gov_obj.object);
  }
  // No overt object: only the target's own preterminal (or its unanalyzable
  // MWE unit) counts.
  EdgeRef pre = passage.preterminal_edge(gov_obj.target);
  if (refined_edge == pre) return true;
  UnitRef anchor = anchor_unit(passage, gov_obj.target);
  return !passage.is_terminal(anchor) && refined_edge == passage.incoming_primary(anchor);
}

std::string govobj_tsv(const std::vector<Sentence>& sentences,
                       const ConlluLexOptions& options) {
  std::ostringstream out;
  out << "sent_id\ttarget\tgovernor\tobject\tconfig\n";
  for (const Sentence& sent : sentences) {
    for (int target : snacs_targets(sent, options)) {
      GovObj g = resolve(sent, target);
      out << sent.id << "\t" << target << "\t";
      if (g.governor) out << *g.governor;
      else out << "_";
      out << "\t";
      if (g.object) out << *g.object;
      else out << "_";
      out << "\t" << to_string(g.config) << "\n";
    }
  }
  return out.str();
}

}  // namespace uccasnacs
