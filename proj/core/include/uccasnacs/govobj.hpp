#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uccasnacs/align.hpp"
#include "uccasnacs/conllulex.hpp"
#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// Syntactic governor and object of a SNACS target, resolved from the UD tree.
struct GovObj {
  enum class Config { Default, Predicative, Possessive, Subordinating, Stranded };

  int target = 0;
  std::optional<int> governor;
  std::optional<int> object;
  Config config = Config::Default;
};

const char* to_string(GovObj::Config config);

/// Deterministic resolution by the target token's deprel:
///   case          -> object = head, governor = object's head
///   mark          -> object = clausal head, governor = its head (subordinating)
///   nmod:poss / PRON.POSS -> possessive pronoun: object fused, governor = head
///   POSS clitic   -> object = possessor (head), governor = possessor's head
///   advmod / compound:prt -> no complement, governor = head
/// Governor resolution passes through conj chains to the first conjunct's
/// head. A default-config result whose object (or, objectless, the target)
/// governs a cop dependent becomes predicative. Unresolvable targets come
/// back stranded with both fields absent.
GovObj resolve(const Sentence& sentence, int target);

/// True when the refined edge's child yield contains the object token; for
/// objectless targets, true when the refined edge is the target's preterminal
/// (or the unanalyzable-MWE unit's incoming edge).
bool governor_match(const GovObj& gov_obj, EdgeRef refined_edge, const Passage& passage);

/// Debug dump for diffing against the reference resolver:
/// sentence id, target, governor, object, config (one row per target).
std::string govobj_tsv(const std::vector<Sentence>& sentences,
                       const ConlluLexOptions& options = {});

}  // namespace uccasnacs
