#include "uccasnacs/integrate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace uccasnacs {

namespace {

bool is_punct(const Sentence& sent, int pos) {
  return sent.tokens.at(pos - 1).upos == "PUNCT";
}

bool first_or_last_in_yield(const Passage& p, const Sentence& sent, UnitRef unit,
                            int pos, const IntegrateOptions& opt) {
  const auto& y = p.yield_of(unit);
  if (y.empty()) return false;
  if (opt.span_check_includes_punct) return y.front() == pos || y.back() == pos;
  int first = 0, last = 0;
  for (int q : y)
    if (!is_punct(sent, q)) {
      first = q;
      break;
    }
  for (auto it = y.rbegin(); it != y.rend(); ++it)
    if (!is_punct(sent, *it)) {
      last = *it;
      break;
    }
  return pos == first || pos == last;
}

/// A unit's parent evokes a scene when it has a Process or State child other
/// than the unit itself (so a unit that is itself the predicate does not make
/// its own context scene-evoking).
bool scene_evoking_parent(const Passage& p, UnitRef unit) {
  UnitRef parent = p.parent_of(unit);
  if (parent == kNoUnit) return false;
  for (EdgeRef e : p.outgoing_primary(parent)) {
    if (p.edge_child(e) == unit) continue;
    const CategorySet& cats = p.edge(e).categories;
    if (cats.contains("P") || cats.contains("S")) return true;
  }
  return false;
}

bool is_linker_unit(const Passage& p, UnitRef anchor) {
  EdgeRef in = p.incoming_primary(anchor);
  if (in != kNoEdge && p.edge(in).categories.contains("L")) return true;
  UnitRef parent = p.parent_of(anchor);
  if (parent != kNoUnit) {
    EdgeRef pin = p.incoming_primary(parent);
    if (pin != kNoEdge && p.edge(pin).categories.contains("L")) return true;
  }
  return false;
}

/// First non-Center ancestor unit, starting at the anchor's parent, whose
/// yield has the target as first or last terminal.
UnitRef canonical_candidate(const Passage& p, const Sentence& sent, UnitRef anchor,
                            int target, const IntegrateOptions& opt) {
  UnitRef u = p.parent_of(anchor);
  int guard = 0;
  while (u != kNoUnit && ++guard <= p.unit_count()) {
    EdgeRef in = p.incoming_primary(u);
    if (in == kNoEdge) return kNoUnit;  // reached the root without a match
    if (!p.edge(in).categories.contains("C") &&
        first_or_last_in_yield(p, sent, u, target, opt))
      return u;
    u = p.parent_of(u);
  }
  return kNoUnit;
}

/// Child of the lowest ancestor of `head_pos`'s terminal whose yield contains
/// the target: the unit covering the governor/object on its side of the join.
UnitRef unit_on_token_side(const Passage& p, int head_pos, int target) {
  UnitRef prev = p.terminal_unit(head_pos);
  UnitRef u = p.parent_of(prev);
  int guard = 0;
  while (u != kNoUnit && ++guard <= p.unit_count()) {
    const auto& y = p.yield_of(u);
    if (std::binary_search(y.begin(), y.end(), target)) return prev;
    prev = u;
    u = p.parent_of(u);
  }
  return kNoUnit;
}

CategorySet token_unit_categories(const Passage& p, int pos) {
  UnitRef a = anchor_unit(p, pos);
  EdgeRef in = p.incoming_primary(a);
  if (in == kNoEdge) return {};
  return p.edge(in).categories;
}

}  // namespace

const char* to_string(ConstructionType t) {
  switch (t) {
    case ConstructionType::SceneModifier: return "scene_mod";
    case ConstructionType::NonsceneModifier: return "nonscene_mod";
    case ConstructionType::Partitive: return "partitive";
    case ConstructionType::Quantity: return "quantity";
    case ConstructionType::Predication: return "predication";
    case ConstructionType::Linkage: return "linkage";
    case ConstructionType::InfinitivalPurpose: return "infinitival";
    case ConstructionType::Intransitive: return "intransitive";
    case ConstructionType::Approximator: return "approximator";
    case ConstructionType::PossessivePronoun: return "possessive_pron";
    case ConstructionType::PpIdiom: return "pp_idiom";
  }
  return "?";
}

ConstructionType classify(const AlignedSentence& aligned, int target,
                          const GovObj& gov_obj, const IntegrateOptions& options) {
  const Passage& p = aligned.passage;
  const Token& tok = aligned.sentence.tokens.at(target - 1);
  UnitRef anchor = anchor_unit(p, target);

  if (tok.lexcat == "PP") return ConstructionType::PpIdiom;
  if (tok.lexcat == "PRON.POSS") return ConstructionType::PossessivePronoun;
  const bool linker = is_linker_unit(p, anchor);
  if (tok.lexcat == "INF.P" && !linker) return ConstructionType::InfinitivalPurpose;
  if (tok.scene_role && *tok.scene_role == "Approximator")
    return ConstructionType::Approximator;
  if (linker) return ConstructionType::Linkage;
  if (gov_obj.config == GovObj::Config::Predicative) return ConstructionType::Predication;
  if (!gov_obj.object) return ConstructionType::Intransitive;
  if (tok.scene_role && *tok.scene_role == "Quantity") return ConstructionType::Quantity;
  if (gov_obj.governor && token_unit_categories(p, *gov_obj.governor).contains("C") &&
      token_unit_categories(p, *gov_obj.object).contains("C"))
    return ConstructionType::Partitive;

  UnitRef candidate = canonical_candidate(p, aligned.sentence, anchor, target, options);
  if (candidate == kNoUnit) return ConstructionType::SceneModifier;
  return scene_evoking_parent(p, candidate) ? ConstructionType::SceneModifier
                                            : ConstructionType::NonsceneModifier;
}

IntegrationResult place(const Passage& working, const Sentence& sentence, int target,
                        ConstructionType ctype, const GovObj& gov_obj,
                        const IntegrateOptions& options) {
  IntegrationResult r;
  r.target = target;
  r.ctype = ctype;
  const Token& tok = sentence.tokens.at(target - 1);
  if (!tok.scene_role) {
    r.failure = "target carries no scene role";
    return r;
  }
  r.supersense = *tok.scene_role;
  UnitRef anchor = anchor_unit(working, target);

  UnitRef unit = kNoUnit;
  switch (ctype) {
    case ConstructionType::SceneModifier:
    case ConstructionType::NonsceneModifier:
    case ConstructionType::InfinitivalPurpose:
      unit = canonical_candidate(working, sentence, anchor, target, options);
      if (unit == kNoUnit) {
        r.failure = "no qualifying edge on the ancestor path";
        return r;
      }
      break;
    case ConstructionType::Quantity:
      if (!gov_obj.governor) {
        r.failure = "quantity target without a resolved governor";
        return r;
      }
      unit = unit_on_token_side(working, *gov_obj.governor, target);
      if (unit == kNoUnit) {
        r.failure = "governor is not joined with the target in the graph";
        return r;
      }
      break;
    case ConstructionType::Partitive:
    case ConstructionType::Linkage:
      if (!gov_obj.object) {
        r.failure = ctype == ConstructionType::Linkage
                        ? "linkage without a resolved clausal head"
                        : "partitive target without a resolved object";
        return r;
      }
      unit = unit_on_token_side(working, *gov_obj.object, target);
      if (unit == kNoUnit) {
        r.failure = "object is not joined with the target in the graph";
        return r;
      }
      break;
    case ConstructionType::Predication:
      if (gov_obj.object) {
        unit = unit_on_token_side(working, *gov_obj.object, target);
        if (unit == kNoUnit) {
          r.failure = "object is not joined with the target in the graph";
          return r;
        }
      } else {
        unit = anchor;
      }
      break;
    case ConstructionType::Intransitive:
    case ConstructionType::Approximator:
    case ConstructionType::PossessivePronoun:
    case ConstructionType::PpIdiom:
      unit = anchor;
      break;
  }

  EdgeRef e = working.incoming_primary(unit);
  if (e == kNoEdge) {
    r.failure = "qualifying unit is the root";
    return r;
  }
  const Edge& edge = working.edge(e);
  if (edge.refinement && *edge.refinement != r.supersense) {
    r.failure = "edge already refined with '" + *edge.refinement + "'";
    return r;
  }
  if (edge.refinement) r.notes.push_back("edge already carried the same supersense");

  r.ok = true;
  r.edge = e;
  r.scene_context = scene_evoking_parent(working, unit);
  r.remote_situation = !working.incoming_remote(unit).empty();

  if (ctype == ConstructionType::Linkage) {
    UnitRef parent = working.parent_of(unit);
    int sibling_scenes = 0;
    if (parent != kNoUnit)
      for (EdgeRef s : working.outgoing_primary(parent))
        if (working.edge_child(s) != unit && working.edge(s).categories.contains("H"))
          ++sibling_scenes;
    if (sibling_scenes >= 2)
      r.notes.push_back("linker relates more than two parallel scenes");
  }
  return r;
}

std::pair<Passage, SentenceIntegration> integrate_sentence(const AlignedSentence& aligned,
                                                           const IntegrateOptions& options) {
  Passage work = aligned.passage;
  SentenceIntegration si;
  si.id = aligned.sentence.id.empty() ? aligned.passage.id() : aligned.sentence.id;
  for (int target : snacs_targets(aligned.sentence)) {
    GovObj gov_obj = resolve(aligned.sentence, target);
    ConstructionType ctype =
        classify({aligned.sentence, work}, target, gov_obj, options);
    IntegrationResult r = place(work, aligned.sentence, target, ctype, gov_obj, options);
    if (r.ok && !working_refined(work, r.edge)) {
      work = work.with_refinement(r.edge, r.supersense, target);
      if (options.refine_remotes)
        for (EdgeRef rem : work.incoming_remote(work.edge_child(r.edge)))
          work = work.with_refinement(rem, r.supersense, target);
    }
    si.results.push_back(std::move(r));
  }
  return {std::move(work), std::move(si)};
}

long CorpusIntegration::targets() const {
  long n = 0;
  for (const auto& s : per_sentence) n += static_cast<long>(s.results.size());
  return n;
}

long CorpusIntegration::successes() const {
  long n = 0;
  for (const auto& s : per_sentence)
    for (const auto& r : s.results) n += r.ok ? 1 : 0;
  return n;
}

CorpusIntegration integrate_corpus(const std::vector<AlignedSentence>& corpus,
                                   const IntegrateOptions& options) {
  CorpusIntegration out;
  out.refined.reserve(corpus.size());
  out.per_sentence.reserve(corpus.size());
  for (const AlignedSentence& aligned : corpus) {
    auto [passage, results] = integrate_sentence(aligned, options);
    out.refined.push_back(std::move(passage));
    out.per_sentence.push_back(std::move(results));
  }
  return out;
}

Passage to_terminal_encoding(const Passage& passage) {
  Passage out = passage.without_refinements();
  for (EdgeRef e = 0; e < static_cast<EdgeRef>(passage.edges().size()); ++e) {
    const Edge& edge = passage.edge(e);
    if (!edge.refinement) continue;
    int source;
    if (edge.refinement_source) {
      source = *edge.refinement_source;
    } else {
      const auto& y = passage.yield_of(passage.edge_child(e));
      if (y.empty()) continue;
      source = y.front();
    }
    EdgeRef pre = out.preterminal_edge(source);
    if (out.edge(pre).refinement) continue;  // first writer wins
    out = out.with_refinement(pre, *edge.refinement, source);
  }
  return out;
}

std::pair<Passage, SentenceIntegration> integrate_from_terminal_encoding(
    const Passage& terminal_encoded, const Sentence& sentence,
    const IntegrateOptions& options) {
  Sentence overlay = sentence;
  for (Token& t : overlay.tokens) t.scene_role.reset();
  for (EdgeRef e = 0; e < static_cast<EdgeRef>(terminal_encoded.edges().size()); ++e) {
    const Edge& edge = terminal_encoded.edge(e);
    if (!edge.refinement) continue;
    UnitRef child = terminal_encoded.edge_child(e);
    if (!terminal_encoded.is_terminal(child)) continue;
    overlay.tokens.at(terminal_encoded.terminal_position(child) - 1).scene_role =
        *edge.refinement;
  }
  return integrate_sentence({overlay, terminal_encoded.without_refinements()}, options);
}

std::string failure_report_tsv(const std::vector<SentenceIntegration>& results) {
  std::ostringstream out;
  out << "sent_id\ttarget\treason\n";
  for (const SentenceIntegration& s : results)
    for (const IntegrationResult& r : s.results)
      if (!r.ok) out << s.id << "\t" << r.target << "\t" << r.failure << "\n";
  return out.str();
}

}  // namespace uccasnacs
