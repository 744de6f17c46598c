#pragma once

#include <string>
#include <vector>

#include "uccasnacs/align.hpp"
#include "uccasnacs/govobj.hpp"
#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// Which placement rule fires for a SNACS target.
enum class ConstructionType {
  SceneModifier,
  NonsceneModifier,
  Partitive,
  Quantity,
  Predication,
  Linkage,
  InfinitivalPurpose,
  Intransitive,
  Approximator,
  PossessivePronoun,
  PpIdiom,
};

const char* to_string(ConstructionType t);

struct IntegrateOptions {
  /// When false, punctuation tokens are ignored by the "first or last
  /// terminal of the yield" span check (ablation toggle).
  bool span_check_includes_punct = true;
  /// Also copy the refinement onto incoming remote edges of the refined unit.
  bool refine_remotes = false;
};

/// Outcome of projecting one target's scene role onto the graph.
struct IntegrationResult {
  int target = 0;
  std::string supersense;
  ConstructionType ctype = ConstructionType::SceneModifier;
  bool ok = false;
  EdgeRef edge = kNoEdge;       // refined edge when ok
  bool scene_context = false;   // refined unit's parent is scene-evoking
  bool remote_situation = false;  // refined unit carries incoming remote edges
  std::string failure;          // reason when !ok
  std::vector<std::string> notes;
};

/// Classifies a target by the fixed rule precedence: PP idiom, possessive
/// pronoun, infinitival purpose, approximator, linkage, predication,
/// intransitive, quantity, partitive, then the canonical scene/non-scene
/// modifier default.
ConstructionType classify(const AlignedSentence& aligned, int target,
                          const GovObj& gov_obj, const IntegrateOptions& options = {});

/// Applies the placement rule for `ctype` to the (possibly already partially
/// refined) working passage. Never mutates inputs; reports failure when no
/// qualifying edge exists or the qualifying edge already carries a different
/// supersense.
IntegrationResult place(const Passage& working, const Sentence& sentence, int target,
                        ConstructionType ctype, const GovObj& gov_obj,
                        const IntegrateOptions& options = {});

struct SentenceIntegration {
  std::string id;
  std::vector<IntegrationResult> results;
};

/// Integrates every target of one sentence, earlier positions first (first
/// writer wins on conflicts).
std::pair<Passage, SentenceIntegration> integrate_sentence(
    const AlignedSentence& aligned, const IntegrateOptions& options = {});

struct CorpusIntegration {
  std::vector<Passage> refined;
  std::vector<SentenceIntegration> per_sentence;

  long targets() const;
  long successes() const;
};

CorpusIntegration integrate_corpus(const std::vector<AlignedSentence>& corpus,
                                   const IntegrateOptions& options = {});

/// Rewrites a relation-level passage into the terminal-level encoding: each
/// refinement moves onto the preterminal edge of the token it was projected
/// from (falling back to the first terminal of the refined yield when the
/// source is not recorded).
Passage to_terminal_encoding(const Passage& passage);

/// Re-runs integration with the supersenses read off a terminal-level
/// encoding instead of the sentence's SS column (the postprocessing step that
/// recovers the relation-level representation).
std::pair<Passage, SentenceIntegration> integrate_from_terminal_encoding(
    const Passage& terminal_encoded, const Sentence& sentence,
    const IntegrateOptions& options = {});

/// Failure report: sentence id, target position, reason (TSV, one row per
/// failed target).
std::string failure_report_tsv(const std::vector<SentenceIntegration>& results);

}  // namespace uccasnacs
