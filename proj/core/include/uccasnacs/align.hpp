#pragma once

#include <vector>

#include "uccasnacs/conllulex.hpp"
#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// A sentence's token annotations joined with its UCCA graph. Token count
/// equals terminal count and forms match position-wise.
struct AlignedSentence {
  Sentence sentence;
  Passage passage;
};

/// Pairs sentences with passages, by id when both sides carry matching id
/// sets, otherwise by input order. Verifies position-wise form equality after
/// whitespace normalization; throws AlignmentError naming the first divergent
/// position.
std::vector<AlignedSentence> align(std::vector<Sentence> sentences,
                                   std::vector<Passage> passages);

}  // namespace uccasnacs
