#pragma once

#include <string>

#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// Graphviz rendering: terminals as boxed words in sentence order, remote
/// edges dashed, refinements shown as "CAT|SS".
std::string passage_to_dot(const Passage& passage);

}  // namespace uccasnacs
