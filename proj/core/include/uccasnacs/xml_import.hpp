#pragma once

#include <string>

#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// Imports a standard UCCA XML passage (layer 0 terminals, layer 1
/// foundational nodes, edge category tags, remote attribute).
///
/// Mapping into the native model:
///   - preterminal nodes holding exactly one terminal (and nothing else) are
///     collapsed, so the categorized edge points at the terminal directly;
///   - punctuation wrapper nodes collapse the same way (U edge to terminal);
///   - unanalyzable multiword units keep their node; their terminal
///     attachments become W edges;
///   - implicit nodes and legacy linkage nodes are dropped.
Passage import_ucca_xml(const std::string& xml_text, const Inventory* inventory = nullptr,
                        const std::string& source_name = "");

Passage read_passage_xml(const std::string& path, const Inventory* inventory = nullptr);

}  // namespace uccasnacs
