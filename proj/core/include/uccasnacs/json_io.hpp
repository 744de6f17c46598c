#pragma once

#include <string>

#include "uccasnacs/passage.hpp"

namespace uccasnacs {

/// Serializes to the native JSON passage format (docs/passage.schema.json).
/// With `compound_labels`, each edge carries a single "label" string such as
/// "A|Goal" instead of the categories/refinement fields.
std::string passage_to_json(const Passage& passage, bool compound_labels = false,
                            int indent = 2);

/// Parses the native JSON format. Unknown category codes or supersenses are
/// rejected when an inventory is given. Throws ParseError.
Passage passage_from_json(const std::string& text, const Inventory* inventory = nullptr,
                          const std::string& source_name = "");

Passage read_passage_json(const std::string& path, const Inventory* inventory = nullptr);
void write_passage_json(const std::string& path, const Passage& passage,
                        bool compound_labels = false);

}  // namespace uccasnacs
