#pragma once

#include <array>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace uccasnacs {

/// Column layout of the 19-column CoNLL-U-Lex format.
enum Column {
  kId = 0, kForm, kLemma, kUpos, kXpos, kFeats, kHead, kDeprel, kDeps, kMisc,
  kSmwe, kLexcat, kLexlemma, kSs, kSs2, kWmwe, kWcat, kWlemma, kLextag,
  kColumnCount
};

/// One syntactic token with its lexical-semantic annotations. The raw cells
/// are kept verbatim so serialization round-trips columns we do not model.
struct Token {
  int position = 0;
  std::string form, lemma, upos, deprel;
  int head = 0;  // 0 on the root token
  std::string lexcat;
  std::optional<std::string> scene_role;  // SS, normalized ("Goal")
  std::optional<std::string> function;    // SS2, normalized
  std::optional<std::pair<int, int>> smwe;  // strong-MWE (group, index)
  std::array<std::string, kColumnCount> columns;
};

struct Sentence {
  std::string id;
  std::vector<std::string> comments;                  // raw '#' lines
  std::vector<Token> tokens;
  std::vector<std::pair<int, std::string>> extra_rows;  // (tokens before row, raw line)
};

struct ConlluLexOptions {
  /// Lexical categories whose SS cell is read as a SNACS scene role.
  std::set<std::string> admissible_lexcats = {"P", "PP", "INF.P", "POSS", "PRON.POSS"};
};

/// Parses CoNLL-U-Lex text: tab-separated 19-column rows, '#' comments,
/// blank-line sentence separation. Multiword-token ranges ("3-4") and empty
/// nodes ("5.1") are preserved as opaque rows. Throws ParseError with a line
/// number for malformed rows or broken dependency trees.
std::vector<Sentence> parse_conllulex(std::istream& in, const std::string& source_name = "",
                                      const ConlluLexOptions& options = {});
std::vector<Sentence> read_conllulex(const std::string& path,
                                     const ConlluLexOptions& options = {});

std::string serialize_conllulex(const Sentence& sentence);
std::string serialize_conllulex(const std::vector<Sentence>& sentences);

/// Positions bearing a SNACS scene role, one per strong MWE group (anchored at
/// the group's first adposition-lexcat token).
std::vector<int> snacs_targets(const Sentence& sentence,
                               const ConlluLexOptions& options = {});

}  // namespace uccasnacs
