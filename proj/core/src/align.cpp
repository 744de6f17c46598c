#include "uccasnacs/align.hpp"

#include <map>
#include <set>

#include "uccasnacs/errors.hpp"

namespace uccasnacs {

namespace {

std::string normalize_ws(const std::string& s) {
  std::string out;
  bool in_space = true;  // strips leading whitespace
  for (unsigned char c : s) {
    if (std::isspace(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += static_cast<char>(c);
  }
  return out;
}

void check_forms(const Sentence& sent, const Passage& passage) {
  const auto& terminals = passage.terminals();
  if (sent.tokens.size() != terminals.size())
    throw AlignmentError("sentence '" + sent.id + "' has " +
                         std::to_string(sent.tokens.size()) + " tokens but passage '" +
                         passage.id() + "' has " + std::to_string(terminals.size()) +
                         " terminals");
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    if (normalize_ws(sent.tokens[i].form) != normalize_ws(terminals[i].text))
      throw AlignmentError("sentence '" + sent.id + "' diverges from passage '" +
                           passage.id() + "' at position " + std::to_string(i + 1) +
                           ": token '" + sent.tokens[i].form + "' vs terminal '" +
                           terminals[i].text + "'");
  }
}

}  // namespace

std::vector<AlignedSentence> align(std::vector<Sentence> sentences,
                                   std::vector<Passage> passages) {
  if (sentences.size() != passages.size())
    throw AlignmentError("corpus size mismatch: " + std::to_string(sentences.size()) +
                         " sentences vs " + std::to_string(passages.size()) + " passages");

  // Try id-based pairing first.
  bool by_id = !sentences.empty();
  std::map<std::string, std::size_t> passage_by_id;
  for (std::size_t i = 0; i < passages.size(); ++i) {
    if (passages[i].id().empty() || !passage_by_id.emplace(passages[i].id(), i).second) {
      by_id = false;
      break;
    }
  }
  if (by_id) {
    std::set<std::string> sentence_ids;
    for (const Sentence& s : sentences)
      if (s.id.empty() || !sentence_ids.insert(s.id).second) {
        by_id = false;
        break;
      }
    if (by_id)
      for (const Sentence& s : sentences)
        if (!passage_by_id.count(s.id)) {
          by_id = false;
          break;
        }
  }

  std::vector<AlignedSentence> out;
  out.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::size_t j = by_id ? passage_by_id.at(sentences[i].id) : i;
    check_forms(sentences[i], passages[j]);
    out.push_back({std::move(sentences[i]), std::move(passages[j])});
  }
  return out;
}

}  // namespace uccasnacs
