#include "uccasnacs/conllulex.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "uccasnacs/errors.hpp"
#include "uccasnacs/inventory.hpp"

namespace uccasnacs {

namespace {

bool cell_empty(const std::string& cell) { return cell.empty() || cell == "_"; }

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

void finish_sentence(Sentence& sent, std::vector<Sentence>& out,
                     const std::string& source, int first_line) {
  if (sent.tokens.empty() && sent.comments.empty() && sent.extra_rows.empty()) return;
  const int n = static_cast<int>(sent.tokens.size());
  int roots = 0;
  for (const Token& t : sent.tokens) {
    if (t.head < 0 || t.head > n)
      throw ParseError("head index out of range for token " + std::to_string(t.position),
                       source, first_line);
    if (t.head == 0) ++roots;
    if ((t.head == 0) != (t.deprel == "root"))
      throw ParseError("head=0 must coincide with deprel 'root' (token " +
                           std::to_string(t.position) + ")",
                       source, first_line);
  }
  if (n > 0 && roots != 1)
    throw ParseError("dependency structure must have exactly one root", source, first_line);
  // Cycle check: walk each token to the root.
  for (const Token& t : sent.tokens) {
    int cur = t.position, steps = 0;
    while (cur != 0) {
      cur = sent.tokens[cur - 1].head;
      if (++steps > n)
        throw ParseError("cyclic dependency tree at token " + std::to_string(t.position),
                         source, first_line);
    }
  }
  for (const std::string& c : sent.comments) {
    const std::string key = "# sent_id = ";
    if (c.rfind(key, 0) == 0) sent.id = c.substr(key.size());
  }
  out.push_back(std::move(sent));
  sent = Sentence{};
}

}  // namespace

std::vector<Sentence> parse_conllulex(std::istream& in, const std::string& source_name,
                                      const ConlluLexOptions& options) {
  std::vector<Sentence> out;
  Sentence sent;
  std::string line;
  int lineno = 0, sent_first_line = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence(sent, out, source_name, sent_first_line);
      sent_first_line = lineno + 1;
      continue;
    }
    if (line[0] == '#') {
      sent.comments.push_back(line);
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() != kColumnCount)
      throw ParseError("expected " + std::to_string(int(kColumnCount)) + " columns, got " +
                           std::to_string(cols.size()),
                       source_name, lineno);
    const std::string& id = cols[kId];
    if (!is_integer(id)) {
      // Multiword-token range ("3-4") or empty node ("5.1"): opaque.
      sent.extra_rows.emplace_back(static_cast<int>(sent.tokens.size()), line);
      continue;
    }
    Token tok;
    tok.position = std::stoi(id);
    if (tok.position != static_cast<int>(sent.tokens.size()) + 1)
      throw ParseError("token ids must be contiguous from 1", source_name, lineno);
    tok.form = cols[kForm];
    tok.lemma = cols[kLemma];
    tok.upos = cols[kUpos];
    if (!is_integer(cols[kHead]))
      throw ParseError("non-integer head '" + cols[kHead] + "'", source_name, lineno);
    tok.head = std::stoi(cols[kHead]);
    tok.deprel = cols[kDeprel];
    tok.lexcat = cell_empty(cols[kLexcat]) ? "" : cols[kLexcat];
    if (!cell_empty(cols[kSmwe])) {
      auto colon = cols[kSmwe].find(':');
      if (colon == std::string::npos || !is_integer(cols[kSmwe].substr(0, colon)) ||
          !is_integer(cols[kSmwe].substr(colon + 1)))
        throw ParseError("malformed SMWE cell '" + cols[kSmwe] + "'", source_name, lineno);
      tok.smwe = {std::stoi(cols[kSmwe].substr(0, colon)),
                  std::stoi(cols[kSmwe].substr(colon + 1))};
    }
    if (!cell_empty(cols[kSs]) && options.admissible_lexcats.count(tok.lexcat))
      tok.scene_role = normalize_supersense(cols[kSs]);
    if (!cell_empty(cols[kSs2]) && options.admissible_lexcats.count(tok.lexcat))
      tok.function = normalize_supersense(cols[kSs2]);
    std::copy(cols.begin(), cols.end(), tok.columns.begin());
    sent.tokens.push_back(std::move(tok));
  }
  finish_sentence(sent, out, source_name, sent_first_line);
  return out;
}

std::vector<Sentence> read_conllulex(const std::string& path,
                                     const ConlluLexOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  return parse_conllulex(in, path, options);
}

std::string serialize_conllulex(const Sentence& sentence) {
  std::ostringstream out;
  for (const std::string& c : sentence.comments) out << c << "\n";
  std::size_t extra = 0;
  for (int i = 0; i <= static_cast<int>(sentence.tokens.size()); ++i) {
    while (extra < sentence.extra_rows.size() && sentence.extra_rows[extra].first == i)
      out << sentence.extra_rows[extra++].second << "\n";
    if (i == static_cast<int>(sentence.tokens.size())) break;
    const auto& cols = sentence.tokens[i].columns;
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "\t" : "") << cols[c];
    out << "\n";
  }
  out << "\n";
  return out.str();
}

std::string serialize_conllulex(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const Sentence& s : sentences) out += serialize_conllulex(s);
  return out;
}

std::vector<int> snacs_targets(const Sentence& sentence, const ConlluLexOptions& options) {
  std::vector<int> targets;
  std::set<int> groups_seen;
  for (const Token& tok : sentence.tokens) {
    if (!tok.scene_role) continue;
    if (tok.smwe) {
      const int group = tok.smwe->first;
      if (!groups_seen.insert(group).second) continue;
      // Anchor at the group's first adposition-lexcat token.
      int anchor = tok.position;
      for (const Token& other : sentence.tokens)
        if (other.smwe && other.smwe->first == group &&
            options.admissible_lexcats.count(other.lexcat)) {
          anchor = other.position;
          break;
        }
      targets.push_back(anchor);
    } else {
      targets.push_back(tok.position);
    }
  }
  std::sort(targets.begin(), targets.end());
  return targets;
}

}  // namespace uccasnacs
