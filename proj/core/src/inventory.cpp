#include "uccasnacs/inventory.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uccasnacs {

namespace {

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

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

CategorySet::CategorySet(std::vector<std::string> codes) {
  for (auto& c : codes) insert(std::move(c));
}

CategorySet CategorySet::single(std::string code) {
  CategorySet s;
  s.insert(std::move(code));
  return s;
}

CategorySet CategorySet::parse(const std::string& text) {
  CategorySet s;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    auto pos = text.find('+', start);
    std::string piece = pos == std::string::npos ? text.substr(start)
                                                 : text.substr(start, pos - start);
    if (!piece.empty()) s.insert(std::move(piece));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return s;
}

void CategorySet::insert(std::string code) {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) codes_.insert(it, std::move(code));
}

bool CategorySet::contains(const std::string& code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

CategorySet CategorySet::united(const CategorySet& other) const {
  CategorySet out = *this;
  for (const auto& c : other.codes_) out.insert(c);
  return out;
}

bool CategorySet::intersects(const CategorySet& other) const {
  for (const auto& c : codes_)
    if (other.contains(c)) return true;
  return false;
}

std::string CategorySet::to_string() const {
  std::string out;
  for (const auto& c : codes_) {
    if (!out.empty()) out += '+';
    out += c;
  }
  return out;
}

std::string Inventory::default_data_dir() {
  if (const char* env = std::getenv("UCCASNACS_DATA_DIR"); env && *env) return env;
#ifdef UCCASNACS_DEFAULT_DATA_DIR
  return UCCASNACS_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

Inventory Inventory::load_default() { return load(default_data_dir()); }

Inventory Inventory::load(const std::string& data_dir) {
  Inventory inv;
  {
    const std::string path = data_dir + "/ucca-categories.tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open category inventory: " + path);
    std::string line;
    while (std::getline(in, line)) {
      line = strip_cr(line);
      if (line.empty() || line[0] == '#') continue;
      auto cols = split_tabs(line);
      if (cols[0].empty()) continue;
      if (inv.category_names_.emplace(cols[0], cols.size() > 1 ? cols[1] : "").second)
        inv.category_order_.push_back(cols[0]);
    }
    if (inv.category_order_.empty())
      throw std::runtime_error("empty category inventory: " + path);
  }
  {
    const std::string path = data_dir + "/snacs-supersenses.tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open supersense inventory: " + path);
    std::string line;
    while (std::getline(in, line)) {
      line = strip_cr(line);
      if (line.empty() || line[0] == '#') continue;
      auto cols = split_tabs(line);
      if (cols[0].empty()) continue;
      if (inv.supersense_parents_.emplace(cols[0], cols.size() > 1 ? cols[1] : "").second)
        inv.supersense_order_.push_back(cols[0]);
    }
    if (inv.supersense_order_.empty())
      throw std::runtime_error("empty supersense inventory: " + path);
  }
  return inv;
}

bool Inventory::has_category(const std::string& code) const {
  return category_names_.count(code) > 0;
}

bool Inventory::has_supersense(const std::string& label) const {
  return supersense_parents_.count(label) > 0;
}

std::optional<std::string> Inventory::supersense_parent(const std::string& label) const {
  auto it = supersense_parents_.find(label);
  if (it == supersense_parents_.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

const std::string& Inventory::category_name(const std::string& code) const {
  auto it = category_names_.find(code);
  if (it == category_names_.end())
    throw std::invalid_argument("unknown UCCA category code: " + code);
  return it->second;
}

void Inventory::require_category(const std::string& code) const {
  if (!has_category(code))
    throw std::invalid_argument("unknown UCCA category code: " + code);
}

void Inventory::require_categories(const CategorySet& set) const {
  for (const auto& c : set.codes()) require_category(c);
}

std::string normalize_supersense(const std::string& raw) {
  if (raw.rfind("p.", 0) == 0) return raw.substr(2);
  return raw;
}

}  // namespace uccasnacs
