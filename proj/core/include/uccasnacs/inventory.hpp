#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace uccasnacs {

/// Sorted, duplicate-free set of UCCA category codes carried by one edge.
class CategorySet {
 public:
  CategorySet() = default;
  explicit CategorySet(std::vector<std::string> codes);
  static CategorySet single(std::string code);

  /// Parses "A" or "A+C" (the '+' joins categories; '|' is reserved for
  /// refinement display).
  static CategorySet parse(const std::string& text);

  void insert(std::string code);
  bool contains(const std::string& code) const;
  bool empty() const { return codes_.empty(); }
  std::size_t size() const { return codes_.size(); }
  const std::vector<std::string>& codes() const { return codes_; }

  CategorySet united(const CategorySet& other) const;
  bool intersects(const CategorySet& other) const;

  std::string to_string() const;  // joined with '+'

  auto operator<=>(const CategorySet&) const = default;

 private:
  std::vector<std::string> codes_;
};

/// Category and supersense inventories, loaded from the bundled data files.
/// The files are looked up in $UCCASNACS_DATA_DIR, falling back to the
/// directory compiled in at build time.
class Inventory {
 public:
  /// Loads ucca-categories.tsv and snacs-supersenses.tsv from `data_dir`.
  static Inventory load(const std::string& data_dir);
  /// Resolves the data directory (env override, then compiled-in default).
  static Inventory load_default();
  static std::string default_data_dir();

  bool has_category(const std::string& code) const;
  bool has_supersense(const std::string& label) const;
  /// Parent label in the supersense hierarchy, if any.
  std::optional<std::string> supersense_parent(const std::string& label) const;
  const std::string& category_name(const std::string& code) const;

  const std::vector<std::string>& categories() const { return category_order_; }
  const std::vector<std::string>& supersenses() const { return supersense_order_; }

  /// Throws std::invalid_argument naming the offending code.
  void require_category(const std::string& code) const;
  void require_categories(const CategorySet& set) const;

 private:
  std::map<std::string, std::string> category_names_;
  std::vector<std::string> category_order_;
  std::map<std::string, std::string> supersense_parents_;  // label -> parent ("" for roots)
  std::vector<std::string> supersense_order_;
};

/// Strips a "p." prefix from a raw supersense cell ("p.Goal" -> "Goal").
std::string normalize_supersense(const std::string& raw);

}  // namespace uccasnacs
