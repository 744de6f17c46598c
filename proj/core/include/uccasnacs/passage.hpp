#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "uccasnacs/inventory.hpp"

namespace uccasnacs {

/// One token slot of a passage. Positions are 1-based and contiguous.
struct Terminal {
  int position = 0;
  std::string text;
};

using UnitRef = int;
using EdgeRef = int;
constexpr UnitRef kNoUnit = -1;
constexpr EdgeRef kNoEdge = -1;

/// Labeled edge between two units. Primary edges form the tree; remote edges
/// add reentrancy. `refinement` is the supersense attached by integration and
/// `refinement_source` the 1-based token position it was projected from.
struct Edge {
  std::string parent;
  std::string child;
  CategorySet categories;
  bool remote = false;
  std::optional<std::string> refinement;
  std::optional<int> refinement_source;

  /// Display form "A" / "A+C" / "A|Goal".
  std::string label() const {
    std::string s = categories.to_string();
    if (refinement) s += "|" + *refinement;
    return s;
  }
};

struct Violation {
  enum class Severity { Error, Warning };
  Severity severity = Severity::Error;
  std::string code;     // e.g. "DuplicatePrimaryParent"
  std::string subject;  // offending unit id or edge "parent->child"
  std::string message;
};

/// Immutable UCCA graph over one sentence: terminals, nonterminal units and
/// labeled primary/remote edges. Terminal units carry the reserved ids
/// "0.<position>". Construct through PassageBuilder; share freely across
/// threads once built.
class Passage {
 public:
  const std::string& id() const { return id_; }
  const std::vector<Terminal>& terminals() const { return terminals_; }
  int terminal_count() const { return static_cast<int>(terminals_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeRef e) const { return edges_.at(e); }
  int unit_count() const { return static_cast<int>(unit_ids_.size()); }

  UnitRef root() const { return root_; }
  const std::string& root_id() const { return unit_ids_.at(root_); }
  UnitRef unit_ref(const std::string& id) const;
  std::optional<UnitRef> find_unit(const std::string& id) const;
  const std::string& unit_id(UnitRef u) const { return unit_ids_.at(u); }
  bool is_terminal(UnitRef u) const { return u >= 0 && u < terminal_count(); }
  /// 1-based token position of a terminal unit.
  int terminal_position(UnitRef u) const { return u + 1; }
  UnitRef terminal_unit(int position) const;
  /// Nonterminal ids in insertion order (serialization order).
  std::vector<std::string> nonterminal_ids() const;

  UnitRef edge_parent(EdgeRef e) const { return edge_parent_.at(e); }
  UnitRef edge_child(EdgeRef e) const { return edge_child_.at(e); }

  /// Incoming primary edge, kNoEdge for the root (or a detached unit).
  EdgeRef incoming_primary(UnitRef u) const { return incoming_primary_.at(u); }
  UnitRef parent_of(UnitRef u) const;
  const std::vector<EdgeRef>& outgoing_primary(UnitRef u) const {
    return outgoing_primary_.at(u);
  }
  const std::vector<EdgeRef>& incoming_remote(UnitRef u) const {
    return incoming_remote_.at(u);
  }
  const std::vector<EdgeRef>& outgoing_remote(UnitRef u) const {
    return outgoing_remote_.at(u);
  }

  /// Terminal positions reachable from `u` via primary edges, ascending.
  const std::vector<int>& yield_of(UnitRef u) const { return yields_.at(u); }
  const std::vector<int>& yield_of(const std::string& id) const {
    return yield_of(unit_ref(id));
  }

  /// The unique primary edge whose child is the terminal at `position`.
  EdgeRef preterminal_edge(int position) const;

  /// Primary edges from `u`'s incoming edge up to the root edge, child-first.
  std::vector<EdgeRef> ancestors_path(UnitRef u) const;
  std::vector<EdgeRef> ancestors_path(const std::string& id) const {
    return ancestors_path(unit_ref(id));
  }

  /// Structural diagnostics. Errors cover the graph invariants (single primary
  /// parent, tree over primary edges, DAG with remotes, leaf terminals);
  /// warnings cover corpus conventions (remote edges into terminals, empty
  /// yields). With an inventory, unknown categories/refinements are reported.
  std::vector<Violation> validate(const Inventory* inventory = nullptr,
                                  bool include_warnings = false) const;

  /// Copy with one edge's refinement set. Does not touch anything else.
  Passage with_refinement(EdgeRef e, std::string supersense,
                          std::optional<int> source_position) const;
  /// Copy with all refinements cleared.
  Passage without_refinements() const;
  /// Copy with a different id.
  Passage with_id(std::string id) const;

 private:
  friend class PassageBuilder;
  void rebuild_derived();

  std::string id_;
  std::vector<Terminal> terminals_;
  std::vector<std::string> unit_ids_;  // [0, T) terminals, then nonterminals
  std::vector<Edge> edges_;
  UnitRef root_ = kNoUnit;

  // Derived.
  std::unordered_map<std::string, UnitRef> unit_index_;
  std::vector<UnitRef> edge_parent_, edge_child_;
  std::vector<EdgeRef> incoming_primary_;
  std::vector<std::vector<EdgeRef>> outgoing_primary_, incoming_remote_, outgoing_remote_;
  std::vector<std::vector<int>> yields_;
  std::vector<EdgeRef> preterminal_;          // by position-1
  std::vector<EdgeRef> duplicate_parents_;    // extra incoming primary edges
};

/// Smallest unit carrying a regular category that covers the terminal at
/// `position`: the terminal itself, or — when the terminal attaches via a W
/// edge — the unanalyzable multiword unit above it.
UnitRef anchor_unit(const Passage& passage, int position);

/// Assembles a Passage. Terminals implicitly define units "0.1".."0.n";
/// referencing an unknown unit id, an empty category set, or (given an
/// inventory) an unknown category code throws std::invalid_argument.
/// Structural invariants are *not* enforced here — Passage::validate reports
/// them as data.
class PassageBuilder {
 public:
  explicit PassageBuilder(std::string id) { passage_.id_ = std::move(id); }

  PassageBuilder& add_terminal(std::string text);
  PassageBuilder& add_unit(const std::string& id);
  PassageBuilder& add_edge(const std::string& parent, const std::string& child,
                           CategorySet categories, bool remote = false,
                           std::optional<std::string> refinement = std::nullopt,
                           std::optional<int> refinement_source = std::nullopt);
  PassageBuilder& set_root(const std::string& id);

  Passage build(const Inventory* inventory = nullptr);

 private:
  Passage passage_;
  std::vector<std::string> pending_units_;
  std::string pending_root_;
};

}  // namespace uccasnacs
