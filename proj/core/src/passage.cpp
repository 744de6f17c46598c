#include "uccasnacs/passage.hpp"

#include <algorithm>
#include <stdexcept>

namespace uccasnacs {

UnitRef Passage::unit_ref(const std::string& id) const {
  auto it = unit_index_.find(id);
  if (it == unit_index_.end())
    throw std::out_of_range("unknown unit id '" + id + "' in passage " + id_);
  return it->second;
}

std::optional<UnitRef> Passage::find_unit(const std::string& id) const {
  auto it = unit_index_.find(id);
  if (it == unit_index_.end()) return std::nullopt;
  return it->second;
}

UnitRef Passage::terminal_unit(int position) const {
  if (position < 1 || position > terminal_count())
    throw std::out_of_range("terminal position out of range in passage " + id_);
  return position - 1;
}

std::vector<std::string> Passage::nonterminal_ids() const {
  return {unit_ids_.begin() + terminal_count(), unit_ids_.end()};
}

UnitRef Passage::parent_of(UnitRef u) const {
  EdgeRef e = incoming_primary_.at(u);
  return e == kNoEdge ? kNoUnit : edge_parent_[e];
}

EdgeRef Passage::preterminal_edge(int position) const {
  if (position < 1 || position > terminal_count())
    throw std::out_of_range("terminal position out of range in passage " + id_);
  EdgeRef e = preterminal_[position - 1];
  if (e == kNoEdge)
    throw std::logic_error("terminal " + std::to_string(position) +
                           " has no incoming primary edge in passage " + id_);
  return e;
}

std::vector<EdgeRef> Passage::ancestors_path(UnitRef u) const {
  std::vector<EdgeRef> path;
  UnitRef cur = u;
  for (int guard = 0; guard <= unit_count(); ++guard) {
    EdgeRef e = incoming_primary_.at(cur);
    if (e == kNoEdge) return path;
    path.push_back(e);
    cur = edge_parent_[e];
  }
  return path;  // cyclic primary structure; validate reports it
}

Passage Passage::with_refinement(EdgeRef e, std::string supersense,
                                 std::optional<int> source_position) const {
  Passage copy = *this;
  copy.edges_.at(e).refinement = std::move(supersense);
  copy.edges_.at(e).refinement_source = source_position;
  return copy;
}

Passage Passage::without_refinements() const {
  Passage copy = *this;
  for (auto& e : copy.edges_) {
    e.refinement.reset();
    e.refinement_source.reset();
  }
  return copy;
}

Passage Passage::with_id(std::string id) const {
  Passage copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

void Passage::rebuild_derived() {
  const int n_units = static_cast<int>(unit_ids_.size());
  unit_index_.clear();
  for (int i = 0; i < n_units; ++i) unit_index_.emplace(unit_ids_[i], i);

  edge_parent_.assign(edges_.size(), kNoUnit);
  edge_child_.assign(edges_.size(), kNoUnit);
  incoming_primary_.assign(n_units, kNoEdge);
  outgoing_primary_.assign(n_units, {});
  incoming_remote_.assign(n_units, {});
  outgoing_remote_.assign(n_units, {});
  duplicate_parents_.clear();
  preterminal_.assign(terminals_.size(), kNoEdge);

  for (EdgeRef e = 0; e < static_cast<EdgeRef>(edges_.size()); ++e) {
    UnitRef p = unit_index_.at(edges_[e].parent);
    UnitRef c = unit_index_.at(edges_[e].child);
    edge_parent_[e] = p;
    edge_child_[e] = c;
    if (edges_[e].remote) {
      outgoing_remote_[p].push_back(e);
      incoming_remote_[c].push_back(e);
    } else {
      outgoing_primary_[p].push_back(e);
      if (incoming_primary_[c] == kNoEdge) {
        incoming_primary_[c] = e;
        if (is_terminal(c)) preterminal_[c] = e;
      } else {
        duplicate_parents_.push_back(e);
      }
    }
  }

  // Post-order yield computation over primary edges, guarded against cycles.
  yields_.assign(n_units, {});
  std::vector<int> state(n_units, 0);  // 0 new, 1 open, 2 done
  for (int start = 0; start < n_units; ++start) {
    if (state[start] == 2) continue;
    std::vector<std::pair<UnitRef, std::size_t>> stack{{start, 0}};
    state[start] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (is_terminal(u)) {
        yields_[u] = {terminal_position(u)};
        state[u] = 2;
        stack.pop_back();
        continue;
      }
      const auto& out = outgoing_primary_[u];
      if (next < out.size()) {
        UnitRef c = edge_child_[out[next++]];
        if (state[c] == 0) {
          state[c] = 1;
          stack.emplace_back(c, 0);
        }
        continue;
      }
      std::vector<int>& y = yields_[u];
      for (EdgeRef e : out) {
        const auto& cy = yields_[edge_child_[e]];
        y.insert(y.end(), cy.begin(), cy.end());
      }
      std::sort(y.begin(), y.end());
      y.erase(std::unique(y.begin(), y.end()), y.end());
      state[u] = 2;
      stack.pop_back();
    }
  }
}

namespace {

std::string edge_subject(const Edge& e) { return e.parent + "->" + e.child; }

}  // namespace

std::vector<Violation> Passage::validate(const Inventory* inventory,
                                         bool include_warnings) const {
  std::vector<Violation> out;
  auto error = [&](std::string code, std::string subject, std::string message) {
    out.push_back({Violation::Severity::Error, std::move(code), std::move(subject),
                   std::move(message)});
  };
  auto warning = [&](std::string code, std::string subject, std::string message) {
    if (include_warnings)
      out.push_back({Violation::Severity::Warning, std::move(code), std::move(subject),
                     std::move(message)});
  };

  if (root_ == kNoUnit) {
    error("MissingRoot", id_, "passage has no root unit");
    return out;
  }

  for (UnitRef u = 0; u < unit_count(); ++u) {
    if (u == root_) {
      if (incoming_primary_[u] != kNoEdge)
        error("RootPrimaryParent", unit_id(u), "root unit has an incoming primary edge");
    } else if (incoming_primary_[u] == kNoEdge) {
      error("MissingPrimaryParent", unit_id(u), "unit has no incoming primary edge");
    }
    if (is_terminal(u) &&
        (!outgoing_primary_[u].empty() || !outgoing_remote_[u].empty()))
      error("TerminalWithChildren", unit_id(u), "terminal unit has outgoing edges");
    if (!is_terminal(u) && yields_[u].empty())
      warning("EmptyYield", unit_id(u), "nonterminal unit yields no terminals");
  }
  for (EdgeRef e : duplicate_parents_)
    error("DuplicatePrimaryParent", edge_subject(edges_[e]),
          "unit has more than one incoming primary edge");

  for (const Edge& e : edges_) {
    if (e.parent == e.child) error("SelfEdge", edge_subject(e), "edge loops on one unit");
    if (inventory) {
      for (const auto& c : e.categories.codes())
        if (!inventory->has_category(c))
          error("UnknownCategory", edge_subject(e), "category '" + c + "' not in inventory");
      if (e.refinement && !inventory->has_supersense(*e.refinement))
        error("UnknownRefinement", edge_subject(e),
              "supersense '" + *e.refinement + "' not in inventory");
    }
  }

  // Reachability from the root over primary edges (covers cycles and forests).
  {
    std::vector<char> seen(unit_count(), 0);
    std::vector<UnitRef> stack{root_};
    seen[root_] = 1;
    while (!stack.empty()) {
      UnitRef u = stack.back();
      stack.pop_back();
      for (EdgeRef e : outgoing_primary_[u]) {
        UnitRef c = edge_child_[e];
        if (!seen[c]) {
          seen[c] = 1;
          stack.push_back(c);
        }
      }
    }
    for (UnitRef u = 0; u < unit_count(); ++u)
      if (!seen[u])
        error("UnreachableFromRoot", unit_id(u),
              "unit is not reachable from the root via primary edges");
  }

  // DAG check over primary + remote edges.
  {
    std::vector<int> state(unit_count(), 0);
    for (UnitRef start = 0; start < unit_count(); ++start) {
      if (state[start] != 0) continue;
      std::vector<std::pair<UnitRef, std::size_t>> stack{{start, 0}};
      state[start] = 1;
      bool reported = false;
      while (!stack.empty()) {
        auto& [u, next] = stack.back();
        std::vector<EdgeRef> all(outgoing_primary_[u]);
        all.insert(all.end(), outgoing_remote_[u].begin(), outgoing_remote_[u].end());
        if (next < all.size()) {
          UnitRef c = edge_child_[all[next++]];
          if (state[c] == 0) {
            state[c] = 1;
            stack.emplace_back(c, 0);
          } else if (state[c] == 1 && !reported) {
            error("CycleWithRemotes", unit_id(c),
                  "primary and remote edges form a cycle through this unit");
            reported = true;
          }
          continue;
        }
        state[u] = 2;
        stack.pop_back();
      }
    }
  }

  if (include_warnings) {
    std::vector<std::pair<std::string, std::string>> seen_pairs;
    for (const Edge& e : edges_) {
      if (e.remote) {
        auto child = unit_index_.find(e.child);
        if (child != unit_index_.end() && is_terminal(child->second))
          warning("RemoteToTerminal", edge_subject(e), "remote edge points to a terminal");
      }
      auto key = std::make_pair(e.parent, e.child);
      if (std::find(seen_pairs.begin(), seen_pairs.end(), key) != seen_pairs.end())
        warning("DuplicateEdge", edge_subject(e),
                "more than one edge between the same pair of units");
      else
        seen_pairs.push_back(std::move(key));
    }
  }

  return out;
}

UnitRef anchor_unit(const Passage& passage, int position) {
  UnitRef terminal = passage.terminal_unit(position);
  EdgeRef pre = passage.preterminal_edge(position);
  const Edge& e = passage.edge(pre);
  if (e.categories.size() == 1 && e.categories.contains("W"))
    return passage.edge_parent(pre);
  return terminal;
}

PassageBuilder& PassageBuilder::add_terminal(std::string text) {
  int position = static_cast<int>(passage_.terminals_.size()) + 1;
  passage_.terminals_.push_back({position, std::move(text)});
  return *this;
}

PassageBuilder& PassageBuilder::add_unit(const std::string& id) {
  if (id.rfind("0.", 0) == 0)
    throw std::invalid_argument("unit id '" + id + "' collides with the terminal id space");
  if (std::find(pending_units_.begin(), pending_units_.end(), id) != pending_units_.end())
    throw std::invalid_argument("duplicate unit id '" + id + "'");
  pending_units_.push_back(id);
  return *this;
}

PassageBuilder& PassageBuilder::add_edge(const std::string& parent,
                                         const std::string& child,
                                         CategorySet categories, bool remote,
                                         std::optional<std::string> refinement,
                                         std::optional<int> refinement_source) {
  if (categories.empty())
    throw std::invalid_argument("edge " + parent + "->" + child + " has no categories");
  passage_.edges_.push_back({parent, child, std::move(categories), remote,
                             std::move(refinement), refinement_source});
  return *this;
}

PassageBuilder& PassageBuilder::set_root(const std::string& id) {
  pending_root_ = id;
  return *this;
}

Passage PassageBuilder::build(const Inventory* inventory) {
  Passage p = std::move(passage_);
  for (int i = 0; i < static_cast<int>(p.terminals_.size()); ++i)
    p.unit_ids_.push_back("0." + std::to_string(i + 1));
  for (auto& id : pending_units_) p.unit_ids_.push_back(std::move(id));

  std::unordered_map<std::string, UnitRef> index;
  for (int i = 0; i < static_cast<int>(p.unit_ids_.size()); ++i)
    index.emplace(p.unit_ids_[i], i);

  for (const Edge& e : p.edges_) {
    if (!index.count(e.parent))
      throw std::invalid_argument("edge references unknown unit '" + e.parent + "'");
    if (!index.count(e.child))
      throw std::invalid_argument("edge references unknown unit '" + e.child + "'");
    if (inventory) {
      inventory->require_categories(e.categories);
    }
  }
  if (pending_root_.empty())
    throw std::invalid_argument("passage '" + p.id_ + "' has no root set");
  auto it = index.find(pending_root_);
  if (it == index.end())
    throw std::invalid_argument("root '" + pending_root_ + "' is not a known unit");
  p.root_ = it->second;

  p.rebuild_derived();
  return p;
}

}  // namespace uccasnacs
