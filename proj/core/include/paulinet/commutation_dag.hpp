#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "paulinet/pauli.hpp"

namespace paulinet {

/// Action-set regime: Preserving restricts the next implementation to the
/// front layer of the anticommutation DAG; Modifying allows any remaining row.
enum class OrderingMode : std::uint8_t { Preserving, Modifying };

const char* to_string(OrderingMode mode);
OrderingMode ordering_mode_from_string(std::string_view name);

/// Anticommutation precedence graph over the rows of a Pauli word, keyed by
/// orig_index. An edge u -> v exists iff u precedes v in the original
/// sequence and the two rows anticommute; it is acyclic by construction.
/// Removal bookkeeping is per-instance; the edge structure is shared.
class CommutationDag {
 public:
  static CommutationDag build(const PauliWord& word);

  std::size_t total_nodes() const { return active_.size(); }
  std::size_t active_count() const { return active_count_; }
  bool is_active(std::uint32_t id) const;
  /// True iff the node is active with in-degree zero.
  bool is_front(std::uint32_t id) const;

  /// Active nodes with in-degree zero, ascending.
  std::vector<std::uint32_t> front_layer() const;
  /// Legal next implementations: front layer in Preserving mode, all active
  /// nodes in Modifying mode. Ascending.
  std::vector<std::uint32_t> available_actions(OrderingMode mode) const;

  /// Removes one active node and its incident edges. In Preserving mode the
  /// node must currently be in the front layer; violating that throws
  /// std::logic_error.
  void remove(std::uint32_t id, OrderingMode mode);

  /// Removes a set of nodes. In Preserving mode removal proceeds
  /// iteratively: a node may be removed once earlier removals have cleared
  /// its in-edges; if some requested node never becomes removable this
  /// throws std::logic_error.
  void remove_rows(std::span<const std::uint32_t> ids, OrderingMode mode);

  bool has_edge(std::uint32_t from, std::uint32_t to) const;
  std::uint32_t indegree(std::uint32_t id) const;

  std::uint64_t active_fingerprint() const;

 private:
  std::shared_ptr<const std::vector<std::vector<std::uint32_t>>> successors_;
  std::vector<bool> active_;
  std::vector<std::uint32_t> indegree_;
  std::size_t active_count_ = 0;
};

}  // namespace paulinet
