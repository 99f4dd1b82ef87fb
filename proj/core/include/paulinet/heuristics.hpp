#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "paulinet/circuit.hpp"
#include "paulinet/commutation_dag.hpp"
#include "paulinet/pauli.hpp"

namespace paulinet {

/// True iff conjugating (control, target) with CX strictly lowers the
/// Pauli weight: the pair is one of XX, ZZ, YX, ZY.
bool reducible_pair(PauliLetter control, PauliLetter target);

/// True iff conjugating (control, target) with CX strictly raises the
/// Pauli weight: the pair is one of XI, IZ, YI, IY.
bool increasing_pair(PauliLetter control, PauliLetter target);

/// Single-qubit block gate choice: identity, H, or S.
enum class BlockGate : std::uint8_t { I, H, S };

struct QPair {
  BlockGate on_control;
  BlockGate on_target;
  bool operator==(const QPair&) const = default;
};

/// All (Q_control, Q_target) pairs over {I,H,S}^2 whose conjugation turns
/// (control, target) into a reducible pair, in enumeration order. Nonempty
/// for every non-identity input; throws std::invalid_argument on identity.
std::vector<QPair> gen_q_pairs(PauliLetter control, PauliLetter target);

/// Change in (#reducible - #increasing) pairs at columns (i, j) across the
/// whole word caused by conjugating with the given Q pair.
int benefit(const PauliWord& word, std::uint32_t i, std::uint32_t j, const QPair& q);

/// Decides which rows may be extracted once reduced to weight <= 1. In the
/// preserving regime only front-layer rows are prunable and removals must be
/// reported so the front layer can advance.
class PrunePolicy {
 public:
  virtual ~PrunePolicy() = default;
  virtual bool prunable(std::uint32_t orig_index) const = 0;
  virtual void on_pruned(std::uint32_t orig_index) = 0;
};

/// Everything is prunable; removals are ignored. The modifying regime.
class FreePrunePolicy final : public PrunePolicy {
 public:
  bool prunable(std::uint32_t) const override { return true; }
  void on_pruned(std::uint32_t) override {}
};

/// Pruning gated by a commutation DAG, which is kept in sync as rows are
/// extracted. Preserving mode admits only front-layer rows; modifying mode
/// admits any active row.
class DagPrunePolicy final : public PrunePolicy {
 public:
  DagPrunePolicy(CommutationDag& dag, OrderingMode mode) : dag_(&dag), mode_(mode) {}
  bool prunable(std::uint32_t orig_index) const override {
    return mode_ == OrderingMode::Preserving ? dag_->is_front(orig_index)
                                             : dag_->is_active(orig_index);
  }
  void on_pruned(std::uint32_t orig_index) override { dag_->remove(orig_index, mode_); }

 private:
  CommutationDag* dag_;
  OrderingMode mode_;
};

struct ImplementedRotation {
  std::uint32_t orig_index;
  std::uint32_t qubit;  // meaningless for dropped identity rows
  double angle;         // Rz angle actually emitted
};

/// Result of implementing one target row (plus any co-reduced rows).
struct HeuristicOutcome {
  PauliWord reduced_word;
  /// Clifford blocks, prune rotations and Rz gates, in execution order.
  Circuit leading;
  /// Rows extracted, in extraction order. The target row always appears.
  std::vector<ImplementedRotation> implemented;
  /// Every Clifford gate applied to the word, in application order; the
  /// daggers of these accumulate into the tail.
  std::vector<CliffordGate> blocks;
  /// Weight-0 rows dropped as pure phase, in extraction order.
  std::vector<std::uint32_t> dropped_identities;
};

/// A synthesis heuristic: reduce the row with the given orig_index to a
/// single-qubit Z rotation, emitting the leading circuit fragment and the
/// reduced word. Must remove at least one row.
class ImplementHeuristic {
 public:
  virtual ~ImplementHeuristic() = default;
  virtual HeuristicOutcome implement(const PauliWord& word, std::uint32_t orig_index,
                                     PrunePolicy& policy) const = 0;
  virtual std::string_view name() const = 0;
};

/// Greedy all-to-all heuristic: repeatedly conjugate the word with the
/// Clifford block of highest benefit until the target row has weight one.
class LogicalGreedyHeuristic final : public ImplementHeuristic {
 public:
  HeuristicOutcome implement(const PauliWord& word, std::uint32_t orig_index,
                             PrunePolicy& policy) const override;
  std::string_view name() const override { return "logical"; }
};

/// Qubit connectivity plus all-pairs hop distances.
struct HardwareContext {
  std::uint32_t num_qubits = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<std::uint32_t>> dist;

  /// Validates the edge list, computes BFS hop distances, and rejects
  /// disconnected graphs with an error naming the components.
  static HardwareContext build(std::uint32_t num_qubits,
                               std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  bool coupled(std::uint32_t a, std::uint32_t b) const;
};

/// K x n bit matrix marking non-identity support, row-major.
std::vector<std::vector<bool>> occupancy(const PauliWord& word);

/// Sum of pairwise hop distances between the occupied qubits of row `pos`.
std::uint64_t dist_metric(const PauliWord& word, std::size_t pos, const HardwareContext& ctx);

/// Connectivity-restricted heuristic: every CX it emits lies on a coupling
/// edge. Tracks visited word states and, on a revisit, reverts to the first
/// occurrence and takes one aggressively greedy step before resuming
/// distance-metric mode.
class HardwareAwareHeuristic final : public ImplementHeuristic {
 public:
  explicit HardwareAwareHeuristic(HardwareContext ctx) : ctx_(std::move(ctx)) {}
  HeuristicOutcome implement(const PauliWord& word, std::uint32_t orig_index,
                             PrunePolicy& policy) const override;
  std::string_view name() const override { return "hardware"; }
  const HardwareContext& context() const { return ctx_; }

 private:
  HardwareContext ctx_;
};

/// Heuristic lookup by CLI name ("logical" or "hardware"). The hardware
/// heuristic requires a context.
std::unique_ptr<ImplementHeuristic> make_heuristic(std::string_view name,
                                                   const HardwareContext* ctx = nullptr);

}  // namespace paulinet
