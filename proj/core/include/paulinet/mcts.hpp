#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "paulinet/circuit.hpp"
#include "paulinet/commutation_dag.hpp"
#include "paulinet/heuristics.hpp"
#include "paulinet/pauli.hpp"

namespace paulinet {

/// Per-action statistics visible to the tree policy.
struct UctArm {
  std::uint32_t action = 0;    // orig_index of the row to implement
  double reward = 0.0;         // one-step reward: -CNOTs of the action's blocks
  double child_value = 0.0;    // running-average value of the child
  std::uint64_t child_visits = 0;
  std::uint64_t count = 0;     // times this action was chosen here
};

/// Upper-confidence selection: argmax of reward + child value +
/// mu * sqrt(ln(node_visits) / count). Arms with count == 0 (or an unvisited
/// child) score infinity and win outright, lowest action first; finite ties
/// also break toward the lowest action. Returns the index into `arms`.
std::size_t uct_select(std::span<const UctArm> arms, std::uint64_t node_visits, double mu);

/// Running-average value estimate of a search node.
struct NodeStats {
  double value = 0.0;
  std::uint64_t visits = 0;
};

/// Folds one terminal outcome into every node along the root-to-leaf path.
/// edge_rewards[i] is the one-step reward between path[i] and path[i+1];
/// tail_reward is the cumulative reward accumulated below the last node.
/// Each node receives the suffix sum of rewards from itself to the terminal.
void backpropagate(std::span<NodeStats* const> path, std::span<const double> edge_rewards,
                   double tail_reward);

enum class SolutionSource : std::uint8_t { Explored, Rollout };

/// One complete implementation order with its leading circuit. The tail
/// Clifford is not included; `blocks` carries what the tail must undo.
struct Solution {
  std::vector<std::uint32_t> order;
  Circuit leading;
  std::vector<CliffordGate> blocks;
  int cnots_leading = 0;
  SolutionSource source = SolutionSource::Rollout;
};

/// Greedy completion: repeatedly implement the available row of least
/// weight (ties toward the lowest orig_index) until the word is empty.
Solution rollout(const PauliWord& word, const CommutationDag& dag, OrderingMode mode,
                 const ImplementHeuristic& heuristic);

struct SearchConfig {
  std::uint32_t iterations = 1;
  double mu = 1.4142135623730951;  // sqrt(2)
  std::uint64_t seed = 0;
  OrderingMode mode = OrderingMode::Preserving;
  const ImplementHeuristic* heuristic = nullptr;
  /// When false the tail is emitted as the literal reversed dagger blocks.
  bool optimize_tail = true;
  /// Called once per iteration with (iteration, best total CNOTs, ms).
  std::function<void(std::uint32_t, int, double)> progress;
};

struct SearchResult {
  Solution best;
  Circuit circuit;  // leading composed with the (optimized) tail
  int total_cnots = 0;
  int total_depth = 0;
  std::vector<int> best_per_iteration;   // non-increasing
  std::vector<double> elapsed_ms;        // per iteration
};

/// Monte Carlo Tree Search over implementation orders. Deterministic for a
/// fixed (word, config); every rollout and explored terminal lands in the
/// solution archive and the best (CNOTs, then depth, then discovery order)
/// is returned with its tail synthesized.
SearchResult search(const PauliWord& word, const SearchConfig& cfg);

}  // namespace paulinet
