#include "paulinet/mcts.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

#include "paulinet/tableau.hpp"

namespace paulinet {

std::size_t uct_select(std::span<const UctArm> arms, std::uint64_t node_visits, double mu) {
  if (arms.empty()) {
    throw std::logic_error("uct_select called with no actions");
  }
  std::size_t best = arms.size();
  bool best_unvisited = false;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < arms.size(); ++i) {
    const auto& arm = arms[i];
    const bool unvisited = arm.count == 0 || arm.child_visits == 0;
    if (unvisited) {
      if (!best_unvisited || arm.action < arms[best].action) {
        best = i;
        best_unvisited = true;
      }
      continue;
    }
    if (best_unvisited) continue;
    const double score =
        arm.reward + arm.child_value +
        mu * std::sqrt(std::log(static_cast<double>(node_visits)) / static_cast<double>(arm.count));
    if (best == arms.size() || score > best_score ||
        (score == best_score && arm.action < arms[best].action)) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

void backpropagate(std::span<NodeStats* const> path, std::span<const double> edge_rewards,
                   double tail_reward) {
  if (path.empty()) return;
  if (edge_rewards.size() + 1 != path.size()) {
    throw std::logic_error("backpropagate: path/reward length mismatch");
  }
  double suffix = tail_reward;
  // Walk leaf to root so each node sees its own cumulative reward.
  for (std::size_t i = path.size(); i-- > 0;) {
    NodeStats& stats = *path[i];
    stats.visits += 1;
    stats.value += (suffix - stats.value) / static_cast<double>(stats.visits);
    if (i > 0) suffix += edge_rewards[i - 1];
  }
}

namespace {

/// Least-weight available action, ties toward the lowest orig_index.
std::uint32_t greedy_action(const PauliWord& word, const std::vector<std::uint32_t>& actions) {
  std::uint32_t best = actions.front();
  std::uint32_t best_weight = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t action : actions) {
    const std::size_t pos = word.find(action);
    const std::uint32_t weight = word.row(pos).pauli.weight();
    if (weight < best_weight || (weight == best_weight && action < best)) {
      best = action;
      best_weight = weight;
    }
  }
  return best;
}

struct StepOutcome {
  HeuristicOutcome heuristic;
  std::vector<std::uint32_t> removed;  // extraction order, identities included
};

StepOutcome apply_action(const PauliWord& word, CommutationDag& dag, OrderingMode mode,
                         std::uint32_t action, const ImplementHeuristic& heuristic) {
  DagPrunePolicy policy(dag, mode);
  StepOutcome step{heuristic.implement(word, action, policy), {}};
  for (const auto& impl : step.heuristic.implemented) {
    step.removed.push_back(impl.orig_index);
  }
  step.removed.insert(step.removed.end(), step.heuristic.dropped_identities.begin(),
                      step.heuristic.dropped_identities.end());
  return step;
}

}  // namespace

Solution rollout(const PauliWord& word, const CommutationDag& dag, OrderingMode mode,
                 const ImplementHeuristic& heuristic) {
  PauliWord w = word;
  CommutationDag d = dag;
  Solution sol;
  sol.leading = Circuit(word.num_qubits());
  sol.source = SolutionSource::Rollout;
  while (!w.empty()) {
    const auto actions = d.available_actions(mode);
    if (actions.empty()) {
      throw std::logic_error("rollout: word nonempty but no actions available");
    }
    const std::uint32_t action = greedy_action(w, actions);
    StepOutcome step = apply_action(w, d, mode, action, heuristic);
    sol.order.insert(sol.order.end(), step.removed.begin(), step.removed.end());
    sol.leading.extend(step.heuristic.leading);
    sol.blocks.insert(sol.blocks.end(), step.heuristic.blocks.begin(),
                      step.heuristic.blocks.end());
    w = std::move(step.heuristic.reduced_word);
  }
  sol.cnots_leading = sol.leading.cnot_count();
  return sol;
}

namespace {

struct Node {
  PauliWord word{0};
  CommutationDag dag;
  std::uint64_t state_key = 0;
  NodeStats stats;
  std::vector<std::uint32_t> actions;  // available here, ascending

  struct Edge {
    std::uint32_t action;
    double reward;
    std::size_t child;
    std::uint64_t count = 0;
  };
  std::vector<Edge> edges;

  // Fragment of the step that created this node from its parent.
  Circuit frag_leading;
  std::vector<CliffordGate> frag_blocks;
  std::vector<std::uint32_t> frag_removed;

  bool terminal() const { return word.empty(); }
};

std::uint64_t state_key_of(const PauliWord& word, const CommutationDag& dag) {
  return word.fingerprint() ^ (dag.active_fingerprint() * 0x9e3779b97f4a7c15ull);
}

class Archive {
 public:
  Archive(std::uint32_t num_qubits, bool optimize_tail)
      : n_(num_qubits), optimize_tail_(optimize_tail) {}

  void add(Solution sol) {
    if (!seen_orders_.insert(sol.order).second) return;  // same order, same circuit
    Circuit tail = optimize_tail_ ? synthesize(accumulate_tail(sol.blocks, n_))
                                  : literal_tail(sol.blocks, n_);
    Circuit full = compose(sol.leading, tail);
    const int cnots = full.cnot_count();
    const int depth = full.depth();
    if (!has_best_ || cnots < best_cnots_ || (cnots == best_cnots_ && depth < best_depth_)) {
      has_best_ = true;
      best_cnots_ = cnots;
      best_depth_ = depth;
      best_ = std::move(sol);
      best_full_ = std::move(full);
    }
  }

  bool empty() const { return !has_best_; }
  int best_cnots() const { return best_cnots_; }
  int best_depth() const { return best_depth_; }
  const Solution& best() const { return best_; }
  const Circuit& best_full() const { return best_full_; }

 private:
  std::uint32_t n_;
  bool optimize_tail_;
  std::set<std::vector<std::uint32_t>> seen_orders_;
  bool has_best_ = false;
  int best_cnots_ = 0;
  int best_depth_ = 0;
  Solution best_;
  Circuit best_full_;
};

}  // namespace

SearchResult search(const PauliWord& word, const SearchConfig& cfg) {
  if (cfg.heuristic == nullptr) {
    throw std::invalid_argument("search: no heuristic configured");
  }
  if (word.empty()) {
    throw std::invalid_argument("search: word is empty");
  }
  if (cfg.iterations == 0) {
    throw std::invalid_argument("search: iterations must be positive");
  }

  std::deque<Node> pool;
  {
    Node root;
    root.word = word;
    root.dag = CommutationDag::build(word);
    root.state_key = state_key_of(root.word, root.dag);
    root.actions = root.dag.available_actions(cfg.mode);
    pool.push_back(std::move(root));
  }

  Archive archive(word.num_qubits(), cfg.optimize_tail);
  SearchResult result;

  const auto started = std::chrono::steady_clock::now();
  auto now_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  for (std::uint32_t iter = 1; iter <= cfg.iterations; ++iter) {
    const double iter_start = now_ms();

    std::vector<std::size_t> path{0};
    std::vector<std::size_t> chosen_edges;  // edge index taken at each path node

    // Selection walks the tree until it reaches a terminal, a never-visited
    // node (rollout point), or an unexpanded action (expansion).
    for (;;) {
      const std::size_t here = path.back();
      if (pool[here].terminal() || pool[here].stats.visits == 0) break;

      std::vector<UctArm> arms;
      arms.reserve(pool[here].actions.size());
      for (std::uint32_t action : pool[here].actions) {
        UctArm arm{action, 0.0, 0.0, 0, 0};
        for (const auto& e : pool[here].edges) {
          if (e.action == action) {
            arm.reward = e.reward;
            arm.child_value = pool[e.child].stats.value;
            arm.child_visits = pool[e.child].stats.visits;
            arm.count = e.count;
            break;
          }
        }
        arms.push_back(arm);
      }
      const std::size_t pick = uct_select(arms, pool[here].stats.visits, cfg.mu);
      const std::uint32_t action = arms[pick].action;

      std::size_t edge_index = pool[here].edges.size();
      for (std::size_t i = 0; i < pool[here].edges.size(); ++i) {
        if (pool[here].edges[i].action == action) {
          edge_index = i;
          break;
        }
      }
      if (edge_index == pool[here].edges.size()) {
        // Expansion: materialize the child by running the heuristic on
        // copies of the parent state.
        CommutationDag child_dag = pool[here].dag;
        StepOutcome step = apply_action(pool[here].word, child_dag, cfg.mode, action,
                                        *cfg.heuristic);
        Node child;
        child.word = std::move(step.heuristic.reduced_word);
        child.dag = std::move(child_dag);
        child.state_key = state_key_of(child.word, child.dag);
        child.actions = child.dag.available_actions(cfg.mode);
        child.frag_leading = std::move(step.heuristic.leading);
        child.frag_blocks = std::move(step.heuristic.blocks);
        child.frag_removed = std::move(step.removed);
        const double reward = -child.frag_leading.cnot_count();
        pool.push_back(std::move(child));
        pool[here].edges.push_back({action, reward, pool.size() - 1, 0});
        edge_index = pool[here].edges.size() - 1;
      }
      chosen_edges.push_back(edge_index);
      path.push_back(pool[here].edges[edge_index].child);
    }

    // Simulation from the leaf; a terminal leaf is its own completion.
    const Node& leaf = pool[path.back()];
    Solution suffix;
    double tail_reward = 0.0;
    if (!leaf.terminal()) {
      suffix = rollout(leaf.word, leaf.dag, cfg.mode, *cfg.heuristic);
      tail_reward = -suffix.leading.cnot_count();
    }

    // Stitch the tree prefix in front of the rollout suffix.
    Solution complete;
    complete.source = suffix.order.empty() ? SolutionSource::Explored : SolutionSource::Rollout;
    complete.leading = Circuit(word.num_qubits());
    for (std::size_t i = 1; i < path.size(); ++i) {
      const Node& n = pool[path[i]];
      complete.order.insert(complete.order.end(), n.frag_removed.begin(), n.frag_removed.end());
      complete.leading.extend(n.frag_leading);
      complete.blocks.insert(complete.blocks.end(), n.frag_blocks.begin(), n.frag_blocks.end());
    }
    if (!suffix.order.empty()) {
      complete.order.insert(complete.order.end(), suffix.order.begin(), suffix.order.end());
      complete.leading.extend(suffix.leading);
      complete.blocks.insert(complete.blocks.end(), suffix.blocks.begin(), suffix.blocks.end());
    }
    complete.cnots_leading = complete.leading.cnot_count();
    archive.add(std::move(complete));

    // Backpropagation with suffix-sum rewards.
    std::vector<NodeStats*> stats_path;
    std::vector<double> edge_rewards;
    stats_path.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      stats_path.push_back(&pool[path[i]].stats);
      if (i + 1 < path.size()) {
        Node::Edge& e = pool[path[i]].edges[chosen_edges[i]];
        e.count += 1;
        edge_rewards.push_back(e.reward);
      }
    }
    backpropagate(stats_path, edge_rewards, tail_reward);

    result.best_per_iteration.push_back(archive.best_cnots());
    result.elapsed_ms.push_back(now_ms() - iter_start);
    if (cfg.progress) cfg.progress(iter, archive.best_cnots(), now_ms());
  }

  result.best = archive.best();
  result.circuit = archive.best_full();
  result.total_cnots = archive.best_cnots();
  result.total_depth = archive.best_depth();
  return result;
}

}  // namespace paulinet
