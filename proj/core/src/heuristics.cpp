#include "paulinet/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace paulinet {

namespace {

constexpr std::array<BlockGate, 3> kBlockGates = {BlockGate::I, BlockGate::H, BlockGate::S};

/// Letter after conjugation by a block gate, sign ignored.
PauliLetter block_conjugate(BlockGate g, PauliLetter p) {
  switch (g) {
    case BlockGate::I:
      return p;
    case BlockGate::H:
      if (p == PauliLetter::X) return PauliLetter::Z;
      if (p == PauliLetter::Z) return PauliLetter::X;
      return p;
    case BlockGate::S:
      if (p == PauliLetter::X) return PauliLetter::Y;
      if (p == PauliLetter::Y) return PauliLetter::X;
      return p;
  }
  throw std::logic_error("invalid BlockGate");
}

void apply_and_record(PauliWord& word, const CliffordGate& g, std::vector<CliffordGate>& blocks) {
  word.apply(g);
  blocks.push_back(g);
}

void apply_block_gate(PauliWord& word, BlockGate g, std::uint32_t q,
                      std::vector<CliffordGate>& blocks) {
  if (g == BlockGate::H) apply_and_record(word, CliffordGate::h(q), blocks);
  if (g == BlockGate::S) apply_and_record(word, CliffordGate::s(q), blocks);
}

struct PairTally {
  int rp = 0;
  int ip = 0;
  int score() const { return rp - ip; }
};

PairTally tally_pairs(const PauliWord& word, std::uint32_t i, std::uint32_t j,
                      const QPair* conj = nullptr) {
  PairTally t;
  for (const auto& r : word.rows()) {
    PauliLetter li = r.pauli.letter(i);
    PauliLetter lj = r.pauli.letter(j);
    if (conj != nullptr) {
      li = block_conjugate(conj->on_control, li);
      lj = block_conjugate(conj->on_target, lj);
    }
    if (reducible_pair(li, lj)) ++t.rp;
    if (increasing_pair(li, lj)) ++t.ip;
  }
  return t;
}

/// Extracts every prunable row of weight <= 1, iterating until no further
/// row qualifies. The target row is taken first; afterwards rows are scanned
/// in word order, restarting after each extraction since single-qubit
/// rotations conjugate the remaining word. Weight-0 rows carry no rotation
/// and fold into the global phase.
void prune_rows(PauliWord& word, std::uint32_t target_orig, PrunePolicy& policy,
                HeuristicOutcome& out) {
  auto prune_at = [&](std::size_t pos) {
    auto& row = word.row(pos);
    const std::uint32_t orig = row.orig_index;
    if (row.pauli.is_identity()) {
      out.leading.add_global_phase(-row.angle * (row.pauli.sign() ? -1.0 : 1.0));
      out.dropped_identities.push_back(orig);
    } else {
      const std::uint32_t q = row.pauli.support().front();
      while (word.row(pos).pauli.letter(q) != PauliLetter::Z) {
        const CliffordGate g = word.row(pos).pauli.letter(q) == PauliLetter::X
                                   ? CliffordGate::h(q)
                                   : CliffordGate::s(q);
        apply_and_record(word, g, out.blocks);
        out.leading.append(g);
      }
      const auto& reduced = word.row(pos);
      const double angle = 2.0 * reduced.angle * (reduced.pauli.sign() ? -1.0 : 1.0);
      out.leading.append(Gate::rz(angle, q));
      out.implemented.push_back({orig, q, angle});
    }
    word.remove_at(pos);
    policy.on_pruned(orig);
  };

  const std::size_t target_pos = word.find(target_orig);
  if (target_pos == PauliWord::npos || !policy.prunable(target_orig)) {
    throw std::logic_error("target row is not prunable after reduction");
  }
  prune_at(target_pos);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      const auto& row = word.row(pos);
      if (row.pauli.weight() <= 1 && policy.prunable(row.orig_index)) {
        prune_at(pos);
        changed = true;
        break;
      }
    }
  }
}

std::size_t checked_target(const PauliWord& word, std::uint32_t orig_index) {
  const std::size_t pos = word.find(orig_index);
  if (pos == PauliWord::npos) {
    throw std::invalid_argument("target row " + std::to_string(orig_index) +
                                " is not in the word");
  }
  if (word.row(pos).pauli.is_identity()) {
    throw std::invalid_argument("target row " + std::to_string(orig_index) +
                                " has weight 0; pure-phase rows are the caller's job");
  }
  return pos;
}

}  // namespace

bool reducible_pair(PauliLetter control, PauliLetter target) {
  return (control == PauliLetter::X && target == PauliLetter::X) ||
         (control == PauliLetter::Z && target == PauliLetter::Z) ||
         (control == PauliLetter::Y && target == PauliLetter::X) ||
         (control == PauliLetter::Z && target == PauliLetter::Y);
}

bool increasing_pair(PauliLetter control, PauliLetter target) {
  return (control == PauliLetter::X && target == PauliLetter::I) ||
         (control == PauliLetter::I && target == PauliLetter::Z) ||
         (control == PauliLetter::Y && target == PauliLetter::I) ||
         (control == PauliLetter::I && target == PauliLetter::Y);
}

std::vector<QPair> gen_q_pairs(PauliLetter control, PauliLetter target) {
  if (control == PauliLetter::I || target == PauliLetter::I) {
    throw std::invalid_argument("gen_q_pairs requires non-identity letters");
  }
  std::vector<QPair> out;
  for (BlockGate qc : kBlockGates) {
    for (BlockGate qt : kBlockGates) {
      if (reducible_pair(block_conjugate(qc, control), block_conjugate(qt, target))) {
        out.push_back({qc, qt});
      }
    }
  }
  return out;
}

int benefit(const PauliWord& word, std::uint32_t i, std::uint32_t j, const QPair& q) {
  const PairTally before = tally_pairs(word, i, j);
  const PairTally after = tally_pairs(word, i, j, &q);
  return after.score() - before.score();
}

HeuristicOutcome LogicalGreedyHeuristic::implement(const PauliWord& word,
                                                   std::uint32_t orig_index,
                                                   PrunePolicy& policy) const {
  std::size_t pos = checked_target(word, orig_index);
  HeuristicOutcome out{word, Circuit(word.num_qubits()), {}, {}, {}};
  PauliWord& w = out.reduced_word;

  while (w.row(pos).pauli.weight() > 1) {
    const auto support = w.row(pos).pauli.support();

    struct Candidate {
      int benefit = std::numeric_limits<int>::min();
      int rp_after = 0;
      std::uint32_t i = 0, j = 0;
      std::size_t q_rank = 0;
      QPair q{};
    };
    Candidate best;
    auto better = [](const Candidate& a, const Candidate& b) {
      if (a.benefit != b.benefit) return a.benefit > b.benefit;
      if (a.rp_after != b.rp_after) return a.rp_after > b.rp_after;
      if (a.i != b.i) return a.i < b.i;
      if (a.j != b.j) return a.j < b.j;
      return a.q_rank < b.q_rank;
    };

    for (std::uint32_t i : support) {
      for (std::uint32_t j : support) {
        if (i == j) continue;
        const PauliLetter ctrl = w.row(pos).pauli.letter(i);
        const PauliLetter targ = w.row(pos).pauli.letter(j);
        const PairTally before = tally_pairs(w, i, j);
        const auto qpairs = gen_q_pairs(ctrl, targ);
        for (std::size_t rank = 0; rank < qpairs.size(); ++rank) {
          const PairTally after = tally_pairs(w, i, j, &qpairs[rank]);
          Candidate cand{after.score() - before.score(), after.rp, i, j, rank, qpairs[rank]};
          if (best.benefit == std::numeric_limits<int>::min() || better(cand, best)) {
            best = cand;
          }
        }
      }
    }

    const std::uint32_t weight_before = w.row(pos).pauli.weight();
    apply_block_gate(w, best.q.on_control, best.i, out.blocks);
    apply_block_gate(w, best.q.on_target, best.j, out.blocks);
    apply_and_record(w, CliffordGate::cx(best.i, best.j), out.blocks);
    if (w.row(pos).pauli.weight() >= weight_before) {
      throw std::logic_error("clifford block failed to reduce the target row");
    }
  }

  for (const auto& g : out.blocks) out.leading.append(g);
  prune_rows(w, orig_index, policy, out);
  return out;
}

HardwareContext HardwareContext::build(
    std::uint32_t num_qubits, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  if (num_qubits == 0) {
    throw std::invalid_argument("coupling graph needs at least one qubit");
  }
  for (auto& [a, b] : edges) {
    if (a >= num_qubits || b >= num_qubits) {
      throw std::invalid_argument("coupling edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range for n=" +
                                  std::to_string(num_qubits));
    }
    if (a == b) {
      throw std::invalid_argument("coupling edge endpoints must differ, got qubit " +
                                  std::to_string(a));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::vector<std::uint32_t>> adj(num_qubits);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::vector<std::uint32_t>> dist(num_qubits,
                                               std::vector<std::uint32_t>(num_qubits, kUnreached));
  for (std::uint32_t src = 0; src < num_qubits; ++src) {
    std::vector<std::uint32_t> queue{src};
    dist[src][src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t u = queue[head];
      for (std::uint32_t v : adj[u]) {
        if (dist[src][v] == kUnreached) {
          dist[src][v] = dist[src][u] + 1;
          queue.push_back(v);
        }
      }
    }
  }

  if (std::any_of(dist[0].begin(), dist[0].end(),
                  [](std::uint32_t d) { return d == kUnreached; })) {
    // Name the components so the offending file is easy to fix.
    std::vector<int> component(num_qubits, -1);
    int next = 0;
    for (std::uint32_t q = 0; q < num_qubits; ++q) {
      if (component[q] != -1) continue;
      std::vector<std::uint32_t> queue{q};
      component[q] = next;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::uint32_t v : adj[queue[head]]) {
          if (component[v] == -1) {
            component[v] = next;
            queue.push_back(v);
          }
        }
      }
      ++next;
    }
    std::ostringstream msg;
    msg << "coupling graph is disconnected: components";
    for (int c = 0; c < next; ++c) {
      msg << (c == 0 ? " " : ", ") << "{";
      bool first = true;
      for (std::uint32_t q = 0; q < num_qubits; ++q) {
        if (component[q] == c) {
          msg << (first ? "" : " ") << q;
          first = false;
        }
      }
      msg << "}";
    }
    throw std::invalid_argument(msg.str());
  }

  HardwareContext ctx;
  ctx.num_qubits = num_qubits;
  ctx.edges = std::move(edges);
  ctx.dist = std::move(dist);
  return ctx;
}

bool HardwareContext::coupled(std::uint32_t a, std::uint32_t b) const {
  return a != b && dist[a][b] == 1;
}

std::vector<std::vector<bool>> occupancy(const PauliWord& word) {
  std::vector<std::vector<bool>> o(word.size(), std::vector<bool>(word.num_qubits(), false));
  for (std::size_t k = 0; k < word.size(); ++k) {
    const auto& p = word.row(k).pauli;
    for (std::uint32_t q = 0; q < word.num_qubits(); ++q) {
      o[k][q] = p.x(q) || p.z(q);
    }
  }
  return o;
}

std::uint64_t dist_metric(const PauliWord& word, std::size_t pos, const HardwareContext& ctx) {
  const auto support = word.row(pos).pauli.support();
  std::uint64_t total = 0;
  for (std::uint32_t a : support) {
    for (std::uint32_t b : support) {
      total += ctx.dist[a][b];
    }
  }
  return total;
}

namespace {

std::uint64_t support_dist(const std::vector<std::uint32_t>& support, const HardwareContext& ctx) {
  std::uint64_t total = 0;
  for (std::uint32_t a : support) {
    for (std::uint32_t b : support) {
      total += ctx.dist[a][b];
    }
  }
  return total;
}

struct HwCandidate {
  BlockGate q_control = BlockGate::I;
  BlockGate q_target = BlockGate::I;
  std::uint32_t control = 0;
  std::uint32_t target = 0;
  int weight_delta = 0;  // row weight decrease; 1 = elimination, -1 = spread
  std::uint64_t dist_after = 0;
  bool eliminates_far = false;
  bool approaches = false;
  std::size_t rank = 0;
};

/// Farthest occupied qubits: argmax over the support of the maximum hop
/// distance to any other occupied qubit.
std::vector<std::uint32_t> farthest_qubits(const std::vector<std::uint32_t>& support,
                                           const HardwareContext& ctx) {
  std::uint32_t best = 0;
  std::vector<std::uint32_t> out;
  for (std::uint32_t q : support) {
    std::uint32_t far = 0;
    for (std::uint32_t p : support) {
      far = std::max(far, ctx.dist[q][p]);
    }
    if (far > best) {
      best = far;
      out.clear();
    }
    if (far == best) out.push_back(q);
  }
  return out;
}

std::vector<HwCandidate> gen_ops(const PauliString& target_row, const HardwareContext& ctx) {
  const auto support = target_row.support();
  const auto far_set = farthest_qubits(support, ctx);
  auto occupied = [&](std::uint32_t q) { return target_row.letter(q) != PauliLetter::I; };

  std::vector<HwCandidate> out;
  std::size_t rank = 0;
  for (const auto& [a, b] : ctx.edges) {
    if (!occupied(a) && !occupied(b)) continue;
    for (const auto& [ci, tj] : {std::pair{a, b}, std::pair{b, a}}) {
      for (BlockGate qc : kBlockGates) {
        for (BlockGate qt : kBlockGates) {
          PauliString scratch = target_row;
          if (qc != BlockGate::I) {
            scratch.apply(qc == BlockGate::H ? CliffordGate::h(ci) : CliffordGate::s(ci));
          }
          if (qt != BlockGate::I) {
            scratch.apply(qt == BlockGate::H ? CliffordGate::h(tj) : CliffordGate::s(tj));
          }
          scratch.apply(CliffordGate::cx(ci, tj));

          HwCandidate cand{qc, qt, ci, tj, 0, 0, false, false, rank++};
          const auto after = scratch.support();
          cand.weight_delta = static_cast<int>(support.size()) - static_cast<int>(after.size());
          cand.dist_after = support_dist(after, ctx);

          if (cand.weight_delta == 1) {
            std::uint32_t eliminated = 0;
            for (std::uint32_t q : support) {
              if (scratch.letter(q) == PauliLetter::I) {
                eliminated = q;
                break;
              }
            }
            cand.eliminates_far =
                std::find(far_set.begin(), far_set.end(), eliminated) != far_set.end();
          } else if (cand.weight_delta == -1) {
            std::uint32_t spread_to = 0;
            for (std::uint32_t q : after) {
              if (target_row.letter(q) == PauliLetter::I) {
                spread_to = q;
                break;
              }
            }
            const std::uint32_t source = spread_to == ci ? tj : ci;
            std::uint32_t near_new = std::numeric_limits<std::uint32_t>::max();
            std::uint32_t near_old = std::numeric_limits<std::uint32_t>::max();
            for (std::uint32_t p : support) {
              if (p == source) continue;
              near_new = std::min(near_new, ctx.dist[spread_to][p]);
              near_old = std::min(near_old, ctx.dist[source][p]);
            }
            cand.approaches = near_new < near_old;
          }
          out.push_back(cand);
        }
      }
    }
  }
  return out;
}

/// Candidate pool per the intent: eliminations of farthest-qubit Paulis and
/// distance-reducing moves first; when the occupied support is an
/// independent set of the coupling graph no single block can do either, so
/// spreads that move a Pauli strictly closer to the rest qualify instead.
std::vector<HwCandidate> filter_ops(const std::vector<HwCandidate>& all,
                                    std::uint64_t dist_before) {
  std::vector<HwCandidate> pool;
  for (const auto& c : all) {
    if (c.eliminates_far || c.dist_after < dist_before) pool.push_back(c);
  }
  if (pool.empty()) {
    for (const auto& c : all) {
      if (c.weight_delta == -1 && c.approaches) pool.push_back(c);
    }
  }
  if (pool.empty()) pool = all;
  return pool;
}

const HwCandidate* best_operation(const std::vector<HwCandidate>& pool, bool greedy_switch) {
  const HwCandidate* best = nullptr;
  auto better_metric = [](const HwCandidate& a, const HwCandidate& b) {
    if (a.dist_after != b.dist_after) return a.dist_after < b.dist_after;
    if (a.weight_delta != b.weight_delta) return a.weight_delta > b.weight_delta;
    return a.rank < b.rank;
  };
  auto better_greedy = [](const HwCandidate& a, const HwCandidate& b) {
    if (a.weight_delta != b.weight_delta) return a.weight_delta > b.weight_delta;
    if (a.dist_after != b.dist_after) return a.dist_after < b.dist_after;
    return a.rank < b.rank;
  };
  for (const auto& c : pool) {
    if (best == nullptr || (greedy_switch ? better_greedy(c, *best) : better_metric(c, *best))) {
      best = &c;
    }
  }
  return best;
}

std::vector<CliffordGate> candidate_gates(const HwCandidate& c) {
  std::vector<CliffordGate> gates;
  if (c.q_control == BlockGate::H) gates.push_back(CliffordGate::h(c.control));
  if (c.q_control == BlockGate::S) gates.push_back(CliffordGate::s(c.control));
  if (c.q_target == BlockGate::H) gates.push_back(CliffordGate::h(c.target));
  if (c.q_target == BlockGate::S) gates.push_back(CliffordGate::s(c.target));
  gates.push_back(CliffordGate::cx(c.control, c.target));
  return gates;
}

}  // namespace

HeuristicOutcome HardwareAwareHeuristic::implement(const PauliWord& word,
                                                   std::uint32_t orig_index,
                                                   PrunePolicy& policy) const {
  if (word.num_qubits() != ctx_.num_qubits) {
    throw std::invalid_argument("word has " + std::to_string(word.num_qubits()) +
                                " qubits but the coupling graph has " +
                                std::to_string(ctx_.num_qubits));
  }
  const std::size_t pos = checked_target(word, orig_index);
  HeuristicOutcome out{word, Circuit(word.num_qubits()), {}, {}, {}};
  PauliWord& w = out.reduced_word;

  std::vector<PauliWord> elapsed_states{w};
  std::vector<std::uint64_t> elapsed_keys{w.fingerprint()};
  std::vector<std::vector<CliffordGate>> reduction;  // gates per accepted op
  bool greedy_switch = false;

  const std::uint64_t cap =
      64ull * w.num_qubits() * std::max<std::uint64_t>(1, w.row(pos).pauli.weight());
  std::uint64_t steps = 0;

  while (w.row(pos).pauli.weight() > 1) {
    if (++steps > cap) {
      std::ostringstream msg;
      msg << "hardware heuristic exceeded " << cap << " steps on row " << orig_index
          << "; residual target " << w.row(pos).pauli.render() << ", dist "
          << dist_metric(w, pos, ctx_);
      throw std::runtime_error(msg.str());
    }

    const auto all = gen_ops(w.row(pos).pauli, ctx_);
    auto pool = filter_ops(all, dist_metric(w, pos, ctx_));

    // Prefer ops leading to states not seen before; the elapsed list exists
    // to detect loops, so do not walk into a known one when avoidable.
    std::vector<HwCandidate> fresh;
    std::vector<std::vector<CliffordGate>> fresh_gates;
    for (const auto& c : pool) {
      auto gates = candidate_gates(c);
      for (const auto& g : gates) w.apply(g);
      const std::uint64_t key = w.fingerprint();
      for (auto it = gates.rbegin(); it != gates.rend(); ++it) w.apply(it->dagger());
      if (std::find(elapsed_keys.begin(), elapsed_keys.end(), key) == elapsed_keys.end()) {
        fresh.push_back(c);
        fresh_gates.push_back(std::move(gates));
      }
    }
    const bool use_fresh = !fresh.empty();
    const HwCandidate* op = best_operation(use_fresh ? fresh : pool, greedy_switch);

    auto gates = candidate_gates(*op);
    for (const auto& g : gates) w.apply(g);
    const std::uint64_t key = w.fingerprint();

    const auto seen = std::find(elapsed_keys.begin(), elapsed_keys.end(), key);
    if (seen == elapsed_keys.end()) {
      reduction.push_back(std::move(gates));
      elapsed_states.push_back(w);
      elapsed_keys.push_back(key);
      greedy_switch = false;
    } else {
      // Loop: revert to the first appearance of this state and take one
      // aggressively greedy step before resuming metric mode.
      const std::size_t idx = static_cast<std::size_t>(seen - elapsed_keys.begin());
      w = elapsed_states[idx];
      reduction.resize(idx);
      elapsed_states.resize(idx + 1);
      elapsed_keys.resize(idx + 1);
      greedy_switch = true;
    }
  }

  for (const auto& gates : reduction) {
    for (const auto& g : gates) {
      out.blocks.push_back(g);
      out.leading.append(g);
    }
  }
  prune_rows(w, orig_index, policy, out);
  return out;
}

std::unique_ptr<ImplementHeuristic> make_heuristic(std::string_view name,
                                                   const HardwareContext* ctx) {
  if (name == "logical") return std::make_unique<LogicalGreedyHeuristic>();
  if (name == "hardware") {
    if (ctx == nullptr) {
      throw std::invalid_argument("hardware heuristic requires a coupling context");
    }
    return std::make_unique<HardwareAwareHeuristic>(*ctx);
  }
  throw std::invalid_argument("unknown heuristic '" + std::string(name) +
                              "' (expected logical or hardware)");
}

}  // namespace paulinet
