#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "paulinet/commutation_dag.hpp"
#include "paulinet/dense.hpp"
#include "paulinet/heuristics.hpp"
#include "paulinet/io.hpp"
#include "paulinet/tableau.hpp"
#include "test_support.hpp"

using namespace paulinet;
using testsupport::all_letters;

namespace {

PauliWord word_of(std::initializer_list<const char*> strings, double angle = 0.3) {
  PauliWord w(PauliString::parse(*strings.begin()).num_qubits());
  for (const char* s : strings) w.append(PauliString::parse(s), angle);
  return w;
}

CliffordGate block_gate_on(BlockGate g, std::uint32_t q) {
  REQUIRE(g != BlockGate::I);
  return g == BlockGate::H ? CliffordGate::h(q) : CliffordGate::s(q);
}

/// Applies a Q pair then CX to a fresh two-qubit string carrying (control,
/// target) letters; the independent route to what a Clifford block does.
PauliString conjugate_pair(PauliLetter control, PauliLetter target, const QPair& q) {
  PauliString p(2);
  p.set_letter(0, control);
  p.set_letter(1, target);
  if (q.on_control != BlockGate::I) p.apply(block_gate_on(q.on_control, 0));
  if (q.on_target != BlockGate::I) p.apply(block_gate_on(q.on_target, 1));
  p.apply(CliffordGate::cx(0, 1));
  return p;
}

HardwareContext path_context(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  return HardwareContext::build(n, edges);
}

HardwareContext ring_context(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t q = 0; q < n; ++q) edges.emplace_back(q, (q + 1) % n);
  return HardwareContext::build(n, edges);
}

HardwareContext complete_context(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return HardwareContext::build(n, edges);
}

HardwareContext grid_context(std::uint32_t rows, std::uint32_t cols) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  auto site = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(site(r, c), site(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(site(r, c), site(r + 1, c));
    }
  }
  return HardwareContext::build(rows * cols, edges);
}

/// Replays the outcome's blocks over the input word and drops the
/// extracted rows; must reproduce the reduced word exactly.
void check_replay(const PauliWord& input, const HeuristicOutcome& out) {
  PauliWord replay = input;
  for (const auto& g : out.blocks) replay.apply(g);
  for (const auto& impl : out.implemented) {
    const std::size_t pos = replay.find(impl.orig_index);
    REQUIRE(pos != PauliWord::npos);
    replay.remove_at(pos);
  }
  for (std::uint32_t orig : out.dropped_identities) {
    const std::size_t pos = replay.find(orig);
    REQUIRE(pos != PauliWord::npos);
    replay.remove_at(pos);
  }
  REQUIRE(replay.size() == out.reduced_word.size());
  for (std::size_t k = 0; k < replay.size(); ++k) {
    CHECK(replay.row(k).pauli == out.reduced_word.row(k).pauli);
    CHECK(replay.row(k).orig_index == out.reduced_word.row(k).orig_index);
  }
}

/// One implementation step satisfies
///   U(word) == tail * U(reduced) * leading   (as matrices, up to phase)
/// where tail is the literal reversed dagger-block circuit.
void check_step_unitary(const PauliWord& input, const HeuristicOutcome& out) {
  const dense::Matrix lhs = dense::word_unitary(input);
  const dense::Matrix leading = dense::circuit_unitary(out.leading);
  const dense::Matrix tail =
      dense::circuit_unitary(literal_tail(out.blocks, input.num_qubits()));
  const dense::Matrix rest = dense::word_unitary(out.reduced_word);
  CHECK(dense::equal_up_to_phase(lhs, tail * rest * leading, 1e-9));
}

void check_coupling(const HeuristicOutcome& out, const HardwareContext& ctx) {
  for (const auto& g : out.leading.gates()) {
    if (g.kind == GateKind::CX) {
      CHECK(ctx.coupled(g.q0, g.q1));
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("heuristics");

TEST_CASE("reducible and increasing pairs") {
  CHECK(reducible_pair(PauliLetter::X, PauliLetter::X));
  CHECK(reducible_pair(PauliLetter::Z, PauliLetter::Z));
  CHECK(reducible_pair(PauliLetter::Y, PauliLetter::X));
  CHECK(reducible_pair(PauliLetter::Z, PauliLetter::Y));
  CHECK(!reducible_pair(PauliLetter::X, PauliLetter::I));

  CHECK(increasing_pair(PauliLetter::X, PauliLetter::I));
  CHECK(increasing_pair(PauliLetter::I, PauliLetter::Z));
  CHECK(increasing_pair(PauliLetter::Y, PauliLetter::I));
  CHECK(increasing_pair(PauliLetter::I, PauliLetter::Y));
  CHECK(!increasing_pair(PauliLetter::I, PauliLetter::I));

  // Derived: RP iff CX strictly reduces weight, IP iff it strictly
  // increases it, across all 16 letter pairs.
  for (PauliLetter c : all_letters()) {
    for (PauliLetter t : all_letters()) {
      PauliString p(2);
      p.set_letter(0, c);
      p.set_letter(1, t);
      const int before = static_cast<int>(p.weight());
      const int after = static_cast<int>(p.applied(CliffordGate::cx(0, 1)).weight());
      CHECK(reducible_pair(c, t) == (after < before));
      CHECK(increasing_pair(c, t) == (after > before));
    }
  }
}

TEST_CASE("gen_q_pairs") {
  const auto xx = gen_q_pairs(PauliLetter::X, PauliLetter::X);
  CHECK(std::find(xx.begin(), xx.end(), QPair{BlockGate::I, BlockGate::I}) != xx.end());

  // H on the target maps Z to X, so (Y, Z) admits (I, H).
  const auto yz = gen_q_pairs(PauliLetter::Y, PauliLetter::Z);
  CHECK(std::find(yz.begin(), yz.end(), QPair{BlockGate::I, BlockGate::H}) != yz.end());

  CHECK_THROWS_AS(gen_q_pairs(PauliLetter::I, PauliLetter::X), std::invalid_argument);
  CHECK_THROWS_AS(gen_q_pairs(PauliLetter::X, PauliLetter::I), std::invalid_argument);

  // Brute force over {I,H,S}^2 via actual gate application: a pair belongs
  // in the list iff the conjugated block strictly reduces the weight.
  const std::vector<BlockGate> gates = {BlockGate::I, BlockGate::H, BlockGate::S};
  for (PauliLetter c : all_letters()) {
    for (PauliLetter t : all_letters()) {
      if (c == PauliLetter::I || t == PauliLetter::I) continue;
      const auto got = gen_q_pairs(c, t);
      CHECK(!got.empty());
      std::vector<QPair> expected;
      for (BlockGate qc : gates) {
        for (BlockGate qt : gates) {
          if (conjugate_pair(c, t, {qc, qt}).weight() < 2) {
            expected.push_back({qc, qt});
          }
        }
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("benefit hand cases") {
  const PauliWord xx = word_of({"XX"});
  CHECK(benefit(xx, 0, 1, {BlockGate::I, BlockGate::I}) == 0);

  const PauliWord both = word_of({"XX", "ZZ"});
  // (I, I) keeps XX reducible and ZZ reducible: no change.
  CHECK(benefit(both, 0, 1, {BlockGate::I, BlockGate::I}) == 0);

  // (H, H) swaps the two reducible pairs into each other: still no change.
  CHECK(benefit(both, 0, 1, {BlockGate::H, BlockGate::H}) == 0);

  // On ["XZ"], (H, I) turns the pair into ZZ: one new reducible pair.
  const PauliWord xz = word_of({"ZX"});
  CHECK(benefit(xz, 0, 1, {BlockGate::H, BlockGate::I}) == 1);
}

TEST_CASE("benefit matches an independent recount") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint32_t> qubit(0, 3);
  const std::vector<BlockGate> gates = {BlockGate::I, BlockGate::H, BlockGate::S};
  for (int trial = 0; trial < 40; ++trial) {
    const PauliWord w = random_word(4, 6, 0.6, 4000 + trial);
    std::uint32_t i = qubit(rng), j = qubit(rng);
    if (i == j) j = (j + 1) % 4;
    const QPair q{gates[trial % 3], gates[(trial / 3) % 3]};

    // Recount via real gate application on a scratch word.
    auto count = [&](const PauliWord& v) {
      int rp = 0, ip = 0;
      for (const auto& r : v.rows()) {
        if (reducible_pair(r.pauli.letter(i), r.pauli.letter(j))) ++rp;
        if (increasing_pair(r.pauli.letter(i), r.pauli.letter(j))) ++ip;
      }
      return rp - ip;
    };
    PauliWord conj = w;
    if (q.on_control != BlockGate::I) conj.apply(block_gate_on(q.on_control, i));
    if (q.on_target != BlockGate::I) conj.apply(block_gate_on(q.on_target, j));
    CHECK(benefit(w, i, j, q) == count(conj) - count(w));
  }
}

TEST_CASE("logical heuristic on a bare Z") {
  const PauliWord w = word_of({"Z"}, 0.4);
  FreePrunePolicy policy;
  const auto out = LogicalGreedyHeuristic().implement(w, 0, policy);
  CHECK(out.leading.cnot_count() == 0);
  CHECK(out.reduced_word.empty());
  REQUIRE(out.implemented.size() == 1);
  CHECK(out.implemented[0].qubit == 0);
  CHECK(out.implemented[0].angle == doctest::Approx(0.8));  // Rz(2 * theta)
  CHECK(out.leading.gates().back().kind == GateKind::Rz);
}

TEST_CASE("weight-w string needs exactly w-1 blocks") {
  const PauliWord w = word_of({"ZYXZ"}, 0.25);
  FreePrunePolicy policy;
  const auto out = LogicalGreedyHeuristic().implement(w, 0, policy);
  CHECK(out.leading.cnot_count() == 3);
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("identical rows co-reduce") {
  const PauliWord w = word_of({"XX", "XX"});
  FreePrunePolicy policy;
  const auto out = LogicalGreedyHeuristic().implement(w, 0, policy);
  CHECK(out.leading.cnot_count() == 1);
  CHECK(out.implemented.size() == 2);  // m == 2
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("logical heuristic rejects bad targets") {
  FreePrunePolicy policy;
  CHECK_THROWS_AS(LogicalGreedyHeuristic().implement(word_of({"II"}), 0, policy),
                  std::invalid_argument);
  CHECK_THROWS_AS(LogicalGreedyHeuristic().implement(word_of({"XX"}), 5, policy),
                  std::invalid_argument);
}

TEST_CASE("logical heuristic random replay and unitary equality") {
  for (int trial = 0; trial < 15; ++trial) {
    const PauliWord w = random_word(4, 5, 0.6, 7000 + trial);
    auto dag = CommutationDag::build(w);
    DagPrunePolicy policy(dag, OrderingMode::Preserving);
    const std::uint32_t target = dag.front_layer().front();
    const auto out = LogicalGreedyHeuristic().implement(w, target, policy);
    CHECK(!out.implemented.empty());
    CHECK(out.implemented.front().orig_index == target);
    check_replay(w, out);
    check_step_unitary(w, out);
    // Co-pruned rows left the DAG too.
    for (const auto& impl : out.implemented) {
      CHECK(!dag.is_active(impl.orig_index));
    }
  }
}

TEST_CASE("occupancy") {
  const auto o1 = occupancy(word_of({"XIZI"}));
  CHECK(o1 == std::vector<std::vector<bool>>{{false, true, false, true}});

  const auto o2 = occupancy(word_of({"IIII"}));
  CHECK(o2 == std::vector<std::vector<bool>>{{false, false, false, false}});

  const PauliWord w = random_word(5, 4, 0.5, 31);
  const auto o = occupancy(w);
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (std::uint32_t q = 0; q < 5; ++q) {
      CHECK(o[k][q] == (w.row(k).pauli.x(q) || w.row(k).pauli.z(q)));
    }
  }
}

TEST_CASE("dist metric") {
  const auto path = path_context(3);
  CHECK(dist_metric(word_of({"IIZ"}), 0, path) == 0);
  CHECK(dist_metric(word_of({"XIX"}), 0, path) == 4);  // D[0][2] both ways

  const auto complete = complete_context(5);
  const PauliWord w4 = word_of({"IXXXX"});
  CHECK(dist_metric(w4, 0, complete) == 4 * 3);  // w(w-1) on a complete graph
}

TEST_CASE("hardware context validation") {
  CHECK_THROWS_WITH_AS(HardwareContext::build(4, {{0, 1}, {2, 3}}),
                       doctest::Contains("components {0 1}, {2 3}"), std::invalid_argument);
  CHECK_THROWS_AS(HardwareContext::build(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(HardwareContext::build(2, {{1, 1}}), std::invalid_argument);

  const auto path = path_context(3);
  CHECK(path.dist[0][2] == 2);
  CHECK(path.coupled(0, 1));
  CHECK(!path.coupled(0, 2));
}

TEST_CASE("hardware heuristic on an adjacent pair") {
  const PauliWord w = word_of({"XX"});
  FreePrunePolicy policy;
  const auto out = HardwareAwareHeuristic(path_context(2)).implement(w, 0, policy);
  CHECK(out.leading.cnot_count() == 1);
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("hardware heuristic bridges a gap") {
  const PauliWord w = word_of({"XIX"}, 0.45);
  const auto ctx = path_context(3);
  FreePrunePolicy policy;
  const auto out = HardwareAwareHeuristic(ctx).implement(w, 0, policy);
  check_coupling(out, ctx);
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("hardware heuristic on a grid") {
  const PauliWord w = word_of({"ZZZZ"});
  const auto ctx = grid_context(2, 2);
  FreePrunePolicy policy;
  const auto out = HardwareAwareHeuristic(ctx).implement(w, 0, policy);
  check_coupling(out, ctx);
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("hardware heuristic survives an independent-set support on a ring") {
  // Occupied qubits pairwise non-adjacent: progress requires spreads whose
  // intermediate states raise the distance metric.
  PauliString p(6);
  p.set_letter(0, PauliLetter::X);
  p.set_letter(2, PauliLetter::X);
  p.set_letter(4, PauliLetter::X);
  PauliWord w(6);
  w.append(p, 0.2);
  const auto ctx = ring_context(6);
  FreePrunePolicy policy;
  const auto out = HardwareAwareHeuristic(ctx).implement(w, 0, policy);
  check_coupling(out, ctx);
  CHECK(out.reduced_word.empty());
  check_step_unitary(w, out);
}

TEST_CASE("hardware heuristic random instances comply and verify") {
  const auto contexts = {path_context(4), ring_context(5), grid_context(2, 3)};
  int trial = 0;
  for (const auto& ctx : contexts) {
    for (int i = 0; i < 8; ++i, ++trial) {
      const PauliWord w = random_word(ctx.num_qubits, 4, 0.5, 9100 + trial);
      auto dag = CommutationDag::build(w);
      DagPrunePolicy policy(dag, OrderingMode::Preserving);
      const std::uint32_t target = dag.front_layer().front();
      const auto out = HardwareAwareHeuristic(ctx).implement(w, target, policy);
      check_coupling(out, ctx);
      check_replay(w, out);
      check_step_unitary(w, out);
    }
  }
}

TEST_CASE("hardware heuristic rejects a mismatched qubit count") {
  FreePrunePolicy policy;
  CHECK_THROWS_AS(HardwareAwareHeuristic(path_context(3)).implement(word_of({"XX"}), 0, policy),
                  std::invalid_argument);
}

TEST_CASE("heuristic factory") {
  CHECK(make_heuristic("logical")->name() == "logical");
  const auto ctx = path_context(3);
  CHECK(make_heuristic("hardware", &ctx)->name() == "hardware");
  CHECK_THROWS_AS(make_heuristic("hardware"), std::invalid_argument);
  CHECK_THROWS_AS(make_heuristic("nonsense"), std::invalid_argument);
}

TEST_SUITE_END();
