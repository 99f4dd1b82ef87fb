#include <doctest.h>

#include <random>
#include <stdexcept>

#include "paulinet/dense.hpp"
#include "paulinet/tableau.hpp"

using namespace paulinet;

namespace {

CliffordGate random_clifford_gate(std::uint32_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::uint32_t> qubit(0, n - 1);
  const std::uint32_t a = qubit(rng);
  switch (kind(rng)) {
    case 0: return CliffordGate::h(a);
    case 1: return CliffordGate::s(a);
    case 2: return CliffordGate::sdg(a);
    default: {
      std::uint32_t b = qubit(rng);
      while (b == a) b = qubit(rng);
      return CliffordGate::cx(a, b);
    }
  }
}

Tableau random_tableau(std::uint32_t n, std::size_t gates, std::mt19937_64& rng,
                       Circuit* circuit_out = nullptr) {
  Tableau t(n);
  Circuit c(n);
  for (std::size_t i = 0; i < gates; ++i) {
    const CliffordGate g = random_clifford_gate(n, rng);
    t.apply(g);
    c.append(g);
  }
  if (circuit_out != nullptr) *circuit_out = std::move(c);
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("tableau");

TEST_CASE("identity tableau and H") {
  Tableau t(2);
  CHECK(t.is_identity());
  CHECK(t.is_valid());
  CHECK(t.image_x(0).render() == "IX");
  CHECK(t.image_z(0).render() == "IZ");

  t.apply(CliffordGate::h(0));
  CHECK(t.image_x(0).render() == "IZ");
  CHECK(t.image_z(0).render() == "IX");
  CHECK(t.image_x(1).render() == "XI");
}

TEST_CASE("CX twice is the identity") {
  Tableau t(2);
  t.apply(CliffordGate::cx(0, 1));
  CHECK(!t.is_identity());
  t.apply(CliffordGate::cx(0, 1));
  CHECK(t.is_identity());
}

TEST_CASE("X and Z conjugation flip signs only") {
  Tableau t(1);
  t.apply(Gate::x(0));
  CHECK(t.image_x(0).render() == "X");
  CHECK(t.image_z(0).render() == "-Z");
  t.apply(Gate::z(0));
  CHECK(t.image_x(0).render() == "-X");
  CHECK(t.image_z(0).render() == "-Z");

  CHECK_THROWS_AS(t.apply(Gate::rz(0.3, 0)), std::invalid_argument);
}

TEST_CASE("tableau matches dense conjugation images") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    Circuit c(4);
    const Tableau t = random_tableau(4, 12, rng, &c);
    REQUIRE(t.is_valid());
    const dense::Matrix u = dense::circuit_unitary(c);
    for (std::uint32_t q = 0; q < 4; ++q) {
      PauliString gen_x(4), gen_z(4);
      gen_x.set_letter(q, PauliLetter::X);
      gen_z.set_letter(q, PauliLetter::Z);
      const dense::Matrix img_x = u * dense::pauli_matrix(gen_x) * u.adjoint();
      const dense::Matrix img_z = u * dense::pauli_matrix(gen_z) * u.adjoint();
      CHECK(dense::pauli_matrix(t.image_x(q)).approx_equal(img_x, 1e-9));
      CHECK(dense::pauli_matrix(t.image_z(q)).approx_equal(img_z, 1e-9));
    }
  }
}

TEST_CASE("accumulate_tail") {
  CHECK(accumulate_tail({}, 3).is_identity());

  // A single CX block: the tail is the CX itself.
  const std::vector<CliffordGate> one = {CliffordGate::cx(0, 1)};
  Tableau expect(2);
  expect.apply(CliffordGate::cx(0, 1));
  CHECK(accumulate_tail(one, 2) == expect);

  // The tail tableau always equals the literal tail circuit's tableau.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CliffordGate> blocks;
    for (int i = 0; i < 9; ++i) blocks.push_back(random_clifford_gate(3, rng));
    CHECK(accumulate_tail(blocks, 3) == tableau_of_circuit(literal_tail(blocks, 3)));
  }
}

TEST_CASE("synthesize identity emits nothing") {
  const Circuit c = synthesize(Tableau(4));
  CHECK(c.size() == 0);
  CHECK(c.cnot_count() == 0);
}

TEST_CASE("synthesize a single CX") {
  Tableau t(2);
  t.apply(CliffordGate::cx(0, 1));
  const Circuit c = synthesize(t);
  CHECK(tableau_of_circuit(c) == t);
  CHECK(c.cnot_count() <= 3);
}

TEST_CASE("synthesize round-trips random cliffords") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Tableau t = random_tableau(6, 40, rng);
    const Circuit c = synthesize(t);
    CHECK(tableau_of_circuit(c) == t);
  }
}

TEST_CASE("synthesize matches the unitary up to phase") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    Circuit original(3);
    const Tableau t = random_tableau(3, 15, rng, &original);
    const Circuit c = synthesize(t);
    REQUIRE(tableau_of_circuit(c) == t);
    CHECK(dense::equal_up_to_phase(dense::circuit_unitary(c), dense::circuit_unitary(original),
                                   1e-9));
  }
}

TEST_CASE("synthesize rejects invalid tableaus") {
  // Partner rows that commute: imageX(0) = imageZ(0) = X.
  std::vector<PauliString> rows = {PauliString::parse("X"), PauliString::parse("X")};
  const Tableau broken = Tableau::from_rows(1, std::move(rows));
  CHECK(!broken.is_valid());
  CHECK_THROWS_AS(synthesize(broken), std::invalid_argument);

  CHECK_THROWS_AS(Tableau::from_rows(2, {PauliString::parse("XX")}), std::invalid_argument);
}

TEST_CASE("sign-only tableaus synthesize without CNOTs") {
  // A layer of X/Z conjugations leaves letters alone and only flips signs.
  Tableau t(3);
  t.apply(Gate::x(0));
  t.apply(Gate::z(1));
  t.apply(Gate::x(2));
  t.apply(Gate::z(2));
  const Circuit c = synthesize(t);
  CHECK(tableau_of_circuit(c) == t);
  CHECK(c.cnot_count() == 0);
}

TEST_SUITE_END();
