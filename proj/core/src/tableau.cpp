#include "paulinet/tableau.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace paulinet {

Tableau::Tableau(std::uint32_t num_qubits) : n_(num_qubits) {
  rows_.reserve(2 * n_);
  for (std::uint32_t q = 0; q < n_; ++q) {
    PauliString ix(n_), iz(n_);
    ix.set_letter(q, PauliLetter::X);
    iz.set_letter(q, PauliLetter::Z);
    rows_.push_back(std::move(ix));
    rows_.push_back(std::move(iz));
  }
}

Tableau Tableau::from_rows(std::uint32_t num_qubits, std::vector<PauliString> rows) {
  if (rows.size() != 2 * static_cast<std::size_t>(num_qubits)) {
    throw std::invalid_argument("tableau needs exactly 2n generator images");
  }
  for (const auto& r : rows) {
    if (r.num_qubits() != num_qubits) {
      throw std::invalid_argument("tableau row qubit count mismatch");
    }
  }
  Tableau t(num_qubits);
  t.rows_ = std::move(rows);
  return t;
}

void Tableau::apply(const CliffordGate& g) {
  for (auto& row : rows_) row.apply(g);
}

void Tableau::apply(const Gate& g) {
  switch (g.kind) {
    case GateKind::H: apply(CliffordGate::h(g.q0)); return;
    case GateKind::S: apply(CliffordGate::s(g.q0)); return;
    case GateKind::Sdg: apply(CliffordGate::sdg(g.q0)); return;
    case GateKind::CX: apply(CliffordGate::cx(g.q0, g.q1)); return;
    case GateKind::X:
      // X P X flips the sign of rows anticommuting with X_q.
      for (auto& row : rows_) {
        if (row.z(g.q0)) row.flip_sign();
      }
      return;
    case GateKind::Z:
      for (auto& row : rows_) {
        if (row.x(g.q0)) row.flip_sign();
      }
      return;
    case GateKind::Rz:
      throw std::invalid_argument("Rz is not a Clifford gate; no tableau exists");
  }
}

bool Tableau::is_valid() const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      const bool partners = (a ^ 1) == b;
      if (rows_[a].commutes_with(rows_[b]) == partners) return false;
    }
  }
  return true;
}

bool Tableau::is_identity() const { return *this == Tableau(n_); }

Tableau tableau_of_circuit(const Circuit& c) {
  Tableau t(c.num_qubits());
  for (const auto& g : c.gates()) t.apply(g);
  return t;
}

Tableau accumulate_tail(std::span<const CliffordGate> blocks, std::uint32_t num_qubits) {
  Tableau t(num_qubits);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    t.apply(it->dagger());
  }
  return t;
}

Circuit literal_tail(std::span<const CliffordGate> blocks, std::uint32_t num_qubits) {
  Circuit c(num_qubits);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    c.append(it->dagger());
  }
  return c;
}

namespace {

/// Reduction state: gates applied so far and the evolving tableau. Reaching
/// the identity tableau with gate list G means the synthesized circuit is
/// the daggers of G in reverse order.
struct Reduction {
  Tableau t;
  std::vector<Gate> gates;

  void apply(const Gate& g) {
    t.apply(g);
    gates.push_back(g);
  }

  int cnots() const {
    return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](const Gate& g) {
      return g.kind == GateKind::CX;
    }));
  }
};

/// Brings image_x(q) to +-X_q and image_z(q) to +-Z_q using gates that do
/// not disturb previously finished qubits (their letters are identity in
/// every other row, so nothing here can touch them).
void eliminate_qubit(Reduction& r, std::uint32_t q) {
  // X-image first: rotate every letter to X, merge the support onto q.
  {
    for (std::uint32_t p : r.t.image_x(q).support()) {
      const PauliLetter l = r.t.image_x(q).letter(p);
      if (l == PauliLetter::Y) r.apply(Gate::s(p));
      if (r.t.image_x(q).letter(p) == PauliLetter::Z) r.apply(Gate::h(p));
    }
    auto sx = r.t.image_x(q).support();
    if (std::find(sx.begin(), sx.end(), q) == sx.end()) {
      r.apply(Gate::cx(sx.front(), q));
      sx = r.t.image_x(q).support();
    }
    for (std::uint32_t p : sx) {
      if (p != q) r.apply(Gate::cx(q, p));
    }
  }
  // Z-image: rotate letters off q to Z, merge onto q, then fix a residual
  // Y at q with the X-axis rotation H-S-H, which leaves X_q alone.
  {
    for (std::uint32_t p : r.t.image_z(q).support()) {
      if (p == q) continue;
      const PauliLetter l = r.t.image_z(q).letter(p);
      if (l == PauliLetter::Y) r.apply(Gate::s(p));
      if (r.t.image_z(q).letter(p) == PauliLetter::X) r.apply(Gate::h(p));
    }
    for (std::uint32_t p : r.t.image_z(q).support()) {
      if (p != q) r.apply(Gate::cx(p, q));
    }
    if (r.t.image_z(q).x(q)) {
      r.apply(Gate::h(q));
      r.apply(Gate::s(q));
      r.apply(Gate::h(q));
    }
  }
}

void fix_signs(Reduction& r) {
  for (std::uint32_t q = 0; q < r.t.num_qubits(); ++q) {
    if (r.t.image_z(q).sign()) r.apply(Gate::x(q));
    if (r.t.image_x(q).sign()) r.apply(Gate::z(q));
  }
}

/// Total non-identity support of the tableau restricted to the given qubits.
std::uint64_t residual_support(const Tableau& t, const std::vector<std::uint32_t>& qubits) {
  std::uint64_t total = 0;
  for (std::uint32_t q = 0; q < t.num_qubits(); ++q) {
    for (const PauliString* row : {&t.image_x(q), &t.image_z(q)}) {
      for (std::uint32_t p : qubits) {
        if (row->letter(p) != PauliLetter::I) ++total;
      }
    }
  }
  return total;
}

Circuit finish(Reduction r) {
  fix_signs(r);
  Circuit out(r.t.num_qubits());
  for (auto it = r.gates.rbegin(); it != r.gates.rend(); ++it) {
    out.append(it->dagger());
  }
  return out;
}

Circuit synthesize_in_order(const Tableau& t, bool greedy) {
  Reduction r{t, {}};
  std::vector<std::uint32_t> remaining(t.num_qubits());
  for (std::uint32_t q = 0; q < t.num_qubits(); ++q) remaining[q] = q;

  while (!remaining.empty()) {
    std::uint32_t pick = remaining.front();
    if (greedy && remaining.size() > 1) {
      // Cost of a candidate: CNOTs its elimination adds, then the support
      // left on the still-unprocessed qubits, then the index.
      std::uint64_t best_cnots = std::numeric_limits<std::uint64_t>::max();
      std::uint64_t best_residual = 0;
      for (std::uint32_t q : remaining) {
        Reduction probe{r.t, {}};
        eliminate_qubit(probe, q);
        std::vector<std::uint32_t> rest;
        for (std::uint32_t p : remaining) {
          if (p != q) rest.push_back(p);
        }
        const auto cnots = static_cast<std::uint64_t>(probe.cnots());
        const auto residual = residual_support(probe.t, rest);
        if (cnots < best_cnots || (cnots == best_cnots && residual < best_residual)) {
          best_cnots = cnots;
          best_residual = residual;
          pick = q;
        }
      }
    }
    eliminate_qubit(r, pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  return finish(std::move(r));
}

}  // namespace

Circuit synthesize(const Tableau& t) {
  if (!t.is_valid()) {
    throw std::invalid_argument("cannot synthesize an invalid tableau");
  }
  Circuit greedy = synthesize_in_order(t, true);
  Circuit natural = synthesize_in_order(t, false);
  const bool keep_greedy =
      greedy.cnot_count() < natural.cnot_count() ||
      (greedy.cnot_count() == natural.cnot_count() && greedy.depth() <= natural.depth());
  return keep_greedy ? greedy : natural;
}

}  // namespace paulinet
