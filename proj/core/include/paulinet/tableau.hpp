#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "paulinet/circuit.hpp"
#include "paulinet/pauli.hpp"

namespace paulinet {

/// Stabilizer tableau: the conjugation images of the generators X_q and Z_q
/// under some Clifford unitary, signs included. The identity tableau maps
/// X_q -> X_q and Z_q -> Z_q with + signs.
class Tableau {
 public:
  explicit Tableau(std::uint32_t num_qubits);

  /// Adopts rows in the order imageX(0), imageZ(0), imageX(1), ...
  /// No validity check; synthesize rejects invalid tableaus.
  static Tableau from_rows(std::uint32_t num_qubits, std::vector<PauliString> rows);

  std::uint32_t num_qubits() const { return n_; }
  const PauliString& image_x(std::uint32_t q) const { return rows_.at(2 * q); }
  const PauliString& image_z(std::uint32_t q) const { return rows_.at(2 * q + 1); }

  /// Conjugates every generator image by g. The tableau becomes that of
  /// g composed after the current unitary.
  void apply(const CliffordGate& g);
  /// Same for circuit gates; X and Z only flip signs, Rz is rejected.
  void apply(const Gate& g);

  /// Symplectic validity: image_x(q) anticommutes with image_z(q) and
  /// commutes with every other generator image.
  bool is_valid() const;
  bool is_identity() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::uint32_t n_;
  std::vector<PauliString> rows_;
};

/// Tableau of a Clifford circuit (gates applied in execution order).
Tableau tableau_of_circuit(const Circuit& c);

/// Tableau of the product of daggered blocks in reverse application order:
/// the trailing Clifford left over after every rotation has been emitted.
Tableau accumulate_tail(std::span<const CliffordGate> blocks, std::uint32_t num_qubits);

/// The same trailing Clifford as a literal gate list, unoptimized.
Circuit literal_tail(std::span<const CliffordGate> blocks, std::uint32_t num_qubits);

/// Greedy symplectic-elimination resynthesis. The returned circuit's
/// tableau equals `t` exactly, signs included; sign corrections ride in a
/// trailing CNOT-free X/Z layer. Throws std::invalid_argument on an invalid
/// tableau.
Circuit synthesize(const Tableau& t);

}  // namespace paulinet
