#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulinet/pauli.hpp"

namespace paulinet {

enum class GateKind : std::uint8_t { H, S, Sdg, X, Z, CX, Rz };

/// One gate over the Clifford+Rz set. q1 is meaningful only for CX
/// (q0 control, q1 target); angle only for Rz.
struct Gate {
  GateKind kind;
  std::uint32_t q0;
  std::uint32_t q1 = 0;
  double angle = 0.0;

  static Gate h(std::uint32_t q) { return {GateKind::H, q}; }
  static Gate s(std::uint32_t q) { return {GateKind::S, q}; }
  static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, q}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, q}; }
  static Gate cx(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CX, control, target};
  }
  static Gate rz(double angle, std::uint32_t q) { return {GateKind::Rz, q, 0, angle}; }
  static Gate from_clifford(const CliffordGate& g);

  bool is_two_qubit() const { return kind == GateKind::CX; }
  Gate dagger() const;
  bool operator==(const Gate&) const = default;
};

/// Ordered gate list in execution order. The matrix of the circuit is the
/// right-to-left product of gate matrices (the last gate's matrix leftmost),
/// times exp(i * global_phase).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::uint32_t num_qubits) : n_(num_qubits) {}

  std::uint32_t num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  double global_phase() const { return global_phase_; }
  void add_global_phase(double phase) { global_phase_ += phase; }

  /// Appends a gate; validates qubit indices.
  void append(const Gate& g);
  void append(const CliffordGate& g) { append(Gate::from_clifford(g)); }
  void extend(const Circuit& other);

  int cnot_count() const;
  /// Longest chain of gates sharing qubits; every gate costs one layer.
  int depth() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

/// Gates of `a` followed by gates of `b`; global phases add.
/// Throws std::invalid_argument on mismatched qubit counts.
Circuit compose(const Circuit& a, const Circuit& b);

/// OpenQASM 2.0 text. Angles are printed with 17 significant digits; the
/// global phase is recorded as a comment line.
std::string emit_qasm(const Circuit& c);
void emit_qasm(const Circuit& c, std::ostream& os);

}  // namespace paulinet
