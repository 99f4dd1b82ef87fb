#include "paulinet/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace paulinet {

Gate Gate::from_clifford(const CliffordGate& g) {
  switch (g.kind) {
    case CliffordGate::Kind::H: return Gate::h(g.q0);
    case CliffordGate::Kind::S: return Gate::s(g.q0);
    case CliffordGate::Kind::Sdg: return Gate::sdg(g.q0);
    case CliffordGate::Kind::CX: return Gate::cx(g.q0, g.q1);
  }
  throw std::logic_error("invalid CliffordGate kind");
}

Gate Gate::dagger() const {
  switch (kind) {
    case GateKind::S: return Gate::sdg(q0);
    case GateKind::Sdg: return Gate::s(q0);
    case GateKind::Rz: return Gate::rz(-angle, q0);
    default: return *this;  // H, X, Z, CX are self-inverse
  }
}

void Circuit::append(const Gate& g) {
  if (g.q0 >= n_ || (g.is_two_qubit() && g.q1 >= n_)) {
    throw std::out_of_range("gate qubit index out of range for n=" + std::to_string(n_));
  }
  if (g.is_two_qubit() && g.q0 == g.q1) {
    throw std::invalid_argument("CX control and target must differ");
  }
  gates_.push_back(g);
}

void Circuit::extend(const Circuit& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot extend a circuit with a different qubit count");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
}

int Circuit::cnot_count() const {
  int count = 0;
  for (const auto& g : gates_) {
    if (g.kind == GateKind::CX) ++count;
  }
  return count;
}

int Circuit::depth() const {
  std::vector<int> layer(n_, 0);
  int depth = 0;
  for (const auto& g : gates_) {
    int at = layer[g.q0];
    if (g.is_two_qubit()) at = std::max(at, layer[g.q1]);
    ++at;
    layer[g.q0] = at;
    if (g.is_two_qubit()) layer[g.q1] = at;
    depth = std::max(depth, at);
  }
  return depth;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("compose: qubit counts differ");
  }
  Circuit out = a;
  out.extend(b);
  return out;
}

namespace {

std::string format_angle(double angle) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

void emit_qasm(const Circuit& c, std::ostream& os) {
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  if (c.global_phase() != 0.0) {
    os << "// global phase: " << format_angle(c.global_phase()) << "\n";
  }
  os << "qreg q[" << c.num_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H: os << "h q[" << g.q0 << "];\n"; break;
      case GateKind::S: os << "s q[" << g.q0 << "];\n"; break;
      case GateKind::Sdg: os << "sdg q[" << g.q0 << "];\n"; break;
      case GateKind::X: os << "x q[" << g.q0 << "];\n"; break;
      case GateKind::Z: os << "z q[" << g.q0 << "];\n"; break;
      case GateKind::CX: os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n"; break;
      case GateKind::Rz:
        os << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
    }
  }
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream oss;
  emit_qasm(c, oss);
  return oss.str();
}

}  // namespace paulinet
