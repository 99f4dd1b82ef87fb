#include "paulinet/dense.hpp"

#include <cmath>
#include <stdexcept>

namespace paulinet::dense {

namespace {

using C = std::complex<double>;

Matrix single_letter(PauliLetter p) {
  Matrix m(2);
  switch (p) {
    case PauliLetter::I:
      m.at(0, 0) = 1;
      m.at(1, 1) = 1;
      break;
    case PauliLetter::X:
      m.at(0, 1) = 1;
      m.at(1, 0) = 1;
      break;
    case PauliLetter::Y:
      m.at(0, 1) = C(0, -1);
      m.at(1, 0) = C(0, 1);
      break;
    case PauliLetter::Z:
      m.at(0, 0) = 1;
      m.at(1, 1) = -1;
      break;
  }
  return m;
}

void check_cap(std::uint32_t n) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("dense oracle capped at n=" + std::to_string(kMaxQubits) +
                                " qubits, got " + std::to_string(n));
  }
}

/// Expands a single-qubit matrix to the full space at qubit q.
Matrix embed_single(const Matrix& u, std::uint32_t q, std::uint32_t n) {
  Matrix out = Matrix::identity(1);
  for (std::uint32_t k = n; k-- > 0;) {
    out = kron(out, k == q ? u : Matrix::identity(2));
  }
  return out;
}

Matrix cx_matrix(std::uint32_t control, std::uint32_t target, std::uint32_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix m(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const std::size_t out = (b >> control) & 1 ? b ^ (std::size_t{1} << target) : b;
    m.at(out, b) = 1;
  }
  return m;
}

Matrix gate_matrix(const Gate& g, std::uint32_t n) {
  Matrix u(2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      u.at(0, 0) = inv_sqrt2;
      u.at(0, 1) = inv_sqrt2;
      u.at(1, 0) = inv_sqrt2;
      u.at(1, 1) = -inv_sqrt2;
      break;
    case GateKind::S:
      u.at(0, 0) = 1;
      u.at(1, 1) = C(0, 1);
      break;
    case GateKind::Sdg:
      u.at(0, 0) = 1;
      u.at(1, 1) = C(0, -1);
      break;
    case GateKind::X:
      u.at(0, 1) = 1;
      u.at(1, 0) = 1;
      break;
    case GateKind::Z:
      u.at(0, 0) = 1;
      u.at(1, 1) = -1;
      break;
    case GateKind::Rz:
      u.at(0, 0) = std::exp(C(0, -g.angle / 2));
      u.at(1, 1) = std::exp(C(0, g.angle / 2));
      break;
    case GateKind::CX:
      return cx_matrix(g.q0, g.q1, n);
  }
  return embed_single(u, g.q0, n);
}

}  // namespace

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const C a = at(i, k);
      if (a == C{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out.at(j, i) = std::conj(at(i, j));
    }
  }
  return out;
}

Matrix Matrix::scaled(C factor) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= factor;
  return out;
}

Matrix Matrix::plus(const Matrix& rhs) const {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

bool Matrix::approx_equal(const Matrix& rhs, double tol) const {
  if (dim_ != rhs.dim_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (std::abs(data_[i] - rhs.data_[i]) > tol) return false;
  }
  return true;
}

bool Matrix::is_unitary(double tol) const {
  return (adjoint() * *this).approx_equal(identity(dim_), tol);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const C v = a.at(i, j);
      if (v == C{}) continue;
      for (std::size_t k = 0; k < b.dim(); ++k) {
        for (std::size_t l = 0; l < b.dim(); ++l) {
          out.at(i * b.dim() + k, j * b.dim() + l) = v * b.at(k, l);
        }
      }
    }
  }
  return out;
}

Matrix pauli_matrix(const PauliString& p) {
  check_cap(p.num_qubits());
  Matrix out = Matrix::identity(1);
  for (std::uint32_t q = p.num_qubits(); q-- > 0;) {
    out = kron(out, single_letter(p.letter(q)));
  }
  if (p.sign()) out = out.scaled(-1);
  return out;
}

Matrix rotation_matrix(const PauliString& p, double theta) {
  const Matrix pm = pauli_matrix(p);
  return Matrix::identity(pm.dim())
      .scaled(std::cos(theta))
      .plus(pm.scaled(C(0, -std::sin(theta))));
}

Matrix circuit_unitary(const Circuit& c) {
  check_cap(c.num_qubits());
  Matrix u = Matrix::identity(std::size_t{1} << c.num_qubits());
  for (const auto& g : c.gates()) {
    u = gate_matrix(g, c.num_qubits()) * u;
  }
  return u.scaled(std::exp(C(0, c.global_phase())));
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  }
  const Matrix c = a.adjoint() * b;
  const C lambda = c.at(0, 0);
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (std::size_t j = 0; j < c.dim(); ++j) {
      const C expect = i == j ? lambda : C{};
      if (std::abs(c.at(i, j) - expect) > tol) return false;
    }
  }
  return true;
}

Matrix word_unitary(const PauliWord& w, const std::vector<std::uint32_t>& order) {
  check_cap(w.num_qubits());
  if (order.size() != w.size()) {
    throw std::invalid_argument("word_unitary: order is not a permutation of the word rows");
  }
  std::vector<bool> used(w.size(), false);
  Matrix u = Matrix::identity(std::size_t{1} << w.num_qubits());
  for (std::uint32_t orig : order) {
    const std::size_t pos = w.find(orig);
    if (pos == PauliWord::npos || used[pos]) {
      throw std::invalid_argument("word_unitary: order is not a permutation of the word rows");
    }
    used[pos] = true;
    const auto& r = w.row(pos);
    u = rotation_matrix(r.pauli, r.angle) * u;
  }
  return u;
}

Matrix word_unitary(const PauliWord& w) {
  std::vector<std::uint32_t> order;
  order.reserve(w.size());
  for (const auto& r : w.rows()) order.push_back(r.orig_index);
  return word_unitary(w, order);
}

}  // namespace paulinet::dense
