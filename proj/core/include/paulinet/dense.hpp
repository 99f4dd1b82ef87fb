#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "paulinet/circuit.hpp"
#include "paulinet/pauli.hpp"

namespace paulinet::dense {

// Ground-truth dense linear algebra for small qubit counts. Kept free of
// external dependencies and of the packed bit-vector code paths it is used
// to check. Qubit 0 is the least-significant tensor factor.

constexpr std::uint32_t kMaxQubits = 10;

/// Row-major complex matrix of dimension 2^n.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const std::complex<double>& at(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  Matrix operator*(const Matrix& rhs) const;
  Matrix adjoint() const;
  Matrix scaled(std::complex<double> factor) const;
  Matrix plus(const Matrix& rhs) const;

  bool approx_equal(const Matrix& rhs, double tol) const;
  bool is_unitary(double tol) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::complex<double>> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Tensor product of single-qubit Paulis times (-1)^sign.
/// Throws std::invalid_argument when n exceeds kMaxQubits.
Matrix pauli_matrix(const PauliString& p);

/// exp(-i*theta*P) = cos(theta)*I - i*sin(theta)*P.
Matrix rotation_matrix(const PauliString& p, double theta);

/// Right-to-left product of gate matrices per the circuit execution
/// convention, times exp(i*global_phase).
Matrix circuit_unitary(const Circuit& c);

/// True iff a^dagger * b is a unit-modulus multiple of the identity
/// within tol.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = 1e-9);

/// Product of the word's rotations applied in the given order; order[0] is
/// applied first (rightmost matrix factor).
Matrix word_unitary(const PauliWord& w, const std::vector<std::uint32_t>& order);

/// Convenience: rotations applied in row order.
Matrix word_unitary(const PauliWord& w);

}  // namespace paulinet::dense
