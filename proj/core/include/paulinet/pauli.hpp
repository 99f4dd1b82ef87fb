#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paulinet {

/// Single-qubit Pauli letter. The bit encoding is X=[1|0], Y=[1|1], Z=[0|1],
/// I=[0|0], with the left bit on the x-side and the right bit on the z-side.
enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char letter_to_char(PauliLetter p);
PauliLetter letter_from_char(char c);
PauliLetter letter_from_bits(bool x, bool z);

/// One gate from the Clifford generating set used for conjugation.
/// For CX, q0 is the control and q1 is the target.
struct CliffordGate {
  enum class Kind : std::uint8_t { H, S, Sdg, CX };

  Kind kind;
  std::uint32_t q0;
  std::uint32_t q1 = 0;

  static CliffordGate h(std::uint32_t q) { return {Kind::H, q}; }
  static CliffordGate s(std::uint32_t q) { return {Kind::S, q}; }
  static CliffordGate sdg(std::uint32_t q) { return {Kind::Sdg, q}; }
  static CliffordGate cx(std::uint32_t control, std::uint32_t target) {
    return {Kind::CX, control, target};
  }

  CliffordGate dagger() const;
  bool operator==(const CliffordGate&) const = default;
};

/// An n-qubit Pauli operator stored as packed x/z bit vectors plus a sign
/// bit (0 = +, 1 = -). In the text form the leftmost letter is qubit n-1.
class PauliString {
 public:
  explicit PauliString(std::uint32_t num_qubits);

  /// Parses text of the form `[+-]?[IXYZ]{n}`. Throws std::invalid_argument
  /// naming the offending position on malformed input.
  static PauliString parse(std::string_view text);
  std::string render() const;

  std::uint32_t num_qubits() const { return n_; }

  bool x(std::uint32_t q) const { return bit(x_, q); }
  bool z(std::uint32_t q) const { return bit(z_, q); }
  void set_x(std::uint32_t q, bool v) { set_bit(x_, q, v); }
  void set_z(std::uint32_t q, bool v) { set_bit(z_, q, v); }
  bool sign() const { return sign_; }
  void set_sign(bool s) { sign_ = s; }
  void flip_sign() { sign_ = !sign_; }

  PauliLetter letter(std::uint32_t q) const;
  void set_letter(std::uint32_t q, PauliLetter p);

  /// Number of non-identity letters.
  std::uint32_t weight() const;
  bool is_identity() const { return weight() == 0; }
  /// Qubits carrying a non-identity letter, ascending.
  std::vector<std::uint32_t> support() const;

  /// Symplectic commutation test: true iff the operators commute.
  /// Throws std::invalid_argument if the qubit counts differ.
  bool commutes_with(const PauliString& other) const;

  /// In-place conjugation g P g^dagger. All right-hand sides read the
  /// pre-update bit values (simultaneous-assignment semantics).
  void apply(const CliffordGate& g);
  PauliString applied(const CliffordGate& g) const;

  /// Hash of (bits, sign); equal strings hash equally.
  std::uint64_t fingerprint() const;

  bool operator==(const PauliString&) const = default;

 private:
  bool bit(const std::vector<std::uint64_t>& v, std::uint32_t q) const;
  void set_bit(std::vector<std::uint64_t>& v, std::uint32_t q, bool on);
  void check_qubit(std::uint32_t q) const;

  std::uint32_t n_;
  bool sign_ = false;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// One row of a Pauli word: an operator, its rotation angle in radians, and
/// the position the row had in the original input sequence.
struct PauliRotation {
  PauliString pauli;
  double angle = 0.0;
  std::uint32_t orig_index = 0;
};

/// Ordered sequence of Pauli rotations over a fixed qubit count.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::uint32_t num_qubits) : n_(num_qubits) {}

  std::uint32_t num_qubits() const { return n_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  const PauliRotation& row(std::size_t pos) const { return rows_.at(pos); }
  PauliRotation& row(std::size_t pos) { return rows_.at(pos); }
  const std::vector<PauliRotation>& rows() const { return rows_; }

  /// Appends a rotation; orig_index defaults to the append position.
  void append(PauliString p, double angle);
  void append(PauliRotation r);

  /// Position of the row with the given orig_index, or npos.
  std::size_t find(std::uint32_t orig_index) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void remove_at(std::size_t pos);

  /// Row-wise conjugation; angles and orig_index are untouched.
  void apply(const CliffordGate& g);

  /// Hash over (letters, signs) in row order; angles and orig_index excluded.
  std::uint64_t fingerprint() const;

 private:
  std::uint32_t n_ = 0;
  std::vector<PauliRotation> rows_;
};

}  // namespace paulinet
