#include "paulinet/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace paulinet {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xffu;
    h *= kFnvPrime;
  }
}

}  // namespace

char letter_to_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  throw std::logic_error("invalid PauliLetter");
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliLetter letter_from_bits(bool x, bool z) {
  if (x) return z ? PauliLetter::Y : PauliLetter::X;
  return z ? PauliLetter::Z : PauliLetter::I;
}

CliffordGate CliffordGate::dagger() const {
  switch (kind) {
    case Kind::S: return {Kind::Sdg, q0};
    case Kind::Sdg: return {Kind::S, q0};
    default: return *this;  // H and CX are self-inverse
  }
}

PauliString::PauliString(std::uint32_t num_qubits)
    : n_(num_qubits),
      x_((num_qubits + 63) / 64, 0),
      z_((num_qubits + 63) / 64, 0) {}

bool PauliString::bit(const std::vector<std::uint64_t>& v, std::uint32_t q) const {
  check_qubit(q);
  return (v[q / 64] >> (q % 64)) & 1u;
}

void PauliString::set_bit(std::vector<std::uint64_t>& v, std::uint32_t q, bool on) {
  check_qubit(q);
  if (on) {
    v[q / 64] |= std::uint64_t{1} << (q % 64);
  } else {
    v[q / 64] &= ~(std::uint64_t{1} << (q % 64));
  }
}

void PauliString::check_qubit(std::uint32_t q) const {
  if (q >= n_) {
    throw std::out_of_range("qubit index " + std::to_string(q) +
                            " out of range for n=" + std::to_string(n_));
  }
}

PauliString PauliString::parse(std::string_view text) {
  std::size_t pos = 0;
  bool sign = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    sign = text[0] == '-';
    pos = 1;
  }
  const std::size_t n = text.size() - pos;
  if (n == 0) {
    throw std::invalid_argument("empty Pauli string");
  }
  PauliString p(static_cast<std::uint32_t>(n));
  p.set_sign(sign);
  // Leftmost letter is the highest-index qubit.
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text[pos + i];
    PauliLetter letter;
    try {
      letter = letter_from_char(c);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("invalid Pauli letter '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos + i));
    }
    p.set_letter(static_cast<std::uint32_t>(n - 1 - i), letter);
  }
  return p;
}

std::string PauliString::render() const {
  std::string out;
  out.reserve(n_ + 1);
  if (sign_) out.push_back('-');
  for (std::uint32_t q = n_; q-- > 0;) {
    out.push_back(letter_to_char(letter(q)));
  }
  return out;
}

PauliLetter PauliString::letter(std::uint32_t q) const {
  return letter_from_bits(x(q), z(q));
}

void PauliString::set_letter(std::uint32_t q, PauliLetter p) {
  set_x(q, p == PauliLetter::X || p == PauliLetter::Y);
  set_z(q, p == PauliLetter::Z || p == PauliLetter::Y);
}

std::uint32_t PauliString::weight() const {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += static_cast<std::uint32_t>(std::popcount(x_[i] | z_[i]));
  }
  return w;
}

std::vector<std::uint32_t> PauliString::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    std::uint64_t bits = x_[w] | z_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
    }
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("commutation test on mismatched qubit counts " +
                                std::to_string(n_) + " vs " + std::to_string(other.n_));
  }
  std::uint64_t parity = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    parity ^= std::popcount((x_[i] & other.z_[i]) ^ (z_[i] & other.x_[i])) & 1;
  }
  return parity == 0;
}

void PauliString::apply(const CliffordGate& g) {
  switch (g.kind) {
    case CliffordGate::Kind::H: {
      const bool xi = x(g.q0), zi = z(g.q0);
      set_x(g.q0, zi);
      set_z(g.q0, xi);
      if (xi && zi) flip_sign();
      break;
    }
    case CliffordGate::Kind::S: {
      const bool xi = x(g.q0), zi = z(g.q0);
      set_z(g.q0, xi ^ zi);
      if (xi && zi) flip_sign();
      break;
    }
    case CliffordGate::Kind::Sdg: {
      const bool xi = x(g.q0), zi = z(g.q0);
      set_z(g.q0, xi ^ zi);
      if (xi && !zi) flip_sign();
      break;
    }
    case CliffordGate::Kind::CX: {
      if (g.q0 == g.q1) {
        throw std::invalid_argument("CX control and target must differ");
      }
      const bool xi = x(g.q0), zi = z(g.q0);
      const bool xj = x(g.q1), zj = z(g.q1);
      set_x(g.q1, xj ^ xi);
      set_z(g.q0, zi ^ zj);
      if (xi && zj && (xj == zi)) flip_sign();
      break;
    }
  }
}

PauliString PauliString::applied(const CliffordGate& g) const {
  PauliString out = *this;
  out.apply(g);
  return out;
}

std::uint64_t PauliString::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  for (std::uint64_t w : x_) fnv_mix(h, w);
  for (std::uint64_t w : z_) fnv_mix(h, w);
  fnv_mix(h, sign_ ? 1 : 0);
  return h;
}

void PauliWord::append(PauliString p, double angle) {
  append(PauliRotation{std::move(p), angle, static_cast<std::uint32_t>(rows_.size())});
}

void PauliWord::append(PauliRotation r) {
  if (r.pauli.num_qubits() != n_) {
    throw std::invalid_argument("row qubit count " + std::to_string(r.pauli.num_qubits()) +
                                " does not match word n=" + std::to_string(n_));
  }
  rows_.push_back(std::move(r));
}

std::size_t PauliWord::find(std::uint32_t orig_index) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].orig_index == orig_index) return i;
  }
  return npos;
}

void PauliWord::remove_at(std::size_t pos) {
  if (pos >= rows_.size()) {
    throw std::out_of_range("row position out of range");
  }
  rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(pos));
}

void PauliWord::apply(const CliffordGate& g) {
  for (auto& r : rows_) r.pauli.apply(g);
}

std::uint64_t PauliWord::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, rows_.size());
  for (const auto& r : rows_) fnv_mix(h, r.pauli.fingerprint());
  return h;
}

}  // namespace paulinet
