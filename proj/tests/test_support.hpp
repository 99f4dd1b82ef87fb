#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "paulinet/pauli.hpp"

namespace testsupport {

using paulinet::PauliLetter;
using paulinet::PauliString;

inline PauliString string_of(std::initializer_list<PauliLetter> letters_high_to_low,
                             bool sign = false) {
  PauliString p(static_cast<std::uint32_t>(letters_high_to_low.size()));
  std::uint32_t q = p.num_qubits();
  for (PauliLetter l : letters_high_to_low) p.set_letter(--q, l);
  p.set_sign(sign);
  return p;
}

inline PauliString random_string(std::uint32_t n, std::mt19937_64& rng, bool allow_identity = true,
                                 bool random_sign = true) {
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  PauliString p(n);
  do {
    for (std::uint32_t q = 0; q < n; ++q) {
      p.set_letter(q, static_cast<PauliLetter>(letter(rng)));
    }
  } while (!allow_identity && p.is_identity());
  if (random_sign) p.set_sign(coin(rng) == 1);
  return p;
}

inline const std::vector<PauliLetter>& all_letters() {
  static const std::vector<PauliLetter> letters = {PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                                   PauliLetter::Z};
  return letters;
}

}  // namespace testsupport
