#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulinet/heuristics.hpp"
#include "paulinet/pauli.hpp"

namespace paulinet {

/// Hamiltonian files hold one `<pauli-letters> <angle>` entry per line.
/// Anything after '#' is a comment; blank lines are skipped; every string
/// must have the same length and every angle must be finite.
PauliWord parse_hamiltonian(std::istream& in);
PauliWord parse_hamiltonian_file(const std::string& path);
void write_hamiltonian(const PauliWord& word, std::ostream& out);
void write_hamiltonian_file(const PauliWord& word, const std::string& path);

/// Coupling files: first line is the qubit count, each following line one
/// undirected edge `i j`.
struct CouplingGraph {
  std::uint32_t num_qubits = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

CouplingGraph parse_coupling(std::istream& in);
CouplingGraph parse_coupling_file(const std::string& path);

/// BFS hop distances; symmetric with zero diagonal. Throws on disconnected
/// graphs, naming the components.
std::vector<std::vector<std::uint32_t>> all_pairs_distance(const CouplingGraph& g);
HardwareContext hardware_context(const CouplingGraph& g);

/// Nearest-neighbour exchange model on a rows x cols lattice: per lattice
/// edge one XX, YY and ZZ string, each with angle coupling * theta, one
/// qubit per site.
PauliWord heisenberg_word(std::uint32_t rows, std::uint32_t cols, double coupling, double theta);

/// Seeded random word. Each qubit of each row is non-identity with the
/// given probability (uniform over X/Y/Z); all-identity rows are redrawn.
PauliWord random_word(std::uint32_t num_qubits, std::uint32_t num_strings, double density,
                      std::uint64_t seed);

}  // namespace paulinet
