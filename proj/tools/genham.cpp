// Generator for hamiltonian files: lattice exchange models and seeded
// random words, in the format `synth` consumes.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paulinet/io.hpp"

namespace {

int write_word(const paulinet::PauliWord& word, const std::string& out_path) {
  if (out_path.empty()) {
    paulinet::write_hamiltonian(word, std::cout);
  } else {
    paulinet::write_hamiltonian_file(word, out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian file generators"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Output file (default stdout)");

  auto* heis = app.add_subcommand("heisenberg", "Exchange model on a rows x cols lattice");
  std::uint32_t rows = 2, cols = 2;
  double coupling = 1.0, theta = 0.1;
  heis->add_option("--rows", rows, "Lattice rows")->capture_default_str();
  heis->add_option("--cols", cols, "Lattice columns")->capture_default_str();
  heis->add_option("--coupling", coupling, "Exchange coupling factor")->capture_default_str();
  heis->add_option("--theta", theta, "Step angle")->capture_default_str();

  auto* rnd = app.add_subcommand("random", "Seeded random word");
  std::uint32_t qubits = 4, strings = 8;
  double density = 0.5;
  std::uint64_t seed = 0;
  rnd->add_option("--qubits", qubits, "Qubit count")->capture_default_str();
  rnd->add_option("--strings", strings, "Number of strings")->capture_default_str();
  rnd->add_option("--density", density, "Non-identity probability per qubit")
      ->capture_default_str();
  rnd->add_option("--seed", seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (heis->parsed()) {
      return write_word(paulinet::heisenberg_word(rows, cols, coupling, theta), out_path);
    }
    return write_word(paulinet::random_word(qubits, strings, density, seed), out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
