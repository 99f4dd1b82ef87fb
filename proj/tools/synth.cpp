// Compiler driver: reads a weighted-Pauli-rotation file, searches for a
// low-CNOT Clifford+Rz implementation, emits OpenQASM and a JSON report.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paulinet/commutation_dag.hpp"
#include "paulinet/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Clifford+Rz synthesis for weighted Pauli rotation sequences"};

  std::string hamiltonian;
  std::string mode = "preserve";
  std::string heuristic = "logical";
  std::string coupling;
  std::string emit = "qasm";
  std::string out_path;
  std::string report_path;
  std::uint32_t iterations = 1;
  double mu = 1.4142135623730951;
  std::uint64_t seed = 0;
  bool verify = false;
  bool no_tail_opt = false;
  bool progress = false;

  app.add_option("hamiltonian-file", hamiltonian, "Input file: one '<paulis> <angle>' per line")
      ->required();
  app.add_option("--mode", mode, "Ordering regime")
      ->check(CLI::IsMember({"preserve", "modify"}))
      ->capture_default_str();
  app.add_option("--heuristic", heuristic, "Implementation heuristic")
      ->check(CLI::IsMember({"logical", "hardware"}))
      ->capture_default_str();
  app.add_option("--coupling", coupling, "Coupling file (required for --heuristic hardware)");
  app.add_option("--iterations", iterations, "Tree-search iterations")->capture_default_str();
  app.add_option("--mu", mu, "Exploration factor")->capture_default_str();
  app.add_option("--seed", seed, "Random seed recorded in the report")->capture_default_str();
  app.add_option("--emit", emit, "Circuit output format")
      ->check(CLI::IsMember({"qasm", "none"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write the circuit here instead of stdout");
  app.add_option("--report", report_path, "Write the JSON run report here");
  app.add_flag("--verify", verify, "Check the circuit against the dense oracle (small n)");
  app.add_flag("--no-tail-opt", no_tail_opt,
               "Emit the tail as literal reversed dagger blocks, unoptimized");
  app.add_flag("--progress", progress, "Per-iteration 'iter,best_cnots,elapsed_ms' on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  paulinet::RunOptions options;
  options.hamiltonian_path = hamiltonian;
  options.heuristic = heuristic;
  options.iterations = iterations;
  options.mu = mu;
  options.seed = seed;
  options.verify = verify;
  options.optimize_tail = !no_tail_opt;
  options.progress = progress;
  options.emit = emit == "none" ? paulinet::EmitKind::None : paulinet::EmitKind::Qasm;
  if (!coupling.empty()) options.coupling_path = coupling;
  if (!out_path.empty()) options.out_path = out_path;
  if (!report_path.empty()) options.report_path = report_path;

  try {
    options.mode = paulinet::ordering_mode_from_string(mode);
    const paulinet::RunReport report = paulinet::run(options);
    std::cerr << "cnots=" << report.cnots << " depth=" << report.depth
              << " gates=" << report.gates << "\n";
    if (report.verify == 0) {
      std::cerr << "verification failed\n";
      return 3;
    }
    return 0;
  } catch (const paulinet::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
