#include "paulinet/driver.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "paulinet/dense.hpp"
#include "paulinet/heuristics.hpp"
#include "paulinet/io.hpp"

namespace paulinet {

namespace {

enum class LogLevel { Off = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SYNTH_LOG");
    if (env == nullptr) return LogLevel::Off;
    const std::string v(env);
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Off;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::cerr << "synth: " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= LogLevel::Debug) std::cerr << "synth: " << msg << "\n";
}

/// Splits off weight-0 rows: they contribute only a phase and are never
/// legal heuristic targets.
PauliWord drop_identities(const PauliWord& word, double& phase) {
  PauliWord out(word.num_qubits());
  for (const auto& r : word.rows()) {
    if (r.pauli.is_identity()) {
      phase += -r.angle * (r.pauli.sign() ? -1.0 : 1.0);
    } else {
      out.append(r);
    }
  }
  return out;
}

}  // namespace

std::string report_json(const RunReport& report) {
  nlohmann::json j;
  j["schema"] = report.schema;
  j["cnots"] = report.cnots;
  j["depth"] = report.depth;
  j["gates"] = report.gates;
  j["iterations"] = report.iterations;
  j["seed"] = report.seed;
  j["mode"] = report.mode;
  j["heuristic"] = report.heuristic;
  j["mu"] = report.mu;
  j["best_per_iteration"] = report.best_per_iteration;
  j["elapsed_ms"] = report.elapsed_ms;
  j["total_ms"] = report.total_ms;
  if (report.verify >= 0) {
    j["verify"] = report.verify == 1 ? "pass" : "fail";
  }
  return j.dump(2) + "\n";
}

RunReport run(const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();

  if (options.heuristic != "logical" && options.heuristic != "hardware") {
    throw UsageError("unknown heuristic '" + options.heuristic + "'");
  }
  if (options.heuristic == "hardware" && !options.coupling_path.has_value()) {
    throw UsageError("the hardware heuristic requires --coupling");
  }
  if (options.iterations == 0) {
    throw UsageError("--iterations must be positive");
  }
  if (options.mu < 0) {
    throw UsageError("--mu must be nonnegative");
  }

  const PauliWord parsed = parse_hamiltonian_file(options.hamiltonian_path);
  log_info("parsed " + std::to_string(parsed.size()) + " strings over " +
           std::to_string(parsed.num_qubits()) + " qubits");

  if (options.verify && parsed.num_qubits() > dense::kMaxQubits) {
    throw UsageError("--verify supports at most " + std::to_string(dense::kMaxQubits) +
                     " qubits, input has " + std::to_string(parsed.num_qubits()));
  }

  std::optional<HardwareContext> ctx;
  if (options.coupling_path.has_value()) {
    const CouplingGraph graph = parse_coupling_file(*options.coupling_path);
    if (graph.num_qubits != parsed.num_qubits()) {
      throw UsageError("coupling file has " + std::to_string(graph.num_qubits) +
                       " qubits but the hamiltonian has " +
                       std::to_string(parsed.num_qubits()));
    }
    ctx = hardware_context(graph);
  }

  double identity_phase = 0.0;
  const PauliWord word = drop_identities(parsed, identity_phase);

  RunReport report;
  report.iterations = options.iterations;
  report.seed = options.seed;
  report.mode = to_string(options.mode);
  report.heuristic = options.heuristic;
  report.mu = options.mu;

  Circuit circuit(parsed.num_qubits());
  std::vector<std::uint32_t> order;

  if (!word.empty()) {
    const auto heuristic = make_heuristic(options.heuristic, ctx ? &*ctx : nullptr);

    SearchConfig cfg;
    cfg.iterations = options.iterations;
    cfg.mu = options.mu;
    cfg.seed = options.seed;
    cfg.mode = options.mode;
    cfg.heuristic = heuristic.get();
    cfg.optimize_tail = options.optimize_tail;
    if (options.progress) {
      cfg.progress = [](std::uint32_t iter, int best, double elapsed) {
        std::cerr << iter << "," << best << "," << elapsed << "\n";
      };
    }

    SearchResult found = search(word, cfg);
    circuit = std::move(found.circuit);
    order = std::move(found.best.order);
    report.best_per_iteration = std::move(found.best_per_iteration);
    report.elapsed_ms = std::move(found.elapsed_ms);
    log_debug("archive best: " + std::to_string(found.total_cnots) + " CNOTs, depth " +
              std::to_string(found.total_depth));
  }
  circuit.add_global_phase(identity_phase);

  report.cnots = circuit.cnot_count();
  report.depth = circuit.depth();
  report.gates = static_cast<int>(circuit.size());

  if (options.verify) {
    const dense::Matrix actual = dense::circuit_unitary(circuit);
    const dense::Matrix expected = options.mode == OrderingMode::Preserving
                                       ? dense::word_unitary(parsed)
                                       : dense::word_unitary(word, order);
    report.verify = dense::equal_up_to_phase(actual, expected, 1e-9) ? 1 : 0;
    log_info(std::string("verification ") + (report.verify == 1 ? "passed" : "FAILED"));
  }

  if (options.emit == EmitKind::Qasm) {
    if (options.qasm_sink != nullptr) {
      emit_qasm(circuit, *options.qasm_sink);
    } else if (options.out_path.has_value()) {
      std::ofstream out(*options.out_path);
      if (!out) {
        throw std::runtime_error("cannot write '" + *options.out_path + "'");
      }
      emit_qasm(circuit, out);
    } else {
      emit_qasm(circuit, std::cout);
    }
  }

  report.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();

  if (options.report_path.has_value()) {
    std::ofstream out(*options.report_path);
    if (!out) {
      throw std::runtime_error("cannot write '" + *options.report_path + "'");
    }
    out << report_json(report);
  }
  return report;
}

}  // namespace paulinet
