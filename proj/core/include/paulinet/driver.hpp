#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paulinet/commutation_dag.hpp"
#include "paulinet/mcts.hpp"

namespace paulinet {

/// Bad flags or inconsistent inputs; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class EmitKind : std::uint8_t { Qasm, None };

struct RunOptions {
  std::string hamiltonian_path;
  OrderingMode mode = OrderingMode::Preserving;
  std::string heuristic = "logical";
  std::optional<std::string> coupling_path;
  std::uint32_t iterations = 1;
  double mu = 1.4142135623730951;
  std::uint64_t seed = 0;
  EmitKind emit = EmitKind::Qasm;
  std::optional<std::string> out_path;     // default: stdout
  std::optional<std::string> report_path;  // default: not written
  bool verify = false;
  bool optimize_tail = true;
  bool progress = false;
  /// When set, QASM goes here instead of out_path/stdout (used by tests).
  std::ostream* qasm_sink = nullptr;
};

struct RunReport {
  int schema = 1;
  int cnots = 0;
  int depth = 0;
  int gates = 0;
  std::uint32_t iterations = 0;
  std::uint64_t seed = 0;
  std::string mode;
  std::string heuristic;
  double mu = 0.0;
  std::vector<int> best_per_iteration;
  std::vector<double> elapsed_ms;
  double total_ms = 0.0;
  /// -1 = not requested, 0 = failed, 1 = passed.
  int verify = -1;
};

/// JSON rendering of a report; timing fields are elapsed_ms and total_ms.
std::string report_json(const RunReport& report);

/// Full pipeline: parse, search, synthesize the tail, emit artifacts.
/// Throws UsageError on flag conflicts and propagates parse errors.
RunReport run(const RunOptions& options);

}  // namespace paulinet
