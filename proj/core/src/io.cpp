#include "paulinet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace paulinet {

namespace {

std::string strip(const std::string& line) {
  std::string out = line;
  if (const auto hash = out.find('#'); hash != std::string::npos) {
    out.erase(hash);
  }
  const auto first = out.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = out.find_last_not_of(" \t\r\n");
  return out.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return in;
}

}  // namespace

PauliWord parse_hamiltonian(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::pair<PauliString, double>> rows;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    std::string letters, angle_text, extra;
    if (!(fields >> letters >> angle_text) || (fields >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected '<pauli-letters> <angle>'");
    }
    PauliString p(1);
    try {
      p = PauliString::parse(letters);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (n == 0) {
      n = p.num_qubits();
    } else if (p.num_qubits() != n) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": string has " +
                                  std::to_string(p.num_qubits()) + " qubits, expected " +
                                  std::to_string(n));
    }
    double angle = 0;
    std::size_t consumed = 0;
    try {
      angle = std::stod(angle_text, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != angle_text.size() || !std::isfinite(angle)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad angle '" +
                                  angle_text + "'");
    }
    rows.emplace_back(std::move(p), angle);
  }
  if (rows.empty()) {
    throw std::invalid_argument("hamiltonian file has no entries");
  }
  PauliWord word(static_cast<std::uint32_t>(n));
  for (auto& [p, angle] : rows) word.append(std::move(p), angle);
  return word;
}

PauliWord parse_hamiltonian_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return parse_hamiltonian(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_hamiltonian(const PauliWord& word, std::ostream& out) {
  char buf[64];
  for (const auto& r : word.rows()) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.angle);
    out << r.pauli.render() << ' ' << buf << '\n';
  }
}

void write_hamiltonian_file(const PauliWord& word, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  write_hamiltonian(word, out);
}

CouplingGraph parse_coupling(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  CouplingGraph g;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = strip(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    if (!have_n) {
      if (!(fields >> g.num_qubits) || g.num_qubits == 0) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected the qubit count");
      }
      have_n = true;
      continue;
    }
    std::uint32_t a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected an edge 'i j'");
    }
    if (a >= g.num_qubits || b >= g.num_qubits || a == b) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": bad edge (" +
                                  std::to_string(a) + "," + std::to_string(b) + ")");
    }
    g.edges.emplace_back(a, b);
  }
  if (!have_n) {
    throw std::invalid_argument("coupling file is empty");
  }
  return g;
}

CouplingGraph parse_coupling_file(const std::string& path) {
  auto in = open_or_throw(path);
  try {
    return parse_coupling(in);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::vector<std::vector<std::uint32_t>> all_pairs_distance(const CouplingGraph& g) {
  return HardwareContext::build(g.num_qubits, g.edges).dist;
}

HardwareContext hardware_context(const CouplingGraph& g) {
  return HardwareContext::build(g.num_qubits, g.edges);
}

PauliWord heisenberg_word(std::uint32_t rows, std::uint32_t cols, double coupling, double theta) {
  if (rows * cols < 2) {
    throw std::invalid_argument("lattice needs at least two sites");
  }
  const std::uint32_t n = rows * cols;
  PauliWord word(n);
  const double angle = coupling * theta;
  auto site = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
  auto add_edge = [&](std::uint32_t u, std::uint32_t v) {
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
      PauliString p(n);
      p.set_letter(u, l);
      p.set_letter(v, l);
      word.append(std::move(p), angle);
    }
  };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) add_edge(site(r, c), site(r, c + 1));
      if (r + 1 < rows) add_edge(site(r, c), site(r + 1, c));
    }
  }
  return word;
}

PauliWord random_word(std::uint32_t num_qubits, std::uint32_t num_strings, double density,
                      std::uint64_t seed) {
  if (num_qubits == 0 || num_strings == 0) {
    throw std::invalid_argument("random word needs at least one qubit and one string");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_real_distribution<double> angle(0.05, 1.5);

  PauliWord word(num_qubits);
  for (std::uint32_t k = 0; k < num_strings; ++k) {
    PauliString p(num_qubits);
    do {
      for (std::uint32_t q = 0; q < num_qubits; ++q) {
        if (unit(rng) < density) {
          const int pick = letter(rng);
          p.set_letter(q, pick == 0 ? PauliLetter::X
                                    : pick == 1 ? PauliLetter::Y : PauliLetter::Z);
        } else {
          p.set_letter(q, PauliLetter::I);
        }
      }
    } while (p.is_identity());
    word.append(std::move(p), angle(rng));
  }
  return word;
}

}  // namespace paulinet
