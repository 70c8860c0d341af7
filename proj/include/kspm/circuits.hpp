#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kspm {

enum class GateKind { AND, OR, NOT };

const char* gate_name(GateKind k);

struct Gate {
  std::string name;
  GateKind kind = GateKind::AND;
  std::vector<std::string> ops;
  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;  // topological order
  std::string output;

  bool monotone() const;
  bool is_input(const std::string& n) const;
  const Gate* gate(const std::string& n) const;
  bool operator==(const Circuit&) const = default;
};

using Assignment = std::map<std::string, int>;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& reason);
};
struct CycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndefinedOperand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gates wider than two operands are split into a left-deep chain of 2-input gates.
Circuit parse_circuit(const std::string& text);
std::string print_circuit(const Circuit& c);

Assignment parse_assignment(const std::string& text);
std::string print_assignment(const Assignment& a);

int eval_circuit(const Circuit& c, const Assignment& a);

struct Literal {
  std::string input;
  bool negated = false;
};

struct MonotoneForm {
  Circuit circuit;
  std::map<std::string, Literal> polarity;  // new input -> original literal
  Assignment lift(const Assignment& original) const;
};

MonotoneForm eliminate_negations(const Circuit& c);

// Random circuit over n inputs with the given gate count; every gate is 2-input
// (NOT gates only when allow_not). The last gate is the output.
Circuit random_circuit(std::mt19937_64& rng, int n_inputs, int n_gates, bool allow_not);

std::uint64_t circuit_hash(const Circuit& c);

}  // namespace kspm
