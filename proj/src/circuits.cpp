#include "kspm/circuits.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_map>

namespace kspm {

const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::AND: return "AND";
    case GateKind::OR: return "OR";
    case GateKind::NOT: return "NOT";
  }
  return "?";
}

ParseError::ParseError(int line_, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line_) + ": " + reason), line(line_) {}

bool Circuit::monotone() const {
  return std::none_of(gates.begin(), gates.end(), [](const Gate& g) { return g.kind == GateKind::NOT; });
}

bool Circuit::is_input(const std::string& n) const { return std::find(inputs.begin(), inputs.end(), n) != inputs.end(); }

const Gate* Circuit::gate(const std::string& n) const {
  for (const auto& g : gates)
    if (g.name == n) return &g;
  return nullptr;
}

namespace {

const std::regex kName("[A-Za-z_][A-Za-z0-9_]*");

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> t;
  for (std::string w; is >> w;) t.push_back(w);
  return t;
}

std::string strip_comment(const std::string& s) {
  auto k = s.find('#');
  return k == std::string::npos ? s : s.substr(0, k);
}

// orders gates so operands come first; throws on cycles and unknown names
std::vector<Gate> topo_sort(const std::vector<std::string>& inputs, const std::vector<Gate>& gates) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t k = 0; k < gates.size(); ++k) idx[gates[k].name] = k;
  std::set<std::string> ins(inputs.begin(), inputs.end());
  std::vector<int> state(gates.size(), 0);
  std::vector<Gate> out;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (state[k] == 2) return;
    if (state[k] == 1) throw CycleError("cycle through gate " + gates[k].name);
    state[k] = 1;
    for (const auto& o : gates[k].ops) {
      if (ins.count(o)) continue;
      auto it = idx.find(o);
      if (it == idx.end()) throw UndefinedOperand("gate " + gates[k].name + " uses undefined operand " + o);
      visit(it->second);
    }
    state[k] = 2;
    out.push_back(gates[k]);
  };
  for (std::size_t k = 0; k < gates.size(); ++k) visit(k);
  return out;
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  Circuit c;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  bool seen_output = false, seen_header = false;
  std::set<std::string> names;
  std::vector<Gate> gates;
  auto declare = [&](const std::string& n, int ln) {
    if (!std::regex_match(n, kName)) throw ParseError(ln, "bad name '" + n + "'");
    if (!names.insert(n).second) throw ParseError(ln, "duplicate definition of '" + n + "'");
  };
  while (std::getline(is, raw)) {
    ++lineno;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t[0] == "CIRC") {
      if (seen_header || t.size() != 2 || t[1] != "v1") throw ParseError(lineno, "expected header 'CIRC v1'");
      seen_header = true;
      continue;
    }
    if (t[0] == "input") {
      if (t.size() != 2) throw ParseError(lineno, "expected 'input <name>'");
      declare(t[1], lineno);
      c.inputs.push_back(t[1]);
    } else if (t[0] == "output") {
      if (t.size() != 2) throw ParseError(lineno, "expected 'output <name>'");
      if (seen_output) throw ParseError(lineno, "more than one output");
      if (!std::regex_match(t[1], kName)) throw ParseError(lineno, "bad name '" + t[1] + "'");
      c.output = t[1];
      seen_output = true;
    } else if (t.size() >= 3 && t[1] == "=") {
      const std::string& kind = t[2];
      std::vector<std::string> ops(t.begin() + 3, t.end());
      for (const auto& o : ops)
        if (!std::regex_match(o, kName)) throw ParseError(lineno, "bad operand '" + o + "'");
      declare(t[0], lineno);
      if (kind == "NOT") {
        if (ops.size() != 1) throw ParseError(lineno, "NOT takes one operand");
        gates.push_back({t[0], GateKind::NOT, ops});
      } else if (kind == "AND" || kind == "OR") {
        GateKind k = kind == "AND" ? GateKind::AND : GateKind::OR;
        if (ops.size() < 2) throw ParseError(lineno, kind + " takes at least two operands");
        std::string acc = ops[0];
        for (std::size_t q = 1; q + 1 < ops.size(); ++q) {
          std::string part = t[0] + "__" + std::to_string(q);
          declare(part, lineno);
          gates.push_back({part, k, {acc, ops[q]}});
          acc = part;
        }
        gates.push_back({t[0], k, {acc, ops.back()}});
      } else {
        throw ParseError(lineno, "unknown gate kind '" + kind + "'");
      }
    } else {
      throw ParseError(lineno, "unrecognized line");
    }
  }
  if (!seen_output) throw ParseError(lineno, "missing output line");
  c.gates = topo_sort(c.inputs, gates);
  if (!c.is_input(c.output) && !c.gate(c.output)) throw UndefinedOperand("output " + c.output + " is not defined");
  return c;
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "CIRC v1\n";
  for (const auto& i : c.inputs) os << "input " << i << "\n";
  for (const auto& g : c.gates) {
    os << g.name << " = " << gate_name(g.kind);
    for (const auto& o : g.ops) os << " " << o;
    os << "\n";
  }
  os << "output " << c.output << "\n";
  return os.str();
}

Assignment parse_assignment(const std::string& text) {
  Assignment a;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string s = strip_comment(raw);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s.empty()) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected '<name>=0|1'");
    std::string name = s.substr(0, eq), val = s.substr(eq + 1);
    if (!std::regex_match(name, kName)) throw ParseError(lineno, "bad name '" + name + "'");
    if (val != "0" && val != "1") throw ParseError(lineno, "value must be 0 or 1");
    if (a.count(name)) throw ParseError(lineno, "duplicate assignment of '" + name + "'");
    a[name] = val == "1";
  }
  return a;
}

std::string print_assignment(const Assignment& a) {
  std::ostringstream os;
  for (const auto& [k, v] : a) os << k << "=" << v << "\n";
  return os.str();
}

int eval_circuit(const Circuit& c, const Assignment& a) {
  std::unordered_map<std::string, int> val;
  for (const auto& i : c.inputs) {
    auto it = a.find(i);
    if (it == a.end()) throw std::invalid_argument("assignment misses input " + i);
    val[i] = it->second ? 1 : 0;
  }
  for (const auto& g : c.gates) {
    int v = 0;
    switch (g.kind) {
      case GateKind::AND: v = val.at(g.ops[0]) & val.at(g.ops[1]); break;
      case GateKind::OR: v = val.at(g.ops[0]) | val.at(g.ops[1]); break;
      case GateKind::NOT: v = 1 - val.at(g.ops[0]); break;
    }
    val[g.name] = v;
  }
  return val.at(c.output);
}

Assignment MonotoneForm::lift(const Assignment& original) const {
  Assignment a;
  for (const auto& [name, lit] : polarity) {
    int v = original.at(lit.input) ? 1 : 0;
    a[name] = lit.negated ? 1 - v : v;
  }
  return a;
}

MonotoneForm eliminate_negations(const Circuit& c) {
  MonotoneForm m;
  std::set<std::string> used;
  for (const auto& i : c.inputs) used.insert(i);
  for (const auto& g : c.gates) used.insert(g.name);
  auto fresh = [&](const std::string& base) {
    std::string n = base;
    while (used.count(n)) n += "_";
    used.insert(n);
    return n;
  };
  for (const auto& i : c.inputs) {
    m.circuit.inputs.push_back(i);
    m.polarity[i] = {i, false};
  }
  std::map<std::pair<std::string, bool>, std::string> memo;
  std::map<std::string, std::string> neg_input;
  std::function<std::string(const std::string&, bool)> lit = [&](const std::string& node, bool neg) -> std::string {
    auto key = std::make_pair(node, neg);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::string out;
    if (c.is_input(node)) {
      if (!neg) {
        out = node;
      } else {
        out = fresh("not_" + node);
        m.circuit.inputs.push_back(out);
        m.polarity[out] = {node, true};
      }
    } else {
      const Gate& g = *c.gate(node);
      if (g.kind == GateKind::NOT) {
        out = lit(g.ops[0], !neg);
      } else {
        // De Morgan: a negated AND becomes an OR of negated operands and vice versa
        GateKind k = g.kind;
        if (neg) k = k == GateKind::AND ? GateKind::OR : GateKind::AND;
        std::string a = lit(g.ops[0], neg), b = lit(g.ops[1], neg);
        out = neg ? fresh("not_" + g.name) : g.name;
        m.circuit.gates.push_back({out, k, {a, b}});
      }
    }
    memo[key] = out;
    return out;
  };
  m.circuit.output = lit(c.output, false);
  return m;
}

Circuit random_circuit(std::mt19937_64& rng, int n_inputs, int n_gates, bool allow_not) {
  Circuit c;
  std::vector<std::string> pool;
  for (int k = 0; k < n_inputs; ++k) {
    c.inputs.push_back("x" + std::to_string(k));
    pool.push_back(c.inputs.back());
  }
  for (int k = 0; k < n_gates; ++k) {
    Gate g;
    g.name = "g" + std::to_string(k);
    int r = int(rng() % (allow_not ? 5 : 4));
    g.kind = r < 2 ? GateKind::AND : r < 4 ? GateKind::OR : GateKind::NOT;
    // bias toward recent nodes so the circuit stays connected
    auto pick = [&] {
      std::size_t n = pool.size();
      std::size_t lo = n > 4 && rng() % 2 ? n - 4 : 0;
      return pool[lo + rng() % (n - lo)];
    };
    g.ops.push_back(pick());
    if (g.kind != GateKind::NOT) {
      std::string b = pick();
      for (int tries = 0; b == g.ops[0] && tries < 8; ++tries) b = pick();
      g.ops.push_back(b);
    }
    c.gates.push_back(g);
    pool.push_back(g.name);
  }
  c.output = c.gates.empty() ? c.inputs.front() : c.gates.back().name;
  return c;
}

std::uint64_t circuit_hash(const Circuit& c) {
  // FNV-1a over the canonical text
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : print_circuit(c)) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kspm
