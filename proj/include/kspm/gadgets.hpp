#pragma once

#include "kspm/search.hpp"

#include <map>

namespace kspm {

struct UnsupportedP : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MonotonicityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Port {
  std::string name;
  bool input = true;
  Dir axis = Dir::H;
  Index i = 0, j = 0;
  bool operator==(const Port&) const = default;
};

// A port fires (logical 1) iff its cell's grain count ever rises above its start value.
struct Gadget {
  std::string name;
  int p = 2;
  Grid patch;
  std::vector<Port> ports;

  std::vector<Port> inputs() const;
  std::vector<Port> outputs() const;
  const Port& port(const std::string& n) const;
  Index rows() const { return patch.rows(); }
  Index cols() const { return patch.cols(); }
  // declared truth table, from the gadget family named by the prefix
  std::vector<int> semantics(const std::vector<int>& in) const;
  bool operator==(const Gadget&) const = default;
};

std::vector<Gadget> parse_catalog(const std::string& text);
std::string print_catalog(const std::vector<Gadget>& gs);

// shipped, frozen catalogs; p outside {2,3} throws UnsupportedP
const std::vector<Gadget>& builtin_gadgets(int p);
const Gadget& find_gadget(int p, const std::string& name);

struct Rect {
  Index i0, j0, cols, rows;
  bool intersects(const Rect& o) const {
    return i0 < o.i0 + o.cols && o.i0 < i0 + cols && j0 < o.j0 + o.rows && o.j0 < j0 + rows;
  }
};

struct Layout {
  Grid config;
  std::vector<std::pair<std::string, Rect>> placed;
  std::map<std::string, std::pair<Index, Index>> ports;  // "<instance>.<port>" -> cell
  explicit Layout(int p, Index rows = 1, Index cols = 1) : config(p, rows, cols) {}
};

// Writes the patch at origin lifted by the smallest offset that dominates the
// cells east and north of it, then raises the free cells west and south just
// enough to restore monotonicity. Raising an occupied cell is a MonotonicityError.
void instantiate(const Gadget& g, Index oi, Index oj, Layout& layout, const std::string& instance);

struct CaseReport {
  std::vector<int> inputs, expected, observed;
  std::size_t states = 0;
  bool exhausted = false;
  std::map<std::string, std::vector<Move2D>> witnesses;
  bool pass = false;
};

struct GadgetReport {
  std::string name;
  int p = 2;
  std::vector<CaseReport> cases;
  bool quiescent = false;
  long witness_h = 0, witness_v = 0;  // moves in the all-ones witness
  bool pass = false;
};

// Input stimulation: one grain added on each driven input port cell, the grain an
// upstream wire hands over. 1-cases need a witness; 0-cases need exhausted search.
GadgetReport verify_gadget(const Gadget& g, std::size_t max_states = 5'000'000);

std::string format_report(const GadgetReport& r);

}  // namespace kspm
