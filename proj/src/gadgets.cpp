#include "kspm/gadgets.hpp"

#include <sstream>

namespace kspm {

std::vector<Port> Gadget::inputs() const {
  std::vector<Port> v;
  for (const auto& p : ports)
    if (p.input) v.push_back(p);
  return v;
}

std::vector<Port> Gadget::outputs() const {
  std::vector<Port> v;
  for (const auto& p : ports)
    if (!p.input) v.push_back(p);
  return v;
}

const Port& Gadget::port(const std::string& n) const {
  for (const auto& p : ports)
    if (p.name == n) return p;
  throw CatalogError("gadget " + name + " has no port " + n);
}

namespace {

bool starts_with(const std::string& s, const std::string& pre) { return s.rfind(pre, 0) == 0; }

}  // namespace

std::vector<int> Gadget::semantics(const std::vector<int>& in) const {
  const std::size_t no = outputs().size();
  if (in.size() != inputs().size()) throw std::invalid_argument("wrong number of inputs for " + name);
  if (starts_with(name, "wire") || starts_with(name, "corner")) return {in.at(0)};
  if (starts_with(name, "fanout")) return std::vector<int>(no, in.at(0));
  if (starts_with(name, "and")) return {in.at(0) & in.at(1)};
  if (starts_with(name, "or")) return {in.at(0) | in.at(1)};
  if (starts_with(name, "crossover")) return in;
  throw CatalogError("no declared semantics for gadget family of " + name);
}

std::vector<Gadget> parse_catalog(const std::string& text) {
  std::vector<Gadget> out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) { throw CatalogError("catalog line " + std::to_string(lineno) + ": " + why); };
  Gadget* cur = nullptr;
  int rows_left = 0;
  std::vector<std::vector<int>> rows;
  auto finish_matrix = [&] {
    if (cur && rows_left == 0 && !rows.empty()) {
      cur->patch = Grid::from_rows(cur->p, rows);
      rows.clear();
    }
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto k = line.find('#'); k != std::string::npos) line.resize(k);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "GADGET") {
      if (rows_left) fail("matrix ended early");
      std::string name, ps, rs, cs;
      if (!(ls >> name >> ps >> rs >> cs)) fail("expected 'GADGET <name> p=<p> rows=<r> cols=<c>'");
      if (!starts_with(ps, "p=") || !starts_with(rs, "rows=") || !starts_with(cs, "cols=")) fail("bad GADGET header");
      out.emplace_back();
      cur = &out.back();
      cur->name = name;
      cur->p = std::stoi(ps.substr(2));
      rows_left = std::stoi(rs.substr(5));
      int cols = std::stoi(cs.substr(5));
      if (rows_left < 1 || cols < 1) fail("extents must be positive");
      rows.clear();
      rows.reserve(std::size_t(rows_left));
      cur->patch = Grid(cur->p, rows_left, cols);
      continue;
    }
    if (!cur) fail("content before GADGET header");
    if (rows_left > 0) {
      std::istringstream rs(line);
      std::vector<int> r;
      for (int v; rs >> v;) r.push_back(v);
      if (Index(r.size()) != cur->patch.cols()) fail("row width differs from cols");
      rows.push_back(r);
      --rows_left;
      finish_matrix();
      continue;
    }
    if (head == "port") {
      Port p;
      std::string dir, axis;
      if (!(ls >> p.name >> dir >> axis >> p.i >> p.j)) fail("expected 'port <name> in|out H|V <i> <j>'");
      if (dir != "in" && dir != "out") fail("port direction must be in or out");
      if (axis != "H" && axis != "V") fail("port axis must be H or V");
      p.input = dir == "in";
      p.axis = axis == "H" ? Dir::H : Dir::V;
      if (!cur->patch.inside(p.i, p.j)) fail("port outside the patch");
      cur->ports.push_back(p);
      continue;
    }
    fail("unrecognized line");
  }
  if (rows_left) throw CatalogError("catalog ended inside a matrix");
  return out;
}

std::string print_catalog(const std::vector<Gadget>& gs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : gs) {
    if (!first) os << "\n";
    first = false;
    os << "GADGET " << g.name << " p=" << g.p << " rows=" << g.rows() << " cols=" << g.cols() << "\n";
    for (const auto& r : g.patch.rows_north_first()) {
      for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
      os << "\n";
    }
    for (const auto& p : g.ports)
      os << "port " << p.name << " " << (p.input ? "in" : "out") << " " << dir_char(p.axis) << " " << p.i << " " << p.j
         << "\n";
  }
  return os.str();
}

const Gadget& find_gadget(int p, const std::string& name) {
  for (const auto& g : builtin_gadgets(p))
    if (g.name == name) return g;
  throw CatalogError("no gadget named " + name + " for p=" + std::to_string(p));
}

void instantiate(const Gadget& g, Index oi, Index oj, Layout& layout, const std::string& instance) {
  if (oi < 0 || oj < 0) throw OverlapError("origin outside the grid");
  if (g.p != layout.config.p()) throw CatalogError("gadget p differs from the layout's p");
  Rect r{oi, oj, g.cols(), g.rows()};
  for (const auto& [name, q] : layout.placed)
    if (q.intersects(r)) throw OverlapError("gadget " + instance + " overlaps " + name);
  Grid& c = layout.config;
  int base = 0;
  for (Index jj = 0; jj < g.rows(); ++jj) base = std::max(base, c.at(oi + g.cols(), oj + jj) - g.patch.at(g.cols() - 1, jj));
  for (Index ii = 0; ii < g.cols(); ++ii) base = std::max(base, c.at(oi + ii, oj + g.rows()) - g.patch.at(ii, g.rows() - 1));
  c.ensure(oi + g.cols(), oj + g.rows());
  for (Index jj = 0; jj < g.rows(); ++jj)
    for (Index ii = 0; ii < g.cols(); ++ii) c.ref(oi + ii, oj + jj) = g.patch.at(ii, jj) + base;
  layout.placed.emplace_back(instance, r);
  auto occupied = [&](Index i, Index j) {
    for (const auto& [name, q] : layout.placed)
      if (i >= q.i0 && i < q.i0 + q.cols && j >= q.j0 && j < q.j0 + q.rows) return true;
    return false;
  };
  for (Index j = c.rows() - 1; j >= 0; --j)
    for (Index i = c.cols() - 1; i >= 0; --i) {
      int need = std::max(c.at(i + 1, j), c.at(i, j + 1));
      if (c.at(i, j) >= need) continue;
      if (occupied(i, j))
        throw MonotonicityError("placing " + instance + " would raise occupied cell (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
      c.ref(i, j) = need;
    }
  for (const auto& p : g.ports) layout.ports[instance + "." + p.name] = {oi + p.i, oj + p.j};
}

GadgetReport verify_gadget(const Gadget& g, std::size_t max_states) {
  GadgetReport rep;
  rep.name = g.name;
  rep.p = g.p;
  const auto ins = g.inputs();
  const auto outs = g.outputs();
  const std::size_t n = ins.size();
  rep.pass = true;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    CaseReport cr;
    Grid start = g.patch;
    for (std::size_t k = 0; k < n; ++k) {
      int b = int((mask >> (n - 1 - k)) & 1);
      cr.inputs.push_back(b);
      if (b) start.ref(ins[k].i, ins[k].j) += 1;
    }
    cr.expected = g.semantics(cr.inputs);
    std::vector<int> base;
    for (const auto& o : outs) base.push_back(start.at(o.i, o.j));
    cr.observed.assign(outs.size(), 0);
    bool moved = false;
    cr.exhausted = explore_2d(
        start,
        [&](const Grid& c, const std::vector<Move2D>& ms) {
          if (!ms.empty()) moved = true;
          for (std::size_t k = 0; k < outs.size(); ++k)
            if (c.at(outs[k].i, outs[k].j) > base[k]) cr.observed[k] = 1;
        },
        max_states, &cr.states);
    if (mask == 0) rep.quiescent = cr.exhausted && !moved;
    cr.pass = true;
    for (std::size_t k = 0; k < outs.size(); ++k) {
      if (cr.expected[k]) {
        auto s = search_2d(start, [&](const Grid& c) { return c.at(outs[k].i, outs[k].j) > base[k]; }, max_states);
        if (s.verdict == Verdict::Yes) {
          cr.observed[k] = 1;
          cr.witnesses[outs[k].name] = s.witness;
        } else {
          cr.pass = false;
        }
      } else if (cr.observed[k] || !cr.exhausted) {
        cr.pass = false;
      }
    }
    if (mask + 1 == (std::size_t(1) << n) && !cr.witnesses.empty()) {
      for (const auto& m : cr.witnesses.begin()->second) (m.d == Dir::H ? rep.witness_h : rep.witness_v) += 1;
    }
    rep.pass = rep.pass && cr.pass;
    rep.cases.push_back(std::move(cr));
  }
  rep.pass = rep.pass && rep.quiescent;
  return rep;
}

std::string format_report(const GadgetReport& r) {
  std::ostringstream os;
  os << "gadget " << r.name << " p=" << r.p << " " << (r.pass ? "PASS" : "FAIL") << " quiescent=" << r.quiescent << "\n";
  for (const auto& c : r.cases) {
    os << "  in=";
    for (int b : c.inputs) os << b;
    os << " expected=";
    for (int b : c.expected) os << b;
    os << " observed=";
    for (int b : c.observed) os << b;
    os << " states=" << c.states << " mode=" << (c.exhausted ? "exhaustive" : "truncated") << " "
       << (c.pass ? "ok" : "MISMATCH") << "\n";
  }
  os << "  all-ones witness: " << r.witness_h << " H, " << r.witness_v << " V\n";
  return os.str();
}

}  // namespace kspm
