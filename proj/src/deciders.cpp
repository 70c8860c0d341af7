#include "kspm/deciders.hpp"

#include <cmath>

namespace kspm {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

InvalidInstance::InvalidInstance(std::vector<std::string> v)
    : std::runtime_error("invalid instance: " + join(v)), violations(std::move(v)) {}

Index support_n(const Config1D<int>& c) {
  Index n = c.n();
  while (n > 1 && c[n] == 0) --n;
  return n;
}

Index support_n(const Grid& c) {
  auto [r, k] = c.support_extent();
  return std::max(r, k);
}

std::vector<std::string> validate_instance(const ApInstance1D& inst) {
  std::vector<std::string> v;
  const auto& c = inst.config;
  const int p = c.p;
  const Index n = support_n(c);
  for (Index i = 1; i <= c.n(); ++i)
    if (c[i] < 0) v.push_back("negative height at column " + std::to_string(i));
  if (!is_monotone_1d(c)) v.push_back("configuration is not monotone");
  if (!is_stable_1d(c)) v.push_back("configuration is not stable");
  if (!(n < inst.k && inst.k <= n + p - 1))
    v.push_back("k=" + std::to_string(inst.k) + " outside (" + std::to_string(n) + ", " + std::to_string(n + p - 1) + "]");
  if (c[inst.k] != 0) v.push_back("column k is not empty");
  return v;
}

std::vector<std::string> validate_instance(const ApInstance2D& inst) {
  std::vector<std::string> v;
  const auto& c = inst.config;
  if ((c.cells() < 0).any()) v.push_back("negative grain count");
  if (!is_monotone_2d(c)) v.push_back("configuration is not monotone");
  if (inst.k < 0 || inst.l < 0) v.push_back("target has a negative coordinate");
  if (c.at(inst.k, inst.l) != 0) v.push_back("target cell is not empty");
  const double n = double(support_n(c));
  const double norm = std::hypot(double(inst.k), double(inst.l));
  const double q = double(inst.Q());
  if (norm < std::sqrt(2.0) / 2.0 * n) v.push_back("target closer than sqrt(2)/2 * n");
  if (norm > n + q) v.push_back("target farther than n + Q");
  return v;
}

Decision1D ap_decide_1d_sim(const ApInstance1D& inst) {
  if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(v);
  auto d = add_grain(to_height_diffs(inst.config));
  Decision1D out;
  out.trace = sweep_relax(d);
  for (const auto& e : out.trace.events)
    if (feeds_column(e.move.site, inst.k, d.p)) out.answer = true;
  return out;
}

bool ap_decide_1d_fast(const ApInstance1D& inst) {
  if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(v);
  const auto d = add_grain(to_height_diffs(inst.config));
  const int p = d.p;
  // links: site s feeds s-1 with p-1 and s+p-1 with 1; a site fires once its
  // difference plus incoming links reaches p
  std::vector<int> got(std::size_t(d.h.size() + 2 * p + 1), 0);
  std::vector<char> fired(got.size(), 0);
  std::vector<Index> work;
  auto h = [&](Index i) { return d[i] + got[std::size_t(i)]; };
  auto offer = [&](Index i, int amount) {
    if (i < 1 || i >= Index(got.size())) return;
    got[std::size_t(i)] += amount;
    if (!fired[std::size_t(i)] && h(i) >= p) {
      fired[std::size_t(i)] = 1;
      work.push_back(i);
    }
  };
  offer(1, 0);
  bool reached = false;
  while (!work.empty()) {
    Index s = work.back();
    work.pop_back();
    if (feeds_column(s, inst.k, p)) reached = true;
    offer(s - 1, p - 1);
    offer(s + p - 1, 1);
  }
  return reached;
}

Decision2D ap_decide_2d_sweep(const ApInstance2D& inst, long step_limit) {
  if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(v);
  Decision2D out;
  out.trace = sweep_relax(inst.config, {}, step_limit);
  Grid x = inst.config;
  for (const auto& e : out.trace.events) {
    x = apply_raw_2d(x, e.move);
    if (x.at(inst.k, inst.l) >= 1) {
      out.answer = true;
      break;
    }
  }
  return out;
}

SearchResult ap_decide_2d_search(const ApInstance2D& inst, std::size_t max_states) {
  if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(v);
  return search_2d(inst.config, [&](const Grid& g) { return g.at(inst.k, inst.l) >= 1; }, max_states);
}

}  // namespace kspm
