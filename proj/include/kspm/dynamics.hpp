#pragma once

#include "kspm/grid.hpp"

#include <optional>
#include <sstream>

namespace kspm {

struct IllegalMove : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Dir { R, H, V };

inline char dir_char(Dir d) { return d == Dir::R ? 'R' : d == Dir::H ? 'H' : 'V'; }

struct Move1D {
  Index site = 1;
  bool operator==(const Move1D&) const = default;
};

struct Move2D {
  Index i = 0, j = 0;
  Dir d = Dir::H;
  bool operator==(const Move2D&) const = default;
};

template <typename Config, typename Move>
struct Trace {
  struct Event {
    long step;
    Move move;
  };
  Config initial;
  std::vector<Event> events;
  Config final_;

  std::size_t size() const { return events.size(); }
};

template <typename Scalar>
using Trace1D = Trace<HeightDiff1D<Scalar>, Move1D>;
template <typename Scalar>
using Trace2D = Trace<Config2D<Scalar>, Move2D>;

template <typename Config, typename Move>
struct StepLimitExceeded : std::runtime_error {
  Trace<Config, Move> partial;
  explicit StepLimitExceeded(Trace<Config, Move> t)
      : std::runtime_error("step limit exceeded after " + std::to_string(t.events.size()) + " events"),
        partial(std::move(t)) {}
};

// ---- 1D, height-difference space ----

template <typename Scalar>
bool is_enabled_1d(const HeightDiff1D<Scalar>& d, Index i) {
  return i >= 1 && d[i] >= d.p;
}

template <typename Scalar>
std::vector<Move1D> enabled_moves_1d(const HeightDiff1D<Scalar>& d) {
  std::vector<Move1D> out;
  for (Index i = 1; i < d.h.size(); ++i)
    if (d.h(i) >= d.p) out.push_back({i});
  return out;
}

template <typename Scalar>
std::vector<Move1D> enabled_moves_1d(const Config1D<Scalar>& c) {
  return enabled_moves_1d(to_height_diffs(c));
}

template <typename Scalar>
HeightDiff1D<Scalar> apply_move_1d(HeightDiff1D<Scalar> d, Move1D m) {
  if (!is_enabled_1d(d, m.site))
    throw IllegalMove("site " + std::to_string(m.site) + " has height difference below p");
  const Index i = m.site;
  const int p = d.p;
  d.reserve_to(i + p - 1);
  d.h(i - 1) += p - 1;
  d.h(i) -= p;
  d.h(i + p - 1) += 1;
  return d;
}

// grain space: site loses p-1, the next p-1 columns gain one each
template <typename Scalar>
Config1D<Scalar> apply_move_1d(Config1D<Scalar> c, Move1D m) {
  const Index i = m.site;
  const int p = c.p;
  if (i < 1 || c[i] - c[i + 1] < p) throw IllegalMove("site " + std::to_string(i) + " has height difference below p");
  if (c.n() < i + p - 1) {
    Index old = c.n();
    c.x.conservativeResize(i + p - 1);
    c.x.tail(i + p - 1 - old).setZero();
  }
  c.x(i - 1) -= p - 1;
  for (int t = 1; t < p; ++t) c.x(i - 1 + t) += 1;
  return c;
}

// ---- 2D ----

namespace detail {

// value of cell (u,v) after applying m to c, without copying
template <typename Scalar>
Scalar after(const Config2D<Scalar>& c, const Move2D& m, Index u, Index v) {
  Scalar x = c.at(u, v);
  const int p = c.p();
  if (u == m.i && v == m.j) return x - (p - 1);
  if (m.d == Dir::H) {
    if (v == m.j && u > m.i && u < m.i + p) return x + 1;
  } else {
    if (u == m.i && v > m.j && v < m.j + p) return x + 1;
  }
  return x;
}

}  // namespace detail

template <typename Scalar>
Scalar move_trigger(const Config2D<Scalar>& c, const Move2D& m) {
  return m.d == Dir::H ? h_horizontal(c, m.i, m.j) : h_vertical(c, m.i, m.j);
}

// nullopt when legal, otherwise the reason
template <typename Scalar>
std::optional<std::string> move_violation(const Config2D<Scalar>& c, const Move2D& m) {
  const int p = c.p();
  if (m.d == Dir::R) return "direction R is one-dimensional";
  if (m.i < 0 || m.j < 0) return "site outside the grid";
  if (move_trigger(c, m) < p) return "height difference below p";
  auto val = [&](Index u, Index v) { return detail::after(c, m, u, v); };
  for (int t = 0; t < p; ++t) {
    Index u = m.d == Dir::H ? m.i + t : m.i;
    Index v = m.d == Dir::H ? m.j : m.j + t;
    Scalar x = val(u, v);
    if (x < 0) return "negative grain count";
    if (x < val(u + 1, v) || x < val(u, v + 1)) return "monotonicity violated";
    if (u > 0 && val(u - 1, v) < x) return "monotonicity violated";
    if (v > 0 && val(u, v - 1) < x) return "monotonicity violated";
  }
  return std::nullopt;
}

template <typename Scalar>
bool is_enabled_2d(const Config2D<Scalar>& c, const Move2D& m) {
  return !move_violation(c, m).has_value();
}

// raw application: no threshold or legality check, grid grows as needed
template <typename Scalar>
Config2D<Scalar> apply_raw_2d(Config2D<Scalar> c, const Move2D& m) {
  const int p = c.p();
  if (m.d == Dir::H)
    c.ensure(m.i + p, m.j + 1);
  else
    c.ensure(m.i + 1, m.j + p);
  c.ref(m.i, m.j) -= p - 1;
  for (int t = 1; t < p; ++t) {
    if (m.d == Dir::H)
      c.ref(m.i + t, m.j) += 1;
    else
      c.ref(m.i, m.j + t) += 1;
  }
  return c;
}

template <typename Scalar>
Config2D<Scalar> apply_move_2d(const Config2D<Scalar>& c, const Move2D& m) {
  if (auto why = move_violation(c, m)) {
    std::ostringstream os;
    os << "move (" << m.i << "," << m.j << "," << dir_char(m.d) << "): " << *why;
    throw IllegalMove(os.str());
  }
  return apply_raw_2d(c, m);
}

struct SweepPolicy {
  bool h_first = true;
};

// scan order: north to south, west to east, then direction priority
template <typename Scalar, typename F>
bool for_each_enabled_2d(const Config2D<Scalar>& c, const SweepPolicy& pol, F&& f) {
  const Dir first = pol.h_first ? Dir::H : Dir::V;
  const Dir second = pol.h_first ? Dir::V : Dir::H;
  for (Index j = c.rows() - 1; j >= 0; --j)
    for (Index i = 0; i < c.cols(); ++i) {
      if (c.at(i, j) < c.p()) continue;
      for (Dir d : {first, second}) {
        Move2D m{i, j, d};
        if (is_enabled_2d(c, m) && !f(m)) return false;
      }
    }
  return true;
}

template <typename Scalar>
std::vector<Move2D> enabled_moves_2d(const Config2D<Scalar>& c, const SweepPolicy& pol = {}) {
  std::vector<Move2D> out;
  for_each_enabled_2d(c, pol, [&](const Move2D& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

template <typename Scalar>
std::optional<Move2D> first_enabled_2d(const Config2D<Scalar>& c, const SweepPolicy& pol = {}) {
  std::optional<Move2D> hit;
  for_each_enabled_2d(c, pol, [&](const Move2D& m) {
    hit = m;
    return false;
  });
  return hit;
}

template <typename Scalar>
long default_step_limit(const Config2D<Scalar>& c) {
  return long(c.rows()) * long(c.cols()) * (long(c.total()) + 1);
}

template <typename Scalar>
long default_step_limit(const HeightDiff1D<Scalar>& d) {
  return 2 * (long(d.h.size()) + d.p) + 2;
}

template <typename Scalar>
Trace2D<Scalar> sweep_relax(const Config2D<Scalar>& c, const SweepPolicy& pol = {}, long step_limit = -1) {
  if (step_limit < 0) step_limit = default_step_limit(c);
  Trace2D<Scalar> t{c, {}, c};
  while (auto m = first_enabled_2d(t.final_, pol)) {
    if (long(t.events.size()) >= step_limit) throw StepLimitExceeded<Config2D<Scalar>, Move2D>(std::move(t));
    t.final_ = apply_raw_2d(t.final_, *m);
    t.events.push_back({long(t.events.size()) + 1, *m});
  }
  return t;
}

template <typename Scalar>
Trace1D<Scalar> sweep_relax(const HeightDiff1D<Scalar>& d, const SweepPolicy& = {}, long step_limit = -1) {
  if (step_limit < 0) step_limit = default_step_limit(d);
  Trace1D<Scalar> t{d, {}, d};
  for (;;) {
    auto ms = enabled_moves_1d(t.final_);
    if (ms.empty()) break;
    if (long(t.events.size()) >= step_limit) throw StepLimitExceeded<HeightDiff1D<Scalar>, Move1D>(std::move(t));
    t.final_ = apply_move_1d(t.final_, ms.front());
    t.events.push_back({long(t.events.size()) + 1, ms.front()});
  }
  return t;
}

// replays every event with legality checks; throws IllegalMove on the first bad one
template <typename Scalar>
Config2D<Scalar> replay(const Config2D<Scalar>& c, const std::vector<Move2D>& moves) {
  Config2D<Scalar> x = c;
  for (const auto& m : moves) x = apply_move_2d(x, m);
  return x;
}

template <typename Scalar>
HeightDiff1D<Scalar> replay(const HeightDiff1D<Scalar>& d, const std::vector<Move1D>& moves) {
  HeightDiff1D<Scalar> x = d;
  for (const auto& m : moves) x = apply_move_1d(x, m);
  return x;
}

template <typename Config, typename Move>
std::vector<Move> moves_of(const Trace<Config, Move>& t) {
  std::vector<Move> out;
  out.reserve(t.events.size());
  for (const auto& e : t.events) out.push_back(e.move);
  return out;
}

}  // namespace kspm
