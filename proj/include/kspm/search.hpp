#pragma once

#include "kspm/dynamics.hpp"

#include <deque>
#include <string>
#include <unordered_map>

namespace kspm {

// configuration identity: content over the nonzero support, padding ignored
template <typename Scalar>
std::string state_key(const Config2D<Scalar>& c) {
  auto [r, k] = c.support_extent();
  std::string s;
  s.reserve(std::size_t(r * k) * sizeof(Scalar) + 2 * sizeof(Index));
  s.append(reinterpret_cast<const char*>(&r), sizeof r);
  s.append(reinterpret_cast<const char*>(&k), sizeof k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < r; ++j) {
      Scalar v = c.at(i, j);
      s.append(reinterpret_cast<const char*>(&v), sizeof v);
    }
  return s;
}

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) { return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown"; }

struct SearchResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Move2D> witness;
  std::size_t states = 0;
};

// Exhaustive reachability over legal moves, depth first, H before V, west to east,
// north to south. Stops at the first configuration satisfying hit.
template <typename Scalar, typename Hit>
SearchResult search_2d(const Config2D<Scalar>& start, Hit&& hit, std::size_t max_states) {
  struct Node {
    long parent;
    Move2D move;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, long> seen;
  std::vector<std::pair<long, Config2D<Scalar>>> stack;

  auto witness = [&](long id) {
    std::vector<Move2D> w;
    for (; nodes[std::size_t(id)].parent >= 0; id = nodes[std::size_t(id)].parent) w.push_back(nodes[std::size_t(id)].move);
    return std::vector<Move2D>(w.rbegin(), w.rend());
  };

  SearchResult res;
  nodes.push_back({-1, {}});
  seen.emplace(state_key(start), 0);
  if (hit(start)) {
    res.verdict = Verdict::Yes;
    res.states = 1;
    return res;
  }
  stack.emplace_back(0, start);
  while (!stack.empty()) {
    auto [id, c] = std::move(stack.back());
    stack.pop_back();
    std::vector<Move2D> ms = enabled_moves_2d(c);
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) {
      Config2D<Scalar> y = apply_raw_2d(c, *it);
      auto [pos, fresh] = seen.emplace(state_key(y), long(nodes.size()));
      if (!fresh) continue;
      nodes.push_back({id, *it});
      long nid = long(nodes.size()) - 1;
      if (hit(y)) {
        res.verdict = Verdict::Yes;
        res.witness = witness(nid);
        res.states = seen.size();
        return res;
      }
      if (seen.size() > max_states) {
        res.verdict = Verdict::Unknown;
        res.states = seen.size();
        return res;
      }
      stack.emplace_back(nid, std::move(y));
    }
  }
  res.verdict = Verdict::No;
  res.states = seen.size();
  return res;
}

// Breadth-first visit of every configuration reachable by legal moves.
// visit(config, moves_enabled) is called once per state. Returns false when
// max_states was exceeded before the frontier emptied.
template <typename Scalar, typename Visit>
bool explore_2d(const Config2D<Scalar>& start, Visit&& visit, std::size_t max_states, std::size_t* states = nullptr) {
  std::unordered_map<std::string, char> seen;
  std::deque<Config2D<Scalar>> q;
  seen.emplace(state_key(start), 0);
  q.push_back(start);
  bool complete = true;
  while (!q.empty()) {
    Config2D<Scalar> c = std::move(q.front());
    q.pop_front();
    std::vector<Move2D> ms = enabled_moves_2d(c);
    visit(c, ms);
    for (const auto& m : ms) {
      Config2D<Scalar> y = apply_raw_2d(c, m);
      if (!seen.emplace(state_key(y), 0).second) continue;
      if (seen.size() > max_states) {
        complete = false;
        q.clear();
        break;
      }
      q.push_back(std::move(y));
    }
  }
  if (states) *states = seen.size();
  return complete;
}

}  // namespace kspm
