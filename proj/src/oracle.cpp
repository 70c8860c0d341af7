#include "kspm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace kspm {

namespace {

// trailing zero differences carry no information
std::vector<int> key_1d(const HeightDiff1D<int>& d) {
  Index n = d.h.size();
  while (n > 1 && d.h(n - 1) == 0) --n;
  return std::vector<int>(d.h.data(), d.h.data() + n);
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ std::size_t(unsigned(x))) * 1099511628211ull;
    return h;
  }
};

}  // namespace

OrbitReport<HeightDiff1D<int>> explore_orbit(const HeightDiff1D<int>& start, Index k, std::size_t state_limit) {
  using Counts = std::vector<long>;
  OrbitReport<HeightDiff1D<int>> rep;
  std::unordered_map<std::vector<int>, char, VecHash> seen;
  std::deque<std::pair<HeightDiff1D<int>, Counts>> q;
  seen.emplace(key_1d(start), 0);
  q.emplace_back(start, Counts{});
  bool any_hit = false;
  while (!q.empty()) {
    auto [d, counts] = std::move(q.front());
    q.pop_front();
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (!counts[s]) continue;
      long& m = rep.max_topples[{Index(s), 0}];
      m = std::max(m, counts[s]);
      if (k > 0 && feeds_column(Index(s), k, d.p)) any_hit = true;
    }
    auto ms = enabled_moves_1d(d);
    if (ms.empty()) {
      rep.stable.push_back(d);
      std::map<std::pair<Index, Index>, long> m;
      for (std::size_t s = 0; s < counts.size(); ++s)
        if (counts[s]) m[{Index(s), 0}] = counts[s];
      rep.stable_topples.push_back(std::move(m));
    }
    for (const auto& m : ms) {
      auto y = apply_move_1d(d, m);
      if (!seen.emplace(key_1d(y), 0).second) continue;
      if (seen.size() > state_limit) {
        rep.truncated = true;
        q.clear();
        break;
      }
      Counts c = counts;
      if (std::size_t(m.site) >= c.size()) c.resize(std::size_t(m.site) + 1, 0);
      ++c[std::size_t(m.site)];
      q.emplace_back(std::move(y), std::move(c));
    }
  }
  rep.states = seen.size();
  rep.verdict = any_hit ? Verdict::Yes : rep.truncated ? Verdict::Unknown : Verdict::No;
  return rep;
}

OrbitReport<Grid> explore_orbit(const Grid& start, Index k, Index l, std::size_t state_limit) {
  using Counts = std::map<std::pair<Index, Index>, long>;
  OrbitReport<Grid> rep;
  std::unordered_map<std::string, char> seen;
  std::deque<std::pair<Grid, Counts>> q;
  seen.emplace(state_key(start), 0);
  q.emplace_back(start, Counts{});
  bool any_hit = false;
  while (!q.empty()) {
    auto [c, counts] = std::move(q.front());
    q.pop_front();
    for (const auto& [site, n] : counts) {
      long& m = rep.max_topples[site];
      m = std::max(m, n);
    }
    if (k >= 0 && c.at(k, l) > start.at(k, l)) any_hit = true;
    auto ms = enabled_moves_2d(c);
    if (ms.empty()) {
      rep.stable.push_back(c);
      rep.stable_topples.push_back(counts);
    }
    for (const auto& m : ms) {
      Grid y = apply_raw_2d(c, m);
      if (!seen.emplace(state_key(y), 0).second) continue;
      if (seen.size() > state_limit) {
        rep.truncated = true;
        q.clear();
        break;
      }
      Counts n = counts;
      ++n[{m.i, m.j}];
      q.emplace_back(std::move(y), std::move(n));
    }
  }
  rep.states = seen.size();
  rep.verdict = any_hit ? Verdict::Yes : rep.truncated ? Verdict::Unknown : Verdict::No;
  return rep;
}

ApInstance1D random_sm_instance(std::mt19937_64& rng, Index n, int p) {
  std::uniform_int_distribution<int> diff(0, p - 1), last(1, p - 1);
  std::bernoulli_distribution critical(0.5);
  std::vector<int> h(static_cast<std::size_t>(n));
  // half the sites sit at p-1 so avalanches travel
  for (auto& v : h) v = critical(rng) ? p - 1 : diff(rng);
  h.back() = last(rng);
  std::vector<int> x(static_cast<std::size_t>(n));
  int acc = 0;
  for (Index i = n - 1; i >= 0; --i) x[std::size_t(i)] = acc += h[std::size_t(i)];
  std::uniform_int_distribution<Index> kd(n + 1, n + p - 1);
  return {Config1D<int>(p, x), kd(rng)};
}

namespace {

// Every maximal schedule ends in a stable state, and in 1D the state fixes the
// toppled set, so the verdicts of all maximal schedules are read off the stable set.
OracleCase examine(const ApInstance1D& inst) {
  OracleCase oc;
  oc.instance = inst;
  auto rep = explore_orbit(add_grain(to_height_diffs(inst.config)), inst.k);
  oc.states = rep.states;
  oc.stable_count = rep.stable.size();
  for (const auto& [site, m] : rep.max_topples) oc.max_topples = std::max(oc.max_topples, m);
  std::vector<int> verdicts;
  for (const auto& counts : rep.stable_topples) {
    int fed = 0;
    for (const auto& [site, n] : counts)
      if (n > 0 && feeds_column(site.first, inst.k, inst.config.p)) fed = 1;
    verdicts.push_back(fed);
  }
  oc.verdicts_agree = std::all_of(verdicts.begin(), verdicts.end(), [&](int v) { return v == verdicts.front(); });
  return oc;
}

OracleReport run_cases(std::size_t samples, Index n_max, const std::vector<int>& p_set, std::uint64_t seed,
                       bool (*judge)(const OracleCase&)) {
  std::mt19937_64 rng(seed);
  OracleReport r;
  for (std::size_t s = 0; s < samples; ++s) {
    int p = p_set[s % p_set.size()];
    Index n = std::uniform_int_distribution<Index>(1, n_max)(rng);
    auto oc = examine(random_sm_instance(rng, n, p));
    oc.pass = judge(oc);
    if (!oc.pass) ++r.failures;
    r.cases.push_back(std::move(oc));
  }
  return r;
}

}  // namespace

OracleReport check_confluence_1d(std::size_t samples, Index n_max, const std::vector<int>& p_set, std::uint64_t seed) {
  return run_cases(samples, n_max, p_set, seed,
                   [](const OracleCase& c) { return c.stable_count == 1 && c.verdicts_agree; });
}

OracleReport check_single_topple(std::size_t samples, Index n_max, const std::vector<int>& p_set, std::uint64_t seed) {
  return run_cases(samples, n_max, p_set, seed, [](const OracleCase& c) { return c.max_topples <= 1; });
}

std::string format_report(const OracleReport& r, const std::string& title) {
  std::ostringstream os;
  std::size_t states = 0;
  for (const auto& c : r.cases) states += c.states;
  os << title << ": " << r.cases.size() << " instances, " << r.failures << " failures, " << states
     << " states explored\n";
  for (const auto& c : r.cases) {
    if (c.pass) continue;
    os << "  fail p=" << c.instance.config.p << " k=" << c.instance.k << " x=";
    for (Index i = 1; i <= c.instance.config.n(); ++i) os << (i > 1 ? "," : "") << c.instance.config[i];
    os << " stable=" << c.stable_count << " agree=" << c.verdicts_agree << " max_topples=" << c.max_topples << "\n";
  }
  return os.str();
}

void for_each_stable_profile(Index n, int p, int h_max, const std::function<void(const Config1D<int>&)>& f) {
  std::vector<int> x(static_cast<std::size_t>(n));
  // fill from the east end: x_n in [1, p-1], then each step west adds [0, p-1]
  std::function<void(Index)> fill = [&](Index i) {
    if (i < 0) {
      f(Config1D<int>(p, x));
      return;
    }
    const int east = i + 1 < n ? x[std::size_t(i + 1)] : 0;
    const int lo = i + 1 < n ? east : 1;
    const int hi = std::min(h_max, east + p - 1);
    for (int v = lo; v <= hi; ++v) {
      x[std::size_t(i)] = v;
      fill(i - 1);
    }
  };
  fill(n - 1);
}

AgreementReport check_fast_decider(Index n_max, const std::vector<int>& p_set, std::size_t random_samples,
                                   std::uint64_t seed) {
  AgreementReport r;
  auto judge = [&](const ApInstance1D& inst, std::size_t& counter) {
    ++counter;
    if (ap_decide_1d_fast(inst) != ap_decide_1d_sim(inst).answer) r.disagreements.push_back(inst);
  };
  for (int p : p_set)
    for (Index n = 1; n <= n_max; ++n)
      for_each_stable_profile(n, p, 2 * p, [&](const Config1D<int>& c) {
        for (Index k = n + 1; k <= n + p - 1; ++k) judge({c, k}, r.exhaustive);
      });
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < random_samples; ++s) {
    int p = p_set[s % p_set.size()];
    Index n = std::uniform_int_distribution<Index>(n_max + 1, 6 * n_max)(rng);
    judge(random_sm_instance(rng, n, p), r.random);
  }
  return r;
}

std::string format_report(const AgreementReport& r) {
  std::ostringstream os;
  os << "fast decider: " << r.exhaustive << " exhaustive and " << r.random << " random instances, "
     << r.disagreements.size() << " disagreements\n";
  for (const auto& inst : r.disagreements) {
    os << "  p=" << inst.config.p << " k=" << inst.k << " x=";
    for (Index i = 1; i <= inst.config.n(); ++i) os << (i > 1 ? "," : "") << inst.config[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace kspm
