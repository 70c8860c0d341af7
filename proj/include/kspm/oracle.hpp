#pragma once

#include "kspm/deciders.hpp"

#include <functional>
#include <map>
#include <random>

namespace kspm {

// Everything reachable from one start state by legal moves.
template <typename Config>
struct OrbitReport {
  std::size_t states = 0;
  std::vector<Config> stable;           // reachable states with no enabled move
  std::vector<std::map<std::pair<Index, Index>, long>> stable_topples;  // counts reaching each
  std::map<std::pair<Index, Index>, long> max_topples;  // site -> largest count seen
  Verdict verdict = Verdict::Unknown;   // some reachable state satisfies the target
  bool truncated = false;
};

// 1D: the topple-count vector is a function of the state, so max_topples is exact
// over every schedule. Site keys are (i, 0). The target is column k; a state hits
// when some toppled site feeds k (k <= 0 disables the target).
OrbitReport<HeightDiff1D<int>> explore_orbit(const HeightDiff1D<int>& start, Index k = 0,
                                             std::size_t state_limit = 5'000'000);

// 2D: counts are taken along the breadth-first discovery tree. The target is a
// cell (k, l) gaining a grain; k < 0 disables it.
OrbitReport<Grid> explore_orbit(const Grid& start, Index k = -1, Index l = -1, std::size_t state_limit = 5'000'000);

// random stable monotone profile with last nonzero column n, biased toward
// differences of p-1, plus a target k in (n, n+p-1]
ApInstance1D random_sm_instance(std::mt19937_64& rng, Index n, int p);

struct OracleCase {
  ApInstance1D instance;
  std::size_t states = 0;
  std::size_t stable_count = 0;
  bool verdicts_agree = true;
  long max_topples = 0;
  bool pass = false;
};

struct OracleReport {
  std::vector<OracleCase> cases;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

// unique stable state and schedule-independent AP verdict, per sampled instance
OracleReport check_confluence_1d(std::size_t samples, Index n_max, const std::vector<int>& p_set, std::uint64_t seed = 0);

// no site topples twice along any maximal schedule
OracleReport check_single_topple(std::size_t samples, Index n_max = 12, const std::vector<int>& p_set = {2, 3},
                                 std::uint64_t seed = 0);

std::string format_report(const OracleReport& r, const std::string& title);

// every stable monotone profile whose last nonzero column is n and whose
// heights stay at or below h_max
void for_each_stable_profile(Index n, int p, int h_max, const std::function<void(const Config1D<int>&)>& f);

struct AgreementReport {
  std::size_t exhaustive = 0, random = 0;
  std::vector<ApInstance1D> disagreements;
  bool pass() const { return disagreements.empty(); }
};

// fast vs simulated 1D decider: every profile with n <= n_max, p in p_set,
// heights <= 2p and every legal k, then random_samples larger random instances
AgreementReport check_fast_decider(Index n_max, const std::vector<int>& p_set, std::size_t random_samples,
                                   std::uint64_t seed = 0);
std::string format_report(const AgreementReport& r);

}  // namespace kspm
