#pragma once

#include "kspm/search.hpp"

namespace kspm {

struct InvalidInstance : std::runtime_error {
  std::vector<std::string> violations;
  explicit InvalidInstance(std::vector<std::string> v);
};

// config is the stable pre-grain profile; the decider adds the grain at column 1
struct ApInstance1D {
  Config1D<int> config;
  Index k = 1;
};

struct ApInstance2D {
  Grid config;
  Index k = 0, l = 0;
  long Q() const { return sum_height_diffs(config); }
};

// n = last column holding a grain (at least 1)
Index support_n(const Config1D<int>& c);
// n = larger side of the nonzero support's bounding box
Index support_n(const Grid& c);

std::vector<std::string> validate_instance(const ApInstance1D& inst);
std::vector<std::string> validate_instance(const ApInstance2D& inst);

struct Decision1D {
  bool answer = false;
  Trace1D<int> trace;
};

struct Decision2D {
  bool answer = false;
  Trace2D<int> trace;
};

Decision1D ap_decide_1d_sim(const ApInstance1D& inst);

// Chain characterization of the toppled set; exact, checked against the simulation.
bool ap_decide_1d_fast(const ApInstance1D& inst);

// True when the last exhaustive agreement run passed; gates --method fast.
inline constexpr bool kFastDeciderValidated = true;

// One-sided: a false answer is not a proof of absence.
Decision2D ap_decide_2d_sweep(const ApInstance2D& inst, long step_limit = -1);

SearchResult ap_decide_2d_search(const ApInstance2D& inst, std::size_t max_states = 5'000'000);

// column k gains a grain when site i topples iff i < k <= i+p-1
inline bool feeds_column(Index site, Index k, int p) { return site < k && k <= site + p - 1; }

}  // namespace kspm
