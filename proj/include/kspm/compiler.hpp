#pragma once

#include "kspm/circuits.hpp"
#include "kspm/deciders.hpp"
#include "kspm/gadgets.hpp"
#include "kspm/io.hpp"

namespace kspm {

struct PlacementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One stretch of the signal lane. Open segments carry the wire profile, closed
// ones are bare background and stop the token.
struct Segment {
  std::string label;  // "source", "tail", or the monotone input feeding this leaf
  Index i0 = 0, i1 = 0;
  bool open = true;
  bool operator==(const Segment&) const = default;
};

// Layout: a staircase background of height K, a lane along row 0 running east
// from the start cell to the target. AND is series composition of leaves.
struct CompiledInstance {
  int p = 2;
  Grid config;  // background, lane and start grain
  Index k = 0, l = 0;
  Index start_i = 0, start_j = 0;
  Index K = 0;
  std::vector<Segment> segments;
  std::map<std::string, std::pair<Index, Index>> port_map;
  std::vector<Move2D> guided_schedule;
  int expected = 0;  // circuit value under the assignment

  ApInstance2D instance() const { return {config, k, l}; }
  bool operator==(const CompiledInstance&) const = default;
};

struct CompileOptions {
  Index leaf_cap = 512;  // leaves of the unfolded formula
  Index leaf_len = 4;    // lane cells per leaf, even
};

// Negations are pushed to the inputs first, so any circuit is accepted.
// OR needs a merge gadget, and none verifies on these backgrounds: CatalogError.
CompiledInstance compile(const Circuit& c, const Assignment& a, int p, const CompileOptions& opt = {});

// the grid is exactly the staircase plus lane described by p and the segments
bool conforms_to_layout(const CompiledInstance& ci);

Sidecar sidecar(const CompiledInstance& ci, const std::string& schedule_ref);

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CheckMode { Guided, Exhaustive, Sampled };
const char* mode_name(CheckMode m);

struct EndToEndReport {
  int expected = 0;
  int decided = 0;
  CheckMode mode = CheckMode::Guided;
  std::size_t states = 0;
  std::size_t samples = 0;
  Index rows = 0, cols = 0;
  std::string detail;
};

struct EndToEndOptions {
  std::size_t max_states = 200'000;
  std::size_t random_schedules = 64;
  std::uint64_t seed = 0;
};

// compile, then decide; throws Mismatch when the decision disagrees with eval_circuit
EndToEndReport verify_end_to_end(const Circuit& c, const Assignment& a, int p, const EndToEndOptions& opt = {});

struct HarnessCase {
  std::string label;
  int expected = 0;
  int decided = -1;  // -1 when compilation or checking failed
  std::string mode;
  std::string error;
  bool pass = false;
};

struct HarnessReport {
  int p = 2;
  std::vector<HarnessCase> cases;
  std::size_t failures = 0;
  bool pass() const { return failures == 0; }
};

// every 2-input AND/OR with all four assignments, then seeded random monotone
// circuits of at most 15 gates with random assignments
HarnessReport run_end_to_end_harness(int p, std::size_t random_circuits, std::uint64_t seed = 0,
                                     const EndToEndOptions& opt = {});
std::string format_report(const HarnessReport& r);

// uniformly random legal schedule until stable or step_limit; true when the target fires
bool random_schedule_hits(const ApInstance2D& inst, std::mt19937_64& rng, long step_limit = -1);

}  // namespace kspm
