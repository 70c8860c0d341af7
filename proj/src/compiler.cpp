#include "kspm/compiler.hpp"

#include <functional>
#include <sstream>

namespace kspm {

namespace {

struct Leaf {
  std::string input;
  int value = 0;
};

// series decomposition of the monotone formula; OR has no verified merge
std::vector<Leaf> unfold(const Circuit& m, const Assignment& a, Index cap) {
  std::vector<Leaf> out;
  std::function<void(const std::string&)> walk = [&](const std::string& node) {
    if (m.is_input(node)) {
      if (Index(out.size()) >= cap)
        throw PlacementError("unfolded formula exceeds " + std::to_string(cap) + " leaves");
      out.push_back({node, a.at(node) ? 1 : 0});
      return;
    }
    const Gate* g = m.gate(node);
    if (!g) throw PlacementError("undefined node " + node);
    if (g->kind == GateKind::NOT) throw PlacementError("negation left after monotone rewrite at " + node);
    if (g->kind == GateKind::OR && g->ops.size() > 1)
      throw CatalogError("gate " + node + ": OR needs a merge gadget, and none is verified on this background");
    for (const auto& op : g->ops) walk(op);
  };
  walk(m.output);
  return out;
}

Index target_col(int p, Index m) { return p == 3 ? m - 1 : m; }

const Segment* segment_at(const std::vector<Segment>& segs, Index i) {
  for (const auto& s : segs)
    if (s.i0 <= i && i < s.i1) return &s;
  return nullptr;
}

// p=3: plane K-i-j, lane cells at odd i lowered by one inside open segments.
// p=2: min(x_i, K-j) where x drops by one per lane cell except at each closed
// segment's first cell.
Grid build(int p, const std::vector<Segment>& segs, Index& K) {
  const Index m = segs.back().i1;
  if (p == 3) {
    K = m;
    Grid g(p, K + 1, m + 1);
    for (Index j = 0; j <= K; ++j)
      for (Index i = 0; i <= m; ++i) {
        Index v = K - i - j;
        if (j == 0 && i % 2 == 1) {
          const Segment* s = segment_at(segs, i);
          if (s && s->open) --v;
        }
        g.ref(i, j) = int(std::max<Index>(0, v));
      }
    return g;
  }
  std::vector<Index> x(std::size_t(m + 1), 0);
  K = 0;
  for (Index i = m - 1; i >= 0; --i) {
    const Segment* s = segment_at(segs, i);
    const bool flat = s && !s->open && s->i0 == i;
    x[std::size_t(i)] = x[std::size_t(i + 1)] + (flat ? 0 : 1);
  }
  K = x[0];
  Grid g(p, K + 1, m + 1);
  for (Index j = 0; j <= K; ++j)
    for (Index i = 0; i <= m; ++i) g.ref(i, j) = int(std::max<Index>(0, std::min(x[std::size_t(i)], K - j)));
  return g;
}

}  // namespace

CompiledInstance compile(const Circuit& c, const Assignment& a, int p, const CompileOptions& opt) {
  if (p != 2 && p != 3) throw UnsupportedP("no layout for p=" + std::to_string(p));
  if (opt.leaf_len < 2 || opt.leaf_len % 2) throw PlacementError("leaf length must be even and at least 2");
  MonotoneForm mf = eliminate_negations(c);
  Assignment ma = mf.lift(a);
  std::vector<Leaf> leaves = unfold(mf.circuit, ma, opt.leaf_cap);

  CompiledInstance ci;
  ci.p = p;
  ci.expected = eval_circuit(c, a);
  Index at = 0;
  ci.segments.push_back({"source", 0, 2, true});
  at = 2;
  for (std::size_t t = 0; t < leaves.size(); ++t) {
    ci.segments.push_back({leaves[t].input, at, at + opt.leaf_len, leaves[t].value == 1});
    ci.port_map["leaf" + std::to_string(t) + "." + leaves[t].input] = {at, 0};
    at += opt.leaf_len;
  }
  ci.segments.push_back({"tail", at, at + 2, true});
  const Index m = at + 2;

  ci.config = build(p, ci.segments, ci.K);
  ci.k = target_col(p, m);
  ci.l = 0;
  ci.start_i = p == 3 ? 0 : 1;
  ci.start_j = 0;
  ci.port_map["start"] = {ci.start_i, ci.start_j};
  ci.port_map["out"] = {ci.k, ci.l};

  // the token walks east until the first closed segment
  Index stop = m;
  for (const auto& s : ci.segments)
    if (!s.open) {
      stop = s.i0;
      break;
    }
  const Index last = p == 3 ? m - 2 : m - 1;
  for (Index i = ci.start_i; i <= last && i < stop; i += p - 1) ci.guided_schedule.push_back({i, 0, Dir::H});

  if (!is_monotone_2d(ci.config)) throw PlacementError("layout is not monotone");
  if (auto v = validate_instance(ApInstance2D{ci.config, ci.k, ci.l}); !v.empty())
    throw PlacementError("layout violates the instance rules: " + v.front());
  ci.config.ref(ci.start_i, ci.start_j) += 1;
  return ci;
}

bool conforms_to_layout(const CompiledInstance& ci) {
  if (ci.segments.empty()) return false;
  Index K = 0;
  Grid g = build(ci.p, ci.segments, K);
  g.ref(ci.start_i, ci.start_j) += 1;
  return K == ci.K && g.same_content(ci.config) && is_monotone_2d(ci.config);
}

Sidecar sidecar(const CompiledInstance& ci, const std::string& schedule_ref) {
  Sidecar s;
  auto cell = [](Index i, Index j) { return std::to_string(i) + "," + std::to_string(j); };
  s["p"] = std::to_string(ci.p);
  s["n"] = std::to_string(support_n(ci.config));
  s["Q"] = std::to_string(sum_height_diffs(ci.config));
  s["K"] = std::to_string(ci.K);
  s["target"] = cell(ci.k, ci.l);
  s["start"] = cell(ci.start_i, ci.start_j);
  s["expected"] = std::to_string(ci.expected);
  s["schedule"] = schedule_ref;
  s["schedule_moves"] = std::to_string(ci.guided_schedule.size());
  std::string lane;
  for (const auto& seg : ci.segments) lane += seg.open ? '1' : '0';
  s["lane"] = lane;
  for (const auto& [name, ij] : ci.port_map) s["port." + name] = cell(ij.first, ij.second);
  return s;
}

const char* mode_name(CheckMode m) {
  return m == CheckMode::Guided ? "guided" : m == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

bool random_schedule_hits(const ApInstance2D& inst, std::mt19937_64& rng, long step_limit) {
  Grid x = inst.config;
  if (step_limit < 0) step_limit = default_step_limit(x);
  for (long t = 0; t < step_limit; ++t) {
    auto ms = enabled_moves_2d(x);
    if (ms.empty()) return false;
    x = apply_raw_2d(x, ms[std::uniform_int_distribution<std::size_t>(0, ms.size() - 1)(rng)]);
    if (x.at(inst.k, inst.l) > 0) return true;
  }
  return false;
}

EndToEndReport verify_end_to_end(const Circuit& c, const Assignment& a, int p, const EndToEndOptions& opt) {
  CompiledInstance ci = compile(c, a, p);
  ApInstance2D inst = ci.instance();
  EndToEndReport r;
  r.expected = eval_circuit(c, a);
  r.rows = ci.config.rows();
  r.cols = ci.config.cols();
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << why << "\ncircuit:\n" << print_circuit(c) << "assignment: " << print_assignment(a);
    throw Mismatch(os.str());
  };

  Grid after;
  try {
    after = replay(inst.config, ci.guided_schedule);
  } catch (const IllegalMove& e) {
    fail(std::string("guided schedule is not legal: ") + e.what());
  }
  const bool guided_fires = after.at(inst.k, inst.l) > 0;

  if (r.expected == 1) {
    r.mode = CheckMode::Guided;
    if (!guided_fires) fail("guided schedule does not reach the target");
    if (ap_decide_2d_sweep(inst).answer) {
      r.detail = "guided and sweep";
    } else {
      auto s = ap_decide_2d_search(inst, opt.max_states);
      r.states = s.states;
      if (s.verdict != Verdict::Yes) fail("guided schedule fires but search does not confirm");
      r.detail = "guided and search";
    }
    r.decided = 1;
    return r;
  }

  if (guided_fires) fail("guided schedule fires on a false circuit");
  auto s = ap_decide_2d_search(inst, opt.max_states);
  r.states = s.states;
  if (s.verdict == Verdict::Yes) {
    r.decided = 1;
    fail("search reaches the target on a false circuit");
  }
  if (s.verdict == Verdict::No) {
    r.mode = CheckMode::Exhaustive;
    r.detail = "reachable set exhausted";
    return r;
  }
  r.mode = CheckMode::Sampled;
  if (ap_decide_2d_sweep(inst).answer) {
    r.decided = 1;
    fail("sweep reaches the target on a false circuit");
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.random_schedules; ++t, ++r.samples)
    if (random_schedule_hits(inst, rng)) {
      r.decided = 1;
      fail("random schedule " + std::to_string(t) + " reaches the target on a false circuit");
    }
  r.detail = "sweep and " + std::to_string(r.samples) + " random schedules";
  return r;
}

}  // namespace kspm

namespace kspm {

namespace {

HarnessCase run_case(const std::string& label, const Circuit& c, const Assignment& a, int p,
                     const EndToEndOptions& opt) {
  HarnessCase hc;
  hc.label = label;
  hc.expected = eval_circuit(c, a);
  try {
    auto r = verify_end_to_end(c, a, p, opt);
    hc.decided = r.decided;
    hc.mode = mode_name(r.mode);
    hc.pass = true;
  } catch (const std::exception& e) {
    std::string w = e.what();
    hc.error = w.substr(0, w.find('\n'));
  }
  return hc;
}

}  // namespace

HarnessReport run_end_to_end_harness(int p, std::size_t random_circuits, std::uint64_t seed,
                                     const EndToEndOptions& opt) {
  HarnessReport rep;
  rep.p = p;
  for (const char* kind : {"AND", "OR"}) {
    Circuit c = parse_circuit(std::string("CIRC v1\ninput a\ninput b\ng = ") + kind + " a b\noutput g\n");
    for (int m = 0; m < 4; ++m) {
      Assignment a{{"a", m & 1}, {"b", (m >> 1) & 1}};
      rep.cases.push_back(run_case(std::string(kind) + " a=" + std::to_string(m & 1) + " b=" + std::to_string(m >> 1), c,
                                   a, p, opt));
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < random_circuits; ++t) {
    int n = std::uniform_int_distribution<int>(2, 5)(rng);
    int g = std::uniform_int_distribution<int>(1, 15)(rng);
    Circuit c = random_circuit(rng, n, g, false);
    Assignment a;
    for (const auto& in : c.inputs) a[in] = std::uniform_int_distribution<int>(0, 1)(rng);
    std::ostringstream label;
    label << "random#" << t << " inputs=" << n << " gates=" << g;
    rep.cases.push_back(run_case(label.str(), c, a, p, opt));
  }
  for (const auto& hc : rep.cases)
    if (!hc.pass) ++rep.failures;
  return rep;
}

std::string format_report(const HarnessReport& r) {
  std::map<std::string, std::size_t> modes;
  for (const auto& hc : r.cases)
    if (hc.pass) ++modes[hc.mode];
  std::ostringstream os;
  os << "endtoend p=" << r.p << ": " << r.cases.size() << " cases, " << r.cases.size() - r.failures << " agree, "
     << r.failures << " failures";
  for (const auto& [m, n] : modes) os << ", " << m << "=" << n;
  os << "\n";
  for (const auto& hc : r.cases) {
    os << "  " << (hc.pass ? "ok   " : "FAIL ") << hc.label << " expected=" << hc.expected;
    if (hc.pass)
      os << " decided=" << hc.decided << " mode=" << hc.mode;
    else
      os << " error=" << hc.error;
    os << "\n";
  }
  return os.str();
}

}  // namespace kspm
