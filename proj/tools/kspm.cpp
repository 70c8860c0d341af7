#include "kspm/compiler.hpp"
#include "kspm/oracle.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace kspm;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kUnknown = 2, kStepLimit = 3, kInvalid = 4 };

struct RunConfig {
  std::string config, circuit, assign, target, method, render, out, trace, gadget;
  int p = 0;
  long k = -1, steps = -1;
  std::size_t max_states = 5'000'000, samples = 0;
  std::uint64_t seed = 0;
};

std::pair<Index, Index> parse_cell(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw FormatError(0, "expected i,j but got '" + s + "'");
  try {
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw FormatError(0, "expected i,j but got '" + s + "'");
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

void render(const RunConfig& rc, const ConfigFile& f) {
  if (rc.render.empty()) return;
  if (rc.render == "ascii") {
    std::cout << std::visit([](const auto& x) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, File1D>)
        return render_ascii(x.config);
      else
        return render_ascii(x);
    }, f);
    return;
  }
  const Grid* g = std::get_if<Grid>(&f);
  if (!g) throw FormatError(0, "pgm rendering needs a 2D configuration");
  emit(rc.out.empty() ? "-" : rc.out + ".pgm", render_pgm(*g));
}

int cmd_simulate(const RunConfig& rc) {
  ConfigFile f = parse_config(read_file(rc.config));
  std::string trace;
  ConfigFile final_;
  std::size_t events = 0;
  if (auto* one = std::get_if<File1D>(&f)) {
    auto t = sweep_relax(to_height_diffs(one->config), {}, rc.steps);
    trace = print_trace(t);
    File1D out = *one;
    out.config = from_height_diffs(t.final_);
    final_ = out;
    events = t.size();
  } else {
    auto t = sweep_relax(std::get<Grid>(f), {}, rc.steps);
    trace = print_trace(t);
    final_ = t.final_;
    events = t.size();
  }
  if (!rc.trace.empty()) emit(rc.trace, trace);
  std::string cfg = std::visit([](const auto& x) { return print_config(x); }, final_);
  if (!rc.out.empty()) emit(rc.out, cfg);
  if (rc.trace.empty() && rc.out.empty() && rc.render.empty()) std::cout << trace << cfg;
  render(rc, final_);
  std::cerr << "events " << events << "\n";
  return kTrue;
}

int verdict_exit(bool yes) {
  std::cout << (yes ? "true" : "false") << "\n";
  return yes ? kTrue : kFalse;
}

int cmd_decide(const RunConfig& rc) {
  ConfigFile f = parse_config(read_file(rc.config));
  if (auto* one = std::get_if<File1D>(&f)) {
    if (rc.k < 0) throw InvalidInstance({"1D instances need --k"});
    ApInstance1D inst{one->config, Index(rc.k)};
    const std::string m = rc.method.empty() ? "sim" : rc.method;
    if (m == "sim") {
      auto d = ap_decide_1d_sim(inst);
      if (!rc.trace.empty()) emit(rc.trace, print_trace(d.trace));
      return verdict_exit(d.answer);
    }
    if (m == "fast" || m == "both") {
      if (!kFastDeciderValidated) throw InvalidInstance({"the fast decider is not validated"});
      bool fast = ap_decide_1d_fast(inst);
      if (m == "fast") return verdict_exit(fast);
      bool sim = ap_decide_1d_sim(inst).answer;
      if (fast != sim) {
        std::cout << "unknown (sim=" << sim << " fast=" << fast << ")\n";
        return kUnknown;
      }
      return verdict_exit(sim);
    }
    throw InvalidInstance({"method " + m + " does not apply to 1D instances"});
  }
  if (rc.target.empty()) throw InvalidInstance({"2D instances need --target i,j"});
  auto [k, l] = parse_cell(rc.target);
  ApInstance2D inst{std::get<Grid>(f), k, l};
  const std::string m = rc.method.empty() ? "search" : rc.method;
  if (m == "sweep") {
    auto d = ap_decide_2d_sweep(inst, rc.steps);
    if (!rc.trace.empty()) emit(rc.trace, print_trace(d.trace));
    if (d.answer) return verdict_exit(true);
    std::cout << "false (sweep only, not a proof of absence)\n";
    return kFalse;
  }
  if (m == "search") {
    auto s = ap_decide_2d_search(inst, rc.max_states);
    if (s.verdict == Verdict::Unknown) {
      std::cout << "unknown (state limit " << rc.max_states << " reached)\n";
      return kUnknown;
    }
    if (s.verdict == Verdict::Yes && !rc.trace.empty()) {
      std::vector<TraceLine> t;
      for (std::size_t q = 0; q < s.witness.size(); ++q)
        t.push_back({long(q + 1), s.witness[q].i, s.witness[q].j, s.witness[q].d});
      emit(rc.trace, print_trace(t));
    }
    return verdict_exit(s.verdict == Verdict::Yes);
  }
  if (m == "guided") {
    if (rc.trace.empty()) throw InvalidInstance({"--method guided needs --trace <schedule>"});
    if (auto v = validate_instance(inst); !v.empty()) throw InvalidInstance(v);
    Grid x = inst.config;
    for (const auto& mv : moves_2d(parse_trace(read_file(rc.trace)))) {
      x = apply_move_2d(x, mv);
      if (x.at(k, l) > 0) return verdict_exit(true);
    }
    return verdict_exit(false);
  }
  throw InvalidInstance({"method " + m + " does not apply to 2D instances"});
}

int cmd_compile(const RunConfig& rc) {
  Circuit c = parse_circuit(read_file(rc.circuit));
  Assignment a = parse_assignment(read_file(rc.assign));
  CompiledInstance ci = compile(c, a, rc.p ? rc.p : 2);
  const std::string base = rc.out.empty() ? "compiled" : rc.out;
  std::vector<TraceLine> t;
  for (std::size_t q = 0; q < ci.guided_schedule.size(); ++q)
    t.push_back({long(q + 1), ci.guided_schedule[q].i, ci.guided_schedule[q].j, ci.guided_schedule[q].d});
  write_file(base + ".kspm2", print_config(ci.config));
  write_file(base + ".trace", print_trace(t));
  write_file(base + ".meta", print_sidecar(sidecar(ci, base + ".trace")));
  std::cout << "wrote " << base << ".kspm2 " << base << ".trace " << base << ".meta (target " << ci.k << "," << ci.l
            << ", expected " << ci.expected << ")\n";
  if (!rc.render.empty()) render(rc, ci.config);
  return kTrue;
}

int cmd_verify_gadgets(const RunConfig& rc) {
  const int p = rc.p ? rc.p : 2;
  std::vector<Gadget> gs;
  if (rc.gadget.empty())
    gs = builtin_gadgets(p);
  else
    gs.push_back(find_gadget(p, rc.gadget));
  bool ok = true;
  for (const auto& g : gs) {
    auto r = verify_gadget(g, rc.max_states);
    std::cout << format_report(r);
    ok = ok && r.pass;
  }
  return ok ? kTrue : kFalse;
}

int cmd_confluence(const RunConfig& rc) {
  std::vector<int> ps = rc.p ? std::vector<int>{rc.p} : std::vector<int>{2, 3};
  const std::size_t n = rc.samples ? rc.samples : 200;
  auto c = check_confluence_1d(n, 12, ps, rc.seed);
  auto s = check_single_topple(n, 12, ps, rc.seed);
  std::cout << format_report(c, "confluence") << format_report(s, "single-topple");
  return c.pass() && s.pass() ? kTrue : kFalse;
}

int cmd_endtoend(const RunConfig& rc) {
  EndToEndOptions opt;
  opt.seed = rc.seed;
  opt.max_states = std::min<std::size_t>(rc.max_states, 200'000);
  auto r = run_end_to_end_harness(rc.p ? rc.p : 2, rc.samples ? rc.samples : 200, rc.seed, opt);
  std::cout << format_report(r);
  return r.pass() ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kadanoff sandpile workbench"};
  app.require_subcommand(1);
  RunConfig rc;
  auto methods = CLI::IsMember({"sim", "fast", "both", "sweep", "search", "guided"});

  auto* sim = app.add_subcommand("simulate", "relax a configuration with the sweep policy");
  sim->add_option("--config", rc.config, "KSPM1/KSPM2 file")->required();
  sim->add_option("--steps", rc.steps, "step limit");
  sim->add_option("--trace", rc.trace, "trace output");
  sim->add_option("--out", rc.out, "final configuration output");
  sim->add_option("--render", rc.render)->check(CLI::IsMember({"ascii", "pgm"}));

  auto* dec = app.add_subcommand("decide", "decide the avalanche problem");
  dec->add_option("--config", rc.config)->required();
  dec->add_option("--k", rc.k, "1D target column");
  dec->add_option("--target", rc.target, "2D target cell i,j");
  dec->add_option("--method", rc.method)->check(methods);
  dec->add_option("--steps", rc.steps);
  dec->add_option("--max-states", rc.max_states);
  dec->add_option("--trace", rc.trace, "witness output, or the schedule for guided");

  auto* cmp = app.add_subcommand("compile", "compile a circuit and assignment to a 2D instance");
  cmp->add_option("--circuit", rc.circuit)->required();
  cmp->add_option("--assign", rc.assign)->required();
  cmp->add_option("--p", rc.p);
  cmp->add_option("--out", rc.out, "output prefix");
  cmp->add_option("--render", rc.render)->check(CLI::IsMember({"ascii", "pgm"}));

  auto* vg = app.add_subcommand("verify-gadgets", "check gadget truth tables");
  vg->add_option("--p", rc.p);
  vg->add_option("--gadget", rc.gadget);
  vg->add_option("--max-states", rc.max_states);

  auto* conf = app.add_subcommand("confluence", "1D confluence and single-topple harness");
  conf->add_option("--p", rc.p);
  conf->add_option("--samples", rc.samples);
  conf->add_option("--seed", rc.seed);

  auto* e2e = app.add_subcommand("endtoend", "compile and decide random circuits");
  e2e->add_option("--p", rc.p);
  e2e->add_option("--samples", rc.samples);
  e2e->add_option("--seed", rc.seed);
  e2e->add_option("--max-states", rc.max_states);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }
  try {
    if (*sim) return cmd_simulate(rc);
    if (*dec) return cmd_decide(rc);
    if (*cmp) return cmd_compile(rc);
    if (*vg) return cmd_verify_gadgets(rc);
    if (*conf) return cmd_confluence(rc);
    if (*e2e) return cmd_endtoend(rc);
  } catch (const StepLimitExceeded<Config2D<int>, Move2D>& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStepLimit;
  } catch (const StepLimitExceeded<HeightDiff1D<int>, Move1D>& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStepLimit;
  } catch (const InvalidInstance& e) {
    for (const auto& v : e.violations) std::cerr << "invalid: " << v << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
