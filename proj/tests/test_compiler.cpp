#include "fixtures.hpp"

#include <doctest.h>

using namespace kspm;

namespace {
Circuit and2() { return parse_circuit("CIRC v1\ninput a\ninput b\ng = AND a b\noutput g\n"); }
Circuit ident() { return parse_circuit("CIRC v1\ninput a\noutput a\n"); }
}  // namespace

TEST_CASE("identity circuit compiles to a plain wire that the sweep decides true") {
  for (int p : {2, 3}) {
    auto ci = compile(ident(), {{"a", 1}}, p);
    CHECK(ci.expected == 1);
    CHECK(conforms_to_layout(ci));
    CHECK(validate_instance(ci.instance()).empty());
    CHECK(ap_decide_2d_sweep(ci.instance()).answer);
    Grid after = replay(ci.config, ci.guided_schedule);
    CHECK(after.at(ci.k, ci.l) > 0);
  }
}

TEST_CASE("AND with one false input never fires under exhaustive search") {
  for (int p : {2, 3}) {
    auto ci = compile(and2(), {{"a", 1}, {"b", 0}}, p);
    auto s = ap_decide_2d_search(ci.instance());
    CHECK(s.verdict == Verdict::No);
  }
}

TEST_CASE("all-zero assignment leaves the target untouched") {
  for (int p : {2, 3}) {
    auto ci = compile(and2(), {{"a", 0}, {"b", 0}}, p);
    CHECK(ci.expected == 0);
    CHECK(ap_decide_2d_search(ci.instance()).verdict == Verdict::No);
  }
}

TEST_CASE("the compiled background is quiescent without the start grain") {
  for (int p : {2, 3}) {
    auto ci = compile(and2(), {{"a", 1}, {"b", 1}}, p);
    Grid bare = ci.config;
    bare.ref(ci.start_i, ci.start_j) -= 1;
    CHECK(enabled_moves_2d(bare).empty());
    CHECK(is_stable_2d(bare));
  }
}

TEST_CASE("and2 at p=3: every assignment agrees with the circuit") {
  for (int m = 0; m < 4; ++m) {
    Assignment a{{"a", m & 1}, {"b", m >> 1}};
    auto r = verify_end_to_end(and2(), a, 3);
    CHECK(r.decided == (m == 3));
    CHECK(r.mode == (m == 3 ? CheckMode::Guided : CheckMode::Exhaustive));
  }
}

TEST_CASE("negated literals compile through the monotone rewrite") {
  Circuit c = parse_circuit("CIRC v1\ninput a\ninput b\nnb = NOT b\ng = AND a nb\noutput g\n");
  for (int m = 0; m < 4; ++m) {
    Assignment a{{"a", m & 1}, {"b", m >> 1}};
    CHECK(verify_end_to_end(c, a, 2).decided == eval_circuit(c, a));
  }
}

TEST_CASE("OR has no verified merge and is reported as a catalog gap") {
  Circuit c = parse_circuit("CIRC v1\ninput a\ninput b\ng = OR a b\noutput g\n");
  CHECK_THROWS_AS(compile(c, {{"a", 1}, {"b", 0}}, 2), CatalogError);
  CHECK_THROWS_AS(compile(c, {{"a", 1}, {"b", 0}}, 3), CatalogError);
}

TEST_CASE("compile errors") {
  CHECK_THROWS_AS(compile(and2(), {{"a", 1}, {"b", 1}}, 4), UnsupportedP);
  CompileOptions tight;
  tight.leaf_cap = 1;
  CHECK_THROWS_AS(compile(and2(), {{"a", 1}, {"b", 1}}, 2, tight), PlacementError);
}

TEST_CASE("compilation is deterministic and the sidecar names the target") {
  auto a = compile(and2(), {{"a", 1}, {"b", 1}}, 2);
  auto b = compile(and2(), {{"a", 1}, {"b", 1}}, 2);
  CHECK(a == b);
  CHECK(print_config(a.config) == print_config(b.config));
  auto s = sidecar(a, "x.trace");
  CHECK(s.at("target") == std::to_string(a.k) + ",0");
  CHECK(s.at("schedule") == "x.trace");
  CHECK(s.at("lane") == "1111");
  CHECK(parse_sidecar(print_sidecar(s)) == s);
}

TEST_CASE("property: guided replay is legal and fires exactly for true AND chains") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 5;
    std::string text = "CIRC v1\n";
    for (int q = 0; q < n; ++q) text += "input x" + std::to_string(q) + "\n";
    if (n == 1) {
      text += "output x0\n";
    } else {
      text += "g = AND";
      for (int q = 0; q < n; ++q) text += " x" + std::to_string(q);
      text += "\noutput g\n";
    }
    Circuit c = parse_circuit(text);
    Assignment a;
    for (const auto& in : c.inputs) a[in] = std::bernoulli_distribution(0.8)(rng);
    int p = 2 + t % 2;
    auto ci = compile(c, a, p);
    Grid after = replay(ci.config, ci.guided_schedule);
    CHECK((after.at(ci.k, ci.l) > 0) == (eval_circuit(c, a) == 1));
    CHECK(conforms_to_layout(ci));
  }
}

TEST_CASE("random schedules on a false instance never fire") {
  auto ci = compile(and2(), {{"a", 0}, {"b", 1}}, 2);
  std::mt19937_64 rng(0);
  for (int t = 0; t < 16; ++t) CHECK_FALSE(random_schedule_hits(ci.instance(), rng));
}

TEST_CASE("the sweep relaxation of a true AND chain matches the guided replay") {
  for (int p : {2, 3})
    for (int n = 1; n <= 4; ++n) {
      std::string text = "CIRC v1\n", ops;
      Assignment a;
      for (int q = 0; q < n; ++q) {
        text += "input x" + std::to_string(q) + "\n";
        ops += " x" + std::to_string(q);
        a["x" + std::to_string(q)] = 1;
      }
      text += n == 1 ? "output x0\n" : "g = AND" + ops + "\noutput g\n";
      auto ci = compile(parse_circuit(text), a, p);
      auto tr = sweep_relax(ci.config);
      Grid guided = replay(ci.config, ci.guided_schedule);
      CHECK(tr.final_.same_content(guided));
      CHECK(enabled_moves_2d(guided).empty());
    }
}
