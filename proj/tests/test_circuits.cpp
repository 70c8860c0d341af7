#include "fixtures.hpp"

#include <doctest.h>

using namespace kspm;

namespace {
const char* kMux = R"(CIRC v1
input a
input b
input s
ns = NOT s
l = AND a ns
r = AND b s
out = OR l r
output out
)";

Assignment bits(const Circuit& c, unsigned m) {
  Assignment a;
  unsigned t = 0;
  for (const auto& in : c.inputs) a[in] = int((m >> t++) & 1u);
  return a;
}
}  // namespace

TEST_CASE("parse, evaluate and print a circuit") {
  Circuit c = parse_circuit(kMux);
  CHECK(c.inputs.size() == 3);
  CHECK(c.gates.size() == 4);
  CHECK_FALSE(c.monotone());
  CHECK(eval_circuit(c, {{"a", 1}, {"b", 0}, {"s", 0}}) == 1);
  CHECK(eval_circuit(c, {{"a", 1}, {"b", 0}, {"s", 1}}) == 0);
  CHECK(parse_circuit(print_circuit(c)) == c);
}

TEST_CASE("wide gates split into 2-input chains") {
  Circuit c = parse_circuit("CIRC v1\ninput a\ninput b\ninput d\ng = AND a b d\noutput g\n");
  CHECK(c.gates.size() == 2);
  for (const auto& g : c.gates) CHECK(g.ops.size() == 2);
  CHECK(eval_circuit(c, {{"a", 1}, {"b", 1}, {"d", 1}}) == 1);
  CHECK(eval_circuit(c, {{"a", 1}, {"b", 0}, {"d", 1}}) == 0);
}

TEST_CASE("circuit errors") {
  CHECK_THROWS_AS(parse_circuit("CIRC v1\ninput a\ng = XOR a a\noutput g\n"), ParseError);
  CHECK_THROWS_AS(parse_circuit("CIRC v1\ninput a\ng = AND a h\nh = AND g a\noutput g\n"), CycleError);
  CHECK_THROWS_AS(parse_circuit("CIRC v1\ninput a\ng = AND a zz\noutput g\n"), UndefinedOperand);
  CHECK_THROWS_AS(parse_assignment("a=2\n"), ParseError);
  CHECK_THROWS_AS(parse_assignment("a=1\na=0\n"), ParseError);
}

TEST_CASE("assignments round-trip") {
  Assignment a{{"a", 1}, {"b", 0}};
  CHECK(parse_assignment(print_assignment(a)) == a);
}

TEST_CASE("property: negation elimination preserves the value") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    Circuit c = random_circuit(rng, 2 + t % 4, 1 + t % 12, true);
    MonotoneForm m = eliminate_negations(c);
    REQUIRE(m.circuit.monotone());
    for (unsigned bitsv = 0; bitsv < (1u << c.inputs.size()); ++bitsv) {
      Assignment a = bits(c, bitsv);
      REQUIRE(eval_circuit(m.circuit, m.lift(a)) == eval_circuit(c, a));
    }
  }
}

TEST_CASE("random circuits are seed-deterministic and monotone when asked") {
  std::mt19937_64 r1(3), r2(3);
  for (int t = 0; t < 20; ++t) {
    Circuit a = random_circuit(r1, 3, 8, false), b = random_circuit(r2, 3, 8, false);
    CHECK(a == b);
    CHECK(circuit_hash(a) == circuit_hash(b));
    CHECK(a.monotone());
    CHECK(a.gates.size() == 8);
  }
}
