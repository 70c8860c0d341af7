#include "fixtures.hpp"
#include "kspm/oracle.hpp"

#include <doctest.h>

using namespace kspm;

TEST_CASE("catalogs parse, print and re-parse") {
  for (int p : {2, 3}) {
    const auto& gs = builtin_gadgets(p);
    CHECK(gs.size() >= 6);
    CHECK(parse_catalog(print_catalog(gs)) == gs);
    for (const auto& g : gs) {
      CHECK(g.p == p);
      CHECK(is_monotone_2d(g.patch));
      CHECK(enabled_moves_2d(g.patch).empty());
      CHECK_FALSE(g.inputs().empty());
      CHECK_FALSE(g.outputs().empty());
    }
  }
  CHECK_THROWS_AS(builtin_gadgets(4), UnsupportedP);
  CHECK_THROWS_AS(find_gadget(2, "nand"), CatalogError);
}

TEST_CASE("catalog syntax errors carry a reason") {
  CHECK_THROWS_AS(parse_catalog("GADGET w p=2 rows=1 cols=2\n1 0\nport a sideways H 0 0\n"), CatalogError);
  CHECK_THROWS_AS(parse_catalog("GADGET w p=2 rows=2 cols=2\n1 0\n"), CatalogError);
  CHECK_THROWS_AS(parse_catalog("GADGET w p=2 rows=1 cols=2\n1 0\nport a in H 5 0\n"), CatalogError);
}

TEST_CASE("declared semantics by family") {
  const auto& and2 = find_gadget(3, "and2");
  CHECK(and2.semantics({1, 1}) == std::vector<int>{1});
  CHECK(and2.semantics({1, 0}) == std::vector<int>{0});
  const auto& or2 = find_gadget(2, "or2");
  CHECK(or2.semantics({0, 1}) == std::vector<int>{1});
  const auto& fan = find_gadget(2, "fanout2");
  CHECK(fan.semantics({1}) == std::vector<int>{1, 1});
}

TEST_CASE("p=2 wire, corner, fanout2 and or2 verify") {
  for (const char* name : {"wire_h", "wire_v", "corner_hv", "corner_vh", "fanout2", "or2"}) {
    auto r = verify_gadget(find_gadget(2, name));
    INFO(format_report(r));
    CHECK(r.pass);
    CHECK(r.quiescent);
  }
}

TEST_CASE("p=3 catalog verifies, and2 included") {
  for (const auto& g : builtin_gadgets(3)) {
    auto r = verify_gadget(g);
    INFO(format_report(r));
    CHECK(r.pass);
    for (const auto& c : r.cases)
      for (std::size_t k = 0; k < c.expected.size(); ++k)
        if (!c.expected[k]) CHECK(c.exhausted);
  }
}

TEST_CASE("and2 with one input: the output count never changes") {
  const auto& g = find_gadget(3, "and2");
  Grid start = g.patch;
  const auto ins = g.inputs();
  start.ref(ins[0].i, ins[0].j) += 1;
  const auto out = g.outputs()[0];
  const int base = start.at(out.i, out.j);
  bool constant = true;
  std::size_t states = 0;
  REQUIRE(explore_2d(start, [&](const Grid& c, const std::vector<Move2D>&) { constant &= c.at(out.i, out.j) == base; },
                     5'000'000, &states));
  CHECK(constant);
  CHECK(explore_orbit(start, out.i, out.j).verdict == Verdict::No);
}

TEST_CASE("instantiate lifts the patch and closes monotonicity") {
  Layout lay(2, 1, 1);
  const auto& w = find_gadget(2, "wire_h");
  instantiate(w, w.cols(), 0, lay, "b");
  instantiate(w, 0, 0, lay, "a");
  CHECK(is_monotone_2d(lay.config));
  CHECK(lay.ports.count("a.in"));
  CHECK(lay.ports.count("b.out"));
  CHECK_THROWS_AS(instantiate(w, 1, 0, lay, "c"), OverlapError);
}

TEST_CASE("instantiating west of a taller gadget can hit an occupied cell") {
  Layout lay(2, 1, 1);
  const auto& w = find_gadget(2, "wire_h");
  instantiate(w, 0, 0, lay, "a");
  // a gadget placed to the east, lifted above its western neighbour, would need
  // to raise cells inside "a"
  Gadget tall = w;
  tall.name = "tall";
  for (Index j = 0; j < tall.rows(); ++j)
    for (Index i = 0; i < tall.cols(); ++i) tall.patch.ref(i, j) += 50;
  CHECK_THROWS_AS(instantiate(tall, w.cols(), 0, lay, "t"), MonotonicityError);
}

TEST_CASE("gadget reports are deterministic") {
  const auto& g = find_gadget(2, "or2");
  CHECK(format_report(verify_gadget(g)) == format_report(verify_gadget(g)));
}
