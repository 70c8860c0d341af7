#include "fixtures.hpp"

#include <doctest.h>

using namespace kspm;

TEST_CASE("KSPM1 in both modes round-trips") {
  File1D f{Config1D<int>(3, std::vector<int>{7, 5, 3, 1}), false};
  CHECK(std::get<File1D>(parse_config(print_config(f))) == f);
  f.diffs = true;
  std::string text = print_config(f);
  CHECK(text.find("mode diffs") != std::string::npos);
  CHECK(text.find("2 2 2 1") != std::string::npos);
  CHECK(std::get<File1D>(parse_config(text)) == f);
}

TEST_CASE("KSPM2 round-trips with rows north-first") {
  Grid g = fx::example_2d();
  std::string text = print_config(g);
  CHECK(text.rfind("KSPM2 v1\np 3\nrows 4 cols 4\n0 0 0 0\n", 0) == 0);
  CHECK(std::get<Grid>(parse_config(text)) == g);
}

TEST_CASE("config format errors name the line") {
  CHECK_THROWS_AS(parse_config("KSPM3 v1\n"), FormatError);
  CHECK_THROWS_AS(parse_config("KSPM1 v1\np 3\nmode heights\nn 3\n1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_config("KSPM2 v1\np 2\nrows 2 cols 2\n1 0\n"), FormatError);
  CHECK_THROWS_AS(parse_config("KSPM1 v1\np x\n"), FormatError);
  try {
    parse_config("KSPM1 v1\np 3\nmode sideways\n");
  } catch (const FormatError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("traces round-trip") {
  std::vector<TraceLine> t{{1, 3, 0, Dir::R}, {2, 4, 0, Dir::R}};
  CHECK(parse_trace(print_trace(t)) == t);
  std::vector<TraceLine> t2{{1, 1, 2, Dir::H}, {2, 0, 5, Dir::V}};
  CHECK(parse_trace(print_trace(t2)) == t2);
  CHECK(moves_2d(t2) == std::vector<Move2D>{{1, 2, Dir::H}, {0, 5, Dir::V}});
  CHECK_THROWS_AS(parse_trace("TRACE v1\nstep=1 site=1,2 dir=R\n"), FormatError);
  CHECK_THROWS_AS(parse_trace("TRACE v1\nstep=1 site=1 dir=H\n"), FormatError);
  CHECK_THROWS_AS(moves_2d(t), FormatError);
}

TEST_CASE("sidecars round-trip and reject duplicates") {
  Sidecar s{{"p", "2"}, {"target", "4,0"}};
  CHECK(parse_sidecar(print_sidecar(s)) == s);
  CHECK(parse_sidecar("# note\np=2\n") == Sidecar{{"p", "2"}});
  CHECK_THROWS_AS(parse_sidecar("p=2\np=3\n"), FormatError);
  CHECK_THROWS_AS(parse_sidecar("novalue\n"), FormatError);
}

TEST_CASE("renders") {
  Grid g = Grid::from_rows(2, {{1, 0}, {12, 3}});
  CHECK(render_ascii(g) == " 1  0\n12  3\n");
  std::string pgm = render_pgm(Grid::from_rows(2, {{300, 0}}));
  CHECK(pgm.rfind("P5\n2 1\n255\n", 0) == 0);
  CHECK(static_cast<unsigned char>(pgm[pgm.size() - 2]) == 255);
  CHECK(render_ascii(Config1D<int>(2, std::vector<int>{2, 1})) == "#.\n##\n12\n");
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(read_file("/nonexistent/dir/x"), IoError);
}
