#include "kspm/gadgets.hpp"

namespace kspm {

namespace {

// Frozen layouts. Each was found by constraint search and is checked by
// verify_gadget in the test suite; the p=2 and2 and crossover entries are the
// best candidates found and do not pass.
const char* const kCatalogP2 = R"(
GADGET wire_h p=2 rows=5 cols=9
0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0
5 5 4 3 2 1 0 0 0
5 5 5 4 3 2 1 0 0
port in in H 1 1
port out out H 6 1

GADGET wire_v p=2 rows=9 cols=5
0 0 0 0 0
0 0 0 0 0
1 0 0 0 0
2 1 0 0 0
3 2 0 0 0
4 3 0 0 0
5 4 0 0 0
5 5 0 0 0
5 5 0 0 0
port in in V 1 1
port out out V 1 6

GADGET corner_hv p=2 rows=8 cols=8
0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0
1 1 1 1 1 0 0 0
2 2 2 2 2 1 1 0
3 3 3 3 3 2 2 0
4 4 4 4 4 3 3 0
8 8 7 6 5 4 4 0
8 8 8 7 6 5 4 0
port in in H 1 1
port out out V 5 5

GADGET corner_vh p=2 rows=8 cols=8
0 0 0 0 0 0 0 0
4 4 3 2 1 0 0 0
5 4 3 2 1 0 0 0
6 5 4 3 2 1 0 0
7 6 4 3 2 1 0 0
8 7 4 3 2 1 0 0
8 8 4 3 2 1 0 0
8 8 4 3 2 1 0 0
port in in V 1 1
port out out H 5 5

GADGET fanout2 p=2 rows=10 cols=10
0 0 0 0 0 0 0 0 0 0
1 1 1 0 0 0 0 0 0 0
2 2 2 1 1 1 0 0 0 0
4 4 4 3 3 3 1 0 0 0
5 5 5 4 4 3 1 0 0 0
7 7 7 5 4 3 2 1 0 0
7 7 7 5 4 3 2 1 0 0
7 7 7 6 5 4 3 2 1 0
7 7 7 7 5 4 3 2 1 0
7 7 7 7 5 4 3 2 1 0
port in in V 3 1
port out_h out H 8 3
port out_v out V 3 8

GADGET or2 p=2 rows=13 cols=14
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
9 9 9 9 8 7 6 5 4 3 2 1 0 0
9 9 9 9 9 8 7 6 5 4 3 2 1 0
9 9 9 9 9 8 7 7 6 4 3 2 1 0
9 9 9 9 9 8 8 8 7 4 3 2 1 0
9 9 9 9 9 9 9 9 8 4 3 2 1 0
9 9 9 9 9 9 9 9 9 4 3 2 1 0
9 9 9 9 9 9 9 9 9 4 3 2 1 0
9 9 9 9 9 9 9 9 9 4 3 2 1 0
9 9 9 9 9 9 9 9 9 4 3 2 1 0
port a in H 3 8
port b in V 8 3
port out out H 12 8

GADGET and2 p=2 rows=13 cols=14
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
8 8 8 8 7 6 5 4 3 3 2 1 0 0
8 8 8 8 8 7 6 5 4 4 3 2 1 0
8 8 8 8 8 7 6 6 5 4 3 2 1 0
8 8 8 8 8 7 7 7 6 4 3 2 1 0
8 8 8 8 8 8 8 8 7 4 3 2 1 0
8 8 8 8 8 8 8 8 8 4 3 2 1 0
8 8 8 8 8 8 8 8 8 4 3 2 1 0
8 8 8 8 8 8 8 8 8 4 3 2 1 0
8 8 8 8 8 8 8 8 8 4 3 2 1 0
port a in H 3 8
port b in V 8 3
port out out H 12 8

GADGET crossover p=2 rows=12 cols=12
0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 1 0 0 0 0 0 0 0
2 2 2 2 2 1 0 0 0 0 0 0
3 3 3 3 3 2 1 0 0 0 0 0
4 4 4 4 4 3 2 1 0 0 0 0
8 8 7 6 5 4 3 2 1 0 0 0
8 8 8 7 6 5 4 3 2 1 0 0
8 8 8 7 7 6 4 3 2 1 0 0
8 8 8 8 8 7 4 3 2 1 0 0
8 8 8 8 8 8 4 3 2 1 0 0
8 8 8 8 8 8 4 3 2 1 0 0
port in_h in H 1 5
port in_v in V 5 1
port out_h out H 9 5
port out_v out V 5 9
)";

const char* const kCatalogP3 = R"(
GADGET wire_h p=3 rows=6 cols=10
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0
6 6 4 4 2 2 0 0 0 0
6 6 5 5 3 3 1 1 0 0
6 6 5 5 3 3 1 1 0 0
port in in H 1 2
port out out H 7 2

GADGET wire_v p=3 rows=10 cols=6
0 0 0 0 0 0
0 0 0 0 0 0
1 1 0 0 0 0
1 1 0 0 0 0
3 3 2 0 0 0
3 3 2 0 0 0
5 5 4 0 0 0
5 5 4 0 0 0
6 6 6 0 0 0
6 6 6 0 0 0
port in in V 2 1
port out out V 2 7

GADGET corner_hv p=3 rows=11 cols=11
0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 1 1 1 0 0 0 0
1 1 1 1 1 1 1 0 0 0 0
3 3 3 3 3 3 3 2 0 0 0
3 3 3 3 3 3 3 2 0 0 0
5 5 5 5 5 5 5 4 0 0 0
5 5 5 5 5 5 5 4 0 0 0
12 12 10 10 8 8 6 6 0 0 0
12 12 11 11 9 9 7 7 0 0 0
12 12 11 11 9 9 7 7 0 0 0
port in in H 1 2
port out out V 7 8

GADGET corner_vh p=3 rows=11 cols=11
0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0
7 7 6 4 4 2 2 0 0 0 0
7 7 6 5 5 3 3 1 1 0 0
9 9 8 5 5 3 3 1 1 0 0
9 9 8 5 5 3 3 1 1 0 0
11 11 10 5 5 3 3 1 1 0 0
11 11 10 5 5 3 3 1 1 0 0
12 12 12 5 5 3 3 1 1 0 0
12 12 12 5 5 3 3 1 1 0 0
port in in V 2 1
port out out H 8 7

GADGET fanout2 p=3 rows=16 cols=14
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 0 0 0 0 0 0 0 0 0 0 0
1 1 1 0 0 0 0 0 0 0 0 0 0 0
3 3 3 2 0 0 0 0 0 0 0 0 0 0
3 3 3 2 0 0 0 0 0 0 0 0 0 0
5 5 5 4 2 0 0 0 0 0 0 0 0 0
5 5 5 4 3 0 0 0 0 0 0 0 0 0
7 7 7 6 5 3 2 0 0 0 0 0 0 0
9 9 9 8 6 4 2 2 0 0 0 0 0 0
11 11 11 10 7 5 3 3 1 1 0 0 0 0
11 11 11 10 7 5 3 3 1 1 0 0 0 0
12 12 12 12 7 5 3 3 1 1 0 0 0 0
12 12 12 12 7 5 3 3 1 1 0 0 0 0
port in in V 3 1
port out_h out H 9 4
port out_v out V 3 11

GADGET or2 p=3 rows=10 cols=16
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
11 11 9 9 7 6 4 4 2 2 0 0 0 0 0 0
11 11 10 10 8 7 5 5 3 3 1 1 0 0 0 0
11 11 10 10 10 9 5 5 3 3 1 1 0 0 0 0
11 11 10 10 10 9 5 5 3 3 1 1 0 0 0 0
11 11 11 11 11 11 5 5 3 3 1 1 0 0 0 0
11 11 11 11 11 11 5 5 3 3 1 1 0 0 0 0
port a in H 1 5
port b in V 5 1
port out out H 11 5

GADGET and2 p=3 rows=10 cols=16
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
10 10 8 8 6 5 4 4 2 2 0 0 0 0 0 0
10 10 9 9 7 6 5 5 3 3 1 1 0 0 0 0
10 10 9 9 9 8 5 5 3 3 1 1 0 0 0 0
10 10 9 9 9 8 5 5 3 3 1 1 0 0 0 0
10 10 10 10 10 10 5 5 3 3 1 1 0 0 0 0
10 10 10 10 10 10 5 5 3 3 1 1 0 0 0 0
port a in H 1 5
port b in V 5 1
port out out H 11 5
)";

}  // namespace

const std::vector<Gadget>& builtin_gadgets(int p) {
  static const std::vector<Gadget> p2 = parse_catalog(kCatalogP2);
  static const std::vector<Gadget> p3 = parse_catalog(kCatalogP3);
  if (p == 2) return p2;
  if (p == 3) return p3;
  throw UnsupportedP("no gadget catalog for p=" + std::to_string(p));
}

}  // namespace kspm
