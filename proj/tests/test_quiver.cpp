#include "doctest.h"

#include <random>

#include "contq/quiver.hpp"
#include "contq/random.hpp"

using namespace contq;

namespace {

// The running example: breakpoints (0,1,3), sink at 1.
Quiver fig3() {
  return Quiver({Rational(0), Rational(1), Rational(3)},
                {Dir::ascending, Dir::ascending, Dir::descending, Dir::descending});
}

}  // namespace

TEST_SUITE_BEGIN("quiver");

TEST_CASE("classify_point") {
  Quiver q = fig3();
  CHECK(classify_point(q, 1) == PointClass::sink);
  CHECK(classify_point(q, 0) == PointClass::flow_right);
  CHECK(classify_point(q, 2) == PointClass::flow_left);

  Quiver s({Rational(0)}, {Dir::descending, Dir::ascending});
  CHECK(classify_point(s, 0) == PointClass::source);
}

TEST_CASE("comparable") {
  Quiver q = fig3();
  auto p = comparable(q, Rational(1, 2), Rational(1));
  REQUIRE(p.has_value());
  CHECK(p->first == Rational(1, 2));
  CHECK(p->second == Rational(1));

  CHECK(!comparable(q, Rational(1, 2), Rational(2)).has_value());

  auto refl = comparable(q, Rational(7, 3), Rational(7, 3));
  REQUIRE(refl.has_value());
  CHECK(refl->first == refl->second);

  // descending side: 3 precedes 2
  auto d = comparable(q, Rational(3), Rational(2));
  REQUIRE(d.has_value());
  CHECK(d->first == Rational(3));
  CHECK(d->second == Rational(2));
}

TEST_CASE("comparable is a partial order on random triples") {
  std::mt19937_64 rng(5);
  RepBudget budget;
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = fig3();
    Rational x = random_grid_coord(q, budget, rng);
    Rational y = random_grid_coord(q, budget, rng);
    Rational z = random_grid_coord(q, budget, rng);
    auto leq = [&](const Rational& u, const Rational& v) {
      auto c = comparable(q, u, v);
      return c && c->first == u && c->second == v;
    };
    CHECK(leq(x, x));                                     // reflexive
    if (leq(x, y) && leq(y, x)) CHECK(x == y);            // antisymmetric
    if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));         // transitive
  }
}

TEST_CASE("mirror_map") {
  Quiver q = fig3();
  CHECK(mirror_map(q, 1, Rational(1)) == Rational(2));
  CHECK(mirror_map(q, 1, Rational(0)) == Rational(3));
  CHECK(mirror_map(q, 1, Rational(5, 2)) == Rational(1, 2));
  CHECK(mirror_map(q, 1, mirror_map(q, 1, Rational(5, 2))) == Rational(5, 2));
  CHECK_THROWS_AS(mirror_map(q, 1, Rational(4)), error);
}

TEST_CASE("reflect_quiver on an A_5 encoding") {
  // 1 -> 2 <- 3 <- 4 <- 5 at integer positions; sink at vertex 2.
  Quiver q({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)},
           {Dir::descending, Dir::ascending, Dir::descending, Dir::descending,
            Dir::descending, Dir::ascending});
  CHECK(classify_point(q, 1) == PointClass::sink);
  Quiver r = reflect_quiver(q, 1);
  CHECK(r.breakpoints == q.breakpoints);  // 2 = (1+3)-2, position unchanged
  CHECK(classify_point(r, 1) == PointClass::source);
  // 1 <- 2 -> 3 <- 4 <- 5
  CHECK(r.dirs[1] == Dir::descending);
  CHECK(r.dirs[2] == Dir::ascending);
  CHECK(r.dirs[3] == Dir::descending);
}

TEST_CASE("reflect_quiver moves the breakpoint to the mirror") {
  Quiver q = fig3();
  Quiver r = reflect_quiver(q, 1);
  CHECK(r.breakpoints == std::vector<Rational>{Rational(0), Rational(2), Rational(3)});
  CHECK(r.dirs == std::vector<Dir>{Dir::ascending, Dir::descending, Dir::ascending,
                                   Dir::descending});
  CHECK(classify_point(r, 1) == PointClass::source);

  // double reflection returns the original quiver
  CHECK(reflect_quiver(r, 1) == q);

  // errors
  CHECK_THROWS_AS(reflect_quiver(q, 0), error);   // not extremal / no neighbor
  Quiver flow({Rational(0), Rational(1), Rational(2)},
              {Dir::ascending, Dir::ascending, Dir::ascending, Dir::ascending});
  CHECK_THROWS_AS(reflect_quiver(flow, 1), error);
}

TEST_CASE("sink-orientation toggle") {
  Quiver q = fig3();
  Quiver r = reflect_quiver(q, 1, ReflOrientation::sink);
  CHECK(classify_point(r, 1) == PointClass::sink);
}

TEST_CASE("validation warns on flow breakpoints") {
  Quiver q = fig3();
  CHECK(validate_quiver(q).size() == 2);  // the two outer flow points
}

TEST_SUITE_END();
