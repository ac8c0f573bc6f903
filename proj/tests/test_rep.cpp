#include "doctest.h"

#include "contq/barcode.hpp"
#include "contq/morphism.hpp"
#include "contq/random.hpp"

using namespace contq;

namespace {

Quiver fig3() {
  return Quiver({Rational(0), Rational(1), Rational(3)},
                {Dir::ascending, Dir::ascending, Dir::descending, Dir::descending});
}

const PrimeField gp(32003);

}  // namespace

TEST_SUITE_BEGIN("rep");

TEST_CASE("interval_module dims") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  CHECK(validate_rep(v).empty());
  CHECK(dim_at(v, Rational(1)) == 1);
  CHECK(dim_at(v, Rational(5, 2)) == 1);
  CHECK(dim_at(v, Rational(27, 10)) == 0);
  CHECK(dim_at(v, Rational(-1)) == 0);

  Rep<PrimeField> s = interval_module(q, Bar::point(Rational(1)), gp);
  CHECK(dim_at(s, Rational(1)) == 1);
  CHECK(dim_at(s, Rational(9, 10)) == 0);
  CHECK(dim_at(s, Rational(11, 10)) == 0);

  Rep<PrimeField> h =
      interval_module(q, Bar::make(Rational(0), Rational(1), true, false), gp);
  CHECK(dim_at(h, Rational(1)) == 0);
  CHECK(dim_at(h, Rational(1, 2)) == 1);
}

TEST_CASE("validate_rep reports shape violations") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(1)), gp);
  CHECK(validate_rep(v).empty());
  v.maps_side0[1] = Mat<PrimeField>(2, 1, gp);  // cells there have dims (1,1)
  CHECK(!validate_rep(v).empty());
}

TEST_CASE("map_along") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  Mat<PrimeField> m = map_along(v, Rational(1, 5), Rational(1));
  CHECK(m == Mat<PrimeField>::identity(1, gp));

  Rep<PrimeField> h =
      interval_module(q, Bar::make(Rational(0), Rational(1), true, false), gp);
  Mat<PrimeField> z = map_along(h, Rational(1, 2), Rational(1));
  CHECK(z.rows == 0);  // support ends before the sink
  CHECK(z.cols == 1);

  Mat<PrimeField> idm = map_along(v, Rational(5, 2), Rational(5, 2));
  CHECK(idm == Mat<PrimeField>::identity(1, gp));

  CHECK_THROWS_AS(map_along(v, Rational(1, 2), Rational(2)), error);
}

TEST_CASE("direct_sum adds dims and merges partitions") {
  Quiver q = fig3();
  Rep<PrimeField> a = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  Rep<PrimeField> b = interval_module(q, Bar::closed(Rational(0), Rational(3, 2)), gp);
  Rep<PrimeField> s = direct_sum(a, b);
  CHECK(validate_rep(s).empty());
  CHECK(dim_at(s, Rational(6, 5)) == 2);
  CHECK(dim_at(s, Rational(2)) == 1);

  Rep<PrimeField> z = zero_rep(q, gp);
  Rep<PrimeField> az = direct_sum(a, z);
  CHECK(dim_at(az, Rational(1)) == 1);

  Quiver other({Rational(0)}, {Dir::ascending, Dir::descending});
  CHECK_THROWS_AS(direct_sum(a, interval_module(other, Bar::point(Rational(0)), gp)),
                  error);
}

TEST_CASE("refine_partition preserves pointwise data") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  Rep<PrimeField> r = refine_partition(v, {Rational(1, 2), Rational(9, 4)});
  CHECK(validate_rep(r).empty());
  CHECK(refine_partition(v, {Rational(1)}) == v);  // existing cut: unchanged

  std::mt19937_64 rng(3);
  RepBudget budget;
  for (int i = 0; i < 100; ++i) {
    Rational x = random_grid_coord(q, budget, rng);
    CHECK(dim_at(r, x) == dim_at(v, x));
  }
  for (int i = 0; i < 60; ++i) {
    Rational x = random_grid_coord(q, budget, rng);
    Rational y = random_grid_coord(q, budget, rng);
    auto ord = comparable(q, x, y);
    if (!ord) continue;
    CHECK(map_along(r, ord->first, ord->second) ==
          map_along(v, ord->first, ord->second));
  }
}

TEST_CASE("transitivity of composed maps on random reps") {
  Quiver q = fig3();
  std::mt19937_64 rng(17);
  RepBudget budget;
  for (int trial = 0; trial < 20; ++trial) {
    Rep<PrimeField> v = random_rep(q, budget, 1000 + trial, gp);
    REQUIRE(validate_rep(v).empty());
    for (int i = 0; i < 20; ++i) {
      Rational x = random_grid_coord(q, budget, rng);
      Rational y = random_grid_coord(q, budget, rng);
      Rational z = random_grid_coord(q, budget, rng);
      auto leq = [&](const Rational& u, const Rational& w) {
        auto c = comparable(q, u, w);
        return c && c->first == u && c->second == w;
      };
      if (leq(x, y) && leq(y, z)) {
        CHECK(map_along(v, x, z) ==
              matmul(gp, map_along(v, y, z), map_along(v, x, y)));
      }
    }
  }
}

TEST_CASE("hom_space") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  auto basis = hom_space(v, v);
  REQUIRE(basis.size() == 1);  // End(interval) = K
  for (const auto& f : basis) CHECK(validate_morphism(f).empty());
  // scalar on the whole support, so it is a multiple of the identity
  int support_cell = basis[0].source.part.cell_of(Rational(1));
  for (int c = 0; c < basis[0].source.cells(); ++c)
    if (basis[0].source.dims[c] == 1)
      CHECK(basis[0].comps[c] == basis[0].comps[support_cell]);

  // incomparable supports: only the zero morphism
  Rep<PrimeField> w = interval_module(q, Bar::closed(Rational(2), Rational(3)), gp);
  Rep<PrimeField> u = interval_module(q, Bar::closed(Rational(0), Rational(1, 2)), gp);
  CHECK(hom_space(u, w).empty());

  // additivity in the first argument
  Rep<PrimeField> vw = direct_sum(v, w);
  CHECK(hom_space(vw, u).size() == hom_space(v, u).size() + hom_space(w, u).size());
}

TEST_CASE("morphism composition preserves validity") {
  Quiver q = fig3();
  Rep<PrimeField> v = interval_module(q, Bar::closed(Rational(0), Rational(5, 2)), gp);
  Rep<PrimeField> w = interval_module(q, Bar::closed(Rational(0), Rational(3, 2)), gp);
  auto vw = hom_space(v, w);
  auto wv = hom_space(w, v);
  for (const auto& f : vw)
    for (const auto& g : wv) {
      Morphism<PrimeField> h = compose(f, g);  // w -> w
      CHECK(validate_morphism(h).empty());
    }
  Morphism<PrimeField> idv = identity_morphism(v);
  CHECK(validate_morphism(idv).empty());
}

TEST_CASE("random_rep is deterministic and respects budgets") {
  Quiver q = fig3();
  RepBudget budget;
  Rep<PrimeField> a = random_rep(q, budget, 42, gp);
  Rep<PrimeField> b = random_rep(q, budget, 42, gp);
  CHECK(a == b);
  CHECK(validate_rep(a).empty());
  CHECK(static_cast<int>(a.part.cuts.size()) <= budget.max_cuts);
  for (int d : a.dims) CHECK(d <= budget.max_dim);

  RepBudget none;
  none.max_bars = 0;
  Rep<PrimeField> z = random_rep(q, none, 7, gp);
  for (int d : z.dims) CHECK(d == 0);
}

TEST_SUITE_END();
