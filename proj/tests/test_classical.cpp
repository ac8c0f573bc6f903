#include "doctest.h"

#include "classical_bgp.hpp"
#include "contq/barcode.hpp"
#include "contq/reflection.hpp"

using namespace contq;

namespace {
const PrimeField gp(32003);
}

TEST_SUITE_BEGIN("classical");

TEST_CASE("encoded representations are valid") {
  classical::AnQuiver q{3, {true, false}};  // 1 -> 2 <- 3
  classical::AnRep<PrimeField> m = classical::random_rep(gp, q, 5, 3);
  Rep<PrimeField> v = classical::encode(gp, q, m);
  CHECK(validate_rep(v).empty());
  for (int i = 1; i <= q.n; ++i)
    CHECK(dim_at(v, Rational(i)) == m.dims[i - 1]);
}

TEST_CASE("simple at a sink dies; others match by hand") {
  classical::AnQuiver q{3, {true, false}};
  classical::AnRep<PrimeField> simple{{0, 1, 0},
                                      {Mat<PrimeField>(1, 0, gp), Mat<PrimeField>(1, 0, gp)}};
  classical::AnRep<PrimeField> r = classical::reflect_plus(gp, q, simple, 2);
  CHECK(r.dims == std::vector<int>{0, 0, 0});

  Rep<PrimeField> v = classical::encode(gp, q, simple);
  Rep<PrimeField> w = reflect_plus(v, 1);
  CHECK(decompose(w).bars.empty());
}

TEST_CASE("continuous reflection agrees with classical BGP on all A_n, n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      classical::AnQuiver q{n, {}};
      for (int j = 0; j < n - 1; ++j) q.right.push_back((mask >> j) & 1);
      for (int vertex = 2; vertex < n; ++vertex) {
        if (!classical::is_internal_sink(q, vertex)) continue;
        for (int rep_i = 0; rep_i < 4; ++rep_i) {
          std::uint64_t seed = 10000 + mask * 100 + vertex * 10 + rep_i;
          classical::AnRep<PrimeField> m = classical::random_rep(gp, q, seed, 3);
          Rep<PrimeField> v = classical::encode(gp, q, m);

          Rep<PrimeField> quiver_side = reflect_plus(v, vertex - 1);
          classical::AnRep<PrimeField> reflected =
              classical::reflect_plus(gp, q, m, vertex);
          Rep<PrimeField> classical_side =
              classical::encode(gp, classical::flip_at(q, vertex), reflected);

          // dimension vectors at the vertices
          for (int i = 1; i <= n; ++i)
            CHECK(dim_at(quiver_side, Rational(i)) == reflected.dims[i - 1]);
          // full barcode agreement
          CHECK(is_isomorphic(quiver_side, classical_side));
        }
      }
    }
  }
}

TEST_SUITE_END();
