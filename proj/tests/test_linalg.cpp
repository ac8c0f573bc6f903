#include "doctest.h"

#include <random>

#include "contq/linalg.hpp"
#include "contq/random.hpp"

using namespace contq;

namespace {

template <class F>
Mat<F> from_ints(const F& f, int rows, int cols, std::vector<std::int64_t> vals) {
  Mat<F> m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = f.from_int(vals[i * cols + j]);
  return m;
}

// Brute-force rank by minor enumeration (independent oracle, tiny sizes).
int rank_by_minors(const RationalField& f, const Mat<RationalField>& m) {
  int best = 0;
  int n = std::min(m.rows, m.cols);
  // enumerate square submatrices up to 3x3 by index subsets
  std::vector<int> ri, ci;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> rs(size), cs(size);
    std::function<bool(int, int)> rec_r = [&](int pos, int start) -> bool {
      if (pos == size) {
        std::function<bool(int, int)> rec_c = [&](int cpos, int cstart) -> bool {
          if (cpos == size) {
            Mat<RationalField> sub(size, size, f);
            for (int i = 0; i < size; ++i)
              for (int j = 0; j < size; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
            // determinant by cofactor (size <= 3)
            mpq_class det;
            if (size == 1) det = sub.at(0, 0);
            else if (size == 2)
              det = sub.at(0, 0) * sub.at(1, 1) - sub.at(0, 1) * sub.at(1, 0);
            else
              det = sub.at(0, 0) * (sub.at(1, 1) * sub.at(2, 2) - sub.at(1, 2) * sub.at(2, 1)) -
                    sub.at(0, 1) * (sub.at(1, 0) * sub.at(2, 2) - sub.at(1, 2) * sub.at(2, 0)) +
                    sub.at(0, 2) * (sub.at(1, 0) * sub.at(2, 1) - sub.at(1, 1) * sub.at(2, 0));
            return sgn(det) != 0;
          }
          for (int c = cstart; c < m.cols; ++c) {
            cs[cpos] = c;
            if (rec_c(cpos + 1, c + 1)) return true;
          }
          return false;
        };
        return rec_c(0, 0);
      }
      for (int r = start; r < m.rows; ++r) {
        rs[pos] = r;
        if (rec_r(pos + 1, r + 1)) return true;
      }
      return false;
    };
    if (rec_r(0, 0)) best = size;
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("rank basics") {
  PrimeField g5(5);
  CHECK(rank(g5, Mat<PrimeField>::identity(2, g5)) == 2);
  CHECK(rank(g5, Mat<PrimeField>(3, 3, g5)) == 0);

  RationalField q;
  Mat<RationalField> m = from_ints(q, 2, 2, {1, 2, 2, 4});
  CHECK(rank(q, m) == 1);
  CHECK(rank_by_minors(q, m) == 1);
}

TEST_CASE("rank agrees with minor enumeration on random rationals") {
  RationalField q;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + static_cast<int>(draw(rng, 3));
    int c = 1 + static_cast<int>(draw(rng, 3));
    Mat<RationalField> m(r, c, q);
    for (auto& e : m.a) e = q.from_int(draw_range(rng, -2, 2));
    CHECK(rank(q, m) == rank_by_minors(q, m));
  }
}

TEST_CASE("kernel basis") {
  PrimeField g5(5);
  Mat<PrimeField> d = from_ints(g5, 1, 2, {1, -1});
  KernelPresentation<PrimeField> k = kernel_basis(g5, d, 1, 1);
  REQUIRE(k.dim() == 1);
  CHECK(k.inclusion.at(0, 0) == k.inclusion.at(1, 0));  // spans (1,1)
  CHECK(matmul(g5, d, k.inclusion).is_zero(g5));

  Mat<PrimeField> id2 = Mat<PrimeField>::identity(2, g5);
  CHECK(kernel_basis(g5, id2, 1, 1).dim() == 0);

  // d = [[1,0,1]] over GF(2): kernel dimension 2, checked by enumerating
  // all 8 vectors of GF(2)^3.
  PrimeField g2(2);
  Mat<PrimeField> d2 = from_ints(g2, 1, 3, {1, 0, 1});
  Mat<PrimeField> ker = kernel(g2, d2);
  CHECK(ker.cols == 2);
  int solutions = 0;
  for (int v = 0; v < 8; ++v) {
    int x0 = v & 1, x1 = (v >> 1) & 1, x2 = (v >> 2) & 1;
    if ((x0 + x2) % 2 == 0) ++solutions;
  }
  CHECK(solutions == 4);  // = 2^kernel_dim
  CHECK(matmul(g2, d2, ker).is_zero(g2));
  CHECK(rank(g2, ker) == 2);
}

TEST_CASE("cokernel basis") {
  PrimeField g5(5);
  // zero map into K^2: quotient is everything
  Mat<PrimeField> z(2, 0, g5);
  CokernelPresentation<PrimeField> c = cokernel_basis(g5, z);
  CHECK(c.dim() == 2);
  CHECK(rank(g5, c.projection) == 2);

  CHECK(cokernel_basis(g5, Mat<PrimeField>::identity(2, g5)).dim() == 0);

  // column (1;1) over GF(3): one-dimensional quotient whose projection
  // kills exactly span{(1,1)}; checked by enumerating the 9 vectors.
  PrimeField g3(3);
  Mat<PrimeField> col = from_ints(g3, 2, 1, {1, 1});
  CokernelPresentation<PrimeField> ck = cokernel_basis(g3, col);
  REQUIRE(ck.dim() == 1);
  CHECK(matmul(g3, ck.projection, col).is_zero(g3));
  int killed = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      auto px = g3.add(g3.mul(ck.projection.at(0, 0), x),
                       g3.mul(ck.projection.at(0, 1), y));
      bool in_span = (x == y);
      if (g3.is_zero(px)) {
        CHECK(in_span);
        ++killed;
      } else {
        CHECK(!in_span);
      }
    }
  CHECK(killed == 3);
}

TEST_CASE("rank-nullity on random matrices over both fields") {
  std::mt19937_64 rng(11);
  PrimeField gp(32003);
  RationalField q;
  for (int trial = 0; trial < 50; ++trial) {
    int r = static_cast<int>(draw(rng, 5));
    int c = static_cast<int>(draw(rng, 5));
    Mat<PrimeField> m(r, c, gp);
    for (auto& e : m.a) e = gp.from_int(draw_range(rng, -3, 3));
    int rk = rank(gp, m);
    CHECK(rk + kernel(gp, m).cols == c);
    CHECK(rk + cokernel_basis(gp, m).dim() == r);
    CHECK(matmul(gp, m, kernel(gp, m)).is_zero(gp));
    CHECK(matmul(gp, cokernel_basis(gp, m).projection, m).is_zero(gp));

    Mat<RationalField> mq(r, c, q);
    for (size_t i = 0; i < mq.a.size(); ++i)
      mq.a[i] = q.from_int(draw_range(rng, -3, 3));
    CHECK(rank(q, mq) + kernel(q, mq).cols == c);
  }
}

TEST_CASE("induced maps on kernels") {
  PrimeField g5(5);
  // zero kernels
  KernelPresentation<PrimeField> z0 =
      kernel_basis(g5, Mat<PrimeField>::identity(2, g5), 1, 1);
  Mat<PrimeField> L0 = induced_on_kernels(g5, z0, z0, Mat<PrimeField>::identity(2, g5));
  CHECK(L0.rows == 0);
  CHECK(L0.cols == 0);

  // identity ladder
  Mat<PrimeField> d = from_ints(g5, 1, 2, {1, -1});
  KernelPresentation<PrimeField> k = kernel_basis(g5, d, 1, 1);
  Mat<PrimeField> L1 = induced_on_kernels(g5, k, k, Mat<PrimeField>::identity(2, g5));
  CHECK(L1 == Mat<PrimeField>::identity(1, g5));

  // zero block map induces the 1x1 zero map, confirmed by substitution
  KernelPresentation<PrimeField> k2 =
      kernel_basis(g5, from_ints(g5, 1, 2, {1, 0}), 1, 1);
  Mat<PrimeField> L2 = induced_on_kernels(g5, k, k2, Mat<PrimeField>(2, 2, g5));
  CHECK(L2.rows == 1);
  CHECK(L2.cols == 1);
  CHECK(L2.is_zero(g5));
  CHECK(matmul(g5, k2.inclusion, L2) ==
        matmul(g5, Mat<PrimeField>(2, 2, g5), k.inclusion));

  // a block map that does not carry ker1 into ker2 must signal NotInvariant
  Mat<PrimeField> bad(2, 2, g5);
  bad.at(0, 0) = g5.one();  // diag(1, 0): (t,t) -> (t,0), outside ker(1,0)
  CHECK_THROWS_AS(induced_on_kernels(g5, k, k2, bad), error);
}

TEST_CASE("induced maps on cokernels with coset tracking over GF(2)") {
  PrimeField g2(2);
  Mat<PrimeField> d1 = from_ints(g2, 2, 1, {1, 1});
  Mat<PrimeField> d2 = from_ints(g2, 2, 1, {1, 0});
  CokernelPresentation<PrimeField> c1 = cokernel_basis(g2, d1);
  CokernelPresentation<PrimeField> c2 = cokernel_basis(g2, d2);

  // trivial cases
  CokernelPresentation<PrimeField> cz =
      cokernel_basis(g2, Mat<PrimeField>::identity(2, g2));
  CHECK(induced_on_cokernels(g2, cz, cz, Mat<PrimeField>::identity(2, g2)).rows == 0);
  Mat<PrimeField> Lid = induced_on_cokernels(g2, c1, c1, Mat<PrimeField>::identity(2, g2));
  CHECK(Lid == Mat<PrimeField>::identity(1, g2));

  // blockmap [[1,0],[1,1]] carries im(1;1) into im(1;0)
  Mat<PrimeField> bm = from_ints(g2, 2, 2, {1, 0, 1, 1});
  Mat<PrimeField> L = induced_on_cokernels(g2, c1, c2, bm);
  CHECK(matmul(g2, L, c1.projection) == matmul(g2, c2.projection, bm));
  // coset tracking: every vector of GF(2)^2 lands in the matching coset
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      auto lhs = g2.mul(L.at(0, 0),
                        g2.add(g2.mul(c1.projection.at(0, 0), x),
                               g2.mul(c1.projection.at(0, 1), y)));
      auto mx = g2.add(g2.mul(bm.at(0, 0), x), g2.mul(bm.at(0, 1), y));
      auto my = g2.add(g2.mul(bm.at(1, 0), x), g2.mul(bm.at(1, 1), y));
      auto rhs = g2.add(g2.mul(c2.projection.at(0, 0), mx),
                        g2.mul(c2.projection.at(0, 1), my));
      CHECK(lhs == rhs);
    }

  // the identity block map does not respect the images here
  CHECK_THROWS_AS(induced_on_cokernels(g2, c1, c2, Mat<PrimeField>::identity(2, g2)),
                  error);
}

TEST_CASE("pullback universal property on 100 random instances") {
  PrimeField gp(32003);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int a = 1 + static_cast<int>(draw(rng, 4));
    int b = 1 + static_cast<int>(draw(rng, 4));
    int z = 1 + static_cast<int>(draw(rng, 4));
    Mat<PrimeField> A(z, a, gp), B(z, b, gp);
    for (auto& e : A.a) e = gp.from_int(draw_range(rng, -3, 3));
    for (auto& e : B.a) e = gp.from_int(draw_range(rng, -3, 3));
    KernelPresentation<PrimeField> pb = pullback(gp, A, B);
    // legs commute over the cospan
    CHECK(matmul(gp, A, pb.proj_first(gp)) == matmul(gp, B, pb.proj_second(gp)));
    // any commuting test pair factors uniquely
    int w = 1 + static_cast<int>(draw(rng, 4));
    Mat<PrimeField> h(pb.dim(), w, gp);
    for (auto& e : h.a) e = gp.from_int(draw_range(rng, -3, 3));
    Mat<PrimeField> u = matmul(gp, pb.proj_first(gp), h);
    Mat<PrimeField> t = matmul(gp, pb.proj_second(gp), h);
    auto l = solve(gp, pb.inclusion, vstack(gp, u, t));
    REQUIRE(l.has_value());
    CHECK(*l == h);  // uniqueness: full column rank forces the factorization
  }
}

TEST_SUITE_END();
