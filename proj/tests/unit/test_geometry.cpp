#include <doctest.h>

#include "bvs/geometry.hpp"
#include "support.hpp"

using namespace bvs;
using testing::kRunning;

namespace {

Poly z(int k) { return Poly::var(k - 1); }

PolyMatrix matrix(std::vector<std::vector<Poly>> rows) {
  PolyMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

QMatrix q_inverse(QMatrix m) {
  const std::size_t n = m.size();
  QMatrix inv = q_identity(static_cast<int>(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    mpq_class f = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= f;
      inv[c][k] /= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class g = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= g * m[c][k];
        inv[r][k] -= g * inv[c][k];
      }
    }
  }
  return inv;
}

}  // namespace

TEST_CASE("braid matrices") {
  CHECK(b_matrix(3, 1, z(1)) == matrix({{z(1), -1, 0}, {1, 0, 0}, {0, 0, 1}}));
  CHECK(b_matrix(3, 2, z(1)) == matrix({{1, 0, 0}, {0, z(1), -1}, {0, 1, 0}}));
  for (int i = 1; i <= 3; ++i) CHECK(b_matrix(4, i, z(2)).det() == Poly(1));
  CHECK(s_dot(3, 1) == b_matrix(3, 1, 0));
  CHECK(chevalley_x(3, 2, z(1)).at(1, 2) == z(1));
  CHECK(q_det(torus_chi(3, 1, 5)) == 1);
  CHECK_THROWS_AS(b_matrix(3, 3, z(1)), GeometryError);
}

TEST_CASE("braid variety equations") {
  BraidVarietyIdeal I = braid_variety_ideal(3, {1, 2, 2, 1, 1, 2, 1});
  CHECK(I.equations.size() == 3);
  CHECK(7 - static_cast<int>(I.equations.size()) == 4);
  // A reduced word of w0: the unique solution is the origin.
  BraidVarietyIdeal R = braid_variety_ideal(3, {1, 2, 1});
  std::vector<mpq_class> origin(3, 0);
  for (const Poly& e : R.equations) CHECK(e.eval(origin) == 0);
  for (const Poly& e : R.open_conditions) CHECK(e.eval(origin) != 0);
  for (int k = 0; k < 3; ++k) {
    std::vector<mpq_class> unit(3, 0);
    unit[k] = 1;
    bool some_nonzero = false;
    for (const Poly& e : R.equations) some_nonzero = some_nonzero || e.eval(unit) != 0;
    CHECK(some_nonzero);
  }
  CHECK(R.equations.size() == 3);
  CHECK_THROWS_AS(braid_variety_ideal(3, {1, 2}), GeometryError);
}

TEST_CASE("parametrization of the running example") {
  CartanData a2 = type_a(2);
  Parametrization p = parametrize(a2, kRunning);
  CHECK(p.phi == std::vector<int>{1, 5, 7, 6, 4, 3, 2});
  std::vector<int> rename = phi_star_renaming(p);
  // F_2 = B_1(z'_1) B_2(z'_2), which is B_1(z_1) B_2(z_5) after the renaming.
  CHECK(p.F[2].substitute({}) == b_matrix(3, 1, z(1)) * b_matrix(3, 2, z(2)));
  PolyMatrix F2(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) F2.at(r, c) = p.F[2].at(r, c).rename(rename);
  CHECK(F2 == b_matrix(3, 1, z(1)) * b_matrix(3, 2, z(5)));

  Parametrization q = parametrize(a2, {1, 2, 1, 2});
  for (const auto& g : q.g_prime) CHECK(g == PolyMatrix::identity(3));
}

TEST_CASE("cosets and Bruhat positions of the running example") {
  CartanData a2 = type_a(2);
  PolyMatrix Z4 = z_coset(a2, kRunning, 4);
  CHECK(Z4 == matrix({{z(6), -1, 0}, {z(5) * z(7) - 1, 0, -z(5)}, {z(7), 0, -1}}));
  CHECK(z_coset(a2, kRunning, 7) == PolyMatrix::identity(3));
  std::mt19937_64 rng(1);
  SymbolicBruhatCell cell = bruhat_position(Z4, rng);
  CHECK(cell.w == Perm::simple(3, 2) * Perm::simple(3, 1));
  REQUIRE(cell.h.size() == 3);
  CHECK(cell.h[0] == RatFunc(z(7)));
  CHECK(cell.h[1] == RatFunc(Poly(1)));
  CHECK(cell.h[2] == RatFunc(Poly(1), z(7)));
}

TEST_CASE("z_coset at the bottom is the full braid matrix product") {
  auto rng = testing::rng_for(37);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 8);
    PolyMatrix oracle = PolyMatrix::identity(n);
    for (std::size_t d = 1; d <= b.size(); ++d)
      if (b[d - 1] < 0) oracle = oracle * b_matrix(n, n + b[d - 1], z(static_cast<int>(d)));
    for (std::size_t d = b.size(); d >= 1; --d)
      if (b[d - 1] > 0) oracle = oracle * b_matrix(n, b[d - 1], z(static_cast<int>(d)));
    CHECK(z_coset(c, b, 0) == oracle);
  }
}

TEST_CASE("numeric Bruhat positions") {
  CHECK(bruhat_position(q_identity(3)).w == Perm::identity(3));
  CHECK(bruhat_position(q_identity(3)).h == std::vector<mpq_class>{1, 1, 1});
  BruhatCell s = bruhat_position(s_dot(3, 1).eval({}));
  CHECK(s.w == Perm::simple(3, 1));
  CHECK(s.h == std::vector<mpq_class>{1, 1, 1});
  CHECK_THROWS_AS(bruhat_position(QMatrix{{1, 2}, {2, 4}}), GeometryError);
}

TEST_CASE("grid minors of the running example") {
  CartanData a2 = type_a(2);
  GridMinorTable t = grid_minors(a2, kRunning);
  CHECK(t.minor(4, 1) == RatFunc(z(7)));
  CHECK(t.minor(4, 2) == RatFunc(z(7)));
  // Minor oracle: rows {3}, cols {1} and rows {1,3}, cols {1,2} of Z4, up to
  // the sign of the same minors of the lift.
  PolyMatrix Z4 = t.Z[4];
  CHECK((Z4.minor({2}, {0}) == z(7) || Z4.minor({2}, {0}) == -z(7)));
  CHECK((Z4.minor({0, 2}, {0, 1}) == z(7) || Z4.minor({0, 2}, {0, 1}) == -z(7)));
  for (int i : {1, 2, -1, -2}) CHECK(t.minor(7, i) == RatFunc(Poly(1)));

  std::vector<Poly> chamber;
  for (int c = 1; c <= 7; ++c) chamber.push_back(chamber_minor(t, kRunning, c));
  CHECK(chamber[0] == Poly::parse("z3*z7 - z4*z6 + 1"));
  CHECK(chamber[1] == Poly::parse("z2*z4*z7 - z3*z7 - 1"));
  CHECK(chamber[2] == z(4));
  CHECK(chamber[3] == z(4) * z(7));
  CHECK(chamber[4] == z(7));
  CHECK(chamber[5] == Poly(1));
  CHECK(chamber[6] == Poly(1));
  CHECK_THROWS_AS(chamber_minor(t, kRunning, 8), GeometryError);
}

TEST_CASE("positive grid minors match the torus part at random points") {
  auto rng = testing::rng_for(41);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 8);
    GridMinorTable g = grid_minors(c, b);
    auto point = random_point(static_cast<int>(b.size()), 20, rng);
    for (int k = 0; k <= static_cast<int>(b.size()); ++k) {
      QMatrix q = g.Z[k].eval(point);
      BruhatCell cell = bruhat_position(q);
      if (!(cell.w == g.w[k])) continue;  // off the open cell
      mpq_class prod = 1;
      for (int i = 1; i < n; ++i) {
        prod *= cell.h[i - 1];
        CHECK(g.positive[k][i - 1].eval(point) == prod);
      }
    }
  }
}

TEST_CASE("Bruhat decomposition round trip") {
  auto rng = testing::rng_for(43);
  std::uniform_int_distribution<long> small(-5, 5);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    std::vector<int> one(n);
    for (int k = 0; k < n; ++k) one[k] = k + 1;
    std::shuffle(one.begin(), one.end(), rng);
    Perm w(one);
    QMatrix u = q_identity(n), u2 = q_identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) {
        u[r][c] = small(rng);
        u2[r][c] = small(rng);
      }
    std::vector<mpq_class> h;
    for (int k = 0; k < n; ++k) {
      long v = 0;
      while (v == 0) v = small(rng);
      h.emplace_back(v, 1 + (rng() % 3));
      h.back().canonicalize();
    }
    BruhatCell cell = bruhat_position(compose_bruhat(u, w, h, u2));
    CHECK(cell.w == w);
    CHECK(cell.h == h);
  }
}

TEST_CASE("parametrized tuples have the prescribed relative positions") {
  auto rng = testing::rng_for(47);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 8);
    Parametrization p = parametrize(c, b);
    const int L = static_cast<int>(b.size());
    auto point = random_point(L, 30, rng);
    for (int k = 1; k <= L; ++k) {
      QMatrix x = q_mul(q_inverse(p.g[k - 1].eval(point)), p.g[k].eval(point));
      QMatrix y = q_mul(q_inverse(p.g_prime[k - 1].eval(point)), p.g_prime[k].eval(point));
      int i = b[k - 1];
      if (i > 0) {
        CHECK(bruhat_position(x).w == Perm::simple(n, i));
        CHECK(y == q_identity(n));
      } else {
        CHECK(bruhat_position(y).w == Perm::simple(n, n + i));
        CHECK(x == q_identity(n));
      }
    }
    CHECK(p.g[L] == p.g_prime[L]);
  }
}
