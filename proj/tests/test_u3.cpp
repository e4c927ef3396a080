#include <doctest.h>

#include "zipcox/cone.hpp"
#include "zipcox/u3.hpp"

using namespace zipcox;

namespace {

// Literal count of the four conditions, with F(λ) compared as a rational.
std::int64_t dim_oracle(const Weight3& l, std::int64_t p) {
  std::int64_t n = 0;
  Rational F = F_lambda(l, p);
  for (std::int64_t i = 0; i <= l[0] - l[1]; ++i) {
    bool ok = i % p == 0 && (l[1] + i) % (p + 1) == 0 && (l[0] - i - p * l[2]) % (p * p - 1) == 0 && Rational(i) >= F;
    n += ok;
  }
  return n;
}

} // namespace

TEST_CASE("F") {
  CHECK(F_lambda({0, 0, 0}, 3) == 0);
  for (std::int64_t p : {2, 3, 5})
    CHECK(F_lambda(ha_mu(p), p) == make_rational(-p * (p + 1) * (p - 1), p * p - p + 1));
  CHECK(F_lambda({1, 0, 2}, 2) == 0);
}

TEST_CASE("dimension examples") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    CHECK(dim_h0_u3(ha1(p), p) == 1);
    CHECK(qualifying_indices(ha1(p), p) == std::vector<std::int64_t>{0});
    CHECK(dim_h0_u3(ha2(p), p) == 1);
    CHECK(qualifying_indices(ha2(p), p) == std::vector<std::int64_t>{p});
    CHECK(dim_h0_u3(ha_mu(p), p) == 1);
  }
  CHECK(dim_h0_u3({3, 0, 2}, 2) == 0);
  CHECK(dim_h0_u3({0, 3, 0}, 2) == 0);
}

TEST_CASE("closed form agrees with the literal count") {
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t a = -12; a <= 12; ++a)
      for (std::int64_t b = -12; b <= 12; ++b)
        for (std::int64_t c = -12; c <= 12; ++c) {
          Weight3 l{a, b, c};
          std::int64_t d = dim_h0_u3(l, p);
          CHECK(d == dim_oracle(l, p));
          CHECK(d <= std::max<std::int64_t>(0, a - b + 1));
          if (d >= 1)
            CHECK(czip_u3_contains(l, p));
        }
}

TEST_CASE("C_zip membership") {
  for (std::int64_t p : {2, 3, 5}) {
    Weight3 det = lambda_det(p, U3Case::Inert);
    for (const Weight3& w : {ha1(p), ha2(p), ha_mu(p), det, Weight3{-det[0], -det[1], -det[2]}})
      CHECK(czip_u3_contains(w, p));
    CHECK(czip_u3_contains({0, 0, 0}, p));
  }
  CHECK_FALSE(czip_u3_contains({1, 0, 0}, 2));
}

TEST_CASE("C_zip agrees with the Eff cone on (a, a, c)") {
  for (std::int64_t p : {2, 3}) {
    ZipDatum u(BasedRootDatum(unitary_spec(3, p)), QVector{1, 1, 0});
    RationalCone e = eff_cone(u);
    std::int64_t b = 3 * p * (p + 1);
    for (std::int64_t a = -b; a <= b; ++a)
      for (std::int64_t c = -b; c <= b; ++c)
        CHECK(czip_u3_contains({a, a, c}, p) == e.contains(QVector{a, a, c}));
  }
}

TEST_CASE("decomposition") {
  std::int64_t p = 3;
  U3Decomposition d1 = decompose_generators(ha1(p), p, 0);
  CHECK(d1.k1 == 1);
  CHECK(d1.k2 == 0);
  CHECK(d1.k_mu == 0);
  CHECK(d1.k_det == 0);
  U3Decomposition dm = decompose_generators(ha_mu(p), p, 0);
  CHECK(dm.k_mu == 1);
  CHECK(dm.k1 + dm.k2 + dm.k_det == 0);
  Weight3 s{ha1(p)[0] + ha2(p)[0] + p + 1, ha1(p)[1] + ha2(p)[1] + p + 1, ha1(p)[2] + ha2(p)[2] + p + 1};
  U3Decomposition ds = decompose_generators(s, p, p);
  CHECK(ds.k1 == 1);
  CHECK(ds.k2 == 1);
  CHECK(ds.k_mu == 0);
  CHECK(ds.k_det == 1);
  CHECK(ds.nu == Weight3{s[0] - p, s[1] + p, s[2]});
  CHECK_THROWS_AS(decompose_generators(ha1(p), p, 1), InputError);
}

TEST_CASE("det shift and split correspondence") {
  CHECK(det_shift({0, 0, 0}, 3, U3Case::Split) == Weight3{-2, -2, -2});
  CHECK(det_shift({1, 0, 2}, 2, U3Case::Inert) == Weight3{4, 3, 5});
  CHECK(split_correspondence({5, 2, 0}) == std::pair<std::int64_t, std::int64_t>{5, 2});
  CHECK(split_correspondence({0, 0, 0}) == std::pair<std::int64_t, std::int64_t>{0, 0});
  CHECK_THROWS_WITH_AS(split_correspondence({1, 1, 1}), doctest::Contains("det_shift"), InputError);
}

TEST_CASE("small scan") {
  CzipScan s = czip_scan(2, 8);
  CHECK(s.ok());
  CHECK(s.h0_points == s.monoid_points);
}

TEST_CASE("input guards") {
  CHECK_THROWS_AS(dim_h0_u3({0, 0, 0}, 4), InputError);
  CHECK_THROWS_AS(dim_h0_u3({2000000000000LL, 0, 0}, 2), InputError);
}
