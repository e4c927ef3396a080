#include <doctest.h>

#include "zipcox/errors.hpp"
#include "zipcox/ff_verify.hpp"

using namespace zipcox;

namespace {

FqMatrix3 random_matrix(const FieldPtr& f, std::mt19937_64& rng) {
  FqMatrix3 a(f);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a(i, j) = f->random(rng);
  return a;
}

FqMatrix3 diag(const FieldPtr& f, const FqElement& a, const FqElement& b, const FqElement& c) {
  FqMatrix3 d(f);
  d(0, 0) = a;
  d(1, 1) = b;
  d(2, 2) = c;
  return d;
}

} // namespace

TEST_CASE("Frobenius on matrices") {
  auto fp = make_field(5, 1);
  std::mt19937_64 rng(1);
  FqMatrix3 a = random_matrix(fp, rng);
  CHECK(frobenius_matrix(U3Case::Split, a) == a);

  auto f = make_field(3, 2);
  CHECK(frobenius_matrix(U3Case::Inert, FqMatrix3::identity(f)) == FqMatrix3::identity(f));
  CHECK_THROWS_AS(frobenius_matrix(U3Case::Inert, FqMatrix3(f)), InputError);
  int tested = 0;
  while (tested < 100) {
    FqMatrix3 b = random_matrix(f, rng);
    if (b.det().is_zero())
      continue;
    CHECK(frobenius_matrix(U3Case::Inert, frobenius_matrix(U3Case::Inert, b)) == b);
    ++tested;
  }
}

TEST_CASE("shapes of Q") {
  auto f = make_field(2, 2);
  Pattern split = unipotent_image_pattern(f, U3Case::Split);
  CHECK(split == unipotent_pattern());
  Pattern inert = unipotent_image_pattern(f, U3Case::Inert);
  Pattern expect{};
  expect[0][1] = expect[0][2] = true;
  CHECK(inert == expect);
  Pattern m = levi_image_pattern(f, U3Case::Inert);
  Pattern mexpect{};
  mexpect[0][0] = mexpect[1][1] = mexpect[1][2] = mexpect[2][1] = mexpect[2][2] = true;
  CHECK(m == mexpect);
}

TEST_CASE("zip pairs") {
  auto f = make_field(3, 6);
  for (U3Case c : {U3Case::Split, U3Case::Inert}) {
    ZipPair id = make_zip_pair(f, c, FqMatrix3::identity(f), FqMatrix3::identity(f));
    CHECK(id.y == FqMatrix3::identity(f));
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
      CHECK_NOTHROW(sample_zip_pair(f, c, seed));
  }
  std::mt19937_64 rng(5);
  FqElement t1 = f->random_nonzero(rng), t2 = f->random_nonzero(rng), t3 = f->random_nonzero(rng);
  FqMatrix3 t = diag(f, t1, t2, t3);
  CHECK(make_zip_pair(f, U3Case::Split, t, FqMatrix3::identity(f)).y ==
        diag(f, t1.frobenius(), t2.frobenius(), t3.frobenius()));
  CHECK(make_zip_pair(f, U3Case::Inert, t, FqMatrix3::identity(f)).y ==
        diag(f, t3.frobenius().inverse(), t2.frobenius().inverse(), t1.frobenius().inverse()));
  FqMatrix3 upper = FqMatrix3::identity(f);
  upper(0, 2) = f->one();
  CHECK_THROWS_AS(make_zip_pair(f, U3Case::Split, upper, FqMatrix3::identity(f)), InputError);
}

TEST_CASE("section values") {
  auto f = make_field(2, 3);
  FqMatrix3 id = FqMatrix3::identity(f);
  CHECK(evaluate_section(Section::Ha1, id) == f->one());
  CHECK(evaluate_section(Section::Ha2, id) == f->zero());
  CHECK(evaluate_section(Section::HaMu, id) == f->one());
  FqMatrix3 s2(f);
  s2(0, 0) = s2(1, 2) = s2(2, 1) = f->one();
  CHECK(evaluate_section(Section::HaMu, s2) == f->zero());
  FqMatrix3 d = diag(f, f->generator(), f->generator() + f->one(), f->generator());
  CHECK(evaluate_section(Section::Det, d) == f->generator() * (f->generator() + f->one()) * f->generator());
}

TEST_CASE("equivariance at the expected weights") {
  for (std::int64_t p : {2, 3}) {
    for (Section s : {Section::Ha1, Section::Ha2, Section::HaMu, Section::Det})
      CHECK(check_equivariance(s, U3Case::Inert, p, 4, 40, 9).ok());
    CHECK(check_equivariance(Section::Det, U3Case::Split, p, 4, 40, 9).ok());
  }
}

TEST_CASE("torus weights pin down the exponents") {
  std::int64_t p = 3;
  auto f = make_field(p, 4);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    FqMatrix3 x = diag(f, f->random_nonzero(rng), f->random_nonzero(rng), f->random_nonzero(rng));
    FqMatrix3 y = frobenius_matrix(U3Case::Inert, x);
    FqMatrix3 g = random_matrix(f, rng);
    if (g.det().is_zero())
      continue;
    for (Section s : {Section::Ha1, Section::Ha2, Section::HaMu, Section::Det}) {
      Weight3 w = section_weight(s, U3Case::Inert, p);
      FqElement chi = x(0, 0).pow(w[0]) * x(1, 1).pow(w[1]) * x(2, 2).pow(w[2]);
      CHECK(evaluate_section(s, x * g * y.inverse()) == chi * evaluate_section(s, g));
    }
  }
}

TEST_CASE("rejected alternatives fail") {
  for (std::int64_t p : {2, 3}) {
    auto minor23 = [](const FqMatrix3& a) { return a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1); };
    CHECK_FALSE(check_equivariance("ha2_cols23", minor23, ha2(p), U3Case::Inert, p, 4, 40, 1).ok());
    std::int64_t q = p * p;
    auto hamu_q = [q](const FqMatrix3& a) {
      FqElement d1 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      FqElement d2 = a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0);
      return a(0, 0).pow(q) * d1 - a(1, 0).frobenius() * d2;
    };
    CHECK_FALSE(check_equivariance("ha_mu_q", hamu_q, ha_mu(p), U3Case::Inert, p, 4, 40, 1).ok());
    // wrong weight is caught and reported
    EquivarianceReport r = check_equivariance(
        "ha1", [](const FqMatrix3& a) { return evaluate_section(Section::Ha1, a); }, Weight3{1, 0, 0},
        U3Case::Inert, p, 4, 20, 3);
    CHECK_FALSE(r.ok());
    REQUIRE(r.counterexample);
    CHECK(r.counterexample->lhs != r.counterexample->rhs);
  }
}

TEST_CASE("reports are deterministic") {
  auto a = check_equivariance(Section::HaMu, U3Case::Inert, 5, 2, 10, 42);
  auto b = check_equivariance(Section::HaMu, U3Case::Inert, 5, 2, 10, 42);
  CHECK(a.passed == b.passed);
  auto f = make_field(5, 2);
  CHECK(sample_zip_pair(f, U3Case::Inert, 7).y == sample_zip_pair(f, U3Case::Inert, 7).y);
}
