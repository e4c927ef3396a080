#include <doctest.h>

#include <functional>
#include <set>

#include "zipcox/weyl.hpp"

using namespace zipcox;

namespace {

// Subword criterion: a ≤ b iff a reduced word of a is a subword of a fixed
// reduced word of b.  Products of all subwords are enumerated directly.
std::set<std::size_t> subword_products(const WeylGroup& W, std::size_t b) {
  const auto& word = W[b].reduced_word;
  std::set<std::size_t> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << word.size()); ++mask) {
    std::size_t w = 0;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1)
        w = W.right_mult(w, word[k]);
    out.insert(w);
  }
  return out;
}

void check_bruhat_against_subwords(const RootDatumSpec& s) {
  BasedRootDatum d(s);
  RootSystem r = generate_roots(d);
  WeylGroup W(d, r);
  for (std::size_t b = 0; b < W.size(); ++b) {
    auto below = subword_products(W, b);
    for (std::size_t a = 0; a < W.size(); ++a)
      CHECK(W.bruhat_leq(a, b) == (below.count(a) > 0));
  }
}

RootDatumSpec c2_spec() {
  RootDatumSpec c2;
  c2.p = 3;
  c2.rank = 2;
  c2.simple_roots = {QVector{1, -1}, QVector{0, 2}};
  c2.simple_coroots = {QVector{1, -1}, QVector{0, 1}};
  c2.sigma_char = {{1, 0}, {0, 1}};
  return c2;
}

} // namespace

TEST_CASE("enumeration") {
  BasedRootDatum gl3(gl_spec(3, 2));
  RootSystem r = generate_roots(gl3);
  WeylGroup W(gl3, r);
  REQUIRE(W.size() == 6);
  std::vector<int> lengths;
  for (const auto& e : W.elements())
    lengths.push_back(e.length);
  CHECK(lengths == std::vector<int>{0, 1, 1, 2, 2, 3});
  for (std::size_t w = 0; w < W.size(); ++w) {
    CHECK(W.inversion_count(w) == W.length(w));
    IMatrix prod = IMatrix::identity(3);
    for (std::size_t i : W[w].reduced_word)
      prod = prod * gl3.reflection(i);
    CHECK(prod == W[w].action);
  }

  BasedRootDatum c2(c2_spec());
  RootSystem rc = generate_roots(c2);
  WeylGroup Wc(c2, rc);
  CHECK(Wc.size() == 8);
  CHECK(Wc.length(Wc.size() - 1) == 4);

  CHECK_THROWS_AS(WeylGroup(gl3, r, 5), ResourceError);
}

TEST_CASE("Bruhat order matches the subword criterion") {
  check_bruhat_against_subwords(gl_spec(3, 2));
  check_bruhat_against_subwords(gl_spec(4, 2));
  check_bruhat_against_subwords(c2_spec());
}

TEST_CASE("Bruhat examples on S3") {
  BasedRootDatum gl3(gl_spec(3, 2));
  RootSystem r = generate_roots(gl3);
  WeylGroup W(gl3, r);
  std::size_t s1 = W.left_mult(0, 0), s2 = W.left_mult(1, 0);
  std::size_t s1s2 = W.multiply(s1, s2);
  CHECK(W.bruhat_leq(s1, s1s2));
  CHECK_FALSE(W.bruhat_leq(s1, s2));
  for (std::size_t w = 0; w < W.size(); ++w) {
    CHECK(W.bruhat_leq(0, w));
    CHECK(W.bruhat_leq(w, w));
  }
}

TEST_CASE("longest elements and cosets") {
  BasedRootDatum gl3(gl_spec(3, 2));
  RootSystem r = generate_roots(gl3);
  WeylGroup W(gl3, r);
  CHECK(W.length(W.longest_element({0})) == 1);
  CHECK(W.length(W.longest_element({0, 1})) == 3);
  CHECK(W.longest_element({}) == 0);

  auto reps = W.minimal_coset_reps({0});
  std::vector<std::string> words;
  for (std::size_t w : reps)
    words.push_back(word_string(W[w].reduced_word));
  CHECK(words == std::vector<std::string>{"e", "s2", "s2s1"});
  CHECK(W.minimal_coset_reps({}).size() == 6);
  CHECK(W.minimal_coset_reps({0, 1}) == std::vector<std::size_t>{0});
}

TEST_CASE("strata of GL3 type (2,1)") {
  ZipDatum z(BasedRootDatum(gl_spec(3, 2)), QVector{1, 1, 0});
  WeylGroup W(z.datum(), z.roots());
  StrataPoset P = strata_poset(z, W);
  REQUIRE(P.strata.size() == 3);
  CHECK(P.dim_P == 7);
  CHECK(P.strata[P.top].dim == 9);
  CHECK(P.codim_one.size() == 1);
  // e ≼ s2 ≼ s2s1 is a chain
  CHECK(P.order[0][1]);
  CHECK(P.order[1][2]);
  CHECK_FALSE(P.order[2][1]);
  CHECK(P.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
  CHECK(word_string(W[z_element(z, W)].reduced_word) == "s2s1");
}

TEST_CASE("twisted order is a graded partial order") {
  std::vector<std::pair<RootDatumSpec, QVector>> cases = {
      {gl_spec(4, 3), QVector{2, 1, 0, 0}},
      {unitary_spec(4, 3), QVector{2, 1, 0, 0}},
      {unitary_spec(3, 2), QVector{1, 1, 0}},
      {weil_restriction_spec(gl_spec(3, 2), 2), QVector{1, 0, 0, 1, 1, 0}},
      {c2_spec(), QVector{1, 1}},
  };
  for (auto& [spec, mu] : cases) {
    ZipDatum z(BasedRootDatum(spec), mu);
    WeylGroup W(z.datum(), z.roots());
    StrataPoset P = strata_poset(z, W);
    std::size_t n = P.strata.size();
    CHECK(n * W.parabolic_subgroup(z.levi()).size() == W.size());
    std::size_t codim1 = 0;
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(P.order[a][a]);
      CHECK(P.order[a][P.top]);
      codim1 += P.strata[a].length + 1 == P.strata[P.top].length;
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && P.order[a][b]) {
          CHECK_FALSE(P.order[b][a]);
          CHECK(P.strata[a].length < P.strata[b].length);
        }
        for (std::size_t c = 0; c < n; ++c)
          if (P.order[a][b] && P.order[b][c])
            CHECK(P.order[a][c]);
      }
    }
    CHECK(codim1 == z.parabolic().size());
    CHECK(P.codim_one.size() == z.parabolic().size());
  }
}

TEST_CASE("P = G has one stratum") {
  ZipDatum z(BasedRootDatum(gl_spec(3, 2)), QVector{0, 0, 0});
  WeylGroup W(z.datum(), z.roots());
  StrataPoset P = strata_poset(z, W);
  REQUIRE(P.strata.size() == 1);
  CHECK(P.strata[0].dim == 9);
}

TEST_CASE("Borel case has all of W") {
  ZipDatum z(BasedRootDatum(gl_spec(3, 2)), QVector{2, 1, 0});
  WeylGroup W(z.datum(), z.roots());
  CHECK(strata_poset(z, W).strata.size() == 6);
  CHECK(z_element(z, W) == W.longest_element({0, 1}));
}
