// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "zipcox/cone.hpp"
#include "zipcox/datum_io.hpp"
#include "zipcox/ff_verify.hpp"
#include "zipcox/sections.hpp"
#include "zipcox/u3.hpp"
#include "zipcox/weyl.hpp"

using namespace zipcox;

namespace {

const char* const bundled[] = {"gl3_split.json", "u3_inert.json", "sl2_weil2.json", "sl2_weil3.json",
                               "c2_split.json"};

DatumFile bundled_file(const std::string& name) { return load_datum(std::string(ZIPCOX_DATA_DIR) + "/" + name); }

ZipDatum bundled_zip(const std::string& name) { return zip_from_file(bundled_file(name)); }

// Collects failures for one criterion; the first few are shown.
struct Check {
  std::size_t count = 0, failures = 0;
  std::ostringstream first;
  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures++ < 3)
      first << "\n    " << what;
  }
};

int report(int n, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures++;
    c.first << "\n    exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (c.failures == 0 ? "PASS" : "FAIL") << " " << n << " " << title << " (" << c.count << " checks, "
            << c.failures << " failed, " << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s)" << c.first.str() << std::endl;
  return c.failures == 0 ? 0 : 1;
}

bool is_identity(const std::vector<IntVector>& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0))
        return false;
  return true;
}

// Integer points of the cube ‖x‖∞ ≤ box in dimension n.
void for_box(std::size_t n, std::int64_t box, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> x(n, -box);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < n && x[k] == box)
      x[k++] = -box;
    if (k == n)
      return;
    ++x[k];
  }
}

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

// Membership in the monoid generated by gens, by recursion on a grading that
// is positive on the pointed cone.
struct MonoidOracle {
  const RationalCone& cone;
  std::vector<QVector> gens;
  QVector deg;
  std::map<QVector, bool> memo;

  bool generated(const QVector& x) {
    if (x.is_zero())
      return true;
    if (dot(deg, x) <= 0)
      return false;
    auto it = memo.find(x);
    if (it != memo.end())
      return it->second;
    bool ok = false;
    for (const auto& g : gens) {
      QVector y = x - g;
      if (cone.contains(y) && generated(y)) {
        ok = true;
        break;
      }
    }
    return memo[x] = ok;
  }
};

void criterion1(Check& c) {
  for (const char* name : bundled) {
    ZipDatum z = bundled_zip(name);
    bool split = is_identity(z.datum().spec().sigma_char);
    for (std::size_t a : z.parabolic()) {
      QVector d = z.delta(a);
      c(d - Rational(static_cast<long>(z.p())) * (z.datum().sigma_cochar() * d) == z.datum().simple_coroot(a),
        std::string(name) + ": δ − pσ(δ) ≠ α∨ for " + simple_name(a));
      c(wp_star(z.datum(), d) == z.datum().simple_coroot(a), std::string(name) + ": ℘∗ mismatch");
      if (split)
        c(d == make_rational(-1, z.p() - 1) * z.datum().simple_coroot(a),
          std::string(name) + ": split δ ≠ −α∨/(p−1)");
    }
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    ZipDatum u(BasedRootDatum(unitary_spec(3, p)), QVector{1, 1, 0});
    QVector expect = make_rational(-1, p * p - 1) * QVector{p, 1 - p, -1};
    c(u.parabolic() == SimpleSet{1} && u.delta(1) == expect, "U(3) δ at p = " + std::to_string(p));
  }
}

void criterion2(Check& c) {
  for (const char* name : bundled) {
    ZipDatum z = bundled_zip(name);
    const auto& basis = z.xl().basis();
    std::size_t np = z.parabolic().size();
    if (np == 0 || basis.empty()) {
      c(np == 0, std::string(name) + ": empty XL with nonempty Δᴾ");
      continue;
    }
    QMatrix m(np, basis.size());
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        m[i][j] = dot(basis[j], z.delta(z.parabolic()[i]));
    c(rank(m) == np, std::string(name) + ": pairing matrix rank");
    c(z.xl().rank() - z.xg().rank() == np, std::string(name) + ": rank XL − rank XG");
  }
}

void criterion3(Check& c) {
  for (const char* name : bundled) {
    ZipDatum z = bundled_zip(name);
    WeylGroup W(z.datum(), z.roots());
    std::string tag = name;
    SimpleSet all;
    for (std::size_t i = 0; i < W.num_simple(); ++i)
      all.push_back(i);
    std::size_t w0 = W.longest_element(all);
    std::size_t w0I = W.longest_element(z.levi());
    auto reps = W.minimal_coset_reps(z.levi());
    c(reps.size() * W.parabolic_subgroup(z.levi()).size() == W.size(), tag + ": |ᴵW|·|W_I| ≠ |W|");
    StrataPoset P = strata_poset(z, W);
    std::size_t n = P.strata.size();
    c(n == reps.size(), tag + ": stratum count");
    c(P.strata[P.top].length == W.length(w0) - W.length(w0I), tag + ": top length");
    c(P.strata[P.top].dim == z.dim_G(), tag + ": open stratum dimension");
    c(z.dim_G() == z.rank() + 2 * z.roots().positive_roots.size(), tag + ": dim G");
    for (std::size_t a = 0; a < n; ++a) {
      c(P.order[a][a], tag + ": reflexivity");
      c(P.strata[a].dim == P.strata[a].length + z.dim_P(), tag + ": dim = ℓ + dim P");
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && P.order[a][b]) {
          c(!P.order[b][a], tag + ": antisymmetry");
          c(P.strata[a].length < P.strata[b].length, tag + ": order not length-increasing");
        }
        for (std::size_t d = 0; d < n; ++d)
          if (P.order[a][b] && P.order[b][d])
            c(P.order[a][d], tag + ": transitivity");
      }
    }
    std::size_t codim1 = 0;
    for (const auto& s : P.strata)
      codim1 += s.dim + 1 == z.dim_G();
    c(codim1 == z.parabolic().size() && P.codim_one.size() == z.parabolic().size(), tag + ": codim-one count");
  }
  RootDatumSpec c2 = bundled_file("c2_split.json").spec;
  for (const RootDatumSpec& s : {gl_spec(3, 2), gl_spec(4, 2), c2}) {
    BasedRootDatum d(s);
    RootSystem r = generate_roots(d);
    WeylGroup W(d, r);
    for (std::size_t b = 0; b < W.size(); ++b) {
      auto below = subword_products(W, b);
      for (std::size_t a = 0; a < W.size(); ++a)
        c(W.bruhat_leq(a, b) == (below.count(a) > 0), "Bruhat order differs from the subword oracle");
    }
  }
}

void criterion4(Check& c) {
  for (const char* name : bundled) {
    ZipDatum z = bundled_zip(name);
    RationalCone eff = eff_cone(z);
    std::int64_t box = 2 * z.p();
    for_box(z.rank(), box, [&](const std::vector<std::int64_t>& x) {
      QVector l = QVector::from_ints(x);
      if (!z.xl().contains(l))
        return;
      bool kw = kw_condition(z, l), mo = has_mu_ordinary_hasse(z, l), up = h0_nonzero_up_to_power(z, l);
      std::string where = std::string(name) + " at " + l.str();
      c(!kw || mo, where + ": kw without Hasse invariant");
      c(!mo || up, where + ": Hasse invariant without sections");
      c(up == eff.contains(l), where + ": sections disagree with Eff");
    });
  }
}

void criterion5(Check& c) {
  for (std::int64_t p : {2, 3, 5}) {
    CzipScan s = czip_scan(p, 3 * p * (p + 1));
    std::string tag = "p = " + std::to_string(p) + ": ";
    c(s.h0_points > 0 && s.h0_points == s.monoid_points, tag + "point counts differ");
    c(s.only_h0 == 0, tag + std::to_string(s.only_h0) + " points with sections outside the monoid");
    c(s.only_monoid == 0, tag + std::to_string(s.only_monoid) + " monoid points without sections");
    c(s.decomposition_failures == 0, tag + "decomposition failures");
    c(s.saturation_mismatches == 0, tag + "half-spaces differ from the saturation");
  }
}

void criterion6(Check& c) {
  for (std::int64_t p : {2, 3, 5}) {
    std::string tag = "p = " + std::to_string(p) + ": ";
    ZipDatum u(BasedRootDatum(unitary_spec(3, p)), QVector{1, 1, 0});
    RationalCone gs = gs_cone(u), pha = pha_cone(u), eff = eff_cone(u);
    std::int64_t box = 3 * p * (p + 1);
    std::size_t bad = 0;
    for_box(3, box, [&](const std::vector<std::int64_t>& x) {
      if (gs.contains(QVector::from_ints(x)) && !czip_u3_contains({x[0], x[1], x[2]}, p))
        ++bad;
    });
    c(bad == 0, tag + std::to_string(bad) + " points of C_GS outside C_zip");
    Weight3 a = ha1(p), b = ha2(p), m = ha_mu(p);
    std::set<QVector> rays(pha.rays().begin(), pha.rays().end());
    c(rays == std::set<QVector>{QVector{a[0], a[1], a[2]}, QVector{b[0], b[1], b[2]}}, tag + "C_pHa rays");
    c(pha.lineality().size() == 1 && primitive(pha.lineality()[0]) == QVector{1, 1, 1}, tag + "C_pHa lineality");
    auto imgs = pha_generator_images(u);
    std::set<QVector> gen(imgs.begin(), imgs.end());
    QVector d{p + 1, p + 1, p + 1};
    c(gen == std::set<QVector>{QVector{a[0], a[1], a[2]}, QVector{b[0], b[1], b[2]}, d, -d},
      tag + "C_pHa generators");
    QVector hm{m[0], m[1], m[2]};
    c(czip_u3_contains(m, p) && eff.contains(hm) && !pha.contains(hm), tag + "ha_mu not in C_zip ∖ C_pHa");
    c(!is_hasse_type(u), tag + "U(3) classified Hasse-type");
    c(is_hasse_type(ZipDatum(BasedRootDatum(gl_spec(3, p)), QVector{1, 1, 0})), tag + "GL3 not Hasse-type");
  }
}

void criterion7(Check& c) {
  for (std::int64_t p : {2, 3, 5}) {
    for (Section s : {Section::Ha1, Section::Ha2, Section::HaMu, Section::Det}) {
      EquivarianceReport r = check_equivariance(s, U3Case::Inert, p, 6, 100, 42);
      c(r.ok() && r.passed == 100, "inert " + to_string(s) + " at p = " + std::to_string(p));
    }
    EquivarianceReport r = check_equivariance(Section::Det, U3Case::Split, p, 6, 100, 42);
    c(r.ok() && r.passed == 100, "split det at p = " + std::to_string(p));
    auto f = make_field(p, 6);
    FqMatrix3 s2(f);
    s2(0, 0) = s2(1, 2) = s2(2, 1) = f->one();
    c(evaluate_section(Section::HaMu, FqMatrix3::identity(f)) == f->one(), "Ha_mu(1) ≠ 1");
    c(evaluate_section(Section::HaMu, s2) == f->zero(), "Ha_mu(s2) ≠ 0");
  }
}

void criterion8(Check& c) {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 20) {
    std::size_t dim = done < 8 ? 2 : 3;
    std::vector<QVector> gens;
    for (std::size_t r = 0; r < dim + rng() % 2; ++r) {
      QVector v(dim);
      for (std::size_t i = 0; i < dim; ++i)
        v[i] = static_cast<long>(rng() % 11) - 5;
      if (!v.is_zero())
        gens.push_back(v);
    }
    RationalCone cone = RationalCone::from_rays(Lattice::full(dim), gens);
    if (!cone.is_pointed() || cone.dimension() != dim)
      continue;
    ++done;
    std::string tag = "cone " + std::to_string(done) + ": ";
    auto hb = hilbert_basis(cone);
    QVector deg = zero_vector(dim);
    for (const auto& f : cone.halfspaces())
      deg += f;
    MonoidOracle all{cone, hb, deg, {}};
    for_box(dim, 10, [&](const std::vector<std::int64_t>& x) {
      QVector v = QVector::from_ints(x);
      if (cone.contains(v))
        c(all.generated(v), tag + v.str() + " does not decompose");
    });
    for (std::size_t i = 0; i < hb.size(); ++i) {
      c(cone.contains(hb[i]), tag + "basis element outside the cone");
      std::vector<QVector> others;
      for (std::size_t j = 0; j < hb.size(); ++j)
        if (j != i)
          others.push_back(hb[j]);
      MonoidOracle o{cone, others, deg, {}};
      c(!o.generated(hb[i]), tag + hb[i].str() + " is redundant");
    }
  }
}

std::set<QVector> normalized(const std::vector<QVector>& forms) {
  std::set<QVector> s;
  for (const auto& f : forms)
    s.insert(primitive(f));
  return s;
}

void criterion9(Check& c) {
  std::vector<std::pair<ZipDatum, ZipDatum>> pairs;
  pairs.emplace_back(bundled_zip("gl3_split.json"), bundled_zip("u3_inert.json"));
  pairs.emplace_back(bundled_zip("u3_inert.json"), bundled_zip("c2_split.json"));
  pairs.emplace_back(bundled_zip("gl3_split.json"), bundled_zip("c2_split.json"));
  pairs.emplace_back(bundled_zip("sl2_weil2.json"), bundled_zip("sl2_weil3.json"));
  for (std::int64_t p : {2, 5})
    pairs.emplace_back(ZipDatum(BasedRootDatum(unitary_spec(3, p)), QVector{1, 1, 0}),
                       ZipDatum(BasedRootDatum(gl_spec(3, p)), QVector{2, 1, 0}));
  for (const auto& [a, b] : pairs) {
    RationalCone ca = eff_cone(a), cb = eff_cone(b);
    std::set<QVector> expect;
    for (const auto& f : ca.halfspaces())
      expect.insert(primitive(concat(f, zero_vector(b.rank()))));
    for (const auto& f : cb.halfspaces())
      expect.insert(primitive(concat(zero_vector(a.rank()), f)));
    RationalCone prod = eff_cone(product_zip(a, b));
    c(normalized(prod.halfspaces()) == expect, "halfspaces of the product differ");
    c(prod.ambient().rank() == ca.ambient().rank() + cb.ambient().rank(), "ambient rank of the product");
  }
}

void criterion10(Check& c) {
  for (std::int64_t p : {2, 3, 5}) {
    std::int64_t box = 3 * p * (p + 1);
    std::size_t bad = 0;
    for_box(3, box, [&](const std::vector<std::int64_t>& x) {
      Weight3 l{x[0], x[1], x[2]};
      bad += dim_h0_u3(det_shift(l, p, U3Case::Inert), p) != dim_h0_u3(l, p);
    });
    c(bad == 0, "p = " + std::to_string(p) + ": " + std::to_string(bad) + " shift mismatches");
  }
}

} // namespace

int main() {
  int failed = 0;
  failed += report(1, "δ_α solves δ − pσ(δ) = α∨", criterion1);
  failed += report(2, "linear independence of the δ_α", criterion2);
  failed += report(3, "stratification and Bruhat order", criterion3);
  failed += report(4, "section criteria on weight grids", criterion4);
  failed += report(5, "U(3) monoid equals {dim H0 ≥ 1}", criterion5);
  failed += report(6, "U(3) cone relations", criterion6);
  failed += report(7, "equivariance over F_{p^6}", criterion7);
  failed += report(8, "Hilbert basis oracle", criterion8);
  failed += report(9, "Eff cone of a product", criterion9);
  failed += report(10, "det-shift invariance", criterion10);
  return failed == 0 ? 0 : 1;
}
