#include "zipcox/ff_verify.hpp"

#include "zipcox/errors.hpp"

namespace zipcox {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

FqMatrix3 random_invertible(const FieldPtr& f, std::mt19937_64& rng) {
  for (;;) {
    FqMatrix3 g(f);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        g(i, j) = f->random(rng);
    if (!g.det().is_zero())
      return g;
  }
}

Pattern support_union(const std::vector<FqMatrix3>& ms, bool skip_diagonal) {
  Pattern p{};
  for (const auto& m : ms)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(skip_diagonal && i == j) && !m(i, j).is_zero())
          p[i][j] = true;
  return p;
}

} // namespace

FqMatrix3 frobenius_matrix(U3Case c, const FqMatrix3& a) {
  FqMatrix3 ap = a.entrywise_frobenius();
  if (c == U3Case::Split)
    return ap;
  FqMatrix3 ti = ap.transpose().inverse();
  FqMatrix3 r = ti;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = ti(2 - i, 2 - j);
  return r;
}

Pattern levi_pattern() {
  Pattern p{};
  p[0][0] = p[0][1] = p[1][0] = p[1][1] = p[2][2] = true;
  return p;
}

Pattern unipotent_pattern() {
  Pattern p{};
  p[0][2] = p[1][2] = true;
  return p;
}

FqMatrix3 mask(const FqMatrix3& a, const Pattern& keep) {
  FqMatrix3 r = a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!keep[i][j])
        r(i, j) = a(i, j) - a(i, j);
  return r;
}

namespace {

// Images of the elementary matrices I + E_ij spanning a pattern.
Pattern image_pattern(const FieldPtr& f, U3Case c, const Pattern& src) {
  std::vector<FqMatrix3> imgs;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (src[i][j] && i != j) {
        FqMatrix3 e = FqMatrix3::identity(f);
        e(i, j) = f->one();
        imgs.push_back(frobenius_matrix(c, e));
      }
  return support_union(imgs, true);
}

} // namespace

Pattern levi_image_pattern(const FieldPtr& f, U3Case c) {
  Pattern p = image_pattern(f, c, levi_pattern());
  for (int i = 0; i < 3; ++i)
    p[i][i] = true;
  return p;
}

Pattern unipotent_image_pattern(const FieldPtr& f, U3Case c) { return image_pattern(f, c, unipotent_pattern()); }

ZipPair make_zip_pair(const FieldPtr& f, U3Case c, const FqMatrix3& x, const FqMatrix3& u) {
  if (!x(0, 2).is_zero() || !x(1, 2).is_zero())
    fail_input("x is not in the lower parabolic");
  if (x.det().is_zero())
    fail_input("x is singular");
  Pattern ru = unipotent_image_pattern(f, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      bool ok = i == j ? u(i, j) == f->one() : (ru[i][j] || u(i, j).is_zero());
      if (!ok)
        fail_input("u is not in the unipotent radical of Q");
    }
  FqMatrix3 xl = mask(x, levi_pattern());
  FqMatrix3 phi = frobenius_matrix(c, xl);
  ZipPair z{x, phi * u};
  if (phi != mask(z.y, levi_image_pattern(f, c)))
    fail_defect("zip relation phi(theta_L(x)) = theta_M(y) fails");
  return z;
}

ZipPair sample_zip_pair(const FieldPtr& f, U3Case c, std::mt19937_64& rng) {
  FqMatrix3 x(f);
  for (int i = 0; i < 3; ++i) {
    x(i, i) = f->random_nonzero(rng);
    for (int j = 0; j < i; ++j)
      x(i, j) = f->random(rng);
  }
  FqMatrix3 u = FqMatrix3::identity(f);
  Pattern ru = unipotent_image_pattern(f, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (ru[i][j])
        u(i, j) = f->random(rng);
  return make_zip_pair(f, c, x, u);
}

ZipPair sample_zip_pair(const FieldPtr& f, U3Case c, std::uint64_t seed) {
  std::mt19937_64 rng = make_engine(seed, 0);
  return sample_zip_pair(f, c, rng);
}

std::string to_string(Section s) {
  switch (s) {
  case Section::Ha1:
    return "ha1";
  case Section::Ha2:
    return "ha2";
  case Section::HaMu:
    return "ha_mu";
  default:
    return "det";
  }
}

std::optional<Section> parse_section(const std::string& name) {
  for (Section s : {Section::Ha1, Section::Ha2, Section::HaMu, Section::Det})
    if (to_string(s) == name)
      return s;
  return std::nullopt;
}

Weight3 section_weight(Section s, U3Case c, std::int64_t p) {
  switch (s) {
  case Section::Ha1:
    return ha1(p);
  case Section::Ha2:
    return ha2(p);
  case Section::HaMu:
    return ha_mu(p);
  default:
    return lambda_det(p, c);
  }
}

FqElement evaluate_section(Section s, const FqMatrix3& a) {
  switch (s) {
  case Section::Ha1:
    return a(0, 0);
  case Section::Ha2:
    return a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0);
  case Section::HaMu: {
    FqElement d1 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    FqElement d2 = a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0);
    return a(0, 0).frobenius() * d1 - a(1, 0).frobenius() * d2;
  }
  default:
    return a.det();
  }
}

EquivarianceReport check_equivariance(const std::string& name, const SectionFn& fn, const Weight3& weight,
                                      U3Case c, std::int64_t p, int degree, std::size_t trials,
                                      std::uint64_t seed) {
  FieldPtr f = make_field(p, degree);
  EquivarianceReport r;
  r.section = name;
  r.weight = weight;
  r.zip_case = c;
  r.p = p;
  r.degree = degree;
  r.seed = seed;
  r.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng = make_engine(seed, t);
    ZipPair z = sample_zip_pair(f, c, rng);
    FqMatrix3 g = random_invertible(f, rng);
    FqElement lhs = fn(z.x * g * z.y.inverse());
    FqElement chi = z.x(0, 0).pow(weight[0]) * z.x(1, 1).pow(weight[1]) * z.x(2, 2).pow(weight[2]);
    FqElement rhs = chi * fn(g);
    if (lhs == rhs)
      ++r.passed;
    else if (!r.counterexample)
      r.counterexample = Counterexample{t, g, z.x, z.y, lhs, rhs};
  }
  return r;
}

EquivarianceReport check_equivariance(Section s, U3Case c, std::int64_t p, int degree, std::size_t trials,
                                      std::uint64_t seed) {
  return check_equivariance(
      to_string(s), [s](const FqMatrix3& a) { return evaluate_section(s, a); }, section_weight(s, c, p), c, p,
      degree, trials, seed);
}

} // namespace zipcox
