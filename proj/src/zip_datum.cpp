#include "zipcox/zip_datum.hpp"

#include <algorithm>

namespace zipcox {

ZipDatum::ZipDatum(BasedRootDatum datum, QVector mu, const Limits& limits)
    : datum_(std::move(datum)), mu_(std::move(mu)) {
  std::size_t n = datum_.rank(), r = datum_.num_simple();
  if (mu_.size() != n)
    fail_input("mu has length " + std::to_string(mu_.size()) + ", expected rank " +
               std::to_string(n));
  if (!mu_.is_integral())
    fail_input("mu must be integral");
  for (std::size_t i = 0; i < r; ++i) {
    Rational c = dot(datum_.simple_root(i), mu_);
    if (c < 0)
      fail_input("<alpha" + std::to_string(i + 1) + ", mu> = " + to_string(c) +
                 " < 0: normalize mu into the dominant chamber");
    (c == 0 ? I_ : DeltaP_).push_back(i);
  }
  roots_ = generate_roots(datum_, limits.enumeration);
  levi_pos_ = roots_.levi_positive(I_);

  d_.assign(r, 0);
  m_.assign(r, 0);
  delta_.assign(r, QVector());
  for (std::size_t a : DeltaP_) {
    int d = 1;
    for (std::size_t b = datum_.sigma_perm(a); b != a; b = datum_.sigma_perm(b))
      ++d;
    d_[a] = d;
    int m = 1;
    for (std::size_t b = datum_.sigma_perm_inverse(a); in_levi(b);
         b = datum_.sigma_perm_inverse(b))
      ++m;
    m_[a] = m;
    delta_[a] = delta_closed_form(datum_, a, d);
    if (wp_star(datum_, delta_[a]) != datum_.simple_coroot(a))
      fail_defect("delta_" + simple_name(a) + " fails delta - p sigma(delta) = alpha^vee");
  }

  std::vector<QVector> levi_coroots, all_coroots;
  for (std::size_t i = 0; i < r; ++i) {
    all_coroots.push_back(datum_.simple_coroot(i));
    if (in_levi(i))
      levi_coroots.push_back(datum_.simple_coroot(i));
  }
  xl_ = Lattice(n, kernel_basis(QMatrix(levi_coroots, n)));
  xg_ = Lattice(n, kernel_basis(QMatrix(all_coroots, n)));
}

bool ZipDatum::in_levi(std::size_t i) const {
  return std::binary_search(I_.begin(), I_.end(), i);
}

void ZipDatum::require_parabolic(std::size_t alpha) const {
  if (alpha >= datum_.num_simple() || in_levi(alpha))
    fail_input(simple_name(alpha) + " is not in Delta^P");
}

int ZipDatum::d(std::size_t alpha) const {
  require_parabolic(alpha);
  return d_[alpha];
}

int ZipDatum::m(std::size_t alpha) const {
  require_parabolic(alpha);
  return m_[alpha];
}

const QVector& ZipDatum::delta(std::size_t alpha) const {
  require_parabolic(alpha);
  return delta_[alpha];
}

std::size_t ZipDatum::dim_P() const {
  return datum_.rank() + roots_.positive_roots.size() + levi_pos_.size();
}

std::size_t ZipDatum::dim_G() const {
  return datum_.rank() + 2 * roots_.positive_roots.size();
}

ZipDatum build_zip_datum(BasedRootDatum datum, QVector mu, const Limits& limits) {
  return ZipDatum(std::move(datum), std::move(mu), limits);
}

int d_alpha(const ZipDatum& z, std::size_t alpha) { return z.d(alpha); }
int m_alpha(const ZipDatum& z, std::size_t alpha) { return z.m(alpha); }
QVector delta_alpha(const ZipDatum& z, std::size_t alpha) { return z.delta(alpha); }
Lattice xstar_L(const ZipDatum& z) { return z.xl(); }
Lattice xstar_G(const ZipDatum& z) { return z.xg(); }

QVector wp_star(const BasedRootDatum& d, const QVector& delta) {
  return delta - Rational(static_cast<long>(d.p())) * frobenius_cochar(d, delta);
}

QVector delta_closed_form(const BasedRootDatum& d, std::size_t alpha, int e) {
  Integer p = static_cast<long>(d.p());
  QVector sum(d.rank());
  QVector term = d.simple_coroot(alpha);
  Integer pi = 1;
  for (int i = 0; i < e; ++i) {
    sum += Rational(pi) * term;
    term = frobenius_cochar(d, term);
    pi *= p;
  }
  return make_rational(-1, pi - 1) * sum;
}

ZipDatum product_zip(const ZipDatum& a, const ZipDatum& b) {
  return ZipDatum(BasedRootDatum(direct_sum(a.datum().spec(), b.datum().spec())),
                  concat(a.mu(), b.mu()));
}

} // namespace zipcox
