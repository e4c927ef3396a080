// Hilbert bases: placing triangulation of the extreme rays, then the lattice
// points of each fundamental parallelepiped, then irreducibility reduction.
#include <algorithm>
#include <set>

#include "zipcox/cone.hpp"

namespace zipcox {

namespace {

using Simplex = std::vector<std::size_t>;

// Facet normals of the full-dimensional pointed cone spanned by `rays` in Q^d.
std::vector<QVector> facets_of(std::size_t d, const std::vector<QVector>& rays) {
  DoubleDescription dual = double_description(d, rays);
  if (!dual.lineality.empty())
    fail_defect("facet computation on a cone that is not full-dimensional");
  return dual.rays;
}

std::vector<Simplex> placing_triangulation(std::size_t d, const std::vector<QVector>& rays) {
  Simplex first;
  std::vector<QVector> chosen;
  for (std::size_t i = 0; i < rays.size() && first.size() < d; ++i) {
    chosen.push_back(rays[i]);
    if (rank(QMatrix(chosen, d)) == chosen.size())
      first.push_back(i);
    else
      chosen.pop_back();
  }
  if (first.size() != d)
    fail_defect("rays do not span the quotient space");
  std::vector<Simplex> tri{first};
  std::vector<std::size_t> placed = first;

  for (std::size_t v = 0; v < rays.size(); ++v) {
    if (std::find(placed.begin(), placed.end(), v) != placed.end())
      continue;
    std::vector<QVector> current;
    for (std::size_t i : placed)
      current.push_back(rays[i]);
    std::vector<QVector> visible;
    for (const QVector& f : facets_of(d, current))
      if (dot(f, rays[v]) < 0)
        visible.push_back(f);
    std::vector<Simplex> added;
    for (const Simplex& s : tri)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop)
            face.push_back(s[j]);
        for (const QVector& f : visible) {
          bool on = std::all_of(face.begin(), face.end(),
                                [&](std::size_t i) { return dot(f, rays[i]) == 0; });
          if (on) {
            face.push_back(v);
            std::sort(face.begin(), face.end());
            added.push_back(face);
            break;
          }
        }
      }
    tri.insert(tri.end(), added.begin(), added.end());
    placed.push_back(v);
  }
  return tri;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Hilbert basis of a pointed full-dimensional cone in Z^d.
std::vector<QVector> pointed_hilbert(std::size_t d, const std::vector<QVector>& rays,
                                     std::size_t volume_limit) {
  if (d == 0)
    return {};
  std::vector<QVector> facets = facets_of(d, rays);
  std::set<QVector> candidates(rays.begin(), rays.end());

  Integer volume = 0;
  for (const Simplex& s : placing_triangulation(d, rays)) {
    QMatrix R(d, d);     // columns are the rays of the simplex
    ZMatrix Rz(d, std::vector<Integer>(d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        R[i][j] = rays[s[j]][i];
        Rz[i][j] = rays[s[j]][i].get_num();
      }
    ColumnEchelon e = column_echelon(Rz, d);
    Integer det = 1;
    for (std::size_t i = 0; i < d; ++i)
      det *= e.h[i][i];
    volume += det;
    if (volume > static_cast<unsigned long>(volume_limit))
      throw ResourceError("fundamental parallelepiped volume exceeds the limit of " +
                          std::to_string(volume_limit) + " lattice points");
    QMatrix Rinv = *inverse(R);

    std::vector<Integer> a(d, 0);
    for (;;) {
      QVector av(d);
      for (std::size_t i = 0; i < d; ++i)
        av[i] = Rational(a[i]);
      QVector t = Rinv * av;
      for (std::size_t i = 0; i < d; ++i)
        t[i] -= Rational(floor_of(t[i]));
      QVector x = R * t;
      if (!x.is_zero())
        candidates.insert(x);
      std::size_t i = 0;
      while (i < d && ++a[i] == e.h[i][i]) {
        a[i] = 0;
        ++i;
      }
      if (i == d)
        break;
    }
  }

  auto degree = [&](const QVector& x) {
    Rational s = 0;
    for (const QVector& f : facets)
      s += dot(f, x);
    return s;
  };
  auto in_cone = [&](const QVector& x) {
    return std::all_of(facets.begin(), facets.end(), [&](const QVector& f) { return dot(f, x) >= 0; });
  };
  std::vector<std::pair<Rational, QVector>> sorted;
  for (const QVector& x : candidates)
    sorted.emplace_back(degree(x), x);
  std::sort(sorted.begin(), sorted.end());

  std::vector<QVector> basis;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool reducible = false;
    for (std::size_t j = 0; j < sorted.size() && !reducible; ++j)
      if (sorted[j].first < sorted[i].first && in_cone(sorted[i].second - sorted[j].second))
        reducible = true;
    if (!reducible)
      basis.push_back(sorted[i].second);
  }
  return basis;
}

} // namespace

std::vector<QVector> hilbert_basis(const RationalCone& c, std::size_t volume_limit) {
  const Lattice& L = c.ambient();
  std::size_t k = L.rank();
  std::vector<QVector> rc, lc;
  for (const QVector& r : c.rays())
    rc.push_back(primitive(*L.coordinates(r)));
  for (const QVector& l : c.lineality())
    lc.push_back(primitive(*L.coordinates(l)));

  // S: basis of (span of the cone) ∩ Z^k
  std::vector<QVector> gens = rc;
  gens.insert(gens.end(), lc.begin(), lc.end());
  std::vector<QVector> S = saturate(gens, k);
  std::size_t s = S.size();
  Lattice span_lattice(k, S);
  auto in_S = [&](const QVector& v) { return *span_lattice.coordinates(v); };

  // q: Z^s -> Z^(s-l), kernel = lineality, surjective
  std::vector<QVector> lin_S;
  for (const QVector& l : lc)
    lin_S.push_back(in_S(l));
  std::vector<QVector> Q = kernel_basis(QMatrix(lin_S, s));
  std::size_t d = Q.size();
  QMatrix q = d ? QMatrix(Q, s) : QMatrix(0, s);

  std::vector<QVector> quotient_rays;
  for (const QVector& r : rc)
    quotient_rays.push_back(primitive(q * in_S(r)));

  std::vector<QVector> hb = pointed_hilbert(d, quotient_rays, volume_limit);

  // integral right inverse of q
  std::vector<QVector> out;
  if (d > 0) {
    ZMatrix qz(d, std::vector<Integer>(s));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < s; ++j)
        qz[i][j] = Q[i][j].get_num();
    ColumnEchelon e = column_echelon(qz, s);
    QMatrix H(d, d), V(s, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        H[i][j] = Rational(e.h[i][j]);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < d; ++j)
        V[i][j] = Rational(e.v[i][j]);
    QMatrix lift = V * *inverse(H);
    for (const QVector& x : hb) {
      QVector y = lift * x;
      if (!y.is_integral())
        fail_defect("lift of a quotient lattice point is not integral");
      out.push_back(reduce_modulo(L.from_coordinates(span_lattice.from_coordinates(y)),
                                  c.lineality()));
    }
  }
  for (const QVector& l : c.lineality()) {
    out.push_back(l);
    out.push_back(-l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace zipcox
