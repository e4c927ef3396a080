#include "zipcox/cone.hpp"

#include <algorithm>
#include <tuple>

namespace zipcox {

namespace {

using ZeroSet = std::vector<bool>;

QVector coords_of(const Lattice& L, const QVector& v) {
  auto c = L.coordinates(v);
  if (!c)
    fail_input("vector " + v.str() + " does not lie in the ambient lattice span");
  return *c;
}

QVector coord_form(const Lattice& L, const QVector& f) {
  if (f.size() != L.ambient_rank())
    fail_input("linear form " + f.str() + " has the wrong length");
  QVector g(L.rank());
  for (std::size_t j = 0; j < L.rank(); ++j)
    g[j] = dot(f, L.basis()[j]);
  return g;
}

// The ambient form in the span of the lattice basis restricting to g.
QVector ambient_form(const Lattice& L, const QVector& g) {
  std::size_t k = L.rank();
  QMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      gram[i][j] = dot(L.basis()[i], L.basis()[j]);
  auto h = solve_linear(gram, g);
  if (!h)
    fail_defect("singular Gram matrix of a lattice basis");
  return primitive(L.from_coordinates(*h));
}

bool contains_zeros(const ZeroSet& big, const ZeroSet& small) {
  for (std::size_t i = 0; i < small.size(); ++i)
    if (small[i] && !big[i])
      return false;
  return true;
}

void check_rank(const Lattice& L) {
  if (L.rank() > RationalCone::max_rank)
    throw ResourceError("cone ambient rank " + std::to_string(L.rank()) + " exceeds the limit of " +
                        std::to_string(RationalCone::max_rank));
}

std::vector<QVector> lineality_to_ambient(const Lattice& L, const std::vector<QVector>& lin) {
  std::vector<QVector> amb;
  for (const QVector& l : lin)
    amb.push_back(L.from_coordinates(l));
  return hermite_basis(amb, L.ambient_rank());
}

} // namespace

DoubleDescription double_description(std::size_t k, const std::vector<QVector>& constraints) {
  std::size_t m = constraints.size();
  std::vector<QVector> lin;
  for (std::size_t i = 0; i < k; ++i)
    lin.push_back(unit_vector(k, i));
  std::vector<QVector> rays;
  std::vector<ZeroSet> zeros;

  for (std::size_t c = 0; c < m; ++c) {
    const QVector& g = constraints[c];
    if (g.size() != k)
      fail_input("constraint has length " + std::to_string(g.size()) + ", expected " +
                 std::to_string(k));
    if (g.is_zero()) {
      for (ZeroSet& z : zeros)
        z[c] = true;
      continue;
    }

    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const QVector& l) { return dot(g, l) != 0; });
    if (pivot != lin.end()) {
      QVector l0 = *pivot;
      lin.erase(pivot);
      Rational gl0 = dot(g, l0);
      if (gl0 < 0) {
        l0 = -l0;
        gl0 = -gl0;
      }
      for (QVector& l : lin)
        l = primitive(l - (dot(g, l) / gl0) * l0);
      for (std::size_t r = 0; r < rays.size(); ++r) {
        rays[r] = primitive(rays[r] - (dot(g, rays[r]) / gl0) * l0);
        zeros[r][c] = true;
      }
      ZeroSet z(m, false);
      for (std::size_t i = 0; i < c; ++i)
        z[i] = true;
      rays.push_back(primitive(l0));
      zeros.push_back(std::move(z));
      continue;
    }

    std::vector<Rational> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r)
      val[r] = dot(g, rays[r]);
    std::vector<QVector> next;
    std::vector<ZeroSet> next_zeros;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (val[r] >= 0) {
        next.push_back(rays[r]);
        next_zeros.push_back(zeros[r]);
        if (val[r] == 0)
          next_zeros.back()[c] = true;
      }
    for (std::size_t a = 0; a < rays.size(); ++a) {
      if (val[a] <= 0)
        continue;
      for (std::size_t b = 0; b < rays.size(); ++b) {
        if (val[b] >= 0)
          continue;
        ZeroSet common(m);
        for (std::size_t i = 0; i < m; ++i)
          common[i] = zeros[a][i] && zeros[b][i];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != a && r != b && contains_zeros(zeros[r], common))
            adjacent = false;
        if (!adjacent)
          continue;
        next.push_back(primitive(val[a] * rays[b] - val[b] * rays[a]));
        common[c] = true;
        next_zeros.push_back(std::move(common));
      }
    }
    rays = std::move(next);
    zeros = std::move(next_zeros);
  }

  DoubleDescription dd;
  dd.rays = std::move(rays);
  std::vector<QVector> lin_int;
  for (const QVector& l : lin)
    lin_int.push_back(primitive(l));
  dd.lineality = hermite_basis(saturate(lin_int, k), k);
  return dd;
}

// --- RationalCone -------------------------------------------------------------

RationalCone RationalCone::from_halfspaces(const Lattice& ambient, const std::vector<QVector>& forms) {
  check_rank(ambient);
  RationalCone c;
  c.ambient_ = ambient;
  std::vector<QVector> g;
  for (const QVector& f : forms) {
    g.push_back(coord_form(ambient, f));
    c.halfspaces_.push_back(primitive(f));
  }
  DoubleDescription dd = double_description(ambient.rank(), g);
  c.lineality_ = lineality_to_ambient(ambient, dd.lineality);
  for (const QVector& r : dd.rays)
    c.rays_.push_back(reduce_modulo(ambient.from_coordinates(r), c.lineality_));
  std::vector<QVector> all = dd.rays;
  all.insert(all.end(), dd.lineality.begin(), dd.lineality.end());
  c.dim_ = all.empty() ? 0 : rank(QMatrix(all, ambient.rank()));
  return c;
}

RationalCone RationalCone::from_rays(const Lattice& ambient, const std::vector<QVector>& rays,
                                     const std::vector<QVector>& lineality) {
  check_rank(ambient);
  std::size_t k = ambient.rank();
  std::vector<QVector> rc, lc;
  for (const QVector& r : rays)
    rc.push_back(coords_of(ambient, r));
  for (const QVector& l : lineality)
    lc.push_back(coords_of(ambient, l));

  std::vector<QVector> dual_constraints = rc;
  for (const QVector& l : lc) {
    dual_constraints.push_back(l);
    dual_constraints.push_back(-l);
  }
  DoubleDescription dual = double_description(k, dual_constraints);
  std::vector<QVector> facet_coords = dual.rays;
  for (const QVector& e : dual.lineality) {
    facet_coords.push_back(e);
    facet_coords.push_back(-e);
  }

  RationalCone c;
  c.ambient_ = ambient;
  for (const QVector& g : facet_coords)
    c.halfspaces_.push_back(ambient_form(ambient, g));
  DoubleDescription dd = double_description(k, facet_coords);
  c.lineality_ = lineality_to_ambient(ambient, dd.lineality);

  auto tight = [&](const QVector& x) {
    std::vector<bool> t;
    for (const QVector& f : dual.rays)
      t.push_back(dot(f, x) == 0);
    return t;
  };
  for (const QVector& r : dd.rays) {
    std::vector<bool> tr = tight(r);
    QVector chosen = ambient.from_coordinates(r);
    bool matched = false;
    for (const QVector& x : rc) {
      if (!matched && tight(x) == tr && !std::all_of(tr.begin(), tr.end(), [](bool b) { return b; })) {
        chosen = ambient.from_coordinates(primitive(x));
        matched = true;
      }
    }
    if (!matched)
      chosen = reduce_modulo(chosen, c.lineality_);
    c.rays_.push_back(chosen);
  }
  std::vector<QVector> all = dd.rays;
  all.insert(all.end(), dd.lineality.begin(), dd.lineality.end());
  c.dim_ = all.empty() ? 0 : rank(QMatrix(all, k));
  return c;
}

bool RationalCone::contains(const QVector& v) const {
  if (!ambient_.in_span(v))
    return false;
  for (const QVector& f : halfspaces_)
    if (dot(f, v) < 0)
      return false;
  return true;
}

bool contains(const RationalCone& c, const QVector& v) { return c.contains(v); }

QVector reduce_modulo(const QVector& v, const std::vector<QVector>& lineality) {
  auto key = [](const QVector& x) {
    long neg = 0;
    Rational norm = 0;
    for (const Rational& e : x) {
      if (e < 0) {
        ++neg;
        norm -= e;
      } else {
        norm += e;
      }
    }
    return std::make_tuple(neg, norm, x);
  };
  QVector best = v;
  auto best_key = key(best);
  for (int pass = 0; pass < 64; ++pass) {
    bool improved = false;
    for (const QVector& l : lineality) {
      std::vector<Integer> ts{0};
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0)
          continue;
        Rational t = -best[i] / l[i];
        Integer fl, cl;
        mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        mpz_cdiv_q(cl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
        ts.push_back(fl);
        ts.push_back(cl);
      }
      for (const Integer& t : ts) {
        QVector cand = best + Rational(t) * l;
        auto k = key(cand);
        if (k < best_key) {
          best = cand;
          best_key = k;
          improved = true;
        }
      }
    }
    if (!improved)
      break;
  }
  return best;
}

// --- cones of a zip datum -----------------------------------------------------

RationalCone dominant_cone(const BasedRootDatum& d) {
  std::vector<QVector> forms;
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    forms.push_back(d.simple_coroot(i));
  return RationalCone::from_halfspaces(Lattice::full(d.rank()), forms);
}

RationalCone eff_cone(const ZipDatum& z) {
  std::vector<QVector> forms;
  for (std::size_t a : z.parabolic())
    forms.push_back(z.delta(a));
  return RationalCone::from_halfspaces(z.xl(), forms);
}

RationalCone gs_cone(const ZipDatum& z) {
  std::vector<QVector> forms;
  for (std::size_t a : z.levi())
    forms.push_back(z.datum().simple_coroot(a));
  const RootSystem& R = z.roots();
  const auto& levi = z.levi_positive();
  for (std::size_t k = 0; k < R.positive_roots.size(); ++k)
    if (!std::binary_search(levi.begin(), levi.end(), k))
      forms.push_back(-R.positive_coroots[k]);
  return RationalCone::from_halfspaces(Lattice::full(z.rank()), forms);
}

QVector pha_map(const ZipDatum& z, const QVector& lambda) {
  IMatrix w0I = longest_element_matrix(z.datum(), z.roots(), z.levi());
  QVector t = w0I * frobenius_char_inverse(z.datum(), lambda);
  return lambda - Rational(static_cast<long>(z.p())) * t;
}

std::vector<QVector> pha_generator_images(const ZipDatum& z) {
  RationalCone dom = dominant_cone(z.datum());
  std::vector<QVector> out;
  for (const QVector& r : dom.rays())
    out.push_back(pha_map(z, r));
  for (const QVector& l : dom.lineality()) {
    out.push_back(pha_map(z, l));
    out.push_back(pha_map(z, -l));
  }
  return out;
}

RationalCone pha_cone(const ZipDatum& z) {
  RationalCone dom = dominant_cone(z.datum());
  std::vector<QVector> rays, lin;
  for (const QVector& r : dom.rays())
    rays.push_back(pha_map(z, r));
  for (const QVector& l : dom.lineality())
    lin.push_back(pha_map(z, l));
  return RationalCone::from_rays(Lattice::full(z.rank()), rays, lin);
}

} // namespace zipcox
