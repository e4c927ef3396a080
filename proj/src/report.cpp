#include "zipcox/report.hpp"

#include <sstream>

namespace zipcox {

Json rational_strings(const QVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    a.push_back(to_string(v[i]));
  return a;
}

Json int_vector(const QVector& v) {
  if (!v.is_integral())
    return rational_strings(v);
  Json a = Json::array();
  for (std::int64_t x : v.to_ints())
    a.push_back(x);
  return a;
}

Json names(const SimpleSet& s) {
  Json a = Json::array();
  for (std::size_t i : s)
    a.push_back(simple_name(i));
  return a;
}

namespace {

Json vectors(const std::vector<QVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs)
    a.push_back(int_vector(v));
  return a;
}

Json weight(const Weight3& w) { return Json::array({w[0], w[1], w[2]}); }

Json matrix(const FqMatrix3& m) { return Json(m.str_rows()); }

} // namespace

Json describe_json(const ZipDatum& z) {
  Json j;
  j["p"] = z.p();
  j["rank"] = z.rank();
  j["mu"] = int_vector(z.mu());
  j["I"] = names(z.levi());
  j["Delta_P"] = names(z.parabolic());
  j["d"] = Json::object();
  j["m"] = Json::object();
  j["delta"] = Json::object();
  for (std::size_t a : z.parabolic()) {
    j["d"][simple_name(a)] = z.d(a);
    j["m"][simple_name(a)] = z.m(a);
    j["delta"][simple_name(a)] = rational_strings(z.delta(a));
  }
  j["XL_basis"] = vectors(z.xl().basis());
  j["XG_basis"] = vectors(z.xg().basis());
  j["XL_rank"] = z.xl().rank();
  j["XG_rank"] = z.xg().rank();
  j["picard_rank"] = z.xl().rank() - z.xg().rank();
  j["num_positive_roots"] = z.roots().positive_roots.size();
  j["dim_P"] = z.dim_P();
  j["dim_G"] = z.dim_G();
  j["hasse_type"] = is_hasse_type(z);
  return j;
}

Json poset_json(const WeylGroup& W, const StrataPoset& P) {
  Json j;
  Json els = Json::array();
  for (const auto& s : P.strata)
    els.push_back({{"word", word_string(s.reduced_word)}, {"length", s.length}, {"dim", s.dim},
                   {"action", W[s.w].action.to_rows()}});
  j["strata"] = els;
  Json order = Json::array();
  for (const auto& row : P.order) {
    Json r = Json::array();
    for (bool b : row)
      r.push_back(b ? 1 : 0);
    order.push_back(r);
  }
  j["order"] = order;
  Json covers = Json::array();
  for (auto [a, b] : P.covers())
    covers.push_back({a, b});
  j["covers"] = covers;
  j["top"] = P.top;
  j["codim_one"] = P.codim_one;
  j["dim_P"] = P.dim_P;
  j["dim_G"] = P.dim_G;
  return j;
}

std::string poset_dot(const StrataPoset& P) {
  std::ostringstream out;
  out << "digraph strata {\n  rankdir=BT;\n";
  for (std::size_t a = 0; a < P.strata.size(); ++a)
    out << "  n" << a << " [label=\"" << word_string(P.strata[a].reduced_word) << "\\ndim " << P.strata[a].dim
        << "\"];\n";
  for (auto [a, b] : P.covers())
    out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

Json cone_json(const RationalCone& c) {
  Json j;
  j["ambient_basis"] = vectors(c.ambient().basis());
  j["halfspaces"] = vectors(c.halfspaces());
  j["rays"] = vectors(c.rays());
  j["lineality"] = vectors(c.lineality());
  j["dimension"] = c.dimension();
  j["pointed"] = c.is_pointed();
  return j;
}

Json cone_json(const RationalCone& c, const std::vector<QVector>& hilbert) {
  Json j = cone_json(c);
  j["hilbert_basis"] = vectors(hilbert);
  return j;
}

HasseVerdict hasse_verdict(const ZipDatum& z, const QVector& lambda, const TrivialityOracle& oracle) {
  HasseVerdict v;
  v.mu_ordinary_hasse = has_mu_ordinary_hasse(z, lambda);
  v.h0_up_to_power = h0_nonzero_up_to_power(z, lambda);
  v.h0_exact = h0_nonzero_exact(z, lambda, oracle);
  v.kw_condition = kw_condition(z, lambda);
  v.in_gs_cone = gs_cone(z).contains(lambda);
  v.in_pha_cone = pha_cone(z).contains(lambda);
  v.oracle = oracle.name();
  return v;
}

Json hasse_json(const QVector& lambda, const HasseVerdict& v) {
  Json j;
  j["lambda"] = int_vector(lambda);
  j["mu_ordinary_hasse"] = v.mu_ordinary_hasse;
  j["h0_up_to_power"] = v.h0_up_to_power;
  j["h0_exact"] = {{"nonzero", to_string(v.h0_exact.nonzero)}, {"dimension", v.h0_exact.dimension}};
  j["kw_condition"] = v.kw_condition;
  j["in_gs_cone"] = v.in_gs_cone;
  j["in_pha_cone"] = v.in_pha_cone;
  j["oracle"] = v.oracle;
  return j;
}

Json u3_dim_json(const Weight3& l, std::int64_t p) {
  Json j;
  j["lambda"] = weight(l);
  j["p"] = p;
  j["dim"] = dim_h0_u3(l, p);
  j["F_lambda"] = to_string(F_lambda(l, p));
  j["qualifying_indices"] = qualifying_indices(l, p, 50);
  j["in_czip"] = czip_u3_contains(l, p);
  return j;
}

Json u3_decompose_json(const Weight3& l, std::int64_t p, std::int64_t i, const U3Decomposition& d) {
  Json j;
  j["lambda"] = weight(l);
  j["p"] = p;
  j["i"] = i;
  j["k1"] = d.k1;
  j["k2"] = d.k2;
  j["k_mu"] = d.k_mu;
  j["k_det"] = d.k_det;
  j["nu"] = weight(d.nu);
  return j;
}

Json czip_scan_json(const CzipScan& s) {
  Json j;
  j["p"] = s.p;
  j["box"] = s.box;
  j["h0_points"] = s.h0_points;
  j["monoid_points"] = s.monoid_points;
  j["only_h0"] = s.only_h0;
  j["only_monoid"] = s.only_monoid;
  j["decomposition_failures"] = s.decomposition_failures;
  j["saturation_mismatches"] = s.saturation_mismatches;
  j["det_shift_mismatches"] = s.det_shift_mismatches;
  j["ok"] = s.ok();
  return j;
}

Json equivariance_json(const EquivarianceReport& r) {
  Json j;
  j["section"] = r.section;
  j["weight"] = weight(r.weight);
  j["case"] = r.zip_case == U3Case::Split ? "split" : "inert";
  j["p"] = r.p;
  j["degree"] = r.degree;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    j["counterexample"] = {{"trial", c.trial}, {"g", matrix(c.g)},    {"x", matrix(c.x)},
                           {"y", matrix(c.y)}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
  }
  return j;
}

} // namespace zipcox
