#include "zipcox/sections.hpp"

#include <algorithm>

namespace zipcox {

std::string to_string(Trool t) {
  switch (t) {
  case Trool::True:
    return "true";
  case Trool::False:
    return "false";
  default:
    return "unknown";
  }
}

TrivialityOracle::TrivialityOracle()
    : name_("none"), pred_([](const QVector& l) { return l.is_zero() ? Trool::True : Trool::Unknown; }) {}

TrivialityOracle::TrivialityOracle(std::string name, Predicate pred)
    : name_(std::move(name)), pred_(std::move(pred)) {}

Trool TrivialityOracle::operator()(const QVector& lambda) const {
  if (lambda.is_zero())
    return Trool::True;
  return pred_(lambda);
}

TrivialityOracle TrivialityOracle::sublattice(const Lattice& trivial) {
  return TrivialityOracle("sublattice", [trivial](const QVector& l) {
    return trivial.contains(l) ? Trool::True : Trool::Unknown;
  });
}

namespace {

// (a, a, c) with integral entries, else nullopt
std::optional<std::pair<Integer, Integer>> levi_weight(const QVector& l) {
  if (l.size() != 3 || !l.is_integral() || l[0] != l[1])
    return std::nullopt;
  return std::make_pair(l[0].get_num(), l[2].get_num());
}

bool divides(const Integer& m, const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()); }

void require_xl(const ZipDatum& z, const QVector& lambda) {
  if (lambda.size() != z.rank() || !z.xl().contains(lambda))
    fail_input("lambda = " + lambda.str() + " is not in X*(L)");
}

} // namespace

TrivialityOracle TrivialityOracle::u3_inert(std::int64_t p) {
  Integer P = static_cast<long>(p);
  return TrivialityOracle("u3-inert", [P](const QVector& l) {
    auto w = levi_weight(l);
    if (!w)
      return Trool::Unknown;
    auto [a, c] = *w;
    return divides(P + 1, a) && divides(P * P - 1, a - P * c) ? Trool::True : Trool::False;
  });
}

TrivialityOracle TrivialityOracle::gl3_split(std::int64_t p) {
  Integer P = static_cast<long>(p);
  return TrivialityOracle("gl3-split", [P](const QVector& l) {
    auto w = levi_weight(l);
    if (!w)
      return Trool::Unknown;
    auto [a, c] = *w;
    return divides(P - 1, a) && divides(P - 1, c) ? Trool::True : Trool::False;
  });
}

bool has_mu_ordinary_hasse(const ZipDatum& z, const QVector& lambda) {
  require_xl(z, lambda);
  return std::all_of(z.parabolic().begin(), z.parabolic().end(),
                     [&](std::size_t a) { return dot(lambda, z.delta(a)) > 0; });
}

bool h0_nonzero_up_to_power(const ZipDatum& z, const QVector& lambda) {
  require_xl(z, lambda);
  return std::all_of(z.parabolic().begin(), z.parabolic().end(),
                     [&](std::size_t a) { return dot(lambda, z.delta(a)) >= 0; });
}

ExactH0 h0_nonzero_exact(const ZipDatum& z, const QVector& lambda, const TrivialityOracle& oracle) {
  if (!h0_nonzero_up_to_power(z, lambda))
    return {Trool::False, 0};
  Trool t = oracle(lambda);
  return {t, t == Trool::True ? 1 : t == Trool::False ? 0 : -1};
}

bool is_hasse_type(const ZipDatum& z) {
  const BasedRootDatum& d = z.datum();
  for (std::size_t i : z.levi())
    if (!z.in_levi(d.sigma_perm(i)))
      return false;
  IMatrix w0I = longest_element_matrix(d, z.roots(), z.levi());
  for (std::size_t i : z.levi())
    if (frobenius_char(d, d.simple_root(i)) != -(w0I * d.simple_root(i)))
      return false;
  return true;
}

std::vector<QVector> dual_basis_lambda(const ZipDatum& z) {
  const auto& B = z.xl().basis();
  const auto& G = z.xg().basis();
  const SimpleSet& DP = z.parabolic();
  std::size_t k = B.size();
  if (DP.empty())
    return {};
  QMatrix A(DP.size() + G.size(), k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t r = 0; r < DP.size(); ++r)
      A[r][j] = dot(B[j], z.delta(DP[r]));
    for (std::size_t r = 0; r < G.size(); ++r)
      A[DP.size() + r][j] = dot(B[j], G[r]);
  }
  std::vector<QVector> out;
  for (std::size_t a = 0; a < DP.size(); ++a) {
    QVector rhs(A.rows());
    rhs[a] = 1;
    auto c = solve_linear(A, rhs);
    if (!c)
      fail_defect("pairings with delta_alpha are not linearly independent on X*(L)");
    QVector lam = z.xl().from_coordinates(*c);
    for (std::size_t b = 0; b < DP.size(); ++b)
      if (dot(lam, z.delta(DP[b])) != (a == b ? 1 : 0))
        fail_defect("dual basis check failed");
    out.push_back(std::move(lam));
  }
  return out;
}

bool kw_condition(const ZipDatum& z, const QVector& lambda) {
  return std::all_of(z.parabolic().begin(), z.parabolic().end(), [&](std::size_t a) {
    return dot(lambda, z.datum().simple_coroot(a)) < 0;
  });
}

} // namespace zipcox
