// Section-existence criteria on the stack of G-zips, and structural tests.
#pragma once

#include <functional>
#include <string>

#include "zipcox/cone.hpp"

namespace zipcox {

enum class Trool { False, True, Unknown };
std::string to_string(Trool t);   // "false" / "true" / "unknown"

// Answers "is λ trivial on L_φ?".  Implementations must be re-entrant.
class TrivialityOracle {
public:
  using Predicate = std::function<Trool(const QVector&)>;

  TrivialityOracle();   // unknown except at λ = 0
  TrivialityOracle(std::string name, Predicate pred);

  Trool operator()(const QVector& lambda) const;
  const std::string& name() const { return name_; }

  // True on the given sublattice of characters known to be trivial on L_φ,
  // unknown elsewhere.
  static TrivialityOracle sublattice(const Lattice& trivial);
  // λ = (a, a, c) for the inert U(3) datum of type (2,1).
  static TrivialityOracle u3_inert(std::int64_t p);
  // λ = (a, a, c) for split GL₃ of type (2,1): L_φ = L(F_p).
  static TrivialityOracle gl3_split(std::int64_t p);

private:
  std::string name_;
  Predicate pred_;
};

bool has_mu_ordinary_hasse(const ZipDatum& z, const QVector& lambda);
bool h0_nonzero_up_to_power(const ZipDatum& z, const QVector& lambda);

struct ExactH0 {
  Trool nonzero = Trool::Unknown;
  int dimension = -1;   // 1 when nonzero is True, 0 when False, -1 otherwise
};
ExactH0 h0_nonzero_exact(const ZipDatum& z, const QVector& lambda, const TrivialityOracle& oracle);

bool is_hasse_type(const ZipDatum& z);
// λ_α for α ∈ Δᴾ (in Δᴾ order), orthogonal to X*(G) inside X*(L) ⊗ Q.
std::vector<QVector> dual_basis_lambda(const ZipDatum& z);
bool kw_condition(const ZipDatum& z, const QVector& lambda);

} // namespace zipcox
