// Rational polyhedral cones on sublattices of Z^n, and the cones attached to a
// zip datum.
#pragma once

#include <vector>

#include "zipcox/zip_datum.hpp"

namespace zipcox {

// Result of the double description method in coordinates of Q^k: the cone
// {x : g·x ≥ 0 for all constraints g} = cone(rays) + span(lineality).
struct DoubleDescription {
  std::vector<QVector> rays;        // primitive integral, one per extreme ray
  std::vector<QVector> lineality;   // saturated Hermite basis
};
DoubleDescription double_description(std::size_t k, const std::vector<QVector>& constraints);

class RationalCone {
public:
  static constexpr std::size_t max_rank = 12;

  // {x in ambient ⊗ Q : ⟨f, x⟩ ≥ 0 for every form f}
  static RationalCone from_halfspaces(const Lattice& ambient, const std::vector<QVector>& forms);
  // cone(rays) + span(lineality); rays and lineality must lie in ambient ⊗ Q.
  static RationalCone from_rays(const Lattice& ambient, const std::vector<QVector>& rays,
                                const std::vector<QVector>& lineality = {});

  const Lattice& ambient() const { return ambient_; }
  const std::vector<QVector>& halfspaces() const { return halfspaces_; }
  const std::vector<QVector>& rays() const { return rays_; }
  const std::vector<QVector>& lineality() const { return lineality_; }

  bool contains(const QVector& v) const;
  bool is_pointed() const { return lineality_.empty(); }
  std::size_t dimension() const { return dim_; }

private:
  Lattice ambient_;
  std::vector<QVector> halfspaces_, rays_, lineality_;
  std::size_t dim_ = 0;
};

bool contains(const RationalCone& c, const QVector& v);

// Minimal generating set of the monoid cone ∩ ambient lattice, sorted
// lexicographically.  Lineality is included as ± its basis.
std::vector<QVector> hilbert_basis(const RationalCone& c,
                                   std::size_t volume_limit = Limits{}.volume);

// Representative of v + Z·lineality with the fewest negative entries, then
// the smallest 1-norm, then lexicographically smallest.
QVector reduce_modulo(const QVector& v, const std::vector<QVector>& lineality);

RationalCone dominant_cone(const BasedRootDatum& d);
RationalCone eff_cone(const ZipDatum& z);
RationalCone gs_cone(const ZipDatum& z);
RationalCone pha_cone(const ZipDatum& z);

// h(λ) = λ − p·w_{0,I}(σ⁻¹λ)
QVector pha_map(const ZipDatum& z, const QVector& lambda);
// h applied to the rays and to ± the lineality generators of the dominant cone.
std::vector<QVector> pha_generator_images(const ZipDatum& z);

} // namespace zipcox
