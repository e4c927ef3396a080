// Zip datum of a cocharacter datum (G, μ).
//
// Conventions: μ is dominant (⟨α, μ⟩ ≥ 0 for α ∈ Δ), P = P₋(μ) contains the
// negative root groups, L is the centralizer of μ with simple roots
// I = {α : ⟨α, μ⟩ = 0}.  δ_α is the rational solution of δ − pσ(δ) = α∨.
#pragma once

#include <vector>

#include "zipcox/root_datum.hpp"

namespace zipcox {

class ZipDatum {
public:
  ZipDatum(BasedRootDatum datum, QVector mu, const Limits& limits = {});

  const BasedRootDatum& datum() const { return datum_; }
  const QVector& mu() const { return mu_; }
  const RootSystem& roots() const { return roots_; }
  std::int64_t p() const { return datum_.p(); }
  std::size_t rank() const { return datum_.rank(); }

  const SimpleSet& levi() const { return I_; }           // I
  const SimpleSet& parabolic() const { return DeltaP_; } // Δᴾ
  bool in_levi(std::size_t i) const;

  int d(std::size_t alpha) const;
  int m(std::size_t alpha) const;
  const QVector& delta(std::size_t alpha) const;

  const Lattice& xl() const { return xl_; }
  const Lattice& xg() const { return xg_; }
  const std::vector<std::size_t>& levi_positive() const { return levi_pos_; }
  // n + |Φ⁺| + |Φ⁺_L|
  std::size_t dim_P() const;
  std::size_t dim_G() const;

private:
  void require_parabolic(std::size_t alpha) const;

  BasedRootDatum datum_;
  QVector mu_;
  RootSystem roots_;
  SimpleSet I_, DeltaP_;
  std::vector<int> d_, m_;
  std::vector<QVector> delta_;
  Lattice xl_, xg_;
  std::vector<std::size_t> levi_pos_;
};

ZipDatum build_zip_datum(BasedRootDatum datum, QVector mu, const Limits& limits = {});

int d_alpha(const ZipDatum& z, std::size_t alpha);
int m_alpha(const ZipDatum& z, std::size_t alpha);
QVector delta_alpha(const ZipDatum& z, std::size_t alpha);
Lattice xstar_L(const ZipDatum& z);
Lattice xstar_G(const ZipDatum& z);

// ℘∗(δ) = δ − p·σ(δ)
QVector wp_star(const BasedRootDatum& d, const QVector& delta);
// −1/(p^e − 1) Σ_{i<e} p^i σ^i(α∨); equals δ_α whenever d_α divides e.
QVector delta_closed_form(const BasedRootDatum& d, std::size_t alpha, int e);

// Block direct product of two zip data over the same p.
ZipDatum product_zip(const ZipDatum& a, const ZipDatum& b);

} // namespace zipcox
