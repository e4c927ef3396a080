// Randomized equivariance checks for the rank-3 sections over F_{p^k}.
//
// P₊ is the upper parabolic of type (2,1): Levi blocks {1,2},{3} and
// unipotent radical at (1,3),(2,3).  Zip pairs (x, y) have x ∈ P (the lower
// parabolic) and y ∈ Q, related by φ(θ_L(x)) = θ_M(y).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "zipcox/finite_field.hpp"
#include "zipcox/u3.hpp"

namespace zipcox {

using Pattern = std::array<std::array<bool, 3>, 3>;

// split: entrywise p-power.  inert: J·(ᵗA^(p))⁻¹·J with J antidiagonal.
FqMatrix3 frobenius_matrix(U3Case c, const FqMatrix3& a);

Pattern levi_pattern();          // L: blocks {1,2},{3}
Pattern unipotent_pattern();     // R_u(P₊): (1,3),(2,3)
// Images under frobenius_matrix of generic elements of L and R_u(P₊).
Pattern levi_image_pattern(const FieldPtr& f, U3Case c);
Pattern unipotent_image_pattern(const FieldPtr& f, U3Case c);

FqMatrix3 mask(const FqMatrix3& a, const Pattern& keep);

struct ZipPair {
  FqMatrix3 x, y;
};

// y = φ(θ_L(x))·u.  x must be invertible with zeros at (1,3),(2,3), and u
// unipotent supported on the R_u(Q) pattern.  Throws DefectError if the
// relation φ(θ_L(x)) = θ_M(y) fails.
ZipPair make_zip_pair(const FieldPtr& f, U3Case c, const FqMatrix3& x, const FqMatrix3& u);
ZipPair sample_zip_pair(const FieldPtr& f, U3Case c, std::mt19937_64& rng);
ZipPair sample_zip_pair(const FieldPtr& f, U3Case c, std::uint64_t seed);

enum class Section { Ha1, Ha2, HaMu, Det };

std::string to_string(Section s);
std::optional<Section> parse_section(const std::string& name);
Weight3 section_weight(Section s, U3Case c, std::int64_t p);

// Ha₂ is the minor on rows {1,2}, columns {1,3}.  Ha_μ uses the p-power.
FqElement evaluate_section(Section s, const FqMatrix3& a);

using SectionFn = std::function<FqElement(const FqMatrix3&)>;

struct Counterexample {
  std::size_t trial = 0;
  FqMatrix3 g, x, y;
  FqElement lhs, rhs;
};

struct EquivarianceReport {
  std::string section;
  Weight3 weight{};
  U3Case zip_case = U3Case::Split;
  std::int64_t p = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0, passed = 0;
  std::optional<Counterexample> counterexample;   // first failing trial
  bool ok() const { return passed == trials; }
};

// Checks f(x·g·y⁻¹) = λ(x)·f(g) with λ(x) = x₁₁^λ₁ x₂₂^λ₂ x₃₃^λ₃ on random
// zip pairs and random invertible g.  Trial i draws from an engine seeded
// with (seed, i).
EquivarianceReport check_equivariance(const std::string& name, const SectionFn& fn, const Weight3& weight,
                                      U3Case c, std::int64_t p, int degree, std::size_t trials,
                                      std::uint64_t seed);
EquivarianceReport check_equivariance(Section s, U3Case c, std::int64_t p, int degree, std::size_t trials,
                                      std::uint64_t seed);

} // namespace zipcox
