// Based root data with a Frobenius action, and their root systems.
//
// Characters X*(T) and cocharacters X_*(T) are both identified with Z^n and
// paired by the dot product.  sigma_char acts on characters; the action on
// cocharacters is its inverse transpose.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zipcox/errors.hpp"
#include "zipcox/linalg.hpp"

namespace zipcox {

using IntVector = std::vector<std::int64_t>;
using SimpleSet = std::vector<std::size_t>;   // sorted indices into Δ

struct RootDatumSpec {
  std::int64_t p = 2;
  std::size_t rank = 0;
  std::vector<QVector> simple_roots;
  std::vector<QVector> simple_coroots;
  std::vector<IntVector> sigma_char;   // row-major n×n
};

bool is_prime(std::int64_t p);

// Throws InputError naming the first violated invariant.
void validate(const RootDatumSpec& spec);

class BasedRootDatum {
public:
  BasedRootDatum() = default;
  explicit BasedRootDatum(RootDatumSpec spec);   // validates

  const RootDatumSpec& spec() const { return spec_; }
  std::int64_t p() const { return spec_.p; }
  std::size_t rank() const { return spec_.rank; }
  std::size_t num_simple() const { return spec_.simple_roots.size(); }
  const QVector& simple_root(std::size_t i) const { return spec_.simple_roots.at(i); }
  const QVector& simple_coroot(std::size_t i) const { return spec_.simple_coroots.at(i); }
  std::int64_t cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }

  const IMatrix& sigma_char() const { return sigma_char_; }
  const IMatrix& sigma_char_inverse() const { return sigma_char_inv_; }
  const IMatrix& sigma_cochar() const { return sigma_cochar_; }
  const IMatrix& sigma_cochar_inverse() const { return sigma_cochar_inv_; }
  // σ(α_i) = α_{sigma_perm(i)}
  std::size_t sigma_perm(std::size_t i) const { return perm_[i]; }
  std::size_t sigma_perm_inverse(std::size_t i) const { return perm_inv_[i]; }

  // s_i on characters: λ ↦ λ − ⟨λ, α_i∨⟩ α_i
  const IMatrix& reflection(std::size_t i) const { return reflections_[i]; }

private:
  RootDatumSpec spec_;
  std::vector<IntVector> cartan_;
  IMatrix sigma_char_, sigma_char_inv_, sigma_cochar_, sigma_cochar_inv_;
  std::vector<std::size_t> perm_, perm_inv_;
  std::vector<IMatrix> reflections_;
};

std::string simple_name(std::size_t i);   // "alpha1", "alpha2", ...

QVector frobenius_char(const BasedRootDatum& d, const QVector& lambda);
QVector frobenius_cochar(const BasedRootDatum& d, const QVector& delta);
QVector frobenius_char_inverse(const BasedRootDatum& d, const QVector& lambda);
QVector frobenius_cochar_inverse(const BasedRootDatum& d, const QVector& delta);

struct RootSystem {
  // Sorted by height, then by simple coordinates in decreasing lex order
  // (so the simple roots come first, in index order).
  std::vector<QVector> positive_roots;
  std::vector<QVector> positive_coroots;
  std::vector<IntVector> simple_coordinates;
  std::map<IntVector, std::int64_t> index;   // root -> ±(k+1) for ±positive_roots[k]

  std::vector<QVector> all_roots() const;
  std::optional<QVector> coroot_of(const QVector& root) const;
  // 1 for positive, -1 for negative, 0 if not a root.
  int sign(const IntVector& root) const;
  // Positive roots in the Z-span of {α_i : i ∈ I}.
  std::vector<std::size_t> levi_positive(const SimpleSet& I) const;
};

RootSystem generate_roots(const BasedRootDatum& d, std::size_t limit = Limits{}.enumeration);

// Action on characters of the longest element of W_I, found by ascending
// along left multiplications by s_i (i ∈ I) without enumerating W.
IMatrix longest_element_matrix(const BasedRootDatum& d, const RootSystem& roots,
                               const SimpleSet& I);

// --- builders ---------------------------------------------------------------

RootDatumSpec gl_spec(std::size_t n, std::int64_t p);
// GL_n with σ(λ) = −(λ_n, ..., λ_1): the quasi-split unitary group.
RootDatumSpec unitary_spec(std::size_t n, std::int64_t p);
RootDatumSpec sl2_spec(std::int64_t p);
// k copies of a split datum with σ cycling the blocks.
RootDatumSpec weil_restriction_spec(const RootDatumSpec& base, std::size_t k);
RootDatumSpec direct_sum(const RootDatumSpec& a, const RootDatumSpec& b);

} // namespace zipcox
