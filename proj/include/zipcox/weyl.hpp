// Finite Weyl groups: enumeration, Bruhat order, ᴵW, the twisted order ≼ and
// the poset of zip strata.
#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "zipcox/zip_datum.hpp"

namespace zipcox {

struct WeylElement {
  IMatrix action;                    // on X*(T)
  int length = 0;
  std::vector<std::size_t> reduced_word;   // w = s_{word[0]} s_{word[1]} ...
};

std::string word_string(const std::vector<std::size_t>& word);  // "s1s2", "e"

// Elements are addressed by index; index 0 is the identity.  Order is by
// length, then lexicographically by reduced word, and each reduced word is
// the lexicographically smallest one.
class WeylGroup {
public:
  WeylGroup(const BasedRootDatum& d, const RootSystem& roots,
            std::size_t limit = Limits{}.enumeration);

  std::size_t size() const { return elems_.size(); }
  const WeylElement& operator[](std::size_t w) const { return elems_[w]; }
  const std::vector<WeylElement>& elements() const { return elems_; }
  std::size_t num_simple() const { return left_.size(); }

  std::size_t find(const IMatrix& action) const;   // throws if absent
  std::size_t left_mult(std::size_t i, std::size_t w) const { return left_[i][w]; }
  std::size_t right_mult(std::size_t w, std::size_t i) const { return right_[i][w]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const;
  // σ(w) = S w S⁻¹
  std::size_t sigma(std::size_t w) const;
  std::size_t sigma_inverse(std::size_t w) const;

  int length(std::size_t w) const { return elems_[w].length; }
  // Length from the inversion count.
  int inversion_count(std::size_t w) const;
  bool is_left_descent(std::size_t i, std::size_t w) const {
    return length(left_mult(i, w)) < length(w);
  }

  std::size_t longest_element(const SimpleSet& I) const;
  bool in_parabolic(std::size_t w, const SimpleSet& I) const;
  std::vector<std::size_t> parabolic_subgroup(const SimpleSet& I) const;

  bool bruhat_leq(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> minimal_coset_reps(const SimpleSet& I) const;   // ᴵW
  bool twisted_leq(std::size_t a, std::size_t b, const SimpleSet& I) const;

private:
  const BasedRootDatum* datum_;
  const RootSystem* roots_;
  std::vector<WeylElement> elems_;
  std::vector<std::vector<std::size_t>> left_, right_;
  std::vector<std::size_t> sigma_, sigma_inv_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

struct Stratum {
  std::size_t w = 0;       // index into the Weyl group
  int length = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> reduced_word;
};

struct StrataPoset {
  std::vector<Stratum> strata;
  std::vector<std::vector<bool>> order;   // order[a][b] iff strata[a] ≼ strata[b]
  std::size_t top = 0;                     // position of w_{0,I} w₀
  std::vector<std::size_t> codim_one;      // positions of w_{0,I} s_α w₀, α ∈ Δᴾ
  std::size_t dim_P = 0;
  std::size_t dim_G = 0;

  // Cover relations (a, b), a ≺ b, by transitive reduction.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
};

StrataPoset strata_poset(const ZipDatum& z, const WeylGroup& W);
// z = σ(w_{0,I}) w₀
std::size_t z_element(const ZipDatum& z, const WeylGroup& W);

} // namespace zipcox
