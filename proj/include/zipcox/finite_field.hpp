// Arithmetic in F_{p^k} = F_p[x]/(f) and 3×3 matrices over it.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace zipcox {

using Poly = std::vector<std::int64_t>;   // coefficients, constant term first

class FiniteField;

class FqElement {
public:
  FqElement() = default;
  FqElement(std::shared_ptr<const FiniteField> f, Poly c);

  const FiniteField& field() const { return *f_; }
  const Poly& coeffs() const { return c_; }
  bool is_zero() const;

  FqElement operator+(const FqElement& o) const;
  FqElement operator-(const FqElement& o) const;
  FqElement operator-() const;
  FqElement operator*(const FqElement& o) const;
  // Negative exponents need a nonzero base.
  FqElement pow(std::int64_t e) const;
  FqElement inverse() const;
  FqElement frobenius() const { return pow(p_()); }

  friend bool operator==(const FqElement& a, const FqElement& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

  std::string str() const;   // e.g. "x^2+2*x+1"

private:
  std::int64_t p_() const;
  std::shared_ptr<const FiniteField> f_;
  Poly c_;
};

class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
  // Use make_field; the constructor is public only for make_shared.
  FiniteField(std::int64_t p, int k, Poly modulus);

  std::int64_t p() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const Poly& modulus() const { return f_; }

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(std::int64_t v) const;
  FqElement generator() const;   // the class of x
  FqElement from_coeffs(Poly c) const;
  FqElement random(std::mt19937_64& rng) const;
  FqElement random_nonzero(std::mt19937_64& rng) const;

  Poly mul_mod(const Poly& a, const Poly& b) const;

private:
  std::int64_t p_;
  int k_;
  std::uint64_t q_;
  Poly f_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Monic irreducible of degree k with the smallest integer encoding Σ c_i p^i
// of its lower coefficients.  Requires 1 ≤ k ≤ 12 and p^k < 2^62.
FieldPtr make_field(std::int64_t p, int k);

bool is_irreducible(const Poly& monic, std::int64_t p);

class FqMatrix3 {
public:
  FqMatrix3() = default;
  explicit FqMatrix3(const FieldPtr& f);   // zero matrix
  static FqMatrix3 identity(const FieldPtr& f);

  FqElement& operator()(int i, int j) { return a_[i][j]; }
  const FqElement& operator()(int i, int j) const { return a_[i][j]; }

  FqMatrix3 operator*(const FqMatrix3& o) const;
  FqMatrix3 transpose() const;
  FqMatrix3 entrywise_frobenius() const;
  FqElement det() const;
  // Throws InputError when singular.
  FqMatrix3 inverse() const;

  friend bool operator==(const FqMatrix3& a, const FqMatrix3& b) { return a.a_ == b.a_; }
  friend bool operator!=(const FqMatrix3& a, const FqMatrix3& b) { return !(a == b); }

  std::vector<std::vector<std::string>> str_rows() const;

private:
  std::array<std::array<FqElement, 3>, 3> a_;
};

} // namespace zipcox
