// Exact rational and integer linear algebra.
//
// Rationals and integers are GMP values.  Small integer matrices acting on
// character lattices (Weyl group elements, Frobenius) use checked int64.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zipcox {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);   // "n" or "n/d"

class QVector {
public:
  QVector() = default;
  explicit QVector(std::size_t n) : v_(n) {}
  explicit QVector(std::vector<Rational> v);
  QVector(std::initializer_list<long long> xs);
  static QVector from_ints(const std::vector<std::int64_t>& xs);

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  Rational& operator[](std::size_t i) { return v_[i]; }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const;
  bool is_integral() const;
  // Requires is_integral(); throws DefectError if an entry does not fit.
  std::vector<std::int64_t> to_ints() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const Rational& c);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Rational& c, QVector a) { return a *= c; }
  QVector operator-() const;
  friend bool operator==(const QVector& a, const QVector& b) { return a.v_ == b.v_; }
  friend bool operator<(const QVector& a, const QVector& b);  // lexicographic

  std::string str() const;

private:
  std::vector<Rational> v_;
};

Rational dot(const QVector& a, const QVector& b);
QVector zero_vector(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
// Positive rational multiple that is integral with content 1 (zero stays zero).
QVector primitive(const QVector& v);
QVector concat(const QVector& a, const QVector& b);

class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  // All rows must have length cols.
  QMatrix(std::vector<QVector> rows, std::size_t cols);
  static QMatrix from_rows(std::vector<QVector> rows);   // needs >= 1 row
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  QVector& operator[](std::size_t i) { return rows_[i]; }
  const QVector& operator[](std::size_t i) const { return rows_[i]; }
  const std::vector<QVector>& row_list() const { return rows_; }

  QMatrix transpose() const;
  QVector operator*(const QVector& x) const;
  QMatrix operator*(const QMatrix& b) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

private:
  std::size_t cols_ = 0;
  std::vector<QVector> rows_;
};

std::size_t rank(const QMatrix& a);
std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b);
std::optional<QMatrix> inverse(const QMatrix& a);
Rational determinant(const QMatrix& a);

// Saturated integral basis of {x in Z^n : A x = 0}, in row Hermite form.
std::vector<QVector> kernel_basis(const QMatrix& a);
// Saturation of the Z-span of integral vectors: (span_Q V) ∩ Z^n.
std::vector<QVector> saturate(const std::vector<QVector>& vs, std::size_t n);
// Row Hermite normal form basis of the Z-span of integral vectors.
std::vector<QVector> hermite_basis(const std::vector<QVector>& vs, std::size_t n);

// --- integer matrices -----------------------------------------------------

using ZMatrix = std::vector<std::vector<Integer>>;

// A * V = H with V unimodular and H in column echelon form: the first
// `rank` columns of H carry pivots in strictly increasing rows, with positive
// pivot entries, and the remaining columns are zero.
struct ColumnEchelon {
  ZMatrix h;
  ZMatrix v;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const ZMatrix& a, std::size_t cols);

// Checked 64-bit integer square matrices (overflow -> ResourceError).
class IMatrix {
public:
  IMatrix() = default;
  explicit IMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IMatrix identity(std::size_t n);
  static IMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t dim() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<std::int64_t>& data() const { return a_; }

  IMatrix operator*(const IMatrix& b) const;
  std::vector<std::int64_t> operator*(const std::vector<std::int64_t>& x) const;
  QVector operator*(const QVector& x) const;
  IMatrix transpose() const;
  // Inverse over Z; throws InputError when det != ±1.
  IMatrix inverse() const;
  QMatrix to_q() const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IMatrix& a, const IMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator<(const IMatrix& a, const IMatrix& b) { return a.a_ < b.a_; }

private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// A sublattice of Z^n given by an independent integral basis.
class Lattice {
public:
  Lattice() = default;
  Lattice(std::size_t ambient_rank, std::vector<QVector> basis);
  static Lattice full(std::size_t n);
  // Z-span of arbitrary integral generators.
  static Lattice span(std::size_t n, const std::vector<QVector>& gens);

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }

  bool in_span(const QVector& v) const;      // v in basis ⊗ Q
  bool contains(const QVector& v) const;     // v in the lattice itself
  std::optional<QVector> coordinates(const QVector& v) const;
  QVector from_coordinates(const QVector& c) const;

private:
  std::size_t n_ = 0;
  std::vector<QVector> basis_;
};

} // namespace zipcox
