#include "zipcox/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "zipcox/errors.hpp"

namespace zipcox {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0)
    fail_input("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// --- QVector ----------------------------------------------------------------

QVector::QVector(std::vector<Rational> v) : v_(std::move(v)) {
  for (Rational& x : v_)
    x.canonicalize();
}

QVector::QVector(std::initializer_list<long long> xs) {
  v_.reserve(xs.size());
  for (long long x : xs)
    v_.emplace_back(static_cast<long>(x));
}

QVector QVector::from_ints(const std::vector<std::int64_t>& xs) {
  QVector r(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    r[i] = Rational(static_cast<long>(xs[i]));
  return r;
}

bool QVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x == 0; });
}

bool QVector::is_integral() const {
  return std::all_of(v_.begin(), v_.end(),
                     [](const Rational& x) { return x.get_den() == 1; });
}

std::vector<std::int64_t> QVector::to_ints() const {
  std::vector<std::int64_t> r;
  r.reserve(v_.size());
  for (const Rational& x : v_) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p())
      fail_defect("vector entry is not a 64-bit integer: " + to_string(x));
    r.push_back(x.get_num().get_si());
  }
  return r;
}

QVector& QVector::operator+=(const QVector& o) {
  if (o.size() != size())
    fail_input("vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i)
    v_[i] += o.v_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  if (o.size() != size())
    fail_input("vector length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i)
    v_[i] -= o.v_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& c) {
  for (Rational& x : v_)
    x *= c;
  return *this;
}

QVector QVector::operator-() const {
  QVector r(*this);
  for (Rational& x : r.v_)
    x = -x;
  return r;
}

bool operator<(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
}

std::string QVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i)
    os << (i ? "," : "") << to_string(v_[i]);
  os << ')';
  return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size())
    fail_input("pairing of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

QVector zero_vector(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector e(n);
  e[i] = 1;
  return e;
}

QVector primitive(const QVector& v) {
  Integer l = 1;
  for (const Rational& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const Rational& x : v) {
    Integer n = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0)
    return v;
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    r[i] = Rational(v[i].get_num() * (l / v[i].get_den()) / g);
  return r;
}

QVector concat(const QVector& a, const QVector& b) {
  QVector r(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[a.size() + i] = b[i];
  return r;
}

// --- QMatrix ----------------------------------------------------------------

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, QVector(cols)) {}

QMatrix::QMatrix(std::vector<QVector> rows, std::size_t cols)
    : cols_(cols), rows_(std::move(rows)) {
  for (const QVector& r : rows_)
    if (r.size() != cols_)
      fail_input("matrix rows of unequal length");
}

QMatrix QMatrix::from_rows(std::vector<QVector> rows) {
  if (rows.empty())
    fail_input("from_rows needs at least one row");
  std::size_t c = rows[0].size();
  return QMatrix(std::move(rows), c);
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t[j][i] = rows_[i][j];
  return t;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.size() != cols_)
    fail_input("matrix-vector dimension mismatch");
  QVector r(rows());
  for (std::size_t i = 0; i < rows(); ++i)
    r[i] = dot(rows_[i], x);
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& b) const {
  if (b.rows() != cols_)
    fail_input("matrix-matrix dimension mismatch");
  QMatrix r(rows(), b.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        r[i][j] += rows_[i][k] * b[k][j];
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.  Only the first
// `ncols` columns are used for pivots.
std::vector<std::size_t> rref(std::vector<QVector>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    m[r] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j)
        m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

ZMatrix to_integer_rows(const std::vector<QVector>& rows) {
  ZMatrix z;
  z.reserve(rows.size());
  for (const QVector& r : rows) {
    Integer l = 1;
    for (const Rational& x : r)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> zr;
    zr.reserve(r.size());
    for (const Rational& x : r)
      zr.push_back(x.get_num() * (l / x.get_den()));
    z.push_back(std::move(zr));
  }
  return z;
}

QVector from_integer_row(const std::vector<Integer>& r) {
  QVector v(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    v[i] = Rational(r[i]);
  return v;
}

// (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace

std::size_t rank(const QMatrix& a) {
  std::vector<QVector> m = a.row_list();
  return rref(m, a.cols()).size();
}

std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.size())
    fail_input("solve_linear: " + std::to_string(a.rows()) + " equations but " +
               std::to_string(b.size()) + " right-hand sides");
  std::size_t n = a.cols();
  std::vector<QVector> m;
  m.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    QVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j)
      row[j] = a[i][j];
    row[n] = b[i];
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> piv = rref(m, n);
  for (std::size_t i = piv.size(); i < m.size(); ++i)
    if (m[i][n] != 0)
      return std::nullopt;
  QVector x(n);
  for (std::size_t i = 0; i < piv.size(); ++i)
    x[piv[i]] = m[i][n];
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  std::size_t n = a.rows();
  if (a.cols() != n)
    fail_input("inverse of a non-square matrix");
  std::vector<QVector> m;
  for (std::size_t i = 0; i < n; ++i)
    m.push_back(concat(a[i], unit_vector(n, i)));
  if (rref(m, n).size() != n)
    return std::nullopt;
  QMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r[i][j] = m[i][n + j];
  return r;
}

Rational determinant(const QMatrix& a) {
  std::size_t n = a.rows();
  if (a.cols() != n)
    fail_input("determinant of a non-square matrix");
  std::vector<QVector> m = a.row_list();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0)
        continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j)
        m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

ColumnEchelon column_echelon(const ZMatrix& a, std::size_t cols) {
  ColumnEchelon e;
  e.h = a;
  std::size_t rows = a.size();
  e.v.assign(cols, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i)
    e.v[i][i] = 1;

  // column op on both H and V: (c1, c2) <- (s c1 + t c2, u c1 + w c2)
  auto combine = [&](std::size_t c1, std::size_t c2, const Integer& s, const Integer& t,
                     const Integer& u, const Integer& w) {
    for (ZMatrix* m : {&e.h, &e.v})
      for (auto& row : *m) {
        Integer x = row[c1], y = row[c2];
        row[c1] = s * x + t * y;
        row[c2] = u * x + w * y;
      }
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (e.h[i][j] == 0)
        continue;
      Integer a0 = e.h[i][pc], b0 = e.h[i][j];
      Integer g, s, t;
      xgcd(a0, b0, g, s, t);
      combine(pc, j, s, t, Integer(-b0 / g), Integer(a0 / g));
    }
    if (e.h[i][pc] == 0)
      continue;
    if (e.h[i][pc] < 0)
      for (ZMatrix* m : {&e.h, &e.v})
        for (auto& row : *m)
          row[pc] = -row[pc];
    e.pivot_rows.push_back(i);
    ++pc;
  }
  e.rank = pc;
  return e;
}

std::vector<QVector> hermite_basis(const std::vector<QVector>& vs, std::size_t n) {
  for (const QVector& v : vs)
    if (v.size() != n || !v.is_integral())
      fail_input("hermite_basis: expected integral vectors of length " + std::to_string(n));
  ZMatrix m = to_integer_rows(vs);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0)
        continue;
      if (m[r][c] == 0) {
        std::swap(m[r], m[i]);
        continue;
      }
      Integer a = m[r][c], b = m[i][c], g, s, t;
      xgcd(a, b, g, s, t);
      Integer u = -b / g, w = a / g;
      for (std::size_t j = 0; j < n; ++j) {
        Integer x = m[r][j], y = m[i][j];
        m[r][j] = s * x + t * y;
        m[i][j] = u * x + w * y;
      }
    }
    if (m[r][c] == 0)
      continue;
    if (m[r][c] < 0)
      for (Integer& x : m[r])
        x = -x;
    for (std::size_t k = 0; k < r; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[k][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j)
          m[k][j] -= q * m[r][j];
    }
    ++r;
  }
  std::vector<QVector> out;
  for (std::size_t i = 0; i < r; ++i)
    out.push_back(from_integer_row(m[i]));
  return out;
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
  std::size_t n = a.cols();
  ColumnEchelon e = column_echelon(to_integer_rows(a.row_list()), n);
  std::vector<QVector> ker;
  for (std::size_t j = e.rank; j < n; ++j) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = Rational(e.v[i][j]);
    ker.push_back(std::move(v));
  }
  return hermite_basis(ker, n);
}

std::vector<QVector> saturate(const std::vector<QVector>& vs, std::size_t n) {
  if (vs.empty())
    return {};
  std::vector<QVector> perp = kernel_basis(QMatrix(vs, n));
  return kernel_basis(QMatrix(perp, n));
}

// --- IMatrix ----------------------------------------------------------------

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ResourceError("64-bit integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ResourceError("64-bit integer overflow");
  return r;
}

IMatrix IMatrix::identity(std::size_t n) {
  IMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IMatrix IMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      fail_input("matrix must be square, row " + std::to_string(i) + " has length " +
                 std::to_string(rows[i].size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IMatrix IMatrix::operator*(const IMatrix& b) const {
  IMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      std::int64_t x = (*this)(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < n_; ++j)
        r(i, j) = checked_add(r(i, j), checked_mul(x, b(k, j)));
    }
  return r;
}

std::vector<std::int64_t> IMatrix::operator*(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      r[i] = checked_add(r[i], checked_mul((*this)(i, j), x[j]));
  return r;
}

QVector IMatrix::operator*(const QVector& x) const {
  if (x.size() != n_)
    fail_input("matrix-vector dimension mismatch");
  QVector r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0)
        r[i] += Rational(static_cast<long>((*this)(i, j))) * x[j];
  return r;
}

IMatrix IMatrix::transpose() const {
  IMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

QMatrix IMatrix::to_q() const {
  QMatrix q(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      q[i][j] = Rational(static_cast<long>((*this)(i, j)));
  return q;
}

IMatrix IMatrix::inverse() const {
  auto inv = zipcox::inverse(to_q());
  if (!inv)
    fail_input("matrix is singular");
  IMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& x = (*inv)[i][j];
      if (x.get_den() != 1)
        fail_input("matrix is not invertible over Z");
      r(i, j) = x.get_num().get_si();
    }
  return r;
}

std::vector<std::vector<std::int64_t>> IMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> rows(n_, std::vector<std::int64_t>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      rows[i][j] = (*this)(i, j);
  return rows;
}

// --- Lattice ----------------------------------------------------------------

Lattice::Lattice(std::size_t ambient_rank, std::vector<QVector> basis)
    : n_(ambient_rank), basis_(std::move(basis)) {
  for (const QVector& b : basis_)
    if (b.size() != n_ || !b.is_integral())
      fail_input("lattice basis vectors must be integral of length " + std::to_string(n_));
  if (!basis_.empty() && zipcox::rank(QMatrix(basis_, n_)) != basis_.size())
    fail_input("lattice basis vectors are linearly dependent");
}

Lattice Lattice::full(std::size_t n) {
  std::vector<QVector> b;
  for (std::size_t i = 0; i < n; ++i)
    b.push_back(unit_vector(n, i));
  return Lattice(n, std::move(b));
}

Lattice Lattice::span(std::size_t n, const std::vector<QVector>& gens) {
  return Lattice(n, hermite_basis(gens, n));
}

std::optional<QVector> Lattice::coordinates(const QVector& v) const {
  if (v.size() != n_)
    fail_input("vector length " + std::to_string(v.size()) + " does not match lattice ambient rank " +
               std::to_string(n_));
  if (basis_.empty())
    return v.is_zero() ? std::optional<QVector>(QVector()) : std::nullopt;
  return solve_linear(QMatrix(basis_, n_).transpose(), v);
}

bool Lattice::in_span(const QVector& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const QVector& v) const {
  auto c = coordinates(v);
  return c && c->is_integral();
}

QVector Lattice::from_coordinates(const QVector& c) const {
  if (c.size() != basis_.size())
    fail_input("coordinate vector has wrong length");
  QVector v(n_);
  for (std::size_t i = 0; i < c.size(); ++i)
    v += c[i] * basis_[i];
  return v;
}

} // namespace zipcox
