#include "zipcox/finite_field.hpp"

#include "zipcox/errors.hpp"
#include "zipcox/root_datum.hpp"

namespace zipcox {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// a mod m over F_p, m nonzero
Poly poly_rem(Poly a, const Poly& m, std::int64_t p) {
  trim(a);
  std::size_t dm = m.size() - 1;
  std::int64_t inv_lead = powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::int64_t c = mulmod(a.back(), inv_lead, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = ((a[shift + i] - mulmod(c, m[i], p)) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^m) mod f
Poly x_pow_p_pow(const Poly& f, std::int64_t p, int m) {
  Poly r = poly_rem({0, 1}, f, p);
  for (int i = 0; i < m; ++i) {
    Poly acc{1}, base = r;
    for (std::int64_t e = p; e; e >>= 1) {
      if (e & 1)
        acc = poly_rem(poly_mul(acc, base, p), f, p);
      base = poly_rem(poly_mul(base, base, p), f, p);
    }
    r = acc;
  }
  return r;
}

Poly sub_x(Poly a, std::int64_t p) {
  if (a.size() < 2)
    a.resize(2, 0);
  a[1] = (a[1] - 1 + p) % p;
  trim(a);
  return a;
}

} // namespace

bool is_irreducible(const Poly& f, std::int64_t p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k < 1 || f.back() != 1)
    return false;
  if (k == 1)
    return true;
  // Rabin: x^(p^k) ≡ x and gcd(x^(p^(k/r)) − x, f) = 1 for primes r | k
  if (!sub_x(x_pow_p_pow(f, p, k), p).empty())
    return false;
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r))
      continue;
    Poly g = poly_gcd(f, sub_x(x_pow_p_pow(f, p, k / r), p), p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

FieldPtr make_field(std::int64_t p, int k) {
  if (!is_prime(p))
    fail_input("p = " + std::to_string(p) + " is not a prime");
  if (k < 1 || k > 12)
    fail_input("field degree " + std::to_string(k) + " is outside 1..12");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > (std::uint64_t(1) << 62) / static_cast<std::uint64_t>(p))
      fail_input("field order p^k is too large");
    q *= static_cast<std::uint64_t>(p);
  }
  for (std::uint64_t n = 0; n < q; ++n) {
    Poly f(k + 1);
    std::uint64_t t = n;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<std::int64_t>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p))
      return std::make_shared<const FiniteField>(p, k, f);
  }
  fail_defect("no irreducible polynomial found");
}

FiniteField::FiniteField(std::int64_t p, int k, Poly modulus) : p_(p), k_(k), q_(1), f_(std::move(modulus)) {
  for (int i = 0; i < k; ++i)
    q_ *= static_cast<std::uint64_t>(p);
}

Poly FiniteField::mul_mod(const Poly& a, const Poly& b) const {
  Poly r = poly_rem(poly_mul(a, b, p_), f_, p_);
  r.resize(k_, 0);
  return r;
}

FqElement FiniteField::from_coeffs(Poly c) const {
  for (auto& x : c)
    x = ((x % p_) + p_) % p_;
  c = poly_rem(std::move(c), f_, p_);
  c.resize(k_, 0);
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FiniteField::zero() const { return from_coeffs({}); }
FqElement FiniteField::one() const { return from_coeffs({1}); }
FqElement FiniteField::from_int(std::int64_t v) const { return from_coeffs({v}); }
FqElement FiniteField::generator() const { return from_coeffs({0, 1}); }

FqElement FiniteField::random(std::mt19937_64& rng) const {
  Poly c(k_);
  for (auto& x : c)
    x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p_));
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FiniteField::random_nonzero(std::mt19937_64& rng) const {
  for (;;) {
    FqElement e = random(rng);
    if (!e.is_zero())
      return e;
  }
}

// --- FqElement ----------------------------------------------------------------

FqElement::FqElement(std::shared_ptr<const FiniteField> f, Poly c) : f_(std::move(f)), c_(std::move(c)) {}

std::int64_t FqElement::p_() const { return f_->p(); }

bool FqElement::is_zero() const {
  for (auto x : c_)
    if (x)
      return false;
  return true;
}

FqElement FqElement::operator+(const FqElement& o) const {
  Poly r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (c_[i] + o.c_[i]) % p_();
  return FqElement(f_, std::move(r));
}

FqElement FqElement::operator-(const FqElement& o) const { return *this + (-o); }

FqElement FqElement::operator-() const {
  Poly r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = (p_() - c_[i]) % p_();
  return FqElement(f_, std::move(r));
}

FqElement FqElement::operator*(const FqElement& o) const {
  return FqElement(f_, f_->mul_mod(c_, o.c_));
}

FqElement FqElement::pow(std::int64_t e) const {
  std::uint64_t group = f_->order() - 1;
  std::uint64_t n;
  if (e < 0) {
    if (is_zero())
      fail_input("negative power of zero");
    std::uint64_t m = static_cast<std::uint64_t>(-(e + 1)) % group;   // e = −(m + 1) mod group
    n = (group - 1 - m) % group;
  } else {
    n = static_cast<std::uint64_t>(e);
    if (is_zero())
      return n == 0 ? f_->one() : *this;
  }
  FqElement r = f_->one(), b = *this;
  while (n) {
    if (n & 1)
      r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

FqElement FqElement::inverse() const {
  if (is_zero())
    fail_input("inverse of zero");
  return pow(static_cast<std::int64_t>(f_->order() - 2));
}

std::string FqElement::str() const {
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i])
      continue;
    if (!s.empty())
      s += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (mono.empty())
      s += std::to_string(c_[i]);
    else if (c_[i] == 1)
      s += mono;
    else
      s += std::to_string(c_[i]) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

// --- FqMatrix3 ----------------------------------------------------------------

FqMatrix3::FqMatrix3(const FieldPtr& f) {
  for (auto& row : a_)
    for (auto& x : row)
      x = f->zero();
}

FqMatrix3 FqMatrix3::identity(const FieldPtr& f) {
  FqMatrix3 m(f);
  for (int i = 0; i < 3; ++i)
    m(i, i) = f->one();
  return m;
}

FqMatrix3 FqMatrix3::operator*(const FqMatrix3& o) const {
  FqMatrix3 r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a_[i][0] * o(0, j) + a_[i][1] * o(1, j) + a_[i][2] * o(2, j);
  return r;
}

FqMatrix3 FqMatrix3::transpose() const {
  FqMatrix3 r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a_[j][i];
  return r;
}

FqMatrix3 FqMatrix3::entrywise_frobenius() const {
  FqMatrix3 r = *this;
  for (auto& row : r.a_)
    for (auto& x : row)
      x = x.frobenius();
  return r;
}

FqElement FqMatrix3::det() const {
  const auto& a = a_;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

FqMatrix3 FqMatrix3::inverse() const {
  FqElement d = det();
  if (d.is_zero())
    fail_input("matrix is singular");
  FqElement di = d.inverse();
  FqMatrix3 r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of (j, i)
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r(i, j) = (a_[r0][c0] * a_[r1][c1] - a_[r0][c1] * a_[r1][c0]) * di;
    }
  return r;
}

std::vector<std::vector<std::string>> FqMatrix3::str_rows() const {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : a_) {
    rows.emplace_back();
    for (const auto& x : row)
      rows.back().push_back(x.str());
  }
  return rows;
}

} // namespace zipcox
