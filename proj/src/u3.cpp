#include "zipcox/u3.hpp"

#include <string>

#include "zipcox/errors.hpp"
#include "zipcox/root_datum.hpp"

namespace zipcox {

namespace {

using i128 = __int128;

constexpr std::int64_t max_entry = 1000000000000LL;
constexpr std::int64_t max_prime = 10000;

void check_inputs(const Weight3& l, std::int64_t p) {
  if (p > max_prime || !is_prime(p))
    fail_input("p = " + std::to_string(p) + " must be a prime at most " + std::to_string(max_prime));
  for (std::int64_t x : l)
    if (x > max_entry || x < -max_entry)
      fail_input("weight entry " + std::to_string(x) + " is out of range");
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 mod(i128 a, i128 m) { return a - floor_div(a, m) * m; }

Weight3 scaled(const Weight3& w, std::int64_t k) { return {w[0] * k, w[1] * k, w[2] * k}; }

} // namespace

Weight3 ha1(std::int64_t p) { return {1, 0, p}; }
Weight3 ha2(std::int64_t p) { return {1 + p, 1, p}; }
Weight3 ha_mu(std::int64_t p) { return {p + 1, p + 1, p * p + p}; }
Weight3 lambda_det(std::int64_t p, U3Case c) {
  std::int64_t v = c == U3Case::Inert ? p + 1 : -(p - 1);
  return {v, v, v};
}

Rational F_lambda(const Weight3& l, std::int64_t p) {
  check_inputs(l, p);
  Integer P = static_cast<long>(p);
  Integer n = P * P * static_cast<long>(l[0]) - P * (P - 1) * static_cast<long>(l[1]) -
              P * static_cast<long>(l[2]);
  return make_rational(n, P * P - P + 1);
}

namespace {

bool qualifies_impl(const Weight3& l, std::int64_t p, std::int64_t i) {
  i128 P = p;
  if (i < 0 || i > l[0] - l[1])
    return false;
  return i % p == 0 && mod(i128(l[1]) + i, P + 1) == 0 &&
         mod(i128(l[0]) - i - P * l[2], P * P - 1) == 0 &&
         i128(i) * (P * P - P + 1) >= P * (P * l[0] - (P - 1) * l[1] - l[2]);
}

std::int64_t dim_impl(const Weight3& l, std::int64_t p) {
  // i = p·j with j ≡ λ₂ (mod p+1) and j ≡ p(λ₁ − pλ₃) (mod p²−1)
  i128 P = p, m = P * P - 1;
  if (mod(i128(l[0]) + l[1] + l[2], P + 1) != 0)
    return 0;
  i128 j0 = mod(P * (i128(l[0]) - P * l[2]), m);
  i128 lo = ceil_div(P * (P * l[0] - (P - 1) * l[1] - l[2]), P * P - P + 1);
  if (lo < 0)
    lo = 0;
  i128 hi = i128(l[0]) - l[1];
  i128 a = ceil_div(lo, P), b = floor_div(hi, P);
  if (a > b)
    return 0;
  return static_cast<std::int64_t>(floor_div(b - j0, m) - floor_div(a - 1 - j0, m));
}

} // namespace

bool qualifies(const Weight3& l, std::int64_t p, std::int64_t i) {
  check_inputs(l, p);
  return qualifies_impl(l, p, i);
}

std::vector<std::int64_t> qualifying_indices(const Weight3& l, std::int64_t p, std::size_t max_count) {
  check_inputs(l, p);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= l[0] - l[1] && out.size() < max_count; i += p)
    if (qualifies_impl(l, p, i))
      out.push_back(i);
  return out;
}

std::int64_t dim_h0_u3(const Weight3& l, std::int64_t p) {
  check_inputs(l, p);
  return dim_impl(l, p);
}

bool czip_u3_contains(const Weight3& l, std::int64_t p) {
  check_inputs(l, p);
  return l[0] >= l[1] && i128(p - 1) * l[0] + l[1] - i128(p) * l[2] <= 0;
}

U3Decomposition decompose_generators(const Weight3& l, std::int64_t p, std::int64_t i) {
  check_inputs(l, p);
  if (!qualifies(l, p, i))
    fail_input("i = " + std::to_string(i) + " does not satisfy the divisibility and bound "
               "conditions for lambda = (" + std::to_string(l[0]) + "," + std::to_string(l[1]) +
               "," + std::to_string(l[2]) + ")");
  i128 P = p;
  U3Decomposition d;
  d.k2 = i / p;
  d.k1 = l[0] - l[1] - i;
  i128 num = (P * P - P + 1) * i - P * P * l[0] + P * (P - 1) * l[1] + P * l[2];
  if (mod(num, P * (P * P - 1)) != 0)
    fail_defect("k_mu is not integral");
  d.k_mu = static_cast<std::int64_t>(num / (P * (P * P - 1)));
  Weight3 g1 = ha1(p), g2 = ha2(p), gm = ha_mu(p);
  i128 rest[3];
  for (int c = 0; c < 3; ++c)
    rest[c] = i128(l[c]) - i128(d.k1) * g1[c] - i128(d.k2) * g2[c] - i128(d.k_mu) * gm[c];
  if (rest[0] != rest[1] || rest[1] != rest[2] || mod(rest[0], P + 1) != 0)
    fail_defect("remainder is not a multiple of the det weight");
  d.k_det = static_cast<std::int64_t>(rest[0] / (P + 1));
  if (d.k1 < 0 || d.k2 < 0 || d.k_mu < 0)
    fail_defect("negative generator coefficient");
  d.nu = {l[0] - i, l[1] + i, l[2]};
  return d;
}

Weight3 det_shift(const Weight3& l, std::int64_t p, U3Case c) {
  check_inputs(l, p);
  Weight3 d = lambda_det(p, c);
  return {l[0] + d[0], l[1] + d[1], l[2] + d[2]};
}

std::pair<std::int64_t, std::int64_t> split_correspondence(const Weight3& l) {
  if (l[2] != 0)
    fail_input("last coordinate is " + std::to_string(l[2]) + ", not 0: apply det_shift first");
  return {l[0], l[1]};
}

std::set<Weight3> u3_generated_monoid(std::int64_t p, std::int64_t box) {
  check_inputs({box, box, box}, p);
  std::set<Weight3> out;
  Weight3 g1 = ha1(p), g2 = ha2(p), gm = ha_mu(p), gd = lambda_det(p, U3Case::Inert);
  // λ₁−λ₂ = k₁ + p·k₂ and λ₃−λ₂ = p·k₁ + (p−1)·k₂ + (p²−1)·k_μ are det-invariant
  for (std::int64_t k1 = 0; k1 <= 2 * box; ++k1)
    for (std::int64_t k2 = 0; k1 + p * k2 <= 2 * box; ++k2)
      for (std::int64_t km = 0; p * k1 + (p - 1) * k2 + (p * p - 1) * km <= 2 * box; ++km) {
        std::int64_t base2 = k2 + (p + 1) * km;
        std::int64_t dlo = static_cast<std::int64_t>(ceil_div(-box - base2, p + 1));
        std::int64_t dhi = static_cast<std::int64_t>(floor_div(box - base2, p + 1));
        for (std::int64_t kd = dlo; kd <= dhi; ++kd) {
          Weight3 w;
          bool inside = true;
          for (int c = 0; c < 3; ++c) {
            w[c] = k1 * g1[c] + k2 * g2[c] + km * gm[c] + kd * gd[c];
            if (w[c] > box || w[c] < -box)
              inside = false;
          }
          if (inside)
            out.insert(w);
        }
      }
  return out;
}

CzipScan czip_scan(std::int64_t p, std::int64_t box) {
  check_inputs({box, box, box}, p);
  CzipScan s;
  s.p = p;
  s.box = box;
  std::set<Weight3> monoid = u3_generated_monoid(p, box);
  s.monoid_points = monoid.size();
  // |det(ha₁, ha₂, λ_det)|: m·λ lies in the monoid for every λ of the cone
  std::int64_t D = (p + 1) * (p * p - p + 1);
  for (std::int64_t a = -box; a <= box; ++a)
    for (std::int64_t b = -box; b <= box; ++b)
      for (std::int64_t c = -box; c <= box; ++c) {
        Weight3 l{a, b, c};
        std::int64_t dim = dim_impl(l, p);
        bool in_h0 = dim >= 1;
        bool in_monoid = monoid.count(l) > 0;
        s.h0_points += in_h0;
        s.only_h0 += in_h0 && !in_monoid;
        s.only_monoid += in_monoid && !in_h0;
        if (in_h0) {
          for (std::int64_t i : qualifying_indices(l, p)) {
            try {
              decompose_generators(l, p, i);
            } catch (const std::exception&) {
              ++s.decomposition_failures;
            }
          }
        }
        bool saturated = false;
        for (std::int64_t m = 1; m <= D && !saturated; ++m)
          saturated = dim_impl(scaled(l, m), p) >= 1;
        bool in_cone = a >= b && (p - 1) * a + b - p * c <= 0;
        s.saturation_mismatches += saturated != in_cone;
        s.det_shift_mismatches += dim_impl({a + p + 1, b + p + 1, c + p + 1}, p) != dim;
      }
  return s;
}

} // namespace zipcox
