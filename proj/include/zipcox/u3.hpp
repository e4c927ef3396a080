// The rank-3 worked example: GL₃ (split) and U(3) (inert) with μ of type (2,1).
//
// Weights are integer triples (λ₁, λ₂, λ₃).  All functions use exact integer
// arithmetic; inputs are limited to |λ_i| ≤ 10^12 and primes p ≤ 10^4.
#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "zipcox/linalg.hpp"

namespace zipcox {

using Weight3 = std::array<std::int64_t, 3>;

enum class U3Case { Split, Inert };

Weight3 ha1(std::int64_t p);        // (1, 0, p)
Weight3 ha2(std::int64_t p);        // (1+p, 1, p)
Weight3 ha_mu(std::int64_t p);      // (p+1, p+1, p²+p)
Weight3 lambda_det(std::int64_t p, U3Case c);   // (p+1)(1,1,1) or −(p−1)(1,1,1)

// p/(p²−p+1) · (pλ₁ − (p−1)λ₂ − λ₃)
Rational F_lambda(const Weight3& l, std::int64_t p);

// The i in [0, λ₁−λ₂] with p | i, p+1 | λ₂+i, p²−1 | λ₁−i−pλ₃, i ≥ F(λ).
bool qualifies(const Weight3& l, std::int64_t p, std::int64_t i);
std::vector<std::int64_t> qualifying_indices(const Weight3& l, std::int64_t p,
                                             std::size_t max_count = 1000);
std::int64_t dim_h0_u3(const Weight3& l, std::int64_t p);

// λ₁ ≥ λ₂ and (p−1)λ₁ + λ₂ − pλ₃ ≤ 0
bool czip_u3_contains(const Weight3& l, std::int64_t p);

struct U3Decomposition {
  std::int64_t k1 = 0, k2 = 0, k_mu = 0, k_det = 0;
  Weight3 nu{};   // ν_i = λ − i·α₁
};
// λ = k₁ha₁ + k₂ha₂ + k_μ ha_μ + k_det λ_det (inert det weight).
U3Decomposition decompose_generators(const Weight3& l, std::int64_t p, std::int64_t i);

Weight3 det_shift(const Weight3& l, std::int64_t p, U3Case c);
std::pair<std::int64_t, std::int64_t> split_correspondence(const Weight3& l);

// Points of Z≥0 ha₁ + Z≥0 ha₂ + Z≥0 ha_μ + Z λ_det with ‖λ‖∞ ≤ box, by
// enumerating coefficient tuples.
std::set<Weight3> u3_generated_monoid(std::int64_t p, std::int64_t box);

struct CzipScan {
  std::int64_t p = 0, box = 0;
  std::size_t h0_points = 0, monoid_points = 0;
  std::size_t only_h0 = 0, only_monoid = 0;
  std::size_t decomposition_failures = 0;
  std::size_t saturation_mismatches = 0;
  std::size_t det_shift_mismatches = 0;
  bool ok() const {
    return only_h0 == 0 && only_monoid == 0 && decomposition_failures == 0 &&
           saturation_mismatches == 0 && det_shift_mismatches == 0;
  }
};
// Exhaustive check on the box: {dim ≥ 1} equals the generated monoid, every
// member decomposes, the half-space cone equals the saturation, and dim is
// invariant under the inert det shift.
CzipScan czip_scan(std::int64_t p, std::int64_t box);

} // namespace zipcox
