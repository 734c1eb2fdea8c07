#pragma once

#include <cstdint>
#include <vector>

namespace gdold {

// ============================================================================
// Elementary number-theoretic helpers shared by the characteristic-class and
// vector-field computations. Everything here is exact integer arithmetic;
// parity results are returned as int 0/1.
// ============================================================================

/// 2-adic valuation of n (the exponent of the largest power of 2 dividing n).
/// Requires n >= 1; throws std::invalid_argument otherwise.
[[nodiscard]] int nu2(std::uint64_t n);

/// Adams' phi function: the number of integers j with 1 <= j <= m and
/// j congruent to 0, 1, 2 or 4 modulo 8. Controls the vector-field span of
/// spheres and the stable order of the real Hopf line bundle over RP^m.
[[nodiscard]] int adams_phi(int m);

/// Hurwitz-Radon function: writing N = 2^(4a+b) * odd with 0 <= b <= 3,
/// returns 8a + 2^b. Requires N >= 1.
[[nodiscard]] int hurwitz_radon(std::uint64_t N);

/// Maximal number of linearly independent tangent vector fields on the
/// N-sphere: sphere_span(N) = hurwitz_radon(N + 1) - 1.
[[nodiscard]] int sphere_span(std::uint64_t N);

/// Binomial coefficient C(a, b) modulo 2 via Lucas' theorem: the value is 1
/// exactly when the binary digits of b are dominated by those of a. Returns 0
/// when b > a. Never forms factorials.
[[nodiscard]] int binom_parity(std::uint64_t a, std::uint64_t b);

/// Multinomial coefficient (sum parts; parts...) modulo 2 via Kummer's
/// theorem: odd exactly when the binary digit sets of the parts are pairwise
/// disjoint (their addition produces no carries).
[[nodiscard]] int multinomial_parity(const std::vector<int>& parts);

/// Euler characteristic of the complex flag manifold CG(n_1, ..., n_r):
/// the exact multinomial n! / (n_1! ... n_r!) with n = sum of parts.
/// Throws std::overflow_error if the value does not fit in 64 bits and
/// std::invalid_argument on empty or nonpositive parts.
[[nodiscard]] std::uint64_t euler_char_flag(const std::vector<int>& parts);

}  // namespace gdold
