#include "gdold/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdold {

int nu2(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("nu2: argument must be positive");
  }
  int v = 0;
  while ((n & 1u) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

int adams_phi(int m) {
  if (m < 0) {
    throw std::invalid_argument("adams_phi: argument must be nonnegative");
  }
  int count = 0;
  for (int j = 1; j <= m; ++j) {
    const int rem = j % 8;
    if (rem == 0 || rem == 1 || rem == 2 || rem == 4) {
      ++count;
    }
  }
  return count;
}

int hurwitz_radon(std::uint64_t N) {
  const int v = nu2(N);  // validates N >= 1
  const int a = v / 4;
  const int b = v % 4;
  return 8 * a + (1 << b);
}

int sphere_span(std::uint64_t N) { return hurwitz_radon(N + 1) - 1; }

int binom_parity(std::uint64_t a, std::uint64_t b) {
  if (b > a) {
    return 0;
  }
  return ((b & (a - b)) == 0) ? 1 : 0;
}

int multinomial_parity(const std::vector<int>& parts) {
  std::uint64_t acc = 0;
  for (const int p : parts) {
    if (p < 0) {
      throw std::invalid_argument("multinomial_parity: parts must be nonnegative");
    }
    const auto q = static_cast<std::uint64_t>(p);
    if ((acc & q) != 0) {
      return 0;  // a carry occurs, so 2 divides the multinomial coefficient
    }
    acc |= q;
  }
  return 1;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("euler_char_flag: value exceeds 64 bits");
  }
  return r;
}

/// C(n, k) by the multiplicative formula; every intermediate quotient is an
/// exact integer, and overflow of an intermediate product is reported.
std::uint64_t binomial_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace

std::uint64_t euler_char_flag(const std::vector<int>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("euler_char_flag: parts must be nonempty");
  }
  std::uint64_t remaining = 0;
  for (const int p : parts) {
    if (p < 1) {
      throw std::invalid_argument("euler_char_flag: parts must be positive");
    }
    remaining += static_cast<std::uint64_t>(p);
  }
  std::uint64_t chi = 1;
  for (const int p : parts) {
    chi = checked_mul(chi, binomial_exact(remaining, static_cast<std::uint64_t>(p)));
    remaining -= static_cast<std::uint64_t>(p);
  }
  return chi;
}

}  // namespace gdold
