#include "gdold/numeric.hpp"

#include <cstdint>
#include <stdexcept>

#include "doctest.h"

using namespace gdold;

TEST_CASE("nu2 counts trailing zero bits and rejects zero") {
  CHECK(nu2(1) == 0);
  CHECK(nu2(2) == 1);
  CHECK(nu2(12) == 2);
  CHECK(nu2(64) == 6);
  CHECK(nu2(96) == 5);
  CHECK_THROWS_AS((void)nu2(0), std::invalid_argument);
}

TEST_CASE("adams_phi counts residues 0,1,2,4 mod 8 in 1..m") {
  CHECK(adams_phi(1) == 1);
  CHECK(adams_phi(2) == 2);
  CHECK(adams_phi(3) == 2);
  CHECK(adams_phi(4) == 3);
  CHECK(adams_phi(5) == 3);
  CHECK(adams_phi(6) == 3);
  CHECK(adams_phi(7) == 3);
  CHECK(adams_phi(8) == 4);
  CHECK(adams_phi(9) == 5);
  CHECK(adams_phi(10) == 6);
}

TEST_CASE("hurwitz_radon follows the 8a + 2^b pattern") {
  // N = 2^(4a+b) * odd, 0 <= b <= 3, gives rho(N) = 8a + 2^b.
  CHECK(hurwitz_radon(1) == 1);
  CHECK(hurwitz_radon(2) == 2);
  CHECK(hurwitz_radon(4) == 4);
  CHECK(hurwitz_radon(8) == 8);
  CHECK(hurwitz_radon(16) == 9);
  CHECK(hurwitz_radon(32) == 10);
  CHECK(hurwitz_radon(14) == 2);
  CHECK(hurwitz_radon(3) == 1);
}

TEST_CASE("sphere_span matches the classical parallelizable spheres") {
  CHECK(sphere_span(1) == 1);
  CHECK(sphere_span(3) == 3);
  CHECK(sphere_span(7) == 7);
  CHECK(sphere_span(2) == 0);
  CHECK(sphere_span(4) == 0);
  CHECK(sphere_span(5) == 1);
  CHECK(sphere_span(15) == 8);
}

TEST_CASE("binom_parity implements Lucas' theorem via bit disjointness") {
  CHECK(binom_parity(4, 2) == 0);
  CHECK(binom_parity(5, 2) == 0);
  CHECK(binom_parity(5, 1) == 1);
  CHECK(binom_parity(7, 3) == 1);  // all subsets of 111
  CHECK(binom_parity(3, 5) == 0);  // b > a
  CHECK(binom_parity(0, 0) == 1);
  // Row 2^k has only the two end entries odd.
  for (std::uint64_t b = 1; b < 8; ++b) {
    CHECK(binom_parity(8, b) == 0);
  }
  CHECK(binom_parity(8, 0) == 1);
  CHECK(binom_parity(8, 8) == 1);
}

TEST_CASE("multinomial_parity is 1 exactly when the parts' bits are disjoint") {
  CHECK(multinomial_parity({1, 1}) == 0);  // C(2,1) = 2
  CHECK(multinomial_parity({1, 2}) == 1);  // C(3,1) = 3
  CHECK(multinomial_parity({2, 3}) == 0);  // C(5,2) = 10
  CHECK(multinomial_parity({1, 2, 4}) == 1);
  CHECK(multinomial_parity({3}) == 1);
  CHECK(multinomial_parity({1, 3}) == 0);
}

TEST_CASE("euler_char_flag multiplies exact binomial coefficients") {
  CHECK(euler_char_flag({1, 1}) == 2);
  CHECK(euler_char_flag({1, 1, 1}) == 6);
  CHECK(euler_char_flag({1, 2}) == 3);
  CHECK(euler_char_flag({2, 2}) == 6);
  CHECK(euler_char_flag({2, 3}) == 10);
  CHECK(euler_char_flag({1, 1, 1, 1}) == 24);
  // chi of the full flag manifold is n!.
  std::uint64_t factorial = 1;
  for (int n = 1; n <= 8; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    CHECK(euler_char_flag(std::vector<int>(static_cast<std::size_t>(n), 1)) == factorial);
  }
}

TEST_CASE("euler_char_flag reports overflow instead of wrapping") {
  // 20! fits in 64 bits, 21! does not.
  CHECK(euler_char_flag(std::vector<int>(20, 1)) == 2432902008176640000ULL);
  CHECK_THROWS_AS((void)euler_char_flag(std::vector<int>(21, 1)), std::overflow_error);
}
