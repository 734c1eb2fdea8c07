#include "gdold/gf2poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

using namespace gdold;

namespace {

[[nodiscard]] Gf2Poly var(int v, int e = 1) { return Gf2Poly::of(Monomial::variable(v, e)); }

[[nodiscard]] Gf2Poly random_poly(std::mt19937& rng, int n_vars, int max_exp, int max_terms) {
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<int> count_dist(0, max_terms);
  Gf2Poly p;
  const int count = count_dist(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m = Monomial::one();
    for (int v = 0; v < n_vars; ++v) {
      m = m.with_exp(v, exp_dist(rng));
    }
    p.toggle(m);
  }
  return p;
}

}  // namespace

TEST_CASE("monomial packing round-trips exponents") {
  Monomial m = Monomial::one();
  for (int v = 0; v < Monomial::kMaxVars; ++v) {
    m = m.with_exp(v, v + 1);
  }
  for (int v = 0; v < Monomial::kMaxVars; ++v) {
    CHECK(m.exp(v) == v + 1);
  }
  CHECK(m.degree() == 1 + 2 + 3 + 4 + 5 + 6 + 7 + 8);
  CHECK(Monomial::from_key(m.key()) == m);
  CHECK(Monomial::one().is_one());
  CHECK(!m.is_one());
}

TEST_CASE("monomial product adds exponents variable by variable") {
  const Monomial a = Monomial::variable(0, 2) * Monomial::variable(1, 1);
  const Monomial b = Monomial::variable(0, 1) * Monomial::variable(2, 3);
  const Monomial ab = a * b;
  CHECK(ab.exp(0) == 3);
  CHECK(ab.exp(1) == 1);
  CHECK(ab.exp(2) == 3);
  CHECK(ab.degree() == 7);
  CHECK(a * Monomial::one() == a);
}

TEST_CASE("monomial_lex_greater orders x1 most significant, descending") {
  const Monomial x1 = Monomial::variable(0);
  const Monomial x2 = Monomial::variable(1);
  CHECK(monomial_lex_greater(x1, x2));
  CHECK(!monomial_lex_greater(x2, x1));
  CHECK(monomial_lex_greater(Monomial::variable(0, 2), x1));
  CHECK(monomial_lex_greater(x1 * x2, x1));
  CHECK(!monomial_lex_greater(x1, x1));
}

TEST_CASE("gf2 addition is symmetric difference and self-add cancels") {
  Gf2Poly p = var(0) + var(1);
  const Gf2Poly q = var(1) + var(2);
  const Gf2Poly sum = p + q;
  CHECK(sum == var(0) + var(2));
  p += p;
  CHECK(p.is_zero());
  CHECK(Gf2Poly::zero().degree() == -1);
}

TEST_CASE("toggle flips a single coefficient") {
  Gf2Poly p;
  const Monomial m = Monomial::variable(0, 3);
  p.toggle(m);
  CHECK(p.contains(m));
  CHECK(p.term_count() == 1);
  p.toggle(m);
  CHECK(p.is_zero());
}

TEST_CASE("product expands and cancels mod 2") {
  // (x1 + x2)^2 = x1^2 + x2^2 over GF(2).
  const Gf2Poly s = var(0) + var(1);
  const Gf2Poly sq = s * s;
  CHECK(sq == var(0, 2) + var(1, 2));
  // (x1 + x2) * (x1 + x2 + 1) = x1^2 + x2^2 + x1 + x2.
  const Gf2Poly t = s * (s + Gf2Poly::one());
  CHECK(t == var(0, 2) + var(1, 2) + var(0) + var(1));
  CHECK((s * Gf2Poly::zero()).is_zero());
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937 rng(20240811u);
  for (int trial = 0; trial < 60; ++trial) {
    const Gf2Poly a = random_poly(rng, 4, 3, 6);
    const Gf2Poly b = random_poly(rng, 4, 3, 6);
    const Gf2Poly c = random_poly(rng, 4, 3, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + a == Gf2Poly::zero());
  }
}

TEST_CASE("degree and component split by total degree") {
  const Gf2Poly p = var(0, 2) + var(0) * var(1) + var(2) + Gf2Poly::one();
  CHECK(p.degree() == 2);
  CHECK(p.component(0) == Gf2Poly::one());
  CHECK(p.component(1) == var(2));
  CHECK(p.component(2) == var(0, 2) + var(0) * var(1));
  CHECK(p.component(3).is_zero());
  Gf2Poly recombined;
  for (int d = 0; d <= p.degree(); ++d) {
    recombined += p.component(d);
  }
  CHECK(recombined == p);
}

TEST_CASE("to_string prints canonical descending-lex form") {
  CHECK(Gf2Poly::zero().to_string() == "0");
  CHECK(Gf2Poly::one().to_string() == "1");
  CHECK((var(0, 2) * var(1) + var(2)).to_string() == "x1^2*x2 + x3");
  CHECK((var(2) + var(0, 2) * var(1)).to_string() == "x1^2*x2 + x3");
  CHECK((var(0) + Gf2Poly::one()).to_string() == "x1 + 1");
}

TEST_CASE("elementary symmetric polynomials match direct expansion") {
  const std::vector<int> vars{0, 1, 2};
  CHECK(elementary_symmetric(vars, 0) == Gf2Poly::one());
  CHECK(elementary_symmetric(vars, 1) == var(0) + var(1) + var(2));
  CHECK(elementary_symmetric(vars, 2) == var(0) * var(1) + var(0) * var(2) + var(1) * var(2));
  CHECK(elementary_symmetric(vars, 3) == var(0) * var(1) * var(2));
  CHECK(elementary_symmetric(vars, 4).is_zero());
}

TEST_CASE("complete homogeneous polynomials match direct expansion") {
  const std::vector<int> vars{0, 1};
  CHECK(complete_homogeneous(vars, 0) == Gf2Poly::one());
  CHECK(complete_homogeneous(vars, 1) == var(0) + var(1));
  CHECK(complete_homogeneous(vars, 2) == var(0, 2) + var(0) * var(1) + var(1, 2));
  CHECK(complete_homogeneous(vars, 3) == var(0, 3) + var(0, 2) * var(1) + var(0) * var(1, 2) + var(1, 3));
}

TEST_CASE("generating identity sum_j e_j h_(k-j) = 0 for k >= 1 over GF(2)") {
  const std::vector<int> vars{0, 1, 2, 3};
  for (int k = 1; k <= 6; ++k) {
    Gf2Poly acc;
    for (int j = 0; j <= k; ++j) {
      acc += elementary_symmetric(vars, j) * complete_homogeneous(vars, k - j);
    }
    CHECK(acc.is_zero());
  }
}
