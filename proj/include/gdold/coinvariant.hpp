#pragma once

#include <unordered_map>
#include <vector>

#include "gdold/gf2poly.hpp"

namespace gdold {

// ============================================================================
// The mod-2 coinvariant algebra Z2[x1..xn] / (e1, ..., en), which is the
// cohomology ring of the full complex flag manifold Flag(C^n) with all degrees
// halved (our polynomial degree j corresponds to cohomological degree 2j).
// Reduction uses the triangular rewriting system with rules
//   x_i^(n-i+1)  ->  h_(n-i+1)(x_1..x_i) - x_i^(n-i+1)   (mod 2),
// whose normal forms are spanned by the monomials with exp(x_i) <= n-i.
// ============================================================================

class CoinvariantRing {
 public:
  /// Requires 1 <= n <= Monomial::kMaxVars.
  explicit CoinvariantRing(int n);

  [[nodiscard]] int n() const { return n_; }

  /// Complex dimension of the full flag manifold: C(n, 2).
  [[nodiscard]] int top_degree() const { return n_ * (n_ - 1) / 2; }

  /// Rewrite p into the normal-form basis (every exp(x_i) <= n-i).
  [[nodiscard]] Gf2Poly normal_form(const Gf2Poly& p) const;

  /// normal_form(a * b), sharing one rewrite memo across all term products.
  [[nodiscard]] Gf2Poly reduce_product(const Gf2Poly& a, const Gf2Poly& b) const;

  /// Pairing with the fundamental class of Flag(C^n): the coefficient of the
  /// staircase monomial x1^(n-1) x2^(n-2) ... x_(n-1) in normal_form(p).
  [[nodiscard]] int integrate_full_flag(const Gf2Poly& p) const;

  /// The staircase monomial dual to the fundamental class.
  [[nodiscard]] Monomial top_monomial() const;

  /// All n! basis monomials (exp(x_i) <= n-i), in no particular order.
  [[nodiscard]] std::vector<Monomial> basis() const;

 private:
  using Memo = std::unordered_map<std::uint64_t, Gf2Poly>;

  const Gf2Poly& reduce_monomial(Monomial m, Memo& memo, int depth) const;

  int n_;
  std::vector<Gf2Poly> tails_;  // tails_[v] = h_(n-v)(x_1..x_(v+1)) minus its leading monomial
};

/// Cohomology extension of the fiber's top cell for the fibration of full
/// flags over the partial flag manifold CG(parts): the product over blocks of
/// the block's staircase monomial (a block of size s occupying variables
/// x_a..x_(a+s-1) contributes x_a^(s-1) x_(a+1)^(s-2) ... x_(a+s-2)).
/// Multiplying by this class and integrating over the full flag manifold
/// computes the integral over CG(parts).
[[nodiscard]] Gf2Poly fiber_class(int n, const std::vector<int>& parts);

/// Pairing of p with the fundamental class of the partial flag manifold
/// CG(parts), where p is written in the same n = sum(parts) variables:
/// integrate_full_flag(p * fiber_class).
[[nodiscard]] int integrate_partial_flag(const CoinvariantRing& ring,
                                         const std::vector<int>& parts,
                                         const Gf2Poly& p);

}  // namespace gdold
