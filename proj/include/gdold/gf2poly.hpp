#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace gdold {

// ============================================================================
// Sparse multivariate polynomials over GF(2). A monomial packs its exponent
// vector into a single 64-bit word (one byte per variable, up to 8 variables),
// so a polynomial is just the set of monomials with coefficient 1 and addition
// is symmetric difference. This is the workhorse representation for mod-2
// cohomology rings of flag manifolds.
// ============================================================================

/// Monomial x1^e1 ... x8^e8 with exponents packed one byte per variable.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 255;

  constexpr Monomial() = default;

  /// The constant monomial 1.
  [[nodiscard]] static constexpr Monomial one() { return Monomial(); }

  /// x_{var+1}^e as a monomial (variables are 0-indexed in code, printed 1-indexed).
  [[nodiscard]] static Monomial variable(int var, int e = 1);

  [[nodiscard]] static Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.bits_ = key;
    return m;
  }

  [[nodiscard]] int exp(int var) const {
    assert(var >= 0 && var < kMaxVars);
    return static_cast<int>((bits_ >> (8 * var)) & 0xffu);
  }

  /// Copy of this monomial with the exponent of one variable replaced.
  [[nodiscard]] Monomial with_exp(int var, int e) const;

  /// Total degree (sum of all exponents).
  [[nodiscard]] int degree() const;

  [[nodiscard]] bool is_one() const { return bits_ == 0; }

  /// Packed representation, usable as a hash/map key.
  [[nodiscard]] std::uint64_t key() const { return bits_; }

  /// Product of monomials: exponents add variable by variable.
  [[nodiscard]] Monomial operator*(Monomial o) const;

  bool operator==(const Monomial& o) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Descending lexicographic order on exponent vectors, x1 most significant.
/// Used only for canonical printing and sorted term dumps.
[[nodiscard]] bool monomial_lex_greater(Monomial a, Monomial b);

/// Polynomial over GF(2): the set of monomials with coefficient 1.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  [[nodiscard]] static Gf2Poly zero() { return {}; }
  [[nodiscard]] static Gf2Poly one() { return of(Monomial::one()); }
  [[nodiscard]] static Gf2Poly of(Monomial m);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }
  [[nodiscard]] bool contains(Monomial m) const { return terms_.count(m.key()) != 0; }

  /// Flip the coefficient of one monomial (GF(2) addition of a single term).
  void toggle(Monomial m);

  Gf2Poly& operator+=(const Gf2Poly& o);
  [[nodiscard]] friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) {
    a += b;
    return a;
  }

  /// Plain polynomial product; no ring relations are applied here.
  [[nodiscard]] Gf2Poly operator*(const Gf2Poly& o) const;

  bool operator==(const Gf2Poly& o) const { return terms_ == o.terms_; }

  /// Largest total degree of a term, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const;

  /// Homogeneous component of the given total degree.
  [[nodiscard]] Gf2Poly component(int deg) const;

  /// Terms in descending lexicographic order (canonical dump order).
  [[nodiscard]] std::vector<Monomial> sorted_terms() const;

  /// Canonical text form such as "x1^2*x2 + x3"; the zero polynomial is "0".
  [[nodiscard]] std::string to_string() const;

  template <typename F>
  void for_each(F&& f) const {
    for (const std::uint64_t k : terms_) {
      f(Monomial::from_key(k));
    }
  }

 private:
  std::unordered_set<std::uint64_t> terms_;
};

/// Elementary symmetric polynomial e_j in the given (0-indexed) variables.
/// e_0 = 1; e_j = 0 when j exceeds the number of variables; j < 0 is an error.
[[nodiscard]] Gf2Poly elementary_symmetric(const std::vector<int>& vars, int j);

/// Complete homogeneous symmetric polynomial h_j in the given variables.
[[nodiscard]] Gf2Poly complete_homogeneous(const std::vector<int>& vars, int j);

}  // namespace gdold
