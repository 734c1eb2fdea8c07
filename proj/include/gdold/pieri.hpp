#pragma once

#include <set>
#include <string>
#include <vector>

namespace gdold::pieri {

// ============================================================================
// Independent Schubert-calculus oracle for complex Grassmannians G(k, n).
// This module deliberately shares no polynomial types or reduction code with
// the coinvariant-algebra engine: classes are GF(2) combinations of Schubert
// partitions and all products go through the Pieri rule for the special
// classes sigma_(1^j) = c_j(gamma), gamma the tautological subbundle.
// ============================================================================

/// Partition with weakly decreasing positive entries (trailing zeros trimmed).
using Partition = std::vector<int>;

/// GF(2) combination of Schubert classes indexed by partitions.
using ClassGF2 = std::set<Partition>;

/// True when lam fits the k x cols box: at most k rows, entries at most cols.
[[nodiscard]] bool fits_box(const Partition& lam, int k, int cols);

/// The full k x cols box partition (cols repeated k times).
[[nodiscard]] Partition box_full(int k, int cols);

/// Pieri rule for a column: multiply by sigma_(1^j) = c_j(gamma) inside
/// G(k, k + cols), i.e. XOR over all mu obtained from each lam by adding a
/// vertical strip of j boxes that stays inside the box. Throws
/// std::invalid_argument("pieri: factor outside box") when j > k.
[[nodiscard]] ClassGF2 pieri_column_multiply(const ClassGF2& a, int j, int k, int cols);

/// Product sigma_(1^{j_1}) * ... * sigma_(1^{j_t}) in H*(G(k, n); Z2),
/// starting from the fundamental class sigma_0.
[[nodiscard]] ClassGF2 pieri_oracle_product(int n, int k, const std::vector<int>& columns);

/// Coefficient of the full-box Schubert class: integration over G(k, n).
[[nodiscard]] int box_coefficient(const ClassGF2& a, int n, int k);

/// Tangent characteristic classes of G(k, n) over GF(2), expanded universally
/// as polynomials in c_1(gamma), ..., c_k(gamma) via formal root splitting and
/// the inverse-series relation c(quotient) = 1 / c(gamma). Evaluation of any
/// monomial in the c_j(gamma) is then a chain of Pieri column products.
class GrassmannTangentOracle {
 public:
  /// Exponent vector (e_1, ..., e_k) of a monomial c_1^{e_1} ... c_k^{e_k}.
  using CMonomial = std::vector<int>;
  /// Polynomial over GF(2) in c_1..c_k: set of exponent vectors.
  using CPoly = std::set<CMonomial>;

  GrassmannTangentOracle(int n, int k);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int dim() const { return d_; }

  /// c_i of the tangent bundle as a polynomial in the c_j(gamma), i <= dim().
  [[nodiscard]] const CPoly& tangent_chern(int i) const;

  /// Evaluate one monomial in the c_j(gamma) against the fundamental class.
  [[nodiscard]] int monomial_box_value(const CMonomial& gamma_exp) const;

  /// Stiefel-Whitney number of G(k, n) for the partition I of dim(): pairing
  /// of the product of tangent classes c_{i_1} ... c_{i_t} with the
  /// fundamental class, all arithmetic over GF(2).
  [[nodiscard]] int sw_number(const std::vector<int>& I) const;

 private:
  int n_, k_, d_;
  std::vector<CPoly> chern_;  // chern_[i] = c_i(tangent), 0 <= i <= d_
};

/// Convenience wrapper: Stiefel-Whitney number of G(k, n) for the partition I
/// of k(n-k), computed entirely through the Pieri route.
[[nodiscard]] int grassmann_sw_number(int n, int k, const std::vector<int>& I);

}  // namespace gdold::pieri
