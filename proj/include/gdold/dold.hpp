#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdold/flag.hpp"

namespace gdold {

// ============================================================================
// Generalized Dold manifolds P(m, X) = (S^m x X) / (antipode x conjugation)
// for a complex flag manifold X = CG(n_1, ..., n_r). The mod-2 cohomology of
// P(m, X) is a free module over H*(RP^m) with a basis pulled back from X; the
// Stiefel-Whitney classes of P live in the subring generated by the degree-1
// class x (with x^(m+1) = 0) and the twisted classes c~_1, ..., c~_d, whose
// pairwise products are kept formal.
// ============================================================================

/// Shape parameters of P(m, X).
struct DoldDescriptor {
  int m = 0;
  FlagDescriptor flag;

  /// Throws std::invalid_argument unless m >= 1 and the flag is valid.
  void validate() const;

  [[nodiscard]] int dim() const { return m + flag.real_dim(); }
};

/// P(m, X) is orientable exactly when m + d is odd, d the complex dimension
/// of X (the coefficient m+1+d of x in w_1 is then even).
[[nodiscard]] bool is_orientable_P(const DoldDescriptor& dold);

/// Euler characteristic of P(m, X): chi(RP^m) * chi(X), which is chi(X) for
/// even m and 0 for odd m.
[[nodiscard]] std::uint64_t euler_char_P(const DoldDescriptor& dold);

/// Spin condition from the degree-2 component of the total class:
/// w_2 = C(m+1+d, 2) x^2 + c~_1, so P is spin exactly when it is orientable,
/// X is spin, and the x^2 term dies (m = 1 or C(m+1+d, 2) even).
[[nodiscard]] bool is_spin_P(const DoldDescriptor& dold, bool x_is_spin);
[[nodiscard]] bool is_spin_P(const DoldDescriptor& dold, const FlagManifold& X);

/// True in the single parameter regime where the x^2 coefficient convention
/// C(m+1+d, 2) and the split convention C(m+1, 2) + C(d, 2) disagree about
/// the spin verdict (m even, m > 1, d odd, X spin); callers may surface this.
[[nodiscard]] bool spin_convention_sensitive(const DoldDescriptor& dold, bool x_is_spin);

/// Bounds on the span (maximal number of independent vector fields).
struct SpanBounds {
  int lower = 0;                  // span of the base sphere: rho(m+1) - 1
  std::optional<int> upper;       // only known for full flags (all parts 1)
};
[[nodiscard]] SpanBounds span_bounds(const DoldDescriptor& dold);

// ----------------------------------------------------------------------------
// Formal Stiefel-Whitney classes.
// ----------------------------------------------------------------------------

/// One monomial x^a * c~_{i_1} ... c~_{i_t} (indices weakly increasing).
struct SWTerm {
  int x_exp = 0;
  std::vector<int> cbar;

  [[nodiscard]] int degree() const;
  bool operator==(const SWTerm& o) const = default;
};

/// Canonical term order: by total degree, then larger x-power first, then
/// lexicographically on the c~ index lists.
struct SWTermLess {
  bool operator()(const SWTerm& a, const SWTerm& b) const;
};

/// Element of the x / c~ subring of H*(P; Z2). The relation x^(m+1) = 0 is
/// applied on insertion; products of c~ generators stay formal.
class SWClass {
 public:
  SWClass(int m, int dmax);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int dmax() const { return dmax_; }

  [[nodiscard]] static SWClass zero(int m, int dmax) { return SWClass(m, dmax); }
  [[nodiscard]] static SWClass one(int m, int dmax);

  /// GF(2)-add a single monomial; terms with x_exp > m are dropped and the
  /// c~ index list must be weakly increasing within 1..dmax.
  void toggle(int x_exp, std::vector<int> cbar);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::set<SWTerm, SWTermLess>& terms() const { return terms_; }

  SWClass& operator+=(const SWClass& o);
  [[nodiscard]] friend SWClass operator+(SWClass a, const SWClass& b) {
    a += b;
    return a;
  }
  [[nodiscard]] SWClass operator*(const SWClass& o) const;

  bool operator==(const SWClass& o) const;

  /// Canonical text form such as "x^2 + c~1" or "x*c~1"; zero is "0".
  [[nodiscard]] std::string to_string() const;

 private:
  int m_;
  int dmax_;
  std::set<SWTerm, SWTermLess> terms_;
};

/// Components w_0, ..., w_max_degree of the total Stiefel-Whitney class of
/// P(m, X), from the closed form
///   w_k = sum over j of C(m+1+d-j, k-2j) x^(k-2j) c~_j   (mod 2).
/// Pass max_degree = -1 for the default cap m + 2d (all components beyond it
/// vanish identically).
[[nodiscard]] std::vector<SWClass> sw_total_P(const DoldDescriptor& dold, int max_degree = -1);

/// Components of the Stiefel-Whitney class of the twisted rank-r bundle over
/// P(m, X) whose closed form is w_k = sum_j C(r-j, k-2j) x^(k-2j) c~_j.
[[nodiscard]] std::vector<SWClass> sw_hat_bundle(int r, int m, int max_degree);

/// Restriction to the fiber X (set x to 0).
[[nodiscard]] SWClass restrict_to_fiber(const SWClass& c);

/// Restriction to the RP^m cross-section (set all c~_j to 0).
[[nodiscard]] SWClass restrict_to_section(const SWClass& c);

// ----------------------------------------------------------------------------
// Stiefel-Whitney numbers of P.
// ----------------------------------------------------------------------------

/// Outcome of a Stiefel-Whitney number computation for P(m, X). Monomials in
/// the w_k whose pairing is not determined by the module structure over
/// H*(RP^m) are reported as unsupported rather than guessed.
struct SwNumberResult {
  bool supported = false;
  int value = 0;
  std::string detail;
};

/// Pairing <w_{j_1}(P) ... w_{j_t}(P), [P]> for a multiset J of indices with
/// sum equal to dim P = m + 2d (anything else is std::invalid_argument).
/// Supported cases:
///   (a) more odd entries than m: value 0 (x-power overflow);
///   (b) J = (1^m, 2 I) with m + d even: reduces to the SW number of X at I;
///   (c) J contains 1 while P is orientable: value 0 (w_1 = 0);
///   (d) m = 1: the unique odd entry 2s+1 contributes (d-s) x c~_s, so the
///       value is 0 for even d-s and otherwise the SW number of X at the
///       partition I with the odd entry replaced by s;
///   (e) anything else: unsupported.
[[nodiscard]] SwNumberResult sw_number_P(const DoldDescriptor& dold, const FlagManifold& X,
                                         std::vector<int> J);

}  // namespace gdold
