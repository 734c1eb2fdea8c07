#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdold {

// ============================================================================
// Exact real representations of Clifford-type anticommutation relations by
// signed permutation matrices, used to certify fixed-point-free actions on
// spheres and Grassmannians. All arithmetic is integer arithmetic on entries
// in {-1, 0, 1}; nothing here is floating point.
// ============================================================================

/// Square matrix with exactly one entry +-1 in every row and column, stored as
/// the image of each basis vector: column j holds sign(j) at row target(j).
class SignedPermMatrix {
 public:
  /// Identity of the given dimension.
  explicit SignedPermMatrix(int dim);

  [[nodiscard]] static SignedPermMatrix from_action(std::vector<int> target,
                                                    std::vector<std::int8_t> sign);

  [[nodiscard]] int dim() const { return static_cast<int>(target_.size()); }
  [[nodiscard]] int target(int col) const { return target_[static_cast<std::size_t>(col)]; }
  [[nodiscard]] int sign(int col) const { return sign_[static_cast<std::size_t>(col)]; }

  /// Matrix product (this times o).
  [[nodiscard]] SignedPermMatrix operator*(const SignedPermMatrix& o) const;

  /// Kronecker product; the result acts on the tensor basis e_i (x) e_j
  /// ordered with the left factor most significant.
  [[nodiscard]] SignedPermMatrix kron(const SignedPermMatrix& o) const;

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_minus_identity() const;
  [[nodiscard]] int trace() const;

  bool operator==(const SignedPermMatrix& o) const = default;

  /// True when target is a permutation and every sign is +-1.
  [[nodiscard]] bool well_formed() const;

  /// Dense integer matrix, entries in {-1, 0, 1}.
  [[nodiscard]] std::vector<std::vector<int>> dense() const;

 private:
  std::vector<int> target_;
  std::vector<std::int8_t> sign_;
};

/// A system of r anticommuting matrices theta_1..theta_r of size 2^(r/2) with
/// theta_i^2 = +-1 (the sign pattern depends on r mod 8).
struct CliffordRep {
  int r = 0;  // number of generators, even, between 2 and 16
  int p = 0;  // r / 2; matrices act on R^(2^p)
  std::vector<SignedPermMatrix> gens;
};

/// Deterministic construction of the representation for even r in [2, 16].
/// Square signs by residue: r = 2 mod 8 gives all +1; r = 6 or 0 mod 8 gives
/// all -1; r = 4 mod 8 gives -1 for the first r-2 generators and +1 for the
/// last two. Throws std::invalid_argument for unsupported r.
[[nodiscard]] CliffordRep clifford_representation(int r);

/// Outcome of checking the defining relations; a report, never an exception.
struct RelationReport {
  bool ok = false;
  bool generators_well_formed = false;
  std::vector<int> squares;  // +1 / -1 per generator, 0 when not a scalar
  std::vector<std::string> failures;
};
[[nodiscard]] RelationReport verify_relations(const CliffordRep& rep);

/// Exact dimension of the real span of all products of generators. When the
/// relations certify (squares +-1, pairwise anticommutation), every product
/// reduces to a signed subset product theta_S, and the computed traces
/// tr(theta_S) = 0 for S nonempty certify linear independence, so the span
/// has dimension exactly 2^r. Otherwise an exact Gaussian elimination is run
/// for r <= 8 and larger doctored systems are rejected with
/// std::runtime_error.
[[nodiscard]] std::uint64_t algebra_dimension(const CliffordRep& rep);

/// Certificate that the conjugation-compatible free involution machinery
/// applies to the Grassmannian of k-planes in C^n. Writing p = nu2(n), the
/// Clifford action on R^n = R^(n/2^p) (x) R^(2^p) exists with r = 2p
/// generators, and it moves every k-plane exactly when 2^p does not divide
/// every k, i.e. when nu2(k) < nu2(n).
struct FixedPointFreeCertificate {
  bool applicable = false;
  int p = 0;
  int r = 0;
  int n0 = 0;  // odd cofactor n / 2^p
  std::string reason;
};
[[nodiscard]] FixedPointFreeCertificate fixed_point_free_certificate(int n, int k);

}  // namespace gdold
