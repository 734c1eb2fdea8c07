#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdold/coinvariant.hpp"
#include "gdold/gf2poly.hpp"

namespace gdold {

// ============================================================================
// Complex flag manifolds CG(n_1, ..., n_r) = U(n) / (U(n_1) x ... x U(n_r))
// with n = sum of parts, carrying the conjugation involution. Cohomology is
// computed mod 2 inside the coinvariant algebra of the full flag manifold,
// with the block structure entering through the fiber class and the tangent
// bundle factorization c(tau) = prod over cross-block pairs (1 + x_a + x_b).
// ============================================================================

/// Shape of a partial flag manifold; the order of the parts is preserved as
/// given (all numeric invariants are independent of it).
struct FlagDescriptor {
  std::vector<int> parts;

  /// Throws std::invalid_argument unless every part is a positive integer.
  void validate() const;

  [[nodiscard]] int n() const;  // total flag size, sum of parts
  [[nodiscard]] int r() const { return static_cast<int>(parts.size()); }

  /// Complex dimension d = sum over i < j of n_i * n_j.
  [[nodiscard]] int complex_dim() const;

  [[nodiscard]] int real_dim() const { return 2 * complex_dim(); }
};

/// Mod-2 tangent characteristic classes, graded by polynomial degree
/// (graded[j] lives in cohomological degree 2j and is reduced to normal form).
struct ChernData {
  std::vector<Gf2Poly> graded;
};

/// Cohomology engine for one flag manifold. Requires n() <= 8; everything is
/// immutable after construction and shareable read-only across threads.
class FlagManifold {
 public:
  explicit FlagManifold(FlagDescriptor desc);

  [[nodiscard]] const FlagDescriptor& descriptor() const { return desc_; }
  [[nodiscard]] const CoinvariantRing& ring() const { return ring_; }

  /// Variable indices of block b (0-indexed variables and blocks).
  [[nodiscard]] std::vector<int> block_vars(int b) const;

  /// All cross-block variable pairs (a, b) with a in an earlier block.
  [[nodiscard]] const std::vector<std::pair<int, int>>& cross_pairs() const {
    return cross_pairs_;
  }

  /// Total tangent class prod (1 + x_a + x_b), reduced, split by degree.
  [[nodiscard]] ChernData tangent_chern() const;

  /// Degree-1 part of the tangent class, reduced (decides the spin condition).
  [[nodiscard]] Gf2Poly tangent_c1() const;

  /// True when the degree-2 cohomology part of the tangent class vanishes.
  [[nodiscard]] bool is_spin() const { return tangent_c1().is_zero(); }

  /// Stiefel-Whitney number for a partition I of complex_dim(): the pairing
  /// of c_{i_1}(tau) ... c_{i_t}(tau) with the fundamental class, mod 2.
  [[nodiscard]] int sw_number(const std::vector<int>& I) const;

  /// Same, reusing an already computed ChernData.
  [[nodiscard]] int sw_number(const ChernData& chern, const std::vector<int>& I) const;

  /// Pairing of an arbitrary class with the fundamental class of CG(parts).
  [[nodiscard]] int integrate(const Gf2Poly& p) const;

 private:
  FlagDescriptor desc_;
  CoinvariantRing ring_;
  std::vector<std::pair<int, int>> cross_pairs_;
};

/// Free-function spellings of the module operations.
[[nodiscard]] ChernData tangent_chern_total(const FlagManifold& X);
[[nodiscard]] int sw_number_X(const FlagManifold& X, const std::vector<int>& I);
[[nodiscard]] bool is_spin_X(const FlagManifold& X);

}  // namespace gdold
