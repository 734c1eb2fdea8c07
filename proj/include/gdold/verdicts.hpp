#pragma once

#include <optional>
#include <vector>

#include "gdold/dold.hpp"
#include "gdold/flag.hpp"
#include "gdold/verdict.hpp"

namespace gdold {

// ============================================================================
// Decision procedures for parallelizability and unoriented cobordism of
// P(m, X). Every verdict carries the rule that produced it; rules are purely
// arithmetic wherever possible so that large flags stay within reach.
// ============================================================================

/// Stable parallelizability of P(m, CG(n_1..n_r)). Requires r >= 2 (throws
/// std::invalid_argument otherwise). Fails when some part exceeds 1;
/// otherwise X is the full flag manifold, d = C(n, 2), and the verdict is
/// Holds exactly when 2^phi(m) divides m + 1 + d (phi = Adams' function).
[[nodiscard]] Verdict stably_parallelizable_verdict(int m, const FlagDescriptor& X);

/// Parallelizability of P(m, CG(1, ..., 1)). Gates on the stable verdict,
/// kills even m through the Euler characteristic, and for odd m compares
/// Hurwitz-Radon spans: rho(m+1) > rho(m+1+2d) forces parallelizability.
/// Anything not decided by these rules is Open.
[[nodiscard]] Verdict parallelizable_verdict(int m, const FlagDescriptor& X);

/// Whether [X] is nonzero in the unoriented cobordism ring. For Grassmannians
/// (r = 2, parts (k, n-k)) this is decided completely by 2-adic valuations:
/// nonzero exactly when nu2(k) >= nu2(n). For r >= 3: repeated part sizes or a
/// part with nu2(n_j) < nu2(n) force [X] = 0; otherwise an exhaustive search
/// over Stiefel-Whitney numbers decides the question when d <= search_cap and
/// the verdict is Open beyond the cap.
[[nodiscard]] Verdict x_bordism_nonzero(const FlagDescriptor& X, int search_cap = 12);

/// First partition I of d with an odd Stiefel-Whitney number of X, searched
/// in decreasing lexicographic order; std::nullopt when every number is even.
/// Requires d <= cap and n <= 8 (throws std::invalid_argument otherwise).
[[nodiscard]] std::optional<std::vector<int>> find_sw_witness(const FlagDescriptor& X,
                                                              int cap = 12);

/// Whether P(m, X) is nonzero in the unoriented cobordism ring. Rules, in
/// order: (R1) some nu2(n_j) < nu2(n) forces P to bound; (R2) repeated part
/// sizes force P to bound; (R3) m even, m = d mod 2, odd Euler characteristic
/// of X gives a direct nonvanishing number; (R4) m = d mod 2 and [X] nonzero
/// lifts a witness of X; (R5) m = 1 and [X] = 0 forces P to bound; (R6)
/// otherwise Open.
[[nodiscard]] Verdict cobordism_verdict(int m, const FlagDescriptor& X);

}  // namespace gdold
