#include "gdold/clifford.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gdold/numeric.hpp"

namespace gdold {

SignedPermMatrix::SignedPermMatrix(int dim) {
  if (dim < 1) {
    throw std::invalid_argument("SignedPermMatrix: dimension must be positive");
  }
  target_.resize(static_cast<std::size_t>(dim));
  std::iota(target_.begin(), target_.end(), 0);
  sign_.assign(static_cast<std::size_t>(dim), 1);
}

SignedPermMatrix SignedPermMatrix::from_action(std::vector<int> target,
                                               std::vector<std::int8_t> sign) {
  if (target.empty() || target.size() != sign.size()) {
    throw std::invalid_argument("SignedPermMatrix: malformed action");
  }
  SignedPermMatrix m(static_cast<int>(target.size()));
  m.target_ = std::move(target);
  m.sign_ = std::move(sign);
  if (!m.well_formed()) {
    throw std::invalid_argument("SignedPermMatrix: action is not a signed permutation");
  }
  return m;
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& o) const {
  if (dim() != o.dim()) {
    throw std::invalid_argument("SignedPermMatrix: dimension mismatch");
  }
  SignedPermMatrix r(dim());
  for (int j = 0; j < dim(); ++j) {
    const int mid = o.target_[static_cast<std::size_t>(j)];
    r.target_[static_cast<std::size_t>(j)] = target_[static_cast<std::size_t>(mid)];
    r.sign_[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(
        sign_[static_cast<std::size_t>(mid)] * o.sign_[static_cast<std::size_t>(j)]);
  }
  return r;
}

SignedPermMatrix SignedPermMatrix::kron(const SignedPermMatrix& o) const {
  SignedPermMatrix r(dim() * o.dim());
  const int od = o.dim();
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < od; ++j) {
      const int col = i * od + j;
      r.target_[static_cast<std::size_t>(col)] =
          target_[static_cast<std::size_t>(i)] * od + o.target_[static_cast<std::size_t>(j)];
      r.sign_[static_cast<std::size_t>(col)] = static_cast<std::int8_t>(
          sign_[static_cast<std::size_t>(i)] * o.sign_[static_cast<std::size_t>(j)]);
    }
  }
  return r;
}

bool SignedPermMatrix::is_identity() const {
  for (int j = 0; j < dim(); ++j) {
    if (target_[static_cast<std::size_t>(j)] != j || sign_[static_cast<std::size_t>(j)] != 1) {
      return false;
    }
  }
  return true;
}

bool SignedPermMatrix::is_minus_identity() const {
  for (int j = 0; j < dim(); ++j) {
    if (target_[static_cast<std::size_t>(j)] != j || sign_[static_cast<std::size_t>(j)] != -1) {
      return false;
    }
  }
  return true;
}

int SignedPermMatrix::trace() const {
  int t = 0;
  for (int j = 0; j < dim(); ++j) {
    if (target_[static_cast<std::size_t>(j)] == j) {
      t += sign_[static_cast<std::size_t>(j)];
    }
  }
  return t;
}

bool SignedPermMatrix::well_formed() const {
  std::vector<bool> hit(target_.size(), false);
  for (std::size_t j = 0; j < target_.size(); ++j) {
    const int t = target_[j];
    if (t < 0 || t >= dim() || hit[static_cast<std::size_t>(t)]) {
      return false;
    }
    hit[static_cast<std::size_t>(t)] = true;
    if (sign_[j] != 1 && sign_[j] != -1) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> SignedPermMatrix::dense() const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(dim()),
                                  std::vector<int>(static_cast<std::size_t>(dim()), 0));
  for (int j = 0; j < dim(); ++j) {
    m[static_cast<std::size_t>(target_[static_cast<std::size_t>(j)])]
     [static_cast<std::size_t>(j)] = sign_[static_cast<std::size_t>(j)];
  }
  return m;
}

// ----------------------------------------------------------------------------
// Construction
// ----------------------------------------------------------------------------

namespace {

SignedPermMatrix atom_sigma() { return SignedPermMatrix::from_action({0, 1}, {1, -1}); }
SignedPermMatrix atom_tau() { return SignedPermMatrix::from_action({1, 0}, {1, 1}); }
SignedPermMatrix atom_eps() { return SignedPermMatrix::from_action({1, 0}, {-1, 1}); }

/// Sign and basis index of e_i * e_j in the level-k Cayley-Dickson algebra
/// (k = 3 is the octonions); doubling rule (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
std::pair<int, int> cayley_dickson_mul(int level, int i, int j) {
  if (level == 0) {
    return {1, 0};
  }
  const int h = 1 << (level - 1);
  if (i < h && j < h) {
    return cayley_dickson_mul(level - 1, i, j);
  }
  if (i < h && j >= h) {
    auto [s, t] = cayley_dickson_mul(level - 1, j - h, i);
    return {s, t + h};
  }
  if (i >= h && j < h) {
    auto [s, t] = cayley_dickson_mul(level - 1, i - h, j);
    if (j != 0) {
      s = -s;
    }
    return {s, t + h};
  }
  auto [s, t] = cayley_dickson_mul(level - 1, j - h, i - h);
  if (j - h != 0) {
    s = -s;
  }
  return {-s, t};
}

/// Left multiplication by the imaginary octonion unit e_i on R^8 (i in 1..7):
/// a signed permutation with square -I, and L_i, L_j anticommute for i != j.
SignedPermMatrix octonion_left(int i) {
  std::vector<int> target(8, 0);
  std::vector<std::int8_t> sign(8, 1);
  for (int j = 0; j < 8; ++j) {
    const auto [s, t] = cayley_dickson_mul(3, i, j);
    target[static_cast<std::size_t>(j)] = t;
    sign[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(s);
  }
  return SignedPermMatrix::from_action(std::move(target), std::move(sign));
}

SignedPermMatrix product_of(const std::vector<SignedPermMatrix>& gens) {
  SignedPermMatrix prod = gens.front();
  for (std::size_t i = 1; i < gens.size(); ++i) {
    prod = prod * gens[i];
  }
  return prod;
}

std::vector<SignedPermMatrix> plus_family(int r);

/// r anticommuting generators with all squares -1; defined for r = 6 and
/// r = 0 mod 8 (used directly for those residues).
std::vector<SignedPermMatrix> minus_family(int r) {
  if (r == 6) {
    std::vector<SignedPermMatrix> gens;
    for (int i = 1; i <= 6; ++i) {
      gens.push_back(octonion_left(i));
    }
    return gens;
  }
  if (r == 8) {
    const std::vector<SignedPermMatrix> a = minus_family(6);
    const SignedPermMatrix omega = product_of(a);  // square -I, anticommutes with each a_i
    const SignedPermMatrix id8(8);
    std::vector<SignedPermMatrix> gens;
    gens.push_back(atom_eps().kron(id8));
    for (const SignedPermMatrix& ai : a) {
      gens.push_back(atom_sigma().kron(ai));
    }
    gens.push_back(atom_sigma().kron(omega));
    return gens;
  }
  // Periodicity step: r >= 14 with r = 6 or 0 mod 8.
  const std::vector<SignedPermMatrix> base = minus_family(r - 8);
  const std::vector<SignedPermMatrix> b = minus_family(8);
  const SignedPermMatrix omega = product_of(b);  // square +I, anticommutes with each b_j
  const SignedPermMatrix id_base(base.front().dim());
  std::vector<SignedPermMatrix> gens;
  for (const SignedPermMatrix& mu : base) {
    gens.push_back(mu.kron(omega));
  }
  for (const SignedPermMatrix& bj : b) {
    gens.push_back(id_base.kron(bj));
  }
  return gens;
}

/// r anticommuting generators with all squares +1; defined for r = 2 and
/// r = 0 mod 8 building blocks and extended by periodicity for r = 2 mod 8.
std::vector<SignedPermMatrix> plus_family(int r) {
  if (r == 2) {
    return {atom_sigma(), atom_tau()};
  }
  if (r == 8) {
    const std::vector<SignedPermMatrix> a = minus_family(6);
    const SignedPermMatrix id8(8);
    std::vector<SignedPermMatrix> gens;
    gens.push_back(atom_sigma().kron(id8));
    gens.push_back(atom_tau().kron(id8));
    for (const SignedPermMatrix& ai : a) {
      gens.push_back(atom_eps().kron(ai));
    }
    return gens;
  }
  // Periodicity step: r >= 10 with r = 2 or 0 mod 8.
  const std::vector<SignedPermMatrix> base = plus_family(r - 8);
  const std::vector<SignedPermMatrix> b = plus_family(8);
  const SignedPermMatrix omega = product_of(b);  // square +I, anticommutes with each b_j
  const SignedPermMatrix id_base(base.front().dim());
  std::vector<SignedPermMatrix> gens;
  for (const SignedPermMatrix& psi : base) {
    gens.push_back(psi.kron(omega));
  }
  for (const SignedPermMatrix& bj : b) {
    gens.push_back(id_base.kron(bj));
  }
  return gens;
}

/// r = 4 mod 8: squares -1 for the first r-2 generators and +1 for the last
/// two, doubling the all-plus family one step below.
std::vector<SignedPermMatrix> mixed_family(int r) {
  const std::vector<SignedPermMatrix> psi = plus_family(r - 2);
  const SignedPermMatrix id_base(psi.front().dim());
  std::vector<SignedPermMatrix> gens;
  for (const SignedPermMatrix& p : psi) {
    gens.push_back(atom_eps().kron(p));
  }
  gens.push_back(atom_sigma().kron(id_base));
  gens.push_back(atom_tau().kron(id_base));
  return gens;
}

}  // namespace

CliffordRep clifford_representation(int r) {
  if (r < 2 || r > 16 || r % 2 != 0) {
    throw std::invalid_argument("clifford_representation: r must be even and between 2 and 16");
  }
  CliffordRep rep;
  rep.r = r;
  rep.p = r / 2;
  switch (r % 8) {
    case 2:
      rep.gens = plus_family(r);
      break;
    case 4:
      rep.gens = mixed_family(r);
      break;
    default:  // 6 or 0
      rep.gens = minus_family(r);
      break;
  }
  return rep;
}

RelationReport verify_relations(const CliffordRep& rep) {
  RelationReport report;
  if (rep.gens.empty()) {
    report.failures.push_back("no generators");
    return report;
  }
  const int dim = 1 << rep.p;
  report.generators_well_formed = true;
  for (std::size_t i = 0; i < rep.gens.size(); ++i) {
    if (rep.gens[i].dim() != dim || !rep.gens[i].well_formed()) {
      report.generators_well_formed = false;
      report.failures.push_back("generator " + std::to_string(i + 1) +
                                " is not a signed permutation of the expected size");
    }
  }
  if (static_cast<int>(rep.gens.size()) != rep.r) {
    report.failures.push_back("generator count differs from r");
  }
  for (std::size_t i = 0; i < rep.gens.size(); ++i) {
    const SignedPermMatrix sq = rep.gens[i] * rep.gens[i];
    if (sq.is_identity()) {
      report.squares.push_back(1);
    } else if (sq.is_minus_identity()) {
      report.squares.push_back(-1);
    } else {
      report.squares.push_back(0);
      report.failures.push_back("generator " + std::to_string(i + 1) +
                                " does not square to a scalar");
    }
  }
  for (std::size_t i = 0; i < rep.gens.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.gens.size(); ++j) {
      const SignedPermMatrix ab = rep.gens[i] * rep.gens[j];
      const SignedPermMatrix ba = rep.gens[j] * rep.gens[i];
      bool anti = true;
      for (int col = 0; col < ab.dim() && anti; ++col) {
        anti = ab.target(col) == ba.target(col) && ab.sign(col) == -ba.sign(col);
      }
      if (!anti) {
        std::ostringstream os;
        os << "generators " << (i + 1) << " and " << (j + 1) << " do not anticommute";
        report.failures.push_back(os.str());
      }
    }
  }
  report.ok = report.failures.empty();
  return report;
}

namespace {

/// Exact rank over the rationals of the span of the given matrices, by
/// fraction-free Gaussian elimination on the dense coefficient matrix using
/// 128-bit integers (entries stay tiny at the sizes this fallback accepts).
std::uint64_t exact_span_rank(const std::vector<SignedPermMatrix>& mats) {
  const int dim = mats.front().dim();
  const std::size_t cols = static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim);
  std::vector<std::vector<__int128>> rows;
  rows.reserve(mats.size());
  for (const SignedPermMatrix& m : mats) {
    std::vector<__int128> row(cols, 0);
    for (int j = 0; j < dim; ++j) {
      row[static_cast<std::size_t>(m.target(j)) * static_cast<std::size_t>(dim) +
          static_cast<std::size_t>(j)] = m.sign(j);
    }
    rows.push_back(std::move(row));
  }
  std::uint64_t rank = 0;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) {
        continue;
      }
      const __int128 a = rows[rank][col];
      const __int128 b = rows[i][col];
      for (std::size_t c = col; c < cols; ++c) {
        rows[i][c] = rows[i][c] * a - rows[rank][c] * b;
      }
      // Keep entries small: divide the row by its gcd.
      __int128 g = 0;
      for (std::size_t c = col; c < cols && g != 1; ++c) {
        __int128 v = rows[i][c] < 0 ? -rows[i][c] : rows[i][c];
        while (v != 0) {
          const __int128 t = g % v;
          g = v;
          v = t;
        }
      }
      if (g > 1) {
        for (std::size_t c = col; c < cols; ++c) {
          rows[i][c] /= g;
        }
      }
    }
    ++rank;
    lead = col;
  }
  (void)lead;
  return rank;
}

}  // namespace

std::uint64_t algebra_dimension(const CliffordRep& rep) {
  const RelationReport rel = verify_relations(rep);
  const int dim = rep.gens.empty() ? 0 : rep.gens.front().dim();
  if (rel.ok) {
    // With certified relations every word in the generators is, up to sign, a
    // product theta_S over a subset S. The Frobenius pairing of theta_S and
    // theta_T is +-tr(theta_{S xor T}), so vanishing traces for all nonempty
    // subsets certify that the 2^r subset products are linearly independent.
    bool all_traces_zero = true;
    std::function<void(std::size_t, const SignedPermMatrix&, bool)> walk =
        [&](std::size_t next, const SignedPermMatrix& cur, bool nonempty) {
          if (!all_traces_zero) {
            return;
          }
          if (nonempty && cur.trace() != 0) {
            all_traces_zero = false;
            return;
          }
          for (std::size_t i = next; i < rep.gens.size(); ++i) {
            walk(i + 1, cur * rep.gens[i], true);
          }
        };
    walk(0, SignedPermMatrix(dim), false);
    if (all_traces_zero) {
      return std::uint64_t{1} << rep.r;
    }
  }
  if (rep.r > 8) {
    throw std::runtime_error(
        "algebra_dimension: relations do not certify and the exact elimination "
        "fallback is limited to r <= 8");
  }
  // Honest fallback: materialize all subset products and row-reduce exactly.
  std::vector<SignedPermMatrix> products;
  products.emplace_back(dim);
  for (const SignedPermMatrix& g : rep.gens) {
    const std::size_t count = products.size();
    for (std::size_t i = 0; i < count; ++i) {
      products.push_back(products[i] * g);
    }
  }
  return exact_span_rank(products);
}

FixedPointFreeCertificate fixed_point_free_certificate(int n, int k) {
  if (n < 2 || k < 1 || k >= n) {
    throw std::invalid_argument("fixed_point_free_certificate: need n >= 2 and 1 <= k < n");
  }
  const int kk = std::min(k, n - k);  // G(k, n) and G(n-k, n) agree
  FixedPointFreeCertificate cert;
  cert.p = nu2(static_cast<std::uint64_t>(n));
  cert.r = 2 * cert.p;
  cert.n0 = n >> cert.p;
  if (nu2(static_cast<std::uint64_t>(kk)) < cert.p) {
    cert.applicable = true;
    std::ostringstream os;
    os << "nu2(k) < nu2(n): the 2^p-dimensional Clifford module structure on R^n = "
       << "R^" << cert.n0 << " (x) R^" << (1 << cert.p)
       << " admits an action by " << cert.r
       << " anticommuting real matrices, and since 2^p does not divide k the induced "
       << "involution on the Grassmannian of k-planes has no fixed point.";
    cert.reason = os.str();
  } else {
    cert.applicable = false;
    cert.reason =
        "nu2(k) >= nu2(n): every Clifford direction preserves some k-plane assembled "
        "from whole 2^p-dimensional modules, so this construction has fixed points.";
  }
  return cert;
}

}  // namespace gdold
