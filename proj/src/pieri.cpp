#include "gdold/pieri.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace gdold::pieri {

namespace {

void toggle_class(ClassGF2& s, Partition p) {
  const auto it = s.find(p);
  if (it == s.end()) {
    s.insert(std::move(p));
  } else {
    s.erase(it);
  }
}

}  // namespace

bool fits_box(const Partition& lam, int k, int cols) {
  if (static_cast<int>(lam.size()) > k) {
    return false;
  }
  int prev = cols;
  for (const int row : lam) {
    if (row < 1 || row > prev) {
      return false;
    }
    prev = row;
  }
  return true;
}

Partition box_full(int k, int cols) { return Partition(static_cast<std::size_t>(k), cols); }

ClassGF2 pieri_column_multiply(const ClassGF2& a, int j, int k, int cols) {
  if (j < 0) {
    throw std::invalid_argument("pieri: column height must be nonnegative");
  }
  if (j > k) {
    throw std::invalid_argument("pieri: factor outside box");
  }
  if (j == 0) {
    return a;
  }
  ClassGF2 out;
  std::vector<int> padded(static_cast<std::size_t>(k), 0);
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  for (const Partition& lam : a) {
    if (!fits_box(lam, k, cols)) {
      throw std::invalid_argument("pieri: class contains a partition outside the box");
    }
    std::fill(padded.begin(), padded.end(), 0);
    std::copy(lam.begin(), lam.end(), padded.begin());
    // Add a vertical strip of j boxes: each row grows by at most one.
    std::function<void(int, int)> rec = [&](int row, int remaining) {
      if (remaining > k - row) {
        return;
      }
      if (row == k) {
        Partition t(mu.begin(), mu.end());
        while (!t.empty() && t.back() == 0) {
          t.pop_back();
        }
        toggle_class(out, std::move(t));
        return;
      }
      mu[static_cast<std::size_t>(row)] = padded[static_cast<std::size_t>(row)];
      if (row == 0 || mu[static_cast<std::size_t>(row)] <= mu[static_cast<std::size_t>(row) - 1]) {
        rec(row + 1, remaining);
      }
      if (remaining > 0) {
        mu[static_cast<std::size_t>(row)] = padded[static_cast<std::size_t>(row)] + 1;
        if (mu[static_cast<std::size_t>(row)] <= cols &&
            (row == 0 || mu[static_cast<std::size_t>(row)] <= mu[static_cast<std::size_t>(row) - 1])) {
          rec(row + 1, remaining - 1);
        }
      }
    };
    rec(0, j);
  }
  return out;
}

ClassGF2 pieri_oracle_product(int n, int k, const std::vector<int>& columns) {
  if (k < 1 || k >= n) {
    throw std::invalid_argument("pieri: need 1 <= k < n");
  }
  ClassGF2 state;
  state.insert(Partition{});
  for (const int j : columns) {
    state = pieri_column_multiply(state, j, k, n - k);
  }
  return state;
}

int box_coefficient(const ClassGF2& a, int n, int k) {
  return a.count(box_full(k, n - k)) != 0 ? 1 : 0;
}

// ----------------------------------------------------------------------------
// Universal tangent expansion. All polynomial arithmetic below is local to
// this oracle: exponent vectors are plain std::vector<int> and polynomials
// over GF(2) are std::set of exponent vectors.
// ----------------------------------------------------------------------------

namespace {

using Expo = std::vector<int>;
using SymPoly = std::set<Expo>;

void sym_toggle(SymPoly& s, Expo e) {
  const auto it = s.find(e);
  if (it == s.end()) {
    s.insert(std::move(e));
  } else {
    s.erase(it);
  }
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  for (const Expo& ea : a) {
    for (const Expo& eb : b) {
      Expo e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += eb[i];
      }
      sym_toggle(out, std::move(e));
    }
  }
  return out;
}

/// e_c of the variables with indices [from, from + count), inside exponent
/// vectors of length total.
SymPoly elem_range(int total, int from, int count, int c) {
  std::vector<SymPoly> e(static_cast<std::size_t>(c) + 1);
  e[0].insert(Expo(static_cast<std::size_t>(total), 0));
  for (int v = from; v < from + count; ++v) {
    for (int t = c; t >= 1; --t) {
      SymPoly shifted;
      for (const Expo& old : e[static_cast<std::size_t>(t) - 1]) {
        Expo x = old;
        x[static_cast<std::size_t>(v)] += 1;
        shifted.insert(std::move(x));
      }
      for (Expo x : shifted) {
        sym_toggle(e[static_cast<std::size_t>(t)], std::move(x));
      }
    }
  }
  return e[static_cast<std::size_t>(c)];
}

/// Column heights of the conjugate partition of a weakly decreasing vector.
std::vector<int> conjugate_columns(const std::vector<int>& part) {
  std::vector<int> cols;
  if (part.empty() || part[0] == 0) {
    return cols;
  }
  for (int t = 1; t <= part[0]; ++t) {
    int c = 0;
    for (const int entry : part) {
      if (entry >= t) {
        ++c;
      }
    }
    cols.push_back(c);
  }
  return cols;
}

void cpoly_toggle(GrassmannTangentOracle::CPoly& s, GrassmannTangentOracle::CMonomial m) {
  const auto it = s.find(m);
  if (it == s.end()) {
    s.insert(std::move(m));
  } else {
    s.erase(it);
  }
}

GrassmannTangentOracle::CPoly cpoly_mul(const GrassmannTangentOracle::CPoly& a,
                                        const GrassmannTangentOracle::CPoly& b) {
  GrassmannTangentOracle::CPoly out;
  for (const auto& ma : a) {
    for (const auto& mb : b) {
      GrassmannTangentOracle::CMonomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] += mb[i];
      }
      cpoly_toggle(out, std::move(m));
    }
  }
  return out;
}

}  // namespace

GrassmannTangentOracle::GrassmannTangentOracle(int n, int k) : n_(n), k_(k), d_(k * (n - k)) {
  if (k < 1 || k >= n) {
    throw std::invalid_argument("GrassmannTangentOracle: need 1 <= k < n");
  }
  const int q = n - k;
  const int total = k + q;

  // Total tangent class with formal roots: product over all pairs of
  // (1 + a_i + b_l), a-roots for gamma, b-roots for the quotient.
  SymPoly prod;
  prod.insert(Expo(static_cast<std::size_t>(total), 0));
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < q; ++l) {
      SymPoly next;
      for (const Expo& e : prod) {
        Expo ea = e;
        ea[static_cast<std::size_t>(i)] += 1;
        Expo eb = e;
        eb[static_cast<std::size_t>(k + l)] += 1;
        sym_toggle(next, e);
        sym_toggle(next, std::move(ea));
        sym_toggle(next, std::move(eb));
      }
      prod = std::move(next);
    }
  }

  // Rewrite in elementary symmetric functions of the two variable groups by
  // repeatedly cancelling the lexicographically largest monomial.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> emonos;
  while (!prod.empty()) {
    const Expo lead = *prod.rbegin();
    std::vector<int> alpha(lead.begin(), lead.begin() + k);
    std::vector<int> beta(lead.begin() + k, lead.end());
    assert(std::is_sorted(alpha.rbegin(), alpha.rend()));
    assert(std::is_sorted(beta.rbegin(), beta.rend()));
    const std::vector<int> acols = conjugate_columns(alpha);
    const std::vector<int> bcols = conjugate_columns(beta);
    SymPoly sub;
    sub.insert(Expo(static_cast<std::size_t>(total), 0));
    for (const int c : acols) {
      sub = sym_mul(sub, elem_range(total, 0, k, c));
    }
    for (const int c : bcols) {
      sub = sym_mul(sub, elem_range(total, k, q, c));
    }
    for (Expo e : sub) {
      sym_toggle(prod, std::move(e));
    }
    emonos.emplace_back(acols, bcols);
  }

  // Inverse series: s_t = c_t(quotient) as a polynomial in c_1..c_k(gamma),
  // from (1 + c_1 + ... + c_k) * (s_0 + s_1 + ...) = 1 over GF(2).
  std::vector<CPoly> s(static_cast<std::size_t>(q) + 1);
  s[0].insert(CMonomial(static_cast<std::size_t>(k), 0));
  for (int t = 1; t <= q; ++t) {
    CPoly acc;
    for (int u = 1; u <= std::min(t, k); ++u) {
      for (const CMonomial& mono : s[static_cast<std::size_t>(t - u)]) {
        CMonomial m = mono;
        m[static_cast<std::size_t>(u) - 1] += 1;
        cpoly_toggle(acc, std::move(m));
      }
    }
    s[static_cast<std::size_t>(t)] = std::move(acc);
  }

  // Substitute e_c(a) -> c_c(gamma) and e_c(b) -> s_c, collecting the total
  // class as a polynomial in c_1..c_k(gamma), then split by weight.
  CPoly totalclass;
  for (const auto& [acols, bcols] : emonos) {
    CPoly term;
    term.insert(CMonomial(static_cast<std::size_t>(k), 0));
    CMonomial direct(static_cast<std::size_t>(k), 0);
    for (const int c : acols) {
      direct[static_cast<std::size_t>(c) - 1] += 1;
    }
    if (!acols.empty()) {
      CPoly dp;
      dp.insert(std::move(direct));
      term = cpoly_mul(term, dp);
    }
    for (const int c : bcols) {
      term = cpoly_mul(term, s[static_cast<std::size_t>(c)]);
    }
    for (CMonomial m : term) {
      cpoly_toggle(totalclass, std::move(m));
    }
  }

  chern_.assign(static_cast<std::size_t>(d_) + 1, CPoly{});
  for (const CMonomial& m : totalclass) {
    int weight = 0;
    for (std::size_t u = 0; u < m.size(); ++u) {
      weight += static_cast<int>(u + 1) * m[u];
    }
    assert(weight <= d_);
    cpoly_toggle(chern_[static_cast<std::size_t>(weight)], m);
  }
}

const GrassmannTangentOracle::CPoly& GrassmannTangentOracle::tangent_chern(int i) const {
  if (i < 0 || i > d_) {
    throw std::invalid_argument("GrassmannTangentOracle: class index out of range");
  }
  return chern_[static_cast<std::size_t>(i)];
}

int GrassmannTangentOracle::monomial_box_value(const CMonomial& gamma_exp) const {
  if (static_cast<int>(gamma_exp.size()) != k_) {
    throw std::invalid_argument("GrassmannTangentOracle: exponent vector must have k entries");
  }
  ClassGF2 state;
  state.insert(Partition{});
  for (int u = k_; u >= 1; --u) {
    const int reps = gamma_exp[static_cast<std::size_t>(u) - 1];
    for (int rep = 0; rep < reps; ++rep) {
      state = pieri_column_multiply(state, u, k_, n_ - k_);
    }
  }
  return box_coefficient(state, n_, k_);
}

int GrassmannTangentOracle::sw_number(const std::vector<int>& I) const {
  int sum = 0;
  for (const int i : I) {
    if (i < 1 || i > d_) {
      throw std::invalid_argument("GrassmannTangentOracle: partition entry out of range");
    }
    sum += i;
  }
  if (sum != d_) {
    throw std::invalid_argument("GrassmannTangentOracle: partition must sum to the dimension");
  }
  CPoly prodpoly;
  prodpoly.insert(CMonomial(static_cast<std::size_t>(k_), 0));
  for (const int i : I) {
    prodpoly = cpoly_mul(prodpoly, chern_[static_cast<std::size_t>(i)]);
    if (prodpoly.empty()) {
      return 0;
    }
  }
  int value = 0;
  for (const CMonomial& m : prodpoly) {
    value ^= monomial_box_value(m);
  }
  return value;
}

int grassmann_sw_number(int n, int k, const std::vector<int>& I) {
  return GrassmannTangentOracle(n, k).sw_number(I);
}

}  // namespace gdold::pieri
