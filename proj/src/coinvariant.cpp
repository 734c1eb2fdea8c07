#include "gdold/coinvariant.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace gdold {

CoinvariantRing::CoinvariantRing(int n) : n_(n) {
  if (n < 1 || n > Monomial::kMaxVars) {
    throw std::invalid_argument("CoinvariantRing: n must be between 1 and 8");
  }
  tails_.reserve(static_cast<std::size_t>(n));
  std::vector<int> vars;
  for (int v = 0; v < n; ++v) {
    vars.push_back(v);
    // Rule at variable x_(v+1): leading monomial x_(v+1)^(n-v) rewrites to the
    // remaining terms of h_(n-v)(x_1..x_(v+1)).
    Gf2Poly tail = complete_homogeneous(vars, n - v);
    tail.toggle(Monomial::variable(v, n - v));
    tails_.push_back(std::move(tail));
  }
}

const Gf2Poly& CoinvariantRing::reduce_monomial(Monomial m, Memo& memo, int depth) const {
  assert(depth < 100000 && "coinvariant reduction failed to terminate");
  if (const auto it = memo.find(m.key()); it != memo.end()) {
    return it->second;
  }
  // Rewrite at the largest violating variable first; each step strictly
  // decreases the exponent vector in the order with x_n most significant.
  int v = -1;
  for (int cand = n_ - 1; cand >= 0; --cand) {
    if (m.exp(cand) >= n_ - cand) {
      v = cand;
      break;
    }
  }
  if (v < 0) {
    return memo.emplace(m.key(), Gf2Poly::of(m)).first->second;
  }
  const Monomial rest = m.with_exp(v, m.exp(v) - (n_ - v));
  Gf2Poly out;
  tails_[static_cast<std::size_t>(v)].for_each(
      [&](Monomial t) { out += reduce_monomial(t * rest, memo, depth + 1); });
  return memo.emplace(m.key(), std::move(out)).first->second;
}

Gf2Poly CoinvariantRing::normal_form(const Gf2Poly& p) const {
  Memo memo;
  Gf2Poly out;
  p.for_each([&](Monomial m) { out += reduce_monomial(m, memo, 0); });
  return out;
}

Gf2Poly CoinvariantRing::reduce_product(const Gf2Poly& a, const Gf2Poly& b) const {
  Memo memo;
  Gf2Poly out;
  a.for_each([&](Monomial ma) {
    b.for_each([&](Monomial mb) { out += reduce_monomial(ma * mb, memo, 0); });
  });
  return out;
}

int CoinvariantRing::integrate_full_flag(const Gf2Poly& p) const {
  return normal_form(p).contains(top_monomial()) ? 1 : 0;
}

Monomial CoinvariantRing::top_monomial() const {
  Monomial m;
  for (int v = 0; v < n_; ++v) {
    m = m.with_exp(v, n_ - 1 - v);
  }
  return m;
}

std::vector<Monomial> CoinvariantRing::basis() const {
  std::vector<Monomial> out;
  out.push_back(Monomial::one());
  for (int v = 0; v < n_; ++v) {
    std::vector<Monomial> next;
    next.reserve(out.size() * static_cast<std::size_t>(n_ - v));
    for (const Monomial m : out) {
      for (int e = 0; e <= n_ - 1 - v; ++e) {
        next.push_back(m.with_exp(v, e));
      }
    }
    out = std::move(next);
  }
  return out;
}

Gf2Poly fiber_class(int n, const std::vector<int>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("fiber_class: parts must be nonempty");
  }
  int sum = 0;
  for (const int p : parts) {
    if (p < 1) {
      throw std::invalid_argument("fiber_class: parts must be positive");
    }
    sum += p;
  }
  if (sum != n) {
    throw std::invalid_argument("fiber_class: parts must sum to n");
  }
  if (n < 1 || n > Monomial::kMaxVars) {
    throw std::invalid_argument("fiber_class: n must be between 1 and 8");
  }
  Monomial m;
  int offset = 0;
  for (const int s : parts) {
    for (int t = 0; t + 1 < s; ++t) {
      m = m.with_exp(offset + t, s - 1 - t);
    }
    offset += s;
  }
  return Gf2Poly::of(m);
}

int integrate_partial_flag(const CoinvariantRing& ring, const std::vector<int>& parts,
                           const Gf2Poly& p) {
  const Gf2Poly phi = fiber_class(ring.n(), parts);
  return ring.reduce_product(p, phi).contains(ring.top_monomial()) ? 1 : 0;
}

}  // namespace gdold
