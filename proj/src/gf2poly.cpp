#include "gdold/gf2poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gdold {

Monomial Monomial::variable(int var, int e) {
  if (var < 0 || var >= kMaxVars) {
    throw std::invalid_argument("Monomial::variable: variable index out of range");
  }
  if (e < 0 || e > kMaxExp) {
    throw std::invalid_argument("Monomial::variable: exponent out of range");
  }
  Monomial m;
  m.bits_ = static_cast<std::uint64_t>(e) << (8 * var);
  return m;
}

Monomial Monomial::with_exp(int var, int e) const {
  assert(var >= 0 && var < kMaxVars);
  assert(e >= 0 && e <= kMaxExp);
  Monomial m;
  const std::uint64_t mask = ~(std::uint64_t{0xff} << (8 * var));
  m.bits_ = (bits_ & mask) | (static_cast<std::uint64_t>(e) << (8 * var));
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    d += exp(v);
  }
  return d;
}

Monomial Monomial::operator*(Monomial o) const {
#ifndef NDEBUG
  for (int v = 0; v < kMaxVars; ++v) {
    assert(exp(v) + o.exp(v) <= kMaxExp);
  }
#endif
  // Per-variable exponent sums stay below 256 (asserted above), so the packed
  // words add without carries between byte lanes.
  Monomial m;
  m.bits_ = bits_ + o.bits_;
  return m;
}

bool monomial_lex_greater(Monomial a, Monomial b) {
  for (int v = 0; v < Monomial::kMaxVars; ++v) {
    if (a.exp(v) != b.exp(v)) {
      return a.exp(v) > b.exp(v);
    }
  }
  return false;
}

Gf2Poly Gf2Poly::of(Monomial m) {
  Gf2Poly p;
  p.terms_.insert(m.key());
  return p;
}

void Gf2Poly::toggle(Monomial m) {
  const auto [it, inserted] = terms_.insert(m.key());
  if (!inserted) {
    terms_.erase(it);
  }
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const std::uint64_t k : o.terms_) {
    toggle(Monomial::from_key(k));
  }
  return *this;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
  Gf2Poly out;
  for (const std::uint64_t a : terms_) {
    const Monomial ma = Monomial::from_key(a);
    for (const std::uint64_t b : o.terms_) {
      out.toggle(ma * Monomial::from_key(b));
    }
  }
  return out;
}

int Gf2Poly::degree() const {
  int d = -1;
  for (const std::uint64_t k : terms_) {
    d = std::max(d, Monomial::from_key(k).degree());
  }
  return d;
}

Gf2Poly Gf2Poly::component(int deg) const {
  Gf2Poly out;
  for (const std::uint64_t k : terms_) {
    const Monomial m = Monomial::from_key(k);
    if (m.degree() == deg) {
      out.toggle(m);
    }
  }
  return out;
}

std::vector<Monomial> Gf2Poly::sorted_terms() const {
  std::vector<Monomial> v;
  v.reserve(terms_.size());
  for (const std::uint64_t k : terms_) {
    v.push_back(Monomial::from_key(k));
  }
  std::sort(v.begin(), v.end(), monomial_lex_greater);
  return v;
}

std::string Gf2Poly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first_term = true;
  for (const Monomial m : sorted_terms()) {
    if (!first_term) {
      os << " + ";
    }
    first_term = false;
    if (m.is_one()) {
      os << "1";
      continue;
    }
    bool first_factor = true;
    for (int v = 0; v < Monomial::kMaxVars; ++v) {
      const int e = m.exp(v);
      if (e == 0) {
        continue;
      }
      if (!first_factor) {
        os << "*";
      }
      first_factor = false;
      os << "x" << (v + 1);
      if (e > 1) {
        os << "^" << e;
      }
    }
  }
  return os.str();
}

Gf2Poly elementary_symmetric(const std::vector<int>& vars, int j) {
  if (j < 0) {
    throw std::invalid_argument("elementary_symmetric: negative degree");
  }
  std::vector<Gf2Poly> e(static_cast<std::size_t>(j) + 1);
  e[0] = Gf2Poly::one();
  for (const int v : vars) {
    const Gf2Poly xv = Gf2Poly::of(Monomial::variable(v));
    for (int t = j; t >= 1; --t) {
      e[static_cast<std::size_t>(t)] += xv * e[static_cast<std::size_t>(t) - 1];
    }
  }
  return e[static_cast<std::size_t>(j)];
}

Gf2Poly complete_homogeneous(const std::vector<int>& vars, int j) {
  if (j < 0) {
    throw std::invalid_argument("complete_homogeneous: negative degree");
  }
  std::vector<Gf2Poly> h(static_cast<std::size_t>(j) + 1);
  h[0] = Gf2Poly::one();
  for (const int v : vars) {
    const Gf2Poly xv = Gf2Poly::of(Monomial::variable(v));
    for (int t = 1; t <= j; ++t) {
      h[static_cast<std::size_t>(t)] += xv * h[static_cast<std::size_t>(t) - 1];
    }
  }
  return h[static_cast<std::size_t>(j)];
}

}  // namespace gdold
