#include "gdold/dold.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gdold/numeric.hpp"

namespace gdold {

void DoldDescriptor::validate() const {
  if (m < 1) {
    throw std::invalid_argument("DoldDescriptor: m must be at least 1");
  }
  flag.validate();
}

bool is_orientable_P(const DoldDescriptor& dold) {
  dold.validate();
  return (dold.m + dold.flag.complex_dim()) % 2 == 1;
}

std::uint64_t euler_char_P(const DoldDescriptor& dold) {
  dold.validate();
  if (dold.m % 2 != 0) {
    return 0;
  }
  return euler_char_flag(dold.flag.parts);
}

bool is_spin_P(const DoldDescriptor& dold, bool x_is_spin) {
  if (!is_orientable_P(dold) || !x_is_spin) {
    return false;
  }
  const int d = dold.flag.complex_dim();
  return dold.m == 1 ||
         binom_parity(static_cast<std::uint64_t>(dold.m + 1 + d), 2) == 0;
}

bool is_spin_P(const DoldDescriptor& dold, const FlagManifold& X) {
  return is_spin_P(dold, X.is_spin());
}

bool spin_convention_sensitive(const DoldDescriptor& dold, bool x_is_spin) {
  const int d = dold.flag.complex_dim();
  // The two quadratic-coefficient conventions differ by (m+1)d mod 2; under
  // the orientability and spin-fiber gates this leaves exactly one regime.
  return dold.m > 1 && dold.m % 2 == 0 && d % 2 == 1 && x_is_spin;
}

SpanBounds span_bounds(const DoldDescriptor& dold) {
  dold.validate();
  SpanBounds out;
  out.lower = sphere_span(static_cast<std::uint64_t>(dold.m));
  const bool full_flag =
      std::all_of(dold.flag.parts.begin(), dold.flag.parts.end(), [](int p) { return p == 1; });
  if (full_flag) {
    out.upper = dold.dim();
  }
  return out;
}

// ----------------------------------------------------------------------------
// SWClass
// ----------------------------------------------------------------------------

int SWTerm::degree() const {
  int d = x_exp;
  for (const int i : cbar) {
    d += 2 * i;
  }
  return d;
}

bool SWTermLess::operator()(const SWTerm& a, const SWTerm& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) {
    return da < db;
  }
  if (a.x_exp != b.x_exp) {
    return a.x_exp > b.x_exp;
  }
  return a.cbar < b.cbar;
}

SWClass::SWClass(int m, int dmax) : m_(m), dmax_(dmax) {
  if (m < 1) {
    throw std::invalid_argument("SWClass: m must be at least 1");
  }
  if (dmax < 0) {
    throw std::invalid_argument("SWClass: dmax must be nonnegative");
  }
}

SWClass SWClass::one(int m, int dmax) {
  SWClass c(m, dmax);
  c.toggle(0, {});
  return c;
}

void SWClass::toggle(int x_exp, std::vector<int> cbar) {
  if (x_exp < 0) {
    throw std::invalid_argument("SWClass: negative x exponent");
  }
  if (!std::is_sorted(cbar.begin(), cbar.end())) {
    throw std::invalid_argument("SWClass: c~ indices must be weakly increasing");
  }
  for (const int i : cbar) {
    if (i < 1 || i > dmax_) {
      throw std::invalid_argument("SWClass: c~ index out of range");
    }
  }
  if (x_exp > m_) {
    return;  // x^(m+1) = 0
  }
  SWTerm t{x_exp, std::move(cbar)};
  const auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.insert(std::move(t));
  } else {
    terms_.erase(it);
  }
}

SWClass& SWClass::operator+=(const SWClass& o) {
  if (m_ != o.m_ || dmax_ != o.dmax_) {
    throw std::invalid_argument("SWClass: mismatched parameters in addition");
  }
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const SWTerm& t : o.terms_) {
    toggle(t.x_exp, t.cbar);
  }
  return *this;
}

SWClass SWClass::operator*(const SWClass& o) const {
  if (m_ != o.m_ || dmax_ != o.dmax_) {
    throw std::invalid_argument("SWClass: mismatched parameters in product");
  }
  SWClass out(m_, dmax_);
  for (const SWTerm& a : terms_) {
    for (const SWTerm& b : o.terms_) {
      if (a.x_exp + b.x_exp > m_) {
        continue;
      }
      std::vector<int> merged;
      merged.reserve(a.cbar.size() + b.cbar.size());
      std::merge(a.cbar.begin(), a.cbar.end(), b.cbar.begin(), b.cbar.end(),
                 std::back_inserter(merged));
      out.toggle(a.x_exp + b.x_exp, std::move(merged));
    }
  }
  return out;
}

bool SWClass::operator==(const SWClass& o) const {
  return m_ == o.m_ && dmax_ == o.dmax_ && terms_ == o.terms_;
}

std::string SWClass::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first_term = true;
  for (const SWTerm& t : terms_) {
    if (!first_term) {
      os << " + ";
    }
    first_term = false;
    if (t.x_exp == 0 && t.cbar.empty()) {
      os << "1";
      continue;
    }
    bool first_factor = true;
    if (t.x_exp > 0) {
      os << "x";
      if (t.x_exp > 1) {
        os << "^" << t.x_exp;
      }
      first_factor = false;
    }
    std::size_t i = 0;
    while (i < t.cbar.size()) {
      std::size_t j = i;
      while (j < t.cbar.size() && t.cbar[j] == t.cbar[i]) {
        ++j;
      }
      if (!first_factor) {
        os << "*";
      }
      first_factor = false;
      os << "c~" << t.cbar[i];
      if (j - i > 1) {
        os << "^" << (j - i);
      }
      i = j;
    }
  }
  return os.str();
}

// ----------------------------------------------------------------------------
// Total classes
// ----------------------------------------------------------------------------

std::vector<SWClass> sw_total_P(const DoldDescriptor& dold, int max_degree) {
  dold.validate();
  const int m = dold.m;
  const int d = dold.flag.complex_dim();
  const int cap = max_degree < 0 ? m + 2 * d : max_degree;
  std::vector<SWClass> w;
  w.reserve(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k) {
    SWClass wk(m, d == 0 ? 0 : d);
    for (int j = 0; 2 * j <= k && j <= d; ++j) {
      const int a = k - 2 * j;
      if (a > m) {
        continue;
      }
      if (binom_parity(static_cast<std::uint64_t>(m + 1 + d - j),
                       static_cast<std::uint64_t>(a)) == 1) {
        std::vector<int> cbar;
        if (j > 0) {
          cbar.push_back(j);
        }
        wk.toggle(a, std::move(cbar));
      }
    }
    w.push_back(std::move(wk));
  }
  return w;
}

std::vector<SWClass> sw_hat_bundle(int r, int m, int max_degree) {
  if (r < 1) {
    throw std::invalid_argument("sw_hat_bundle: rank must be at least 1");
  }
  if (m < 1) {
    throw std::invalid_argument("sw_hat_bundle: m must be at least 1");
  }
  if (max_degree < 0) {
    throw std::invalid_argument("sw_hat_bundle: max_degree must be nonnegative");
  }
  std::vector<SWClass> w;
  w.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int k = 0; k <= max_degree; ++k) {
    SWClass wk(m, r);
    for (int j = 0; 2 * j <= k && j <= r; ++j) {
      const int a = k - 2 * j;
      if (a > m) {
        continue;
      }
      if (binom_parity(static_cast<std::uint64_t>(r - j), static_cast<std::uint64_t>(a)) == 1) {
        std::vector<int> cbar;
        if (j > 0) {
          cbar.push_back(j);
        }
        wk.toggle(a, std::move(cbar));
      }
    }
    w.push_back(std::move(wk));
  }
  return w;
}

SWClass restrict_to_fiber(const SWClass& c) {
  SWClass out(c.m(), c.dmax());
  for (const SWTerm& t : c.terms()) {
    if (t.x_exp == 0) {
      out.toggle(0, t.cbar);
    }
  }
  return out;
}

SWClass restrict_to_section(const SWClass& c) {
  SWClass out(c.m(), c.dmax());
  for (const SWTerm& t : c.terms()) {
    if (t.cbar.empty()) {
      out.toggle(t.x_exp, {});
    }
  }
  return out;
}

// ----------------------------------------------------------------------------
// Stiefel-Whitney numbers of P
// ----------------------------------------------------------------------------

SwNumberResult sw_number_P(const DoldDescriptor& dold, const FlagManifold& X,
                           std::vector<int> J) {
  dold.validate();
  if (X.descriptor().parts != dold.flag.parts) {
    throw std::invalid_argument("sw_number_P: manifold does not match the descriptor");
  }
  const int m = dold.m;
  const int d = dold.flag.complex_dim();
  int sum = 0;
  for (const int j : J) {
    if (j < 1) {
      throw std::invalid_argument("sw_number_P: indices must be positive");
    }
    sum += j;
  }
  if (sum != dold.dim()) {
    throw std::invalid_argument("sw_number_P: indices must sum to dim P = m + 2d");
  }
  std::sort(J.begin(), J.end());

  const auto odd_count = static_cast<int>(
      std::count_if(J.begin(), J.end(), [](int j) { return j % 2 == 1; }));
  const auto ones = static_cast<int>(std::count(J.begin(), J.end(), 1));
  const bool orientable = (m + d) % 2 == 1;

  // (a) Each odd w contributes a factor of x, and x^(m+1) = 0.
  if (odd_count > m) {
    return {true, 0, "more than m odd indices force an x-power above m"};
  }
  // (b) J = (1^m, 2I) with w_1 = x: the x-powers fill RP^m exactly and the
  //     even factors restrict to tangent classes of X.
  if (!orientable && ones == m && odd_count == m) {
    std::vector<int> I;
    for (const int j : J) {
      if (j > 1) {
        I.push_back(j / 2);
      }
    }
    return {true, X.sw_number(I), "reduces to the Stiefel-Whitney number of X at I"};
  }
  // (c) Orientable P has w_1 = 0.
  if (ones > 0 && orientable) {
    return {true, 0, "w_1 = 0 for orientable P"};
  }
  // (d) m = 1: the degree constraint leaves exactly one odd index 2s+1, whose
  //     class is (d-s) x c~_s.
  if (m == 1) {
    int s = -1;
    std::vector<int> I;
    for (const int j : J) {
      if (j % 2 == 1) {
        s = (j - 1) / 2;
      } else {
        I.push_back(j / 2);
      }
    }
    if (s < 0) {
      throw std::logic_error("sw_number_P: parity bookkeeping failed");
    }
    if ((d - s) % 2 == 0) {
      return {true, 0, "the odd factor carries an even coefficient d-s"};
    }
    if (s > 0) {
      I.push_back(s);
      std::sort(I.begin(), I.end());
    }
    return {true, X.sw_number(I), "odd coefficient d-s; reduces to the number of X at I"};
  }
  return {false, 0,
          "pairing involves products of c~ classes that the module structure leaves formal"};
}

}  // namespace gdold
