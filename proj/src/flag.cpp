#include "gdold/flag.hpp"

#include <stdexcept>

namespace gdold {

void FlagDescriptor::validate() const {
  if (parts.empty()) {
    throw std::invalid_argument("FlagDescriptor: parts must be nonempty");
  }
  for (const int p : parts) {
    if (p < 1) {
      throw std::invalid_argument("FlagDescriptor: parts must be positive");
    }
  }
}

int FlagDescriptor::n() const {
  int sum = 0;
  for (const int p : parts) {
    sum += p;
  }
  return sum;
}

int FlagDescriptor::complex_dim() const {
  int d = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      d += parts[i] * parts[j];
    }
  }
  return d;
}

FlagManifold::FlagManifold(FlagDescriptor desc)
    : desc_(std::move(desc)), ring_((desc_.validate(), desc_.n())) {
  int offset_i = 0;
  for (std::size_t i = 0; i < desc_.parts.size(); ++i) {
    int offset_j = offset_i + desc_.parts[i];
    for (std::size_t j = i + 1; j < desc_.parts.size(); ++j) {
      for (int a = 0; a < desc_.parts[i]; ++a) {
        for (int b = 0; b < desc_.parts[j]; ++b) {
          cross_pairs_.emplace_back(offset_i + a, offset_j + b);
        }
      }
      offset_j += desc_.parts[j];
    }
    offset_i += desc_.parts[i];
  }
}

std::vector<int> FlagManifold::block_vars(int b) const {
  if (b < 0 || b >= desc_.r()) {
    throw std::invalid_argument("FlagManifold: block index out of range");
  }
  int offset = 0;
  for (int i = 0; i < b; ++i) {
    offset += desc_.parts[static_cast<std::size_t>(i)];
  }
  std::vector<int> vars;
  for (int a = 0; a < desc_.parts[static_cast<std::size_t>(b)]; ++a) {
    vars.push_back(offset + a);
  }
  return vars;
}

ChernData FlagManifold::tangent_chern() const {
  Gf2Poly total = Gf2Poly::one();
  for (const auto& [a, b] : cross_pairs_) {
    Gf2Poly factor = Gf2Poly::one();
    factor.toggle(Monomial::variable(a));
    factor.toggle(Monomial::variable(b));
    total = ring_.reduce_product(total, factor);
  }
  const int d = desc_.complex_dim();
  ChernData out;
  out.graded.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    out.graded.push_back(total.component(j));
  }
  return out;
}

Gf2Poly FlagManifold::tangent_c1() const {
  Gf2Poly c1;
  for (const auto& [a, b] : cross_pairs_) {
    c1.toggle(Monomial::variable(a));
    c1.toggle(Monomial::variable(b));
  }
  return ring_.normal_form(c1);
}

int FlagManifold::sw_number(const std::vector<int>& I) const {
  return sw_number(tangent_chern(), I);
}

int FlagManifold::sw_number(const ChernData& chern, const std::vector<int>& I) const {
  const int d = desc_.complex_dim();
  int sum = 0;
  for (const int i : I) {
    if (i < 1 || i > d) {
      throw std::invalid_argument("sw_number: partition entry out of range");
    }
    sum += i;
  }
  if (sum != d) {
    throw std::invalid_argument("sw_number: partition must sum to the complex dimension");
  }
  Gf2Poly prod = Gf2Poly::one();
  for (const int i : I) {
    const Gf2Poly& ci = chern.graded[static_cast<std::size_t>(i)];
    if (ci.is_zero()) {
      return 0;
    }
    prod = ring_.reduce_product(prod, ci);
    if (prod.is_zero()) {
      return 0;
    }
  }
  return integrate(prod);
}

int FlagManifold::integrate(const Gf2Poly& p) const {
  return integrate_partial_flag(ring_, desc_.parts, p);
}

ChernData tangent_chern_total(const FlagManifold& X) { return X.tangent_chern(); }

int sw_number_X(const FlagManifold& X, const std::vector<int>& I) { return X.sw_number(I); }

bool is_spin_X(const FlagManifold& X) { return X.is_spin(); }

}  // namespace gdold
