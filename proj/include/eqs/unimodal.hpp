#pragma once

#include <iterator>
#include <map>
#include <string>

namespace eqs {

struct SymmetryCheck {
  bool nonzero = false;
  bool symmetric = false;
  bool unimodal = false;
  int twice_center = 0;  // r + s for support [r, s]
  std::string witness;
};

// Coefficients keyed by exponent; missing exponents inside the support count as zero.
// `nonneg(d)` decides whether d lies in the positive cone of the coefficient ring.
template <class C, class NonNeg>
SymmetryCheck check_symmetric_unimodal(const std::map<int, C>& coeffs, NonNeg nonneg) {
  SymmetryCheck out;
  if (coeffs.empty()) return out;
  out.nonzero = true;
  int r = coeffs.begin()->first;
  int s = std::prev(coeffs.end())->first;
  out.twice_center = r + s;
  auto at = [&](int i) {
    auto it = coeffs.find(i);
    return it == coeffs.end() ? C() : it->second;
  };
  out.symmetric = true;
  for (int i = 0; r + i < s - i; ++i) {
    if (!(at(r + i) == at(s - i))) {
      out.symmetric = false;
      out.witness = "coefficients of degree " + std::to_string(r + i) + " and " +
                    std::to_string(s - i) + " differ";
      break;
    }
  }
  out.unimodal = true;
  for (int i = r; 2 * (i + 1) <= r + s; ++i) {
    if (!nonneg(at(i + 1) - at(i))) {
      out.unimodal = false;
      if (out.witness.empty())
        out.witness = "increase from degree " + std::to_string(i) + " to " + std::to_string(i + 1) +
                      " is not positive";
      break;
    }
  }
  return out;
}

}  // namespace eqs
