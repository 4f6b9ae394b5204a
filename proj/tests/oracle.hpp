#pragma once

// Brute-force references used only by the tests.

#include <functional>
#include <map>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/mpoly.hpp"
#include "eqs/sym.hpp"

namespace oracle {

using eqs::MonomialExpansion;
using eqs::MPoly;

inline MonomialExpansion mul(const MonomialExpansion& a, const MonomialExpansion& b) {
  MonomialExpansion out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline MonomialExpansion add(MonomialExpansion a, const MonomialExpansion& b, long scale = 1) {
  for (const auto& [e, c] : b) a[e] += c * scale;
  for (auto it = a.begin(); it != a.end();) it = it->second.is_zero() ? a.erase(it) : std::next(it);
  return a;
}

inline MonomialExpansion one(int m) { return {{std::vector<int>(static_cast<std::size_t>(m), 0), MPoly(1)}}; }

// Every exponent vector of total degree k in m variables, filtered.
inline MonomialExpansion sum_over(int m, int k, const std::function<bool(const std::vector<int>&)>& keep) {
  MonomialExpansion out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      e[static_cast<std::size_t>(i)] = left;
      if (keep(e)) out[e] += 1;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  if (m == 0) return k == 0 ? one(0) : out;
  rec(0, k);
  return out;
}

inline MonomialExpansion h(int k, int m) { return sum_over(m, k, [](const auto&) { return true; }); }
inline MonomialExpansion e(int k, int m) {
  return sum_over(m, k, [](const auto& v) {
    for (int x : v)
      if (x > 1) return false;
    return true;
  });
}
inline MonomialExpansion p(int k, int m) {
  return sum_over(m, k, [k](const auto& v) {
    for (int x : v)
      if (x != 0 && x != k) return false;
    return true;
  });
}

inline MonomialExpansion product(const eqs::Partition& lam, int m, MonomialExpansion (*f)(int, int)) {
  MonomialExpansion out = one(m);
  for (int part : lam.parts()) out = mul(out, f(part, m));
  return out;
}

// Schur polynomial by filling semistandard tableaux entry by entry.
inline MonomialExpansion schur(const eqs::Partition& lam, int m) {
  std::vector<std::vector<int>> t;
  for (int part : lam.parts()) t.emplace_back(static_cast<std::size_t>(part), 0);
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  MonomialExpansion out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      std::vector<int> ex(static_cast<std::size_t>(m), 0);
      for (const auto& row : t)
        for (int v : row) ++ex[static_cast<std::size_t>(v - 1)];
      out[ex] += 1;
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= m; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace oracle
