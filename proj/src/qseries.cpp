#include "eqs/qseries.hpp"

#include "eqs/combinatorics.hpp"

namespace eqs {

MPoly q_int(int n) { return q_int(q_var(), n); }

MPoly q_int(const MPoly& base, int n) {
  if (n < 0) throw DomainError("q_int of a negative integer");
  MPoly out;
  MPoly pw(1);
  for (int i = 0; i < n; ++i) {
    out += pw;
    pw *= base;
  }
  return out;
}

MPoly q_fact(int n) {
  check_cap("q_degree", n, Caps::current().q_degree * 2);
  MPoly out(1);
  for (int i = 1; i <= n; ++i) out *= q_int(i);
  return out;
}

MPoly gauss(int n, int k) { return gauss(n, k, q_var()); }

MPoly gauss(int n, int k, const MPoly& base) {
  if (n < 0) throw DomainError("gauss with negative n");
  if (k < 0 || k > n) return MPoly();
  // Pascal rule: [n,k] = [n-1,k-1] + base^k [n-1,k]
  std::vector<MPoly> row{MPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<MPoly> next(static_cast<std::size_t>(m + 1));
    for (int i = 0; i <= m; ++i) {
      MPoly v;
      if (i >= 1) v += row[static_cast<std::size_t>(i - 1)];
      if (i < m) v += base.pow(i) * row[static_cast<std::size_t>(i)];
      next[static_cast<std::size_t>(i)] = std::move(v);
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

MPoly q_multinomial(int n, const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 0) throw DomainError("negative multinomial part");
    total += p;
  }
  if (total != n) throw DomainError("multinomial parts must sum to n");
  MPoly out(1);
  int remaining = n;
  for (int p : parts) {
    out *= gauss(remaining, p);
    remaining -= p;
  }
  return out;
}

MPoly pochhammer(const MPoly& a, int n) {
  if (n < 0) throw DomainError("pochhammer with negative length");
  MPoly out(1);
  MPoly term = a;
  for (int i = 0; i < n; ++i) {
    out *= MPoly(1) - term;
    term *= q_var();
  }
  return out;
}

MPoly exact_divide(const MPoly& a, const MPoly& b) {
  auto q = a.exact_div(b);
  if (!q) throw DomainError("inexact polynomial division: (" + a.str() + ") / (" + b.str() + ")");
  return *q;
}

DividedSeries DividedSeries::scaled(const MPoly& c) const {
  DividedSeries out(order());
  MPoly pw(1);
  for (int n = 0; n <= order(); ++n) {
    out[n] = (*this)[n] * pw;
    pw *= c;
  }
  return out;
}

DividedSeries operator+(const DividedSeries& a, const DividedSeries& b) {
  DividedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = a[n] + b[n];
  return out;
}

DividedSeries operator-(const DividedSeries& a, const DividedSeries& b) {
  DividedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = a[n] - b[n];
  return out;
}

DividedSeries operator*(const DividedSeries& a, const DividedSeries& b) {
  DividedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n)
    for (int k = 0; k <= n; ++k) out[n] += gauss(n, k) * a[k] * b[n - k];
  return out;
}

DividedSeries operator*(const MPoly& c, const DividedSeries& a) {
  DividedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = c * a[n];
  return out;
}

DividedSeries operator/(const DividedSeries& a, const DividedSeries& b) {
  DividedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    MPoly acc = a[n];
    for (int k = 0; k < n; ++k) acc -= gauss(n, k) * out[k] * b[n - k];
    out[n] = exact_divide(acc, b[0]);
  }
  return out;
}

DividedSeries exp_q_series(int order) {
  check_cap("series_order", order, Caps::current().series_order);
  DividedSeries out(order);
  for (int n = 0; n <= order; ++n) out[n] = MPoly(1);
  return out;
}

DividedSeries cap_exp_q_series(int order) {
  check_cap("series_order", order, Caps::current().series_order);
  DividedSeries out(order);
  for (int n = 0; n <= order; ++n) out[n] = MPoly::var(Var::q, n * (n - 1) / 2);
  return out;
}

}  // namespace eqs
