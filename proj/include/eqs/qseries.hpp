#pragma once

#include <stdexcept>
#include <vector>

#include "eqs/mpoly.hpp"

namespace eqs {

MPoly q_int(int n);                     // [n]_q
MPoly q_int(const MPoly& base, int n);  // 1 + base + ... + base^{n-1}
MPoly q_fact(int n);
MPoly gauss(int n, int k);
MPoly gauss(int n, int k, const MPoly& base);
MPoly q_multinomial(int n, const std::vector<int>& parts);
// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})
MPoly pochhammer(const MPoly& a, int n);

// Quotient a/b, throwing when b does not divide a.
MPoly exact_divide(const MPoly& a, const MPoly& b);

// Power series in z truncated after z^order. The coefficient type needs +, -, *,
// and an exact_divide(a, b) overload for division by the constant coefficient.
template <class C>
class Series {
 public:
  explicit Series(int order, const C& zero = C()) : c_(static_cast<std::size_t>(order + 1), zero) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  C& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const C& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<C>& coeffs() const { return c_; }

  Series& operator+=(const Series& o) {
    for (int n = 0; n <= order(); ++n) (*this)[n] = (*this)[n] + o[n];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (int n = 0; n <= order(); ++n) (*this)[n] = (*this)[n] - o[n];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) {
    Series out(a.order(), a[0] - a[0]);
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
  }
  // a/b with b[0] dividing exactly every recursion step.
  friend Series operator/(const Series& a, const Series& b) {
    Series out(a.order(), a[0] - a[0]);
    for (int n = 0; n <= a.order(); ++n) {
      C acc = a[n];
      for (int k = 0; k < n; ++k) acc = acc - out[k] * b[n - k];
      out[n] = exact_divide(acc, b[0]);
    }
    return out;
  }

 private:
  std::vector<C> c_;
};

using PolySeries = Series<MPoly>;

// Σ c_n z^n/[n]_q!, truncated after z^order. Products use Gaussian binomials.
class DividedSeries {
 public:
  explicit DividedSeries(int order) : c_(static_cast<std::size_t>(order + 1)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  MPoly& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const MPoly& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }

  // f(c z) for a polynomial c.
  DividedSeries scaled(const MPoly& c) const;

  friend DividedSeries operator+(const DividedSeries& a, const DividedSeries& b);
  friend DividedSeries operator-(const DividedSeries& a, const DividedSeries& b);
  friend DividedSeries operator*(const DividedSeries& a, const DividedSeries& b);
  friend DividedSeries operator*(const MPoly& c, const DividedSeries& a);
  friend DividedSeries operator/(const DividedSeries& a, const DividedSeries& b);

 private:
  std::vector<MPoly> c_;
};

DividedSeries exp_q_series(int order);      // Σ z^n/[n]_q!
DividedSeries cap_exp_q_series(int order);  // Σ q^{C(n,2)} z^n/[n]_q!

}  // namespace eqs
