#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/mpoly.hpp"
#include "eqs/report.hpp"

namespace eqs {

enum class Basis { m, h, e, p, s };
const char* basis_name(Basis b);
Basis parse_basis(std::string_view name);

// Polynomial in x_1..x_m: exponent vector -> coefficient.
using MonomialExpansion = std::map<std::vector<int>, MPoly>;

// Homogeneous symmetric function of fixed degree. Coefficients live in Q[q,p,t,r,z].
class SymElem {
 public:
  using Coeffs = std::map<Partition, MPoly>;

  SymElem() = default;
  SymElem(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  static SymElem one();
  static SymElem basis_element(Basis b, const Partition& lambda, const MPoly& c = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const& { return coeffs_; }
  Coeffs coeffs() && { return std::move(coeffs_); }
  MPoly coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition& lambda, const MPoly& c);

  SymElem& operator+=(const SymElem& o);
  SymElem& operator-=(const SymElem& o);
  friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
  friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
  friend SymElem operator*(const MPoly& c, const SymElem& f);
  // Product; the result is in the basis of the left factor.
  friend SymElem operator*(const SymElem& a, const SymElem& b);
  bool operator==(const SymElem& o) const;

  // Applies fn to every coefficient.
  template <class Fn>
  SymElem map_coeffs(Fn fn) const {
    SymElem out(degree_, basis_);
    for (const auto& [lam, c] : coeffs_) out.add(lam, fn(c));
    return out;
  }

  std::string str() const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::s;
  Coeffs coeffs_;
};

SymElem convert(const SymElem& f, Basis target);
SymElem omega(const SymElem& f);
// p_k[g]: x_i -> x_i^k, and t, r -> t^k, r^k in the coefficients.
SymElem plethysm_p(int k, const SymElem& g);
SymElem plethysm_h(int k, const SymElem& g);
// Adjoint of multiplication by p_1.
SymElem p1_derivative(const SymElem& f);

struct SchurCheck {
  SymElem expansion;  // s-basis
  bool positive = false;
};
SchurCheck schur_expand_and_check_positive(const SymElem& f);
bool basis_positive(const SymElem& f, Basis b);

// Expansion in x_1..x_m.
MonomialExpansion expand_monomials(const SymElem& f, int m);

// convert(convert(f, b), a) == f for every ordered basis pair and ω² == id, in each degree up to
// degree_max. f carries the coefficient q^i on the i-th partition, so every basis vector is checked.
Report verify_basis_round_trips(int degree_max);

// Character value of the irreducible indexed by lambda on the class mu.
Integer character(const Partition& lambda, const Partition& mu);
// Number of semistandard tableaux of shape lambda and content mu.
Integer kostka(const Partition& lambda, const std::vector<int>& content);

// Σ_n f_n z^n with f_n of degree n, truncated after z^order. Stored in the h basis.
class SymSeries {
 public:
  explicit SymSeries(int order);
  int order() const { return static_cast<int>(c_.size()) - 1; }
  SymElem& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const SymElem& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }

  friend SymSeries operator+(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator-(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const SymSeries& a, const SymSeries& b);
  friend SymSeries operator*(const MPoly& c, const SymSeries& a);
  // Requires a scalar constant term in the divisor that divides every step exactly.
  friend SymSeries operator/(const SymSeries& a, const SymSeries& b);

 private:
  std::vector<SymElem> c_;
};

// H(cz) = Σ c^n h_n z^n and E(cz).
SymSeries h_series(int order, const MPoly& c = 1);
SymSeries e_series(int order, const MPoly& c = 1);

}  // namespace eqs
