#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>

namespace eqs {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Var : int { q = 0, p = 1, t = 2, r = 3, z = 4 };
inline constexpr int kNumVars = 5;
const char* var_name(Var v);

using Exponents = std::array<int, kNumVars>;

// Exact polynomial in q, p, t, r, z over the rationals. Exponents of q may be negative.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MPoly var(Var v, int e = 1);
  static MPoly monomial(const Exponents& e, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coeff(const Exponents& e) const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly pow(int k) const;

  int degree(Var v) const;      // -1000000 for the zero polynomial
  int min_degree(Var v) const;  // +1000000 for the zero polynomial
  // Coefficient of v^e, with v removed.
  MPoly coeff_of(Var v, int e) const;
  // Drops every term whose v-degree exceeds max_deg.
  MPoly truncate(Var v, int max_deg) const;
  MPoly substitute(Var v, const MPoly& value) const;
  MPoly substitute(Var v, const Rational& value) const;
  MPoly substitute(Var v, long value) const { return substitute(v, Rational(value)); }
  // v -> v^factor for every v in the mask.
  MPoly dilate(unsigned var_mask, int factor) const;
  MPoly shift(Var v, int e) const;  // multiply by v^e
  Rational evaluate(const std::array<Rational, kNumVars>& at) const;

  // Quotient when d divides *this exactly; nullopt otherwise.
  std::optional<MPoly> exact_div(const MPoly& d) const;

  bool nonnegative() const;
  bool integral() const;
  std::string str() const;

 private:
  Terms terms_;
};

inline MPoly operator*(const MPoly& a, long c) { return a * Rational(c); }
inline MPoly operator*(long c, const MPoly& a) { return a * Rational(c); }

MPoly q_var();
MPoly p_var();
MPoly t_var();
MPoly r_var();
MPoly z_var();

}  // namespace eqs
