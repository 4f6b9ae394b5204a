#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/mpoly.hpp"
#include "eqs/sym.hpp"

namespace eqs {

// F: fundamental F_{S,n}. M: monomial M_α with α = comp(S), M_α = Σ_{i_1 > ... > i_k} x_{i_1}^{α_1}...
enum class QBasis { F, M };

class QSymElem {
 public:
  using Coeffs = std::map<Subset, MPoly>;

  QSymElem() = default;
  QSymElem(int degree, QBasis basis) : degree_(degree), basis_(basis) {}
  static QSymElem fundamental(int n, Subset s, const MPoly& c = 1);
  static QSymElem monomial(const std::vector<int>& alpha, const MPoly& c = 1);

  int degree() const { return degree_; }
  QBasis basis() const { return basis_; }
  const Coeffs& coeffs() const& { return coeffs_; }
  Coeffs coeffs() && { return std::move(coeffs_); }
  MPoly coeff(Subset s) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(Subset s, const MPoly& c);

  QSymElem& operator+=(const QSymElem& o);
  QSymElem& operator-=(const QSymElem& o);
  friend QSymElem operator+(QSymElem a, const QSymElem& b) { return a += b; }
  friend QSymElem operator-(QSymElem a, const QSymElem& b) { return a -= b; }
  friend QSymElem operator*(const MPoly& c, const QSymElem& f);
  bool operator==(const QSymElem& o) const;

  std::string str() const;

 private:
  int degree_ = 0;
  QBasis basis_ = QBasis::F;
  Coeffs coeffs_;
};

QSymElem to_basis(const QSymElem& f, QBasis target);
// Sum of F_{S,n}; every entry must share the same n.
QSymElem from_fundamental(const std::vector<std::pair<int, Subset>>& terms);
bool is_symmetric(const QSymElem& f);
// m-basis symmetric function; throws DomainError when f is not symmetric.
SymElem to_sym(const QSymElem& f);
QSymElem to_qsym(const SymElem& f);
// F_{S,n} -> F_{[n-1]\S,n}.
QSymElem omega(const QSymElem& f);

// (q;q)_n Λ(f) where Λ(F_{S,n}) = q^{ΣS}/(q;q)_n.
MPoly stable_spec_numerator(const QSymElem& f);
// x_i -> q^{i-1} for i <= m and x_i -> 0 otherwise.
MPoly principal_spec(const QSymElem& f, int m);
// Σ_{m=0}^{max_m} Λ_m(f) p^m.
MPoly spec_p_series(const QSymElem& f, int max_m);

MonomialExpansion expand_monomials(const QSymElem& f, int m);
std::string expansion_str(const MonomialExpansion& e);

}  // namespace eqs
