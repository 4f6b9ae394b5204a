#include "eqs/qsym.hpp"

#include <algorithm>
#include <functional>

#include "eqs/qseries.hpp"

namespace eqs {

namespace {

// Calls fn on every superset of s inside [n-1].
void for_each_superset(Subset s, int n, const std::function<void(Subset)>& fn) {
  Subset full = full_subset(n);
  Subset free_bits = full & ~s;
  Subset sub = free_bits;
  while (true) {
    fn(s | sub);
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

QSymElem QSymElem::fundamental(int n, Subset s, const MPoly& c) {
  if ((s & ~full_subset(n)) != 0) throw DomainError("subset not contained in [n-1]");
  QSymElem out(n, QBasis::F);
  out.add(s, c);
  return out;
}

QSymElem QSymElem::monomial(const std::vector<int>& alpha, const MPoly& c) {
  int n = 0;
  for (int a : alpha) {
    if (a <= 0) throw DomainError("composition parts must be positive");
    n += a;
  }
  QSymElem out(n, QBasis::M);
  out.add(composition_to_subset(alpha), c);
  return out;
}

MPoly QSymElem::coeff(Subset s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? MPoly() : it->second;
}

void QSymElem::add(Subset s, const MPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QSymElem& QSymElem::operator+=(const QSymElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  if (degree_ != o.degree_) throw DomainError("adding quasisymmetric functions of different degrees");
  QSymElem rhs = to_basis(o, basis_);
  for (const auto& [s, c] : rhs.coeffs_) add(s, c);
  return *this;
}

QSymElem& QSymElem::operator-=(const QSymElem& o) { return *this += MPoly(-1) * o; }

QSymElem operator*(const MPoly& c, const QSymElem& f) {
  QSymElem out(f.degree_, f.basis_);
  if (c.is_zero()) return out;
  for (const auto& [s, v] : f.coeffs_) out.add(s, c * v);
  return out;
}

bool QSymElem::operator==(const QSymElem& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return degree_ == o.degree_ && coeffs_ == to_basis(o, basis_).coeffs_;
}

std::string QSymElem::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    std::string cs = c.str();
    if (c.size() > 1) cs = "(" + cs + ")";
    if (cs != "1") out += cs + "*";
    if (basis_ == QBasis::F) {
      out += "F[" + subset_str(s) + "," + std::to_string(degree_) + "]";
    } else {
      out += "M[";
      auto alpha = subset_to_composition(s, degree_);
      for (std::size_t i = 0; i < alpha.size(); ++i) out += (i ? "," : "") + std::to_string(alpha[i]);
      out += "]";
    }
  }
  return out;
}

QSymElem to_basis(const QSymElem& f, QBasis target) {
  if (f.basis() == target) return f;
  QSymElem out(f.degree(), target);
  for (const auto& [s, c] : f.coeffs()) {
    for_each_superset(s, f.degree(), [&](Subset t) {
      if (target == QBasis::M) {
        out.add(t, c);
      } else {
        int sign = (subset_size(t) - subset_size(s)) % 2 == 0 ? 1 : -1;
        out.add(t, c * Rational(sign));
      }
    });
  }
  return out;
}

QSymElem from_fundamental(const std::vector<std::pair<int, Subset>>& terms) {
  if (terms.empty()) return QSymElem();
  QSymElem out(terms.front().first, QBasis::F);
  for (const auto& [n, s] : terms) {
    if (n != out.degree()) throw DomainError("fundamental terms of mixed degree");
    out += QSymElem::fundamental(n, s);
  }
  return out;
}

bool is_symmetric(const QSymElem& f) {
  QSymElem m = to_basis(f, QBasis::M);
  std::map<std::vector<int>, MPoly> seen;
  for (Subset s = 0; s <= full_subset(f.degree()); ++s) {
    auto key = sorted_desc(subset_to_composition(s, f.degree()));
    MPoly c = m.coeff(s);
    auto [it, inserted] = seen.try_emplace(key, c);
    if (!inserted && !(it->second == c)) return false;
    if (f.degree() <= 1) break;
  }
  return true;
}

SymElem to_sym(const QSymElem& f) {
  if (!is_symmetric(f)) throw DomainError("quasisymmetric function is not symmetric");
  SymElem out(f.degree(), Basis::m);
  for (const auto& [s, c] : to_basis(f, QBasis::M).coeffs()) {
    auto alpha = subset_to_composition(s, f.degree());
    if (std::is_sorted(alpha.begin(), alpha.end(), std::greater<>())) out.add(Partition(alpha), c);
  }
  return out;
}

QSymElem to_qsym(const SymElem& f) {
  QSymElem out(f.degree(), QBasis::M);
  for (const auto& [lam, c] : convert(f, Basis::m).coeffs()) {
    std::vector<int> alpha = lam.parts();
    std::sort(alpha.begin(), alpha.end());
    do {
      out.add(composition_to_subset(alpha), c);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
  }
  return out;
}

QSymElem omega(const QSymElem& f) {
  QSymElem fb = to_basis(f, QBasis::F);
  QSymElem out(f.degree(), QBasis::F);
  Subset full = full_subset(f.degree());
  for (const auto& [s, c] : fb.coeffs()) out.add(full & ~s, c);
  return to_basis(out, f.basis());
}

MPoly stable_spec_numerator(const QSymElem& f) {
  MPoly out;
  for (const auto& [s, c] : to_basis(f, QBasis::F).coeffs()) out += c * MPoly::var(Var::q, subset_sum(s));
  return out;
}

MPoly principal_spec(const QSymElem& f, int m) {
  if (m < 0) throw DomainError("number of variables must be nonnegative");
  MPoly out;
  for (const auto& [s, c] : to_basis(f, QBasis::M).coeffs()) {
    auto alpha = subset_to_composition(s, f.degree());
    // Σ over m-1 >= j_1 > ... > j_k >= 0 of q^{Σ α_i j_i}.
    std::function<MPoly(std::size_t, int)> rec = [&](std::size_t i, int top) -> MPoly {
      if (i == alpha.size()) return MPoly(1);
      MPoly acc;
      for (int j = top; j >= static_cast<int>(alpha.size() - i) - 1; --j)
        acc += MPoly::var(Var::q, alpha[i] * j) * rec(i + 1, j - 1);
      return acc;
    };
    out += c * rec(0, m - 1);
  }
  return out;
}

MPoly spec_p_series(const QSymElem& f, int max_m) {
  MPoly out;
  for (int m = 0; m <= max_m; ++m) out += principal_spec(f, m) * MPoly::var(Var::p, m);
  return out;
}

MonomialExpansion expand_monomials(const QSymElem& f, int m) {
  MonomialExpansion out;
  for (const auto& [s, c] : to_basis(f, QBasis::M).coeffs()) {
    auto alpha = subset_to_composition(s, f.degree());
    std::size_t k = alpha.size();
    if (static_cast<int>(k) > m) continue;
    // Choose indices i_1 > ... > i_k.
    std::vector<int> idx(k);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int top) {
      if (i == k) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (std::size_t a = 0; a < k; ++a) e[static_cast<std::size_t>(idx[a] - 1)] = alpha[a];
        MPoly& slot = out[e];
        slot += c;
        if (slot.is_zero()) out.erase(e);
        return;
      }
      for (int v = top; v >= static_cast<int>(k - i); --v) {
        idx[i] = v;
        rec(i + 1, v - 1);
      }
    };
    rec(0, m);
  }
  return out;
}

std::string expansion_str(const MonomialExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (auto it = e.rbegin(); it != e.rend(); ++it) {
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int d = it->first[i];
      if (d == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (d > 1) mono += "^" + std::to_string(d);
    }
    std::string cs = it->second.str();
    if (it->second.size() > 1) cs = "(" + cs + ")";
    std::string term;
    if (mono.empty()) term = cs;
    else if (cs == "1") term = mono;
    else term = cs + "*" + mono;
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

}  // namespace eqs
