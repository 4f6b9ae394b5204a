#include "eqs/mpoly.hpp"

#include <algorithm>
#include <climits>
#include <vector>

#include "eqs/combinatorics.hpp"

namespace eqs {

const char* var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::p: return "p";
    case Var::t: return "t";
    case Var::r: return "r";
    case Var::z: return "z";
  }
  return "?";
}

namespace {

constexpr Exponents kZero{0, 0, 0, 0, 0};

int idx(Var v) { return static_cast<int>(v); }

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents e;
  for (int i = 0; i < kNumVars; ++i) e[i] = a[i] + b[i];
  return e;
}

Rational rational_pow(const Rational& c, int e) {
  Rational out = 1;
  Rational base = e >= 0 ? c : Rational(1) / c;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

}  // namespace

MPoly::MPoly(long c) {
  if (c != 0) terms_.emplace(kZero, Rational(c));
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(kZero, c);
}

MPoly MPoly::var(Var v, int e) {
  Exponents ex = kZero;
  ex[idx(v)] = e;
  return monomial(ex, 1);
}

MPoly MPoly::monomial(const Exponents& e, const Rational& c) {
  MPoly m;
  if (c != 0) m.terms_.emplace(e, c);
  return m;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZero);
}

Rational MPoly::constant_term() const { return coeff(kZero); }

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add(ea, eb), ca * cb);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative power of a polynomial");
  MPoly out(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return out;
}

int MPoly::degree(Var v) const {
  int d = -1000000;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return d;
}

int MPoly::min_degree(Var v) const {
  int d = 1000000;
  for (const auto& [e, c] : terms_) d = std::min(d, e[idx(v)]);
  return d;
}

MPoly MPoly::coeff_of(Var v, int e) const {
  MPoly out;
  for (const auto& [ex, c] : terms_) {
    if (ex[idx(v)] != e) continue;
    Exponents k = ex;
    k[idx(v)] = 0;
    out.add_term(k, c);
  }
  return out;
}

MPoly MPoly::truncate(Var v, int max_deg) const {
  MPoly out;
  for (const auto& [ex, c] : terms_)
    if (ex[idx(v)] <= max_deg) out.terms_.emplace(ex, c);
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
  bool single = value.terms_.size() == 1;
  std::map<int, MPoly> powers;
  MPoly out;
  for (const auto& [ex, c] : terms_) {
    int e = ex[idx(v)];
    Exponents rest = ex;
    rest[idx(v)] = 0;
    if (e == 0) {
      out.add_term(rest, c);
      continue;
    }
    if (single) {
      const auto& [ve, vc] = *value.terms_.begin();
      Exponents ne = rest;
      for (int i = 0; i < kNumVars; ++i) ne[i] += ve[i] * e;
      out.add_term(ne, c * rational_pow(vc, e));
      continue;
    }
    if (e < 0) throw DomainError("cannot substitute a non-monomial into a negative power");
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
    out += MPoly::monomial(rest, c) * it->second;
  }
  return out;
}

MPoly MPoly::substitute(Var v, const Rational& value) const {
  MPoly out;
  for (const auto& [ex, c] : terms_) {
    Exponents rest = ex;
    rest[idx(v)] = 0;
    out.add_term(rest, c * rational_pow(value, ex[idx(v)]));
  }
  return out;
}

MPoly MPoly::dilate(unsigned var_mask, int factor) const {
  MPoly out;
  for (const auto& [ex, c] : terms_) {
    Exponents ne = ex;
    for (int i = 0; i < kNumVars; ++i)
      if (var_mask & (1u << i)) ne[i] *= factor;
    out.add_term(ne, c);
  }
  return out;
}

MPoly MPoly::shift(Var v, int e) const {
  MPoly out;
  for (const auto& [ex, c] : terms_) {
    Exponents ne = ex;
    ne[idx(v)] += e;
    out.terms_.emplace(ne, c);
  }
  return out;
}

Rational MPoly::evaluate(const std::array<Rational, kNumVars>& at) const {
  Rational total = 0;
  for (const auto& [ex, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < kNumVars; ++i)
      if (ex[i] != 0) term *= rational_pow(at[static_cast<std::size_t>(i)], ex[i]);
    total += term;
  }
  return total;
}

std::optional<MPoly> MPoly::exact_div(const MPoly& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return MPoly();
  int sn = min_degree(Var::q);
  int sd = d.min_degree(Var::q);
  MPoly rem = shift(Var::q, -sn);
  MPoly div = d.shift(Var::q, -sd);
  for (const auto& [e, c] : rem.terms_)
    for (int x : e)
      if (x < 0) throw DomainError("exact_div: negative exponent outside q");
  const auto& [lead_e, lead_c] = *div.terms_.rbegin();
  MPoly quot;
  while (!rem.is_zero()) {
    const auto [re, rc] = *rem.terms_.rbegin();
    Exponents qe;
    for (int i = 0; i < kNumVars; ++i) {
      qe[i] = re[i] - lead_e[i];
      if (qe[i] < 0) return std::nullopt;
    }
    MPoly term = MPoly::monomial(qe, rc / lead_c);
    quot += term;
    rem -= term * div;
  }
  return quot.shift(Var::q, sn - sd);
}

bool MPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
}

bool MPoly::integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

MPoly q_var() { return MPoly::var(Var::q); }
MPoly p_var() { return MPoly::var(Var::p); }
MPoly t_var() { return MPoly::var(Var::t); }
MPoly r_var() { return MPoly::var(Var::r); }
MPoly z_var() { return MPoly::var(Var::z); }

}  // namespace eqs
