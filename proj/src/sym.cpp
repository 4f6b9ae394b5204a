#include "eqs/sym.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "eqs/qseries.hpp"

namespace eqs {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

struct KostkaKey {
  std::vector<int> shape;
  std::vector<int> content;
  auto operator<=>(const KostkaKey&) const = default;
};

Integer kostka_rec(const std::vector<int>& shape, const std::vector<int>& content, std::size_t len,
                   std::map<KostkaKey, Integer>& memo) {
  if (len == 0) return shape.empty() ? 1 : 0;
  KostkaKey key{shape, std::vector<int>(content.begin(), content.begin() + static_cast<long>(len))};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int strip = content[len - 1];
  Integer total = 0;
  // Choose nu with shape[i+1] <= nu[i] <= shape[i] and |shape| - |nu| = strip.
  std::vector<int> nu(shape.size());
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == shape.size()) {
      if (left != 0) return;
      std::vector<int> trimmed;
      for (int v : nu)
        if (v > 0) trimmed.push_back(v);
      total += kostka_rec(trimmed, content, len - 1, memo);
      return;
    }
    int lo = i + 1 < shape.size() ? shape[i + 1] : 0;
    for (int v = shape[i]; v >= lo; --v) {
      int used = shape[i] - v;
      if (used > left) break;
      nu[i] = v;
      self(self, i + 1, left - used);
    }
  };
  rec(rec, 0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> beta_set(const std::vector<int>& parts) {
  std::vector<int> beta;
  int len = static_cast<int>(parts.size());
  for (int i = 0; i < len; ++i) beta.push_back(parts[static_cast<std::size_t>(i)] + len - 1 - i);
  return beta;  // strictly decreasing
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts;
  int len = static_cast<int>(beta.size());
  for (int i = 0; i < len; ++i) {
    int v = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (v > 0) parts.push_back(v);
  }
  return parts;
}

// Murnaghan–Nakayama on beta sets.
Integer character_rec(const std::vector<int>& shape, const std::vector<int>& type, std::size_t len,
                      std::map<KostkaKey, Integer>& memo) {
  if (len == 0) return shape.empty() ? 1 : 0;
  KostkaKey key{shape, std::vector<int>(type.begin(), type.begin() + static_cast<long>(len))};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int k = type[len - 1];
  std::vector<int> beta = beta_set(shape);
  std::set<int> occupied(beta.begin(), beta.end());
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    int b = beta[i];
    if (b - k < 0 || occupied.count(b - k)) continue;
    int between = 0;
    for (int c : beta)
      if (c > b - k && c < b) ++between;
    std::vector<int> moved = beta;
    moved[i] = b - k;
    Integer sub = character_rec(from_beta(moved), type, len - 1, memo);
    total += between % 2 == 0 ? sub : Integer(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct Tables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<int> conj;
  Matrix K, Kinv, chi;
  std::vector<Rational> z;
};

std::shared_ptr<const Tables> build_tables(int n) {
  auto t = std::make_shared<Tables>();
  t->parts = partitions(n);
  std::size_t N = t->parts.size();
  for (std::size_t i = 0; i < N; ++i) t->index[t->parts[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < N; ++i) t->conj.push_back(t->index.at(t->parts[i].conjugate()));
  t->K.assign(N, std::vector<Rational>(N));
  t->Kinv.assign(N, std::vector<Rational>(N));
  t->chi.assign(N, std::vector<Rational>(N));
  std::map<KostkaKey, Integer> kmemo, cmemo;
  for (std::size_t i = 0; i < N; ++i) {
    t->z.emplace_back(static_cast<long>(t->parts[i].z()));
    for (std::size_t j = 0; j < N; ++j) {
      const auto& mu = t->parts[j].parts();
      if (t->parts[i].dominates(t->parts[j]))
        t->K[i][j] = Rational(kostka_rec(t->parts[i].parts(), mu, mu.size(), kmemo));
      t->chi[i][j] = Rational(character_rec(t->parts[i].parts(), mu, mu.size(), cmemo));
    }
  }
  // K is unitriangular with K[i][j] != 0 only for i <= j.
  for (std::size_t j = 0; j < N; ++j) {
    t->Kinv[j][j] = 1;
    for (std::size_t i = j; i-- > 0;) {
      Rational acc = 0;
      for (std::size_t k = i + 1; k <= j; ++k)
        if (t->K[i][k] != 0 && t->Kinv[k][j] != 0) acc += t->K[i][k] * t->Kinv[k][j];
      t->Kinv[i][j] = -acc;
    }
  }
  return t;
}

std::shared_ptr<const Tables> tables(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Tables>> cache;
  check_cap("sym_degree", n, Caps::current().sym_degree);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto t = build_tables(n);
  cache.emplace(n, t);
  return t;
}

using Vec = std::vector<MPoly>;

Vec to_vec(const SymElem& f, const Tables& t) {
  Vec v(t.parts.size());
  for (const auto& [lam, c] : f.coeffs()) v[static_cast<std::size_t>(t.index.at(lam))] = c;
  return v;
}

SymElem from_vec(const Vec& v, const Tables& t, int n, Basis b) {
  SymElem out(n, b);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.add(t.parts[i], v[i]);
  return out;
}

// Σ_j c_j M[j][i] (transpose = false) or Σ_j M[i][j] c_j (transpose = true).
Vec apply(const Matrix& M, const Vec& c, bool row_index_is_input) {
  std::size_t N = c.size();
  Vec out(N);
  for (std::size_t j = 0; j < N; ++j) {
    if (c[j].is_zero()) continue;
    for (std::size_t i = 0; i < N; ++i) {
      const Rational& m = row_index_is_input ? M[j][i] : M[i][j];
      if (m != 0) out[i] += c[j] * m;
    }
  }
  return out;
}

Vec conjugated(const Vec& v, const Tables& t) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(t.conj[i])] = v[i];
  return out;
}

Vec to_s(const Vec& c, Basis b, const Tables& t) {
  switch (b) {
    case Basis::s: return c;
    case Basis::m: return apply(t.Kinv, c, true);
    case Basis::h: return apply(t.K, c, false);
    case Basis::e: return conjugated(apply(t.K, c, false), t);
    case Basis::p: return apply(t.chi, c, false);
  }
  return c;
}

Vec from_s(const Vec& d, Basis b, const Tables& t) {
  switch (b) {
    case Basis::s: return d;
    case Basis::m: return apply(t.K, d, true);
    case Basis::h: return apply(t.Kinv, d, false);
    case Basis::e: return apply(t.Kinv, conjugated(d, t), false);
    case Basis::p: {
      Vec out = apply(t.chi, d, true);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] *= Rational(1) / t.z[i];
      return out;
    }
  }
  return d;
}

bool multiplicative(Basis b) { return b == Basis::h || b == Basis::e || b == Basis::p; }

std::string coeff_str(const MPoly& c) {
  std::string s = c.str();
  if (c.size() > 1) return "(" + s + ")";
  return s;
}

}  // namespace

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "m") return Basis::m;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "s") return Basis::s;
  throw DomainError("unknown basis: " + std::string(name));
}

SymElem SymElem::one() { return basis_element(Basis::h, Partition(), 1); }

SymElem SymElem::basis_element(Basis b, const Partition& lambda, const MPoly& c) {
  SymElem out(lambda.size(), b);
  out.add(lambda, c);
  return out;
}

MPoly SymElem::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? MPoly() : it->second;
}

void SymElem::add(const Partition& lambda, const MPoly& c) {
  if (lambda.size() != degree_) throw DomainError("partition size does not match degree");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymElem& SymElem::operator+=(const SymElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  if (degree_ != o.degree_) throw DomainError("adding symmetric functions of different degrees");
  SymElem rhs = convert(o, basis_);
  for (const auto& [lam, c] : rhs.coeffs_) add(lam, c);
  return *this;
}

SymElem& SymElem::operator-=(const SymElem& o) { return *this += MPoly(-1) * o; }

SymElem operator*(const MPoly& c, const SymElem& f) {
  SymElem out(f.degree_, f.basis_);
  if (c.is_zero()) return out;
  for (const auto& [lam, v] : f.coeffs_) out.add(lam, c * v);
  return out;
}

SymElem operator*(const SymElem& a, const SymElem& b) {
  Basis work = multiplicative(a.basis_) ? a.basis_ : Basis::h;
  SymElem x = convert(a, work);
  SymElem y = convert(b, work);
  SymElem out(a.degree_ + b.degree_, work);
  for (const auto& [l1, c1] : x.coeffs_)
    for (const auto& [l2, c2] : y.coeffs_) out.add(l1.concat(l2), c1 * c2);
  return convert(out, a.basis_);
}

bool SymElem::operator==(const SymElem& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (degree_ != o.degree_) return false;
  return coeffs_ == convert(o, basis_).coeffs_;
}

std::string SymElem::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::string c = coeff_str(it->second);
    std::string term = std::string(basis_name(basis_)) + it->first.str();
    if (c == "1") c.clear();
    else if (c == "-1") c = "-";
    else c += "*";
    if (!out.empty()) {
      if (!c.empty() && c[0] == '-') {
        out += " - ";
        c = c.substr(1);
      } else {
        out += " + ";
      }
    }
    out += c + term;
  }
  return out;
}

SymElem convert(const SymElem& f, Basis target) {
  if (f.basis() == target) return f;
  if (f.is_zero()) return SymElem(f.degree(), target);
  auto t = tables(f.degree());
  return from_vec(from_s(to_s(to_vec(f, *t), f.basis(), *t), target, *t), *t, f.degree(), target);
}

SymElem omega(const SymElem& f) {
  SymElem out(f.degree(), f.basis());
  switch (f.basis()) {
    case Basis::h:
    case Basis::e: {
      Basis other = f.basis() == Basis::h ? Basis::e : Basis::h;
      SymElem swapped(f.degree(), other);
      for (const auto& [lam, c] : f.coeffs()) swapped.add(lam, c);
      return convert(swapped, f.basis());
    }
    case Basis::p:
      for (const auto& [lam, c] : f.coeffs())
        out.add(lam, (f.degree() - lam.length()) % 2 == 0 ? c : -c);
      return out;
    case Basis::s:
      for (const auto& [lam, c] : f.coeffs()) out.add(lam.conjugate(), c);
      return out;
    case Basis::m:
      return convert(omega(convert(f, Basis::s)), Basis::m);
  }
  return out;
}

SymElem plethysm_p(int k, const SymElem& g) {
  if (k < 1) throw DomainError("plethysm index must be positive");
  SymElem gp = convert(g, Basis::p);
  SymElem out(k * g.degree(), Basis::p);
  unsigned mask = (1u << static_cast<int>(Var::t)) | (1u << static_cast<int>(Var::r));
  for (const auto& [lam, c] : gp.coeffs()) {
    std::vector<int> parts = lam.parts();
    for (int& v : parts) v *= k;
    out.add(Partition(parts), c.dilate(mask, k));
  }
  return convert(out, g.basis());
}

SymElem plethysm_h(int k, const SymElem& g) {
  if (k < 0) throw DomainError("plethysm index must be nonnegative");
  check_cap("sym_degree", static_cast<long>(k) * g.degree(), Caps::current().sym_degree);
  if (k == 0) return convert(SymElem::one(), g.basis());
  std::vector<SymElem> powers(static_cast<std::size_t>(k + 1));
  SymElem gp = convert(g, Basis::p);
  for (int i = 1; i <= k; ++i) powers[static_cast<std::size_t>(i)] = plethysm_p(i, gp);
  SymElem out(k * g.degree(), Basis::p);
  for (const Partition& mu : partitions(k)) {
    SymElem term = SymElem::basis_element(Basis::p, Partition(), Rational(1, static_cast<unsigned long>(mu.z())));
    for (int part : mu.parts()) term = term * powers[static_cast<std::size_t>(part)];
    out += term;
  }
  return convert(out, g.basis());
}

SymElem p1_derivative(const SymElem& f) {
  if (f.degree() == 0) return SymElem(0, f.basis());
  SymElem fp = convert(f, Basis::p);
  SymElem out(f.degree() - 1, Basis::p);
  for (const auto& [lam, c] : fp.coeffs()) {
    int m1 = lam.multiplicity(1);
    if (m1 == 0) continue;
    std::vector<int> parts = lam.parts();
    parts.pop_back();
    out.add(Partition(parts), c * Rational(m1));
  }
  return convert(out, f.basis());
}

SchurCheck schur_expand_and_check_positive(const SymElem& f) {
  SchurCheck out;
  out.expansion = convert(f, Basis::s);
  out.positive = basis_positive(out.expansion, Basis::s);
  return out;
}

bool basis_positive(const SymElem& f, Basis b) {
  for (const auto& [lam, c] : convert(f, b).coeffs())
    if (!c.nonnegative()) return false;
  return true;
}

MonomialExpansion expand_monomials(const SymElem& f, int m) {
  MonomialExpansion out;
  for (const auto& [lam, c] : convert(f, Basis::m).coeffs()) {
    if (lam.length() > m) continue;
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    std::copy(lam.parts().begin(), lam.parts().end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    do {
      MPoly& slot = out[exps];
      slot += c;
      if (slot.is_zero()) out.erase(exps);
    } while (std::next_permutation(exps.begin(), exps.end()));
  }
  return out;
}

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("character arguments of different sizes");
  std::map<KostkaKey, Integer> memo;
  return character_rec(lambda.parts(), mu.parts(), mu.parts().size(), memo);
}

Integer kostka(const Partition& lambda, const std::vector<int>& content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw DomainError("negative content");
    total += c;
  }
  if (total != lambda.size()) return 0;
  std::map<KostkaKey, Integer> memo;
  return kostka_rec(lambda.parts(), content, content.size(), memo);
}

SymSeries::SymSeries(int order) {
  for (int n = 0; n <= order; ++n) c_.emplace_back(n, Basis::h);
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
  SymSeries out = a;
  for (int n = 0; n <= a.order(); ++n) out[n] += b[n];
  return out;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
  SymSeries out = a;
  for (int n = 0; n <= a.order(); ++n) out[n] -= b[n];
  return out;
}

SymSeries operator*(const SymSeries& a, const SymSeries& b) {
  SymSeries out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

SymSeries operator*(const MPoly& c, const SymSeries& a) {
  SymSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out[n] = c * convert(a[n], Basis::h);
  return out;
}

SymSeries operator/(const SymSeries& a, const SymSeries& b) {
  MPoly lead = convert(b[0], Basis::h).coeff(Partition());
  if (lead.is_zero()) throw DomainError("series division by a series without constant term");
  SymSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    SymElem acc = convert(a[n], Basis::h);
    for (int k = 0; k < n; ++k)
      if (!out[k].is_zero() && !b[n - k].is_zero()) acc -= out[k] * b[n - k];
    out[n] = acc.map_coeffs([&](const MPoly& c) { return exact_divide(c, lead); });
  }
  return out;
}

SymSeries h_series(int order, const MPoly& c) {
  SymSeries out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = SymElem::basis_element(Basis::h, n == 0 ? Partition() : Partition({n}), c.pow(n));
  return out;
}

SymSeries e_series(int order, const MPoly& c) {
  SymSeries out(order);
  for (int n = 0; n <= order; ++n)
    out[n] = convert(SymElem::basis_element(Basis::e, n == 0 ? Partition() : Partition({n}), c.pow(n)),
                     Basis::h);
  return out;
}

}  // namespace eqs

namespace eqs {

Report verify_basis_round_trips(int degree_max) {
  Report rep("basis-round-trips");
  const Basis all[] = {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s};
  for (int n = 0; n <= degree_max; ++n) {
    for (Basis a : all) {
      SymElem f(n, a);
      int i = 0;
      for (const Partition& lam : partitions(n)) f.add(lam, MPoly::var(Var::q, i++));
      std::string witness;
      for (Basis b : all) {
        SymElem back = convert(convert(f, b), a);
        if (!(back == f) && witness.empty())
          witness = std::string(basis_name(a)) + "->" + basis_name(b) + "->" + basis_name(a) + ": " + back.str();
      }
      if (!(omega(omega(f)) == f) && witness.empty()) witness = std::string("omega twice: ") + omega(omega(f)).str();
      rep.add("round-trip", {{"degree", std::to_string(n)}, {"basis", basis_name(a)}}, witness.empty(), witness);
    }
  }
  return rep;
}

}  // namespace eqs
