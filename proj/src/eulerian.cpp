#include "eqs/eulerian.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "eqs/bijections.hpp"
#include "eqs/genfun.hpp"
#include "eqs/qseries.hpp"
#include "eqs/unimodal.hpp"

namespace eqs {

namespace {

using Cell = std::pair<Partition, int>;  // (cycle type, excedances)

// Fundamental-basis multiplicities of every (cycle type, exc) class of S_n.
const std::map<Cell, std::map<Subset, long>>& q_data(int n) {
  static std::mutex mu;
  static std::map<int, std::map<Cell, std::map<Subset, long>>> cache;
  check_cap("perm_n", n, Caps::current().perm_n);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<Cell, std::map<Subset, long>> data;
  for_each_perm(n, [&](const Permutation& p) {
    StatRecord s = statistics(p);
    ++data[{cycle_type(p), s.exc}][s.Exd];
  });
  return cache.emplace(n, std::move(data)).first->second;
}

MPoly tvar(int e = 1) { return MPoly::var(Var::t, e); }
MPoly rvar(int e = 1) { return MPoly::var(Var::r, e); }
MPoly pvar(int e = 1) { return MPoly::var(Var::p, e); }
MPoly qvar(int e = 1) { return MPoly::var(Var::q, e); }
// [k]_t
MPoly tint(int k) { return q_int(tvar(), k); }

template <class Weight>
QSymElem collect(int n, Weight weight) {
  QSymElem out(n, QBasis::F);
  for (const auto& [cell, subsets] : q_data(n)) {
    MPoly w = weight(cell.first, cell.second);
    if (w.is_zero()) continue;
    for (const auto& [s, count] : subsets) out.add(s, w * Rational(count));
  }
  return out;
}

SymElem to_h(const QSymElem& f) { return convert(to_sym(f), Basis::h); }

Params params(std::initializer_list<std::pair<const char*, std::string>> list) {
  Params out;
  for (const auto& [k, v] : list) out.emplace_back(k, v);
  return out;
}

std::string str(int v) { return std::to_string(v); }

std::string sym_diff(const SymElem& lhs, const SymElem& rhs) {
  if (lhs == rhs) return {};
  SymElem a = convert(lhs, Basis::h), b = convert(rhs, Basis::h);
  SymElem d = a - b;
  if (d.is_zero()) return {};
  const Partition& lam = d.coeffs().rbegin()->first;
  return "h" + lam.str() + " coefficient: lhs " + a.coeff(lam).str() + ", rhs " + b.coeff(lam).str();
}

ReportItem& check_sym(Report& rep, std::string id, Params p, const SymElem& lhs, const SymElem& rhs) {
  std::string w = sym_diff(lhs, rhs);
  return rep.add(std::move(id), std::move(p), w.empty(), w);
}

std::string exps_str(const std::vector<int>& e) {
  std::string out = "x^(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

std::string expansion_diff(const MonomialExpansion& a, const MonomialExpansion& b) {
  auto at = [](const MonomialExpansion& e, const std::vector<int>& k) {
    auto it = e.find(k);
    return it == e.end() ? MPoly() : it->second;
  };
  for (const auto* side : {&a, &b})
    for (const auto& [k, v] : *side) {
      (void)v;
      MPoly x = at(a, k), y = at(b, k);
      if (!(x == y)) return exps_str(k) + ": lhs " + x.str() + ", rhs " + y.str();
    }
  return {};
}

ReportItem& check_expansion(Report& rep, std::string id, Params p, const MonomialExpansion& lhs,
                            const MonomialExpansion& rhs) {
  std::string w = expansion_diff(lhs, rhs);
  return rep.add(std::move(id), std::move(p), w.empty(), w);
}

void add_monomial(MonomialExpansion& e, const std::vector<int>& k, const MPoly& c) {
  MPoly& slot = e[k];
  slot += c;
  if (slot.is_zero()) e.erase(k);
}

std::vector<int> letter_weight(const Word& w, int m) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (const Letter& l : w) ++e[static_cast<std::size_t>(l.value - 1)];
  return e;
}

std::map<int, MonomialExpansion> ornament_expansions(const Partition& lambda, int m) {
  std::map<int, MonomialExpansion> out;
  for_each_ornament(lambda, m, [&](const Ornament& r) { add_monomial(out[r.bars()], r.weight(m), 1); });
  return out;
}

// Coefficient of t^j in every coefficient.
SymElem t_part(const SymElem& f, int j) {
  return f.map_coeffs([j](const MPoly& c) { return c.coeff_of(Var::t, j); });
}

MonomialExpansion t_part(const MonomialExpansion& e, int j) {
  MonomialExpansion out;
  for (const auto& [k, c] : e) {
    MPoly v = c.coeff_of(Var::t, j);
    if (!v.is_zero()) out.emplace(k, v);
  }
  return out;
}

SymElem h_elem(int k, const MPoly& c = 1) {
  return SymElem::basis_element(Basis::h, k == 0 ? Partition() : Partition({k}), c);
}

SymElem e_elem(int k, const MPoly& c = 1) {
  return convert(SymElem::basis_element(Basis::e, k == 0 ? Partition() : Partition({k}), c), Basis::h);
}

// Expansion in x_1..x_m of every series coefficient of order n.
MonomialExpansion expand(const SymElem& f, int m) { return expand_monomials(f, m); }

// Permutations of a fixed cycle type, counted by maj (q), des (p) and exc (t).
MPoly type_enumerator(const Partition& lambda, const StatVars& vars) {
  return joint_enumerator(lambda.size(), vars, PermFilter::cycle_type(lambda));
}

std::vector<int> partition_exps(const Partition& lam, int m) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < lam.length(); ++i) e[static_cast<std::size_t>(i)] = lam.part(i);
  return e;
}

}  // namespace

QSymElem eulerian_q(int n, int j) {
  return collect(n, [j](const Partition&, int e) { return MPoly(e == j ? 1 : 0); });
}

QSymElem eulerian_q(int n, int j, int k) {
  return collect(n, [j, k](const Partition& lam, int e) { return MPoly(e == j && lam.multiplicity(1) == k ? 1 : 0); });
}

QSymElem eulerian_q(const Partition& lambda, int j) {
  return collect(lambda.size(), [&](const Partition& lam, int e) { return MPoly(e == j && lam == lambda ? 1 : 0); });
}

SymElem eulerian_sym(int n, int j) { return to_h(eulerian_q(n, j)); }
SymElem eulerian_sym(int n, int j, int k) { return to_h(eulerian_q(n, j, k)); }
SymElem eulerian_sym(const Partition& lambda, int j) { return to_h(eulerian_q(lambda, j)); }

SymElem eulerian_t(int n) {
  return to_h(collect(n, [](const Partition&, int e) { return tvar(e); }));
}

SymElem eulerian_tr(int n) {
  return to_h(collect(n, [](const Partition& lam, int e) { return tvar(e) * rvar(lam.multiplicity(1)); }));
}

SymElem eulerian_t(const Partition& lambda) {
  return to_h(collect(lambda.size(), [&](const Partition& lam, int e) { return lam == lambda ? tvar(e) : MPoly(); }));
}

MonomialExpansion q_via_ornaments(const Partition& lambda, int j, int m) {
  auto all = ornament_expansions(lambda, m);
  auto it = all.find(j);
  return it == all.end() ? MonomialExpansion() : it->second;
}

std::map<std::pair<Partition, int>, MonomialExpansion> banner_expansions(int n, int m) {
  std::map<std::pair<Partition, int>, MonomialExpansion> out;
  for_each_banner(n, m, [&](const Word& b) { add_monomial(out[{lyndon_type(b), bars(b)}], letter_weight(b, m), 1); });
  return out;
}

MonomialExpansion q_via_banners(const Partition& lambda, int j, int m) {
  auto all = banner_expansions(lambda.size(), m);
  auto it = all.find({lambda, j});
  return it == all.end() ? MonomialExpansion() : it->second;
}

SymElem q_closed_form(int n) {
  check_cap("sym_degree", n, Caps::current().sym_degree);
  SymElem out(n, Basis::h);
  for (int k0 = 0; k0 <= n; ++k0) {
    for (const auto& comp : compositions(n - k0)) {
      if (std::any_of(comp.begin(), comp.end(), [](int k) { return k < 2; })) continue;
      std::vector<int> parts = comp;
      if (k0 > 0) parts.push_back(k0);
      MPoly c = rvar(k0);
      for (int k : comp) c *= tvar() * tint(k - 1);
      out.add(Partition(parts), c);
    }
  }
  return out;
}

SymElem q_recurrence(int n) {
  check_cap("sym_degree", n, Caps::current().sym_degree);
  std::vector<SymElem> q(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    SymElem cur = h_elem(m, rvar(m));
    for (int k = 0; k + 2 <= m; ++k) cur += q[static_cast<std::size_t>(k)] * h_elem(m - k, tvar() * tint(m - k - 1));
    q[static_cast<std::size_t>(m)] = cur;
  }
  return q[static_cast<std::size_t>(n)];
}

SymSeries symmetric_genfun_quotient(int order) {
  SymSeries num = (MPoly(1) - tvar()) * h_series(order, rvar());
  SymSeries den = h_series(order, tvar()) - tvar() * h_series(order, 1);
  return num / den;
}

SymSeries symmetric_genfun_geometric(int order) {
  SymSeries den(order);
  den[0] = SymElem::one();
  for (int n = 2; n <= order; ++n) den[n] = h_elem(n, -(tvar() * tint(n - 1)));
  return h_series(order, rvar()) / den;
}

MPoly eulerian_polynomial(int n) { return joint_enumerator(n, {{Stat::Exc, Var::t}}); }

SymElem q_power_sum(int n) {
  check_cap("sym_degree", n, Caps::current().sym_degree);
  SymElem out(n, Basis::p);
  std::map<int, MPoly> eul;
  for (const Partition& lam : partitions(n)) {
    int l = lam.length();
    if (!eul.count(l)) eul[l] = eulerian_polynomial(l);
    MPoly c = eul[l] * Rational(1, static_cast<unsigned long>(lam.z()));
    for (int part : lam.parts()) c *= tint(part);
    out.add(lam, c);
  }
  return out;
}

MPoly erase_noncoprime(const MPoly& f, int m) {
  MPoly out;
  for (const auto& [e, c] : f.terms())
    if (std::gcd(m, e[static_cast<int>(Var::t)]) == 1) out.add_term(e, c);
  return out;
}

MPoly conjectured_character(const Partition& lambda) {
  MPoly f = tvar() * eulerian_polynomial(lambda.length() - 1);
  for (int part : lambda.parts()) f *= tint(part);
  return erase_noncoprime(f, lambda.gcd());
}

Integer character_value(const SymElem& f, const Partition& lambda) {
  MPoly c = convert(f, Basis::p).coeff(lambda);
  if (!c.is_constant()) throw DomainError("character value is not a number");
  Rational v = c.constant_term() * Rational(static_cast<long>(lambda.z()));
  if (v.get_den() != 1) throw DomainError("non-integral character value at class " + lambda.str());
  return v.get_num();
}

CharTable char_table(int n) {
  if (n < 1) throw DomainError("character tables need n >= 1");
  CharTable out;
  out.n = n;
  out.rows = partitions(n);
  out.values.assign(out.rows.size(), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    SymElem fp = convert(eulerian_sym(Partition({n}), j), Basis::p);
    for (std::size_t r = 0; r < out.rows.size(); ++r)
      out.values[r][static_cast<std::size_t>(j)] = character_value(fp, out.rows[r]);
  }
  return out;
}

MPoly stable_spec_cleared(const SymElem& f) {
  MPoly out;
  for (const auto& [lam, c] : convert(f, Basis::h).coeffs()) out += c * q_multinomial(f.degree(), lam.parts());
  return out;
}

SymElem sym_from_expansion(const MonomialExpansion& e, int n) {
  SymElem out(n, Basis::m);
  if (e.empty()) return convert(out, Basis::h);
  int m = static_cast<int>(e.begin()->first.size());
  if (m < n) throw DomainError("too few variables to recover a symmetric function");
  for (const Partition& lam : partitions(n)) {
    auto it = e.find(partition_exps(lam, m));
    if (it != e.end()) out.add(lam, it->second);
  }
  return convert(out, Basis::h);
}

Report verify_symmetric_genfun(int order) {
  Report rep("symmetric-genfun");
  SymSeries a = symmetric_genfun_quotient(order);
  SymSeries b = symmetric_genfun_geometric(order);
  for (int n = 0; n <= order; ++n) {
    SymElem lhs = eulerian_tr(n);
    check_sym(rep, "quotient-form", params({{"n", str(n)}}), lhs, a[n]);
    check_sym(rep, "geometric-form", params({{"n", str(n)}}), lhs, b[n]);
  }
  for (int n = 0; n <= order; ++n) check_sym(rep, "forms-agree", params({{"n", str(n)}}), a[n], b[n]);
  return rep;
}

Report verify_stable_specialization(int n_max) {
  Report rep("stable-specialization");
  SymSeries rhs = symmetric_genfun_quotient(n_max);
  for (int n = 0; n <= n_max; ++n) {
    MPoly a = joint_enumerator(n, {{Stat::Maj, Var::q}, {Stat::Exc, Var::t}, {Stat::Fix, Var::r}});
    MPoly spec = stable_spec_cleared(rhs[n]).substitute(Var::t, tvar() * qvar());
    check_poly(rep, "maj-exc-fix", params({{"n", str(n)}}), spec, a);
    check_poly(rep, "maj-exc", params({{"n", str(n)}}), spec.substitute(Var::r, 1L), a.substitute(Var::r, 1L));
    for (int j = 0; j < std::max(n, 1); ++j)
      for (int k = 0; k <= n; ++k) {
        MPoly lhs = qvar(j) * stable_spec_numerator(eulerian_q(n, j, k));
        check_poly(rep, "fixed-point-class", params({{"n", str(n)}, {"j", str(j)}, {"k", str(k)}}), lhs,
                   a.coeff_of(Var::t, j).coeff_of(Var::r, k));
      }
    for (const Partition& lam : partitions(n)) {
      MPoly al = type_enumerator(lam, {{Stat::Maj, Var::q}, {Stat::Exc, Var::t}});
      for (int j = 0; j < std::max(n, 1); ++j)
        check_poly(rep, "cycle-type-class", params({{"lambda", lam.str()}, {"j", str(j)}}),
                   qvar(j) * stable_spec_numerator(eulerian_q(lam, j)), al.coeff_of(Var::t, j));
    }
  }
  return rep;
}

Report verify_nonstable_specialization(int n_max) {
  Report rep("nonstable-specialization");
  const StatVars vars = {{Stat::Maj, Var::q}, {Stat::Des, Var::p}, {Stat::Exc, Var::t}};
  for (int n = 1; n <= n_max; ++n) {
    int N = n;
    MPoly poch = pochhammer(pvar(), n + 1);
    for (int k = 0; k <= n; ++k) {
      for (const Partition& lam : partitions(n - k)) {
        if (lam.multiplicity(1) > 0) continue;
        MPoly lhs_all = type_enumerator(lam.with_ones(k), vars);
        for (int j = 0; j < n; ++j) {
          MPoly sum;
          for (int i = 0; i <= k; ++i) {
            QSymElem f = eulerian_q(lam.with_ones(k - i), j);
            for (int m = 0; m <= N; ++m) sum += pvar(m) * qvar(i * m + j) * principal_spec(f, m);
          }
          check_poly(rep, "cycle-type", params({{"lambda", lam.with_ones(k).str()}, {"j", str(j)}}),
                     lhs_all.coeff_of(Var::t, j), (poch * sum).truncate(Var::p, N));
        }
      }
      MPoly a = joint_enumerator(n, {{Stat::Maj, Var::q}, {Stat::Des, Var::p}, {Stat::Exc, Var::t}, {Stat::Fix, Var::r}});
      for (int j = 0; j < n; ++j) {
        MPoly sum;
        for (int i = 0; i <= k; ++i) {
          QSymElem f = eulerian_q(n - i, j, k - i);
          for (int m = 0; m <= N; ++m) sum += pvar(m) * qvar(i * m + j) * principal_spec(f, m);
        }
        check_poly(rep, "fixed-points", params({{"n", str(n)}, {"j", str(j)}, {"k", str(k)}}),
                   a.coeff_of(Var::t, j).coeff_of(Var::r, k), (poch * sum).truncate(Var::p, N));
      }
    }
  }
  return rep;
}

Report verify_three_way(int n_max) {
  Report rep("three-way");
  for (int n = 1; n <= n_max; ++n) {
    auto banners = banner_expansions(n, n);
    for (const Partition& lam : partitions(n)) {
      auto orn = ornament_expansions(lam, n);
      for (int j = 0; j < n; ++j) {
        MonomialExpansion d = expand_monomials(eulerian_q(lam, j), n);
        Params p = params({{"lambda", lam.str()}, {"j", str(j)}});
        check_expansion(rep, "definition-vs-ornaments", p, d, orn[j]);
        check_expansion(rep, "definition-vs-banners", p, d, banners[{lam, j}]);
      }
    }
  }
  return rep;
}

Report verify_closed_form(int n_max) {
  Report rep("closed-form");
  std::vector<SymElem> q0;
  for (int n = 0; n <= n_max; ++n) {
    SymElem def = eulerian_tr(n);
    Params p = params({{"n", str(n)}});
    check_sym(rep, "composition-sum", p, q_closed_form(n), def);
    check_sym(rep, "recurrence", p, q_recurrence(n), def);
    q0.push_back(def.map_coeffs([](const MPoly& c) { return c.substitute(Var::r, 0L); }));
    for (int k = 0; k <= n; ++k) {
      SymElem coeff_k = def.map_coeffs([k](const MPoly& c) { return c.coeff_of(Var::r, k); });
      check_sym(rep, "fixed-point-factor", params({{"n", str(n)}, {"k", str(k)}}), coeff_k,
                h_elem(k) * q0[static_cast<std::size_t>(n - k)]);
    }
  }
  return rep;
}

Report verify_power_sum(int n_max) {
  Report rep("power-sum");
  for (int n = 1; n <= n_max; ++n) check_sym(rep, "p-expansion", params({{"n", str(n)}}), q_power_sum(n), eulerian_t(n));
  return rep;
}

Report verify_character_conjecture(int n_max) {
  Report rep("character-conjecture");
  rep.note = "conjectural; checked for 2 <= n <= " + str(n_max);
  for (int n = 2; n <= n_max; ++n) {
    std::vector<SymElem> fp;
    for (int j = 0; j < n; ++j) fp.push_back(convert(eulerian_sym(Partition({n}), j), Basis::p));
    for (const Partition& lam : partitions(n)) {
      MPoly g = conjectured_character(lam);
      std::string witness;
      for (int j = 0; j < n && witness.empty(); ++j) {
        Integer chi = character_value(fp[static_cast<std::size_t>(j)], lam);
        MPoly gj = g.coeff_of(Var::t, j);
        if (!(gj == MPoly(Rational(chi))))
          witness = "j=" + str(j) + ": character " + chi.get_str() + ", conjectured " + gj.str();
      }
      auto& item = rep.add("class", params({{"n", str(n)}, {"lambda", lam.str()}}), witness.empty(), witness);
      item.status = witness.empty() ? Status::Verified : Status::Counterexample;
    }
  }
  return rep;
}

Report verify_dimensions(int n_max) {
  Report rep("dimensions");
  for (int n = 1; n <= n_max; ++n) {
    MPoly desc = n >= 2 ? joint_enumerator(n - 1, {{Stat::Des, Var::t}}) : MPoly();
    for (const Partition& lam : partitions(n)) {
      MPoly counts = type_enumerator(lam, {{Stat::Exc, Var::t}});
      for (int j = 0; j < n; ++j) {
        MPoly dim = convert(eulerian_sym(lam, j), Basis::m).coeff(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
        Params p = params({{"lambda", lam.str()}, {"j", str(j)}});
        check_poly(rep, "permutation-count", p, dim, counts.coeff_of(Var::t, j));
        if (lam.length() == 1 && n >= 2 && j >= 1) check_poly(rep, "eulerian-number", p, dim, desc.coeff_of(Var::t, j - 1));
      }
    }
  }
  return rep;
}

Report verify_plethysm_formula(int n_max) {
  Report rep("plethysm-formula");
  std::map<int, SymElem> single;
  for (int n = 1; n <= n_max; ++n) {
    for (const Partition& lam : partitions(n)) {
      SymElem prod = SymElem::one();
      for (int i = 1; i <= n; ++i) {
        int mi = lam.multiplicity(i);
        if (mi == 0) continue;
        if (!single.count(i)) single[i] = eulerian_t(Partition({i}));
        prod = prod * plethysm_h(mi, single[i]);
      }
      check_sym(rep, "cycle-type", params({{"lambda", lam.str()}}), eulerian_t(lam), prod);
    }
  }
  return rep;
}

Report verify_cycle_product(int n_max) {
  Report rep("cycle-product");
  std::map<Partition, MPoly> a;
  auto enumerator = [&](const Partition& lam) -> const MPoly& {
    auto it = a.find(lam);
    if (it == a.end()) it = a.emplace(lam, type_enumerator(lam, {{Stat::Maj, Var::q}, {Stat::Exc, Var::t}})).first;
    return it->second;
  };
  for (int m = 1; m < n_max; ++m)
    for (int n = 1; m + n <= n_max; ++n)
      for (const Partition& lam : partitions(m))
        for (const Partition& mu : partitions(n)) {
          bool common = false;
          for (int part : lam.parts()) common = common || mu.multiplicity(part) > 0;
          if (common) continue;
          check_poly(rep, "disjoint-parts", params({{"lambda", lam.str()}, {"mu", mu.str()}}),
                     enumerator(lam.concat(mu)), gauss(m + n, m) * enumerator(lam) * enumerator(mu));
        }
  return rep;
}

Report verify_involutions(int n_max) {
  Report rep("involutions");
  SymElem h2 = h_elem(2);
  for (int j = 0; 2 * j <= n_max; ++j)
    for (int k = 0; 2 * j + k <= n_max; ++k) {
      std::vector<int> parts(static_cast<std::size_t>(j), 2);
      Partition lam = Partition(parts).with_ones(k);
      if (lam.size() == 0) continue;
      check_sym(rep, "two-cycles", params({{"j", str(j)}, {"k", str(k)}}), eulerian_sym(lam, j),
                plethysm_h(j, h2) * h_elem(k));
    }
  for (int n = 1; n <= n_max; ++n) {
    int m = n;
    // Π_i (1 - x_i z)^{-1} Π_{i<=j} (1 - x_i x_j t z^2)^{-1}, truncated at degree n.
    MonomialExpansion prod;
    prod[std::vector<int>(static_cast<std::size_t>(m), 0)] = 1;
    auto multiply = [&](const std::vector<int>& step, const MPoly& c) {
      int deg = std::accumulate(step.begin(), step.end(), 0);
      MonomialExpansion out;
      for (const auto& [e, v] : prod) {
        std::vector<int> cur = e;
        MPoly w = v;
        int total = std::accumulate(e.begin(), e.end(), 0);
        while (total <= n) {
          add_monomial(out, cur, w);
          for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += step[i];
          total += deg;
          w *= c;
        }
      }
      prod = std::move(out);
    };
    for (int i = 0; i < m; ++i) {
      std::vector<int> step(static_cast<std::size_t>(m), 0);
      step[static_cast<std::size_t>(i)] = 1;
      multiply(step, 1);
    }
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        std::vector<int> step(static_cast<std::size_t>(m), 0);
        ++step[static_cast<std::size_t>(i)];
        ++step[static_cast<std::size_t>(j)];
        multiply(step, tvar());
      }
    MonomialExpansion rhs;
    for (const auto& [e, v] : prod)
      if (std::accumulate(e.begin(), e.end(), 0) == n) rhs.emplace(e, v);
    SymElem lhs(n, Basis::h);
    for (int a = 0; 2 * a <= n; ++a) {
      std::vector<int> parts(static_cast<std::size_t>(a), 2);
      lhs += eulerian_t(Partition(parts).with_ones(n - 2 * a));
    }
    check_expansion(rep, "product-formula", params({{"n", str(n)}}), expand(lhs, m), rhs);
  }
  return rep;
}

Report verify_multiset_derangements(int n_max, int spec_n_max) {
  Report rep("multiset-derangements");
  SymSeries den(n_max);
  den[0] = SymElem::one();
  for (int i = 2; i <= n_max; ++i) den[i] = e_elem(i, -(tvar() * tint(i - 1)));
  SymSeries one(n_max);
  one[0] = SymElem::one();
  SymSeries series = one / den;
  for (int n = 1; n <= n_max; ++n) {
    int m = n;
    std::map<int, MonomialExpansion> direct;
    std::vector<int> top(static_cast<std::size_t>(n), 1);
    // Weakly increasing top rows.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int lo) {
      if (i == top.size()) {
        std::vector<int> bottom = top;
        std::vector<int> w(static_cast<std::size_t>(m), 0);
        for (int v : top) ++w[static_cast<std::size_t>(v - 1)];
        do {
          bool ok = true;
          int exc = 0;
          for (std::size_t c = 0; c < top.size(); ++c) {
            if (bottom[c] == top[c]) ok = false;
            if (top[c] < bottom[c]) ++exc;
          }
          if (ok) add_monomial(direct[exc], w, 1);
        } while (std::next_permutation(bottom.begin(), bottom.end()));
        return;
      }
      for (int v = lo; v <= m; ++v) {
        top[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 1);
    MonomialExpansion series_n = expand(series[n], m);
    for (int j = 0; j < n; ++j) {
      Params p = params({{"n", str(n)}, {"j", str(j)}});
      check_expansion(rep, "series", p, direct[j], t_part(series_n, j));
      check_expansion(rep, "omega-of-q", p, direct[j], expand(omega(eulerian_sym(n, j, 0)), m));
      std::vector<std::pair<int, Subset>> terms;
      for_each_perm(n, [&](const Permutation& s) {
        StatRecord st = statistics(s);
        if (st.fix == 0 && st.exc == j) terms.emplace_back(n, full_subset(n) & ~st.Exd);
      });
      QSymElem f = terms.empty() ? QSymElem(n, QBasis::F) : from_fundamental(terms);
      check_expansion(rep, "complemented-fundamentals", p, direct[j], expand_monomials(f, m));
    }
  }
  for (int n = 1; n <= spec_n_max; ++n) {
    int N = n + 1;
    for (int j = 0; j < n; ++j) {
      std::vector<std::pair<int, Subset>> terms;
      MPoly stable, nonstable;
      for_each_perm(n, [&](const Permutation& s) {
        StatRecord st = statistics(s);
        if (st.fix != 0 || st.exc != j) return;
        terms.emplace_back(n, full_subset(n) & ~st.Exd);
        stable += qvar(st.comaj + j);
        nonstable += qvar(st.comaj + j) * pvar(n - st.des + 1);
      });
      QSymElem f = terms.empty() ? QSymElem(n, QBasis::F) : from_fundamental(terms);
      Params p = params({{"n", str(n)}, {"j", str(j)}});
      check_poly(rep, "stable-specialization", p, stable_spec_numerator(f), stable);
      check_poly(rep, "principal-specialization", p, (spec_p_series(f, N) * pochhammer(pvar(), n + 1)).truncate(Var::p, N),
                 nonstable.truncate(Var::p, N));
    }
  }
  return rep;
}

Report verify_no_repeat_words(int n_max) {
  Report rep("no-repeat-words");
  SymSeries num = (MPoly(1) - tvar()) * e_series(n_max, 1);
  SymSeries series = num / (e_series(n_max, tvar()) - tvar() * e_series(n_max, 1));
  for (int n = 1; n <= n_max; ++n) {
    int m = n;
    std::map<int, MonomialExpansion> words;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == w.size()) {
        int des = 0;
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (std::size_t a = 0; a < w.size(); ++a) {
          ++e[static_cast<std::size_t>(w[a] - 1)];
          if (a + 1 < w.size() && w[a] > w[a + 1]) ++des;
        }
        add_monomial(words[des], e, 1);
        return;
      }
      for (int v = 1; v <= m; ++v) {
        if (i > 0 && w[i - 1] == v) continue;
        w[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    auto banners = banner_expansions(n, m);
    MonomialExpansion series_n = expand(series[n], m);
    for (int j = 0; j < n; ++j) {
      Params p = params({{"n", str(n)}, {"j", str(j)}});
      check_expansion(rep, "series", p, words[j], t_part(series_n, j));
      check_expansion(rep, "omega-of-q", p, words[j], expand(omega(eulerian_sym(n, j)), m));
      MonomialExpansion bsum;
      for (const auto& [key, e] : banners)
        if (key.second == j)
          for (const auto& [k, c] : e) add_monomial(bsum, k, c);
      check_expansion(rep, "banner-reciprocity", p, words[j], expand(omega(sym_from_expansion(bsum, n)), m));
    }
  }
  return rep;
}

Report verify_double_descent_words(int n_max) {
  Report rep("double-descent-words");
  for (int n = 1; n <= n_max; ++n) {
    int m = n;
    MonomialExpansion lhs;
    std::vector<int> w(static_cast<std::size_t>(n));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == w.size()) {
        int des = 0;
        for (std::size_t a = 0; a + 1 < w.size(); ++a) {
          if (w[a] > w[a + 1]) ++des;
          if (a + 2 < w.size() && w[a] > w[a + 1] && w[a + 1] > w[a + 2]) return;
        }
        if (n >= 2 && w[w.size() - 2] > w[w.size() - 1]) return;
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (int v : w) ++e[static_cast<std::size_t>(v - 1)];
        add_monomial(lhs, e, tvar(des) * (MPoly(1) + tvar()).pow(n - 1 - 2 * des));
        return;
      }
      for (int v = 1; v <= m; ++v) {
        w[i] = v;
        rec(i + 1);
      }
    };
    rec(0);
    check_expansion(rep, "words", params({{"n", str(n)}}), lhs, expand(eulerian_t(n), m));
  }
  return rep;
}

Report verify_h_positivity(int n_max) {
  Report rep("h-positivity");
  auto h_nonneg = [](const SymElem& d) { return basis_positive(d, Basis::h); };
  for (int n = 1; n <= n_max; ++n) {
    SymElem all = eulerian_tr(n);
    for (int k = 0; k <= n; ++k) {
      std::map<int, SymElem> coeffs;
      for (int j = 0; j < n; ++j) {
        SymElem f = t_part(all.map_coeffs([k](const MPoly& c) { return c.coeff_of(Var::r, k); }), j);
        Params p = params({{"n", str(n)}, {"j", str(j)}, {"k", str(k)}});
        rep.add("fixed-points-h-positive", p, basis_positive(f, Basis::h), f.str());
        if (!f.is_zero()) coeffs[j] = f;
      }
      if (coeffs.empty()) continue;
      auto chk = check_symmetric_unimodal(coeffs, h_nonneg);
      bool ok = chk.symmetric && chk.unimodal && chk.twice_center == n - k;
      rep.add("fixed-points-symmetric-unimodal", params({{"n", str(n)}, {"k", str(k)}}), ok,
              ok ? "" : chk.witness + " (twice center " + str(chk.twice_center) + ")");
    }
    std::map<int, SymElem> coeffs;
    SymElem qt = all.map_coeffs([](const MPoly& c) { return c.substitute(Var::r, 1L); });
    for (int j = 0; j < n; ++j) {
      SymElem f = t_part(qt, j);
      rep.add("h-positive", params({{"n", str(n)}, {"j", str(j)}}), basis_positive(f, Basis::h), f.str());
      if (!f.is_zero()) coeffs[j] = f;
    }
    auto chk = check_symmetric_unimodal(coeffs, h_nonneg);
    bool ok = chk.symmetric && chk.unimodal && chk.twice_center == n - 1;
    rep.add("symmetric-unimodal", params({{"n", str(n)}}), ok, ok ? "" : chk.witness);
  }
  return rep;
}

Report verify_cycle_type_symmetry(int n_max) {
  Report rep("cycle-type-symmetry");
  for (int n = 1; n <= n_max; ++n) {
    for (const Partition& lam : partitions(n)) {
      int k = lam.multiplicity(1);
      for (int j = 0; j < n; ++j) {
        QSymElem f = eulerian_q(lam, j);
        Params p = params({{"lambda", lam.str()}, {"j", str(j)}});
        rep.add("symmetric", p, is_symmetric(f));
        if (j <= n - k) {
          bool eq = f == eulerian_q(lam, n - k - j);
          rep.add("excedance-reflection", p, eq, eq ? "" : "differs from j=" + str(n - k - j));
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      bool eq = eulerian_q(n, j) == eulerian_q(n, n - 1 - j);
      rep.add("total-reflection", params({{"n", str(n)}, {"j", str(j)}}), eq);
    }
  }
  return rep;
}

Report verify_schur_positivity(int all_max, int single_max) {
  Report rep("schur-positivity");
  rep.note = "conjectural; all cycle types through n=" + str(all_max) + ", single cycles through n=" + str(single_max);
  auto s_nonneg = [](const SymElem& d) { return basis_positive(d, Basis::s); };
  auto run = [&](const Partition& lam) {
    int n = lam.size(), k = lam.multiplicity(1);
    SymElem all = convert(eulerian_t(lam), Basis::s);
    std::map<int, SymElem> coeffs;
    for (int j = 0; j < n; ++j) {
      SymElem f = t_part(all, j);
      bool pos = basis_positive(f, Basis::s);
      auto& item = rep.add("positive", params({{"lambda", lam.str()}, {"j", str(j)}}), pos, pos ? "" : f.str());
      item.status = pos ? Status::Verified : Status::Counterexample;
      if (!f.is_zero()) coeffs[j] = f;
    }
    if (coeffs.empty()) return;
    auto chk = check_symmetric_unimodal(coeffs, s_nonneg);
    bool ok = chk.symmetric && chk.unimodal && chk.twice_center == n - k;
    auto& item = rep.add("unimodal", params({{"lambda", lam.str()}}), ok, ok ? "" : chk.witness);
    item.status = ok ? Status::Verified : Status::Counterexample;
  };
  for (int n = 1; n <= all_max; ++n)
    for (const Partition& lam : partitions(n)) run(lam);
  for (int n = all_max + 1; n <= single_max; ++n) run(Partition({n}));
  return rep;
}

Report verify_restriction(int n_max) {
  Report rep("restriction");
  for (int n = 2; n <= n_max; ++n)
    for (int j = 0; j < n; ++j) {
      SymElem rhs = j >= 1 ? eulerian_sym(n - 1, j - 1) : SymElem(n - 1, Basis::h);
      check_sym(rep, "single-cycle", params({{"n", str(n)}, {"j", str(j)}}), p1_derivative(eulerian_sym(Partition({n}), j)),
                rhs);
    }
  return rep;
}

Report verify_derangement_homology(int n_max) {
  Report rep("derangement-homology");
  SymSeries den(n_max);
  den[0] = SymElem::one();
  for (int i = 2; i <= n_max; ++i) den[i] = e_elem(i, -(i - 1));
  SymSeries one(n_max);
  one[0] = SymElem::one();
  SymSeries series = one / den;
  std::vector<SymElem> total;
  for (int m = 0; m <= n_max; ++m)
    total.push_back(omega(eulerian_t(m).map_coeffs([](const MPoly& c) { return c.substitute(Var::t, 1L); })));
  for (int n = 1; n <= n_max; ++n) {
    SymElem alt(n, Basis::h);
    for (int m = 0; m <= n; ++m) alt += MPoly((n - m) % 2 == 0 ? 1 : -1) * (total[static_cast<std::size_t>(m)] * h_elem(n - m));
    SymElem fixed_free(n, Basis::h);
    for (int j = 0; j < n; ++j) fixed_free += omega(eulerian_sym(n, j, 0));
    Params p = params({{"n", str(n)}});
    check_sym(rep, "alternating-sum", p, alt, fixed_free);
    check_sym(rep, "series", p, series[n], fixed_free);
  }
  return rep;
}

}  // namespace eqs
