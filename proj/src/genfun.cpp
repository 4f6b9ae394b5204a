#include "eqs/genfun.hpp"

#include <functional>

#include "eqs/qseries.hpp"
#include "eqs/unimodal.hpp"

namespace eqs {

namespace {

Exponents zero_exponents() { return {0, 0, 0, 0, 0}; }

MPoly from_counts(const std::map<Exponents, long long>& counts) {
  MPoly out;
  for (const auto& [e, c] : counts) out.add_term(e, Rational(static_cast<long>(c)));
  return out;
}

Params np(int n) { return {{"n", std::to_string(n)}}; }

// Σ_{fix=k} q^maj t^exc r^fix over S_n, or with comaj in place of maj.
MPoly maj_exc_fix(int n, bool comaj) {
  return joint_enumerator(n, {{comaj ? Stat::Comaj : Stat::Maj, Var::q}, {Stat::Exc, Var::t}, {Stat::Fix, Var::r}});
}

MPoly maj_exc(int n, bool comaj, const PermFilter& f = PermFilter::all()) {
  return joint_enumerator(n, {{comaj ? Stat::Comaj : Stat::Maj, Var::q}, {Stat::Exc, Var::t}}, f);
}

bool nonneg_poly(const MPoly& p) { return p.nonnegative(); }

void compositions_min2(int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = 2; k <= n; ++k) {
    cur.push_back(k);
    compositions_min2(n - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MPoly joint_enumerator(int n, const StatVars& stats, const PermFilter& filter) {
  return joint_enumerator(
      n,
      [&](const Permutation& p) {
        StatRecord s = statistics(p);
        Exponents e = zero_exponents();
        for (const auto& [st, v] : stats) e[static_cast<int>(v)] += stat_value(s, st);
        return e;
      },
      filter);
}

MPoly joint_enumerator(int n, const std::function<Exponents(const Permutation&)>& weight,
                       const PermFilter& filter) {
  std::map<Exponents, long long> counts;
  for_each_perm(n, [&](const Permutation& p) {
    if (filter.accepts(p)) ++counts[weight(p)];
  });
  return from_counts(counts);
}

std::map<int, MPoly> maj_des_exc_by_fix(int n) {
  std::map<int, std::map<Exponents, long long>> counts;
  for_each_perm(n, [&](const Permutation& p) {
    StatRecord s = statistics(p);
    ++counts[s.fix][{s.maj, s.des, s.exc, 0, 0}];
  });
  std::map<int, MPoly> out;
  for (const auto& [k, c] : counts) out[k] = from_counts(c);
  return out;
}

std::map<int, MPoly> t_coefficients(const MPoly& f) {
  std::map<int, MPoly> out;
  for (const auto& [e, c] : f.terms()) {
    Exponents k = e;
    int d = k[static_cast<int>(Var::t)];
    k[static_cast<int>(Var::t)] = 0;
    out[d].add_term(k, c);
  }
  return out;
}

Report verify_maj_exc_genfun(int order) {
  Report rep("maj-exc-genfun");
  MPoly tq = t_var() * q_var();
  DividedSeries e = exp_q_series(order);
  DividedSeries rhs = ((MPoly(1) - tq) * e) / (e.scaled(tq) - tq * e);
  for (int n = 0; n <= order; ++n) check_poly(rep, "grade", np(n), maj_exc(n, false), rhs[n]);
  return rep;
}

Report verify_fix_genfun(int order) {
  Report rep("fix-genfun");
  MPoly tq = t_var() * q_var();
  DividedSeries e = exp_q_series(order);
  DividedSeries rhs = ((MPoly(1) - tq) * e.scaled(r_var())) / (e.scaled(tq) - tq * e);
  for (int n = 0; n <= order; ++n) check_poly(rep, "maj-grade", np(n), maj_exc_fix(n, false), rhs[n]);

  MPoly tqi = t_var() * MPoly::var(Var::q, -1);
  DividedSeries E = cap_exp_q_series(order);
  DividedSeries rhs_co = ((MPoly(1) - tqi) * E.scaled(r_var())) / (E.scaled(tqi) - tqi * E);
  for (int n = 0; n <= order; ++n)
    check_poly(rep, "comaj-grade", np(n), maj_exc_fix(n, true), rhs_co[n]);
  return rep;
}

Report verify_four_stat_genfun(int z_order, int p_order) {
  Report rep("four-stat-genfun");
  check_cap("series_order", z_order, Caps::current().series_order);
  MPoly q = q_var();
  MPoly t = t_var();
  MPoly p = p_var();

  // Σ_m p^m S_m(z), S_m as an ordinary z-series.
  PolySeries rhs(z_order);
  for (int m = 0; m <= p_order; ++m) {
    PolySeries zq(z_order), ztq(z_order), zr(z_order);
    zq[0] = 1;
    ztq[0] = 1;
    zr[0] = 1;
    auto times_linear = [&](PolySeries& s, const MPoly& a) {
      PolySeries f(z_order);
      f[0] = 1;
      if (z_order >= 1) f[1] = -a;
      s = s * f;
    };
    for (int i = 0; i < m; ++i) {
      times_linear(zq, MPoly::var(Var::q, i));
      times_linear(ztq, t * MPoly::var(Var::q, i + 1));
    }
    for (int i = 0; i <= m; ++i) times_linear(zr, r_var() * MPoly::var(Var::q, i));
    PolySeries num = zq * ztq;
    for (int n = 0; n <= z_order; ++n) num[n] = (MPoly(1) - q * t) * num[n];
    PolySeries den_a = zq;
    for (int n = 0; n <= z_order; ++n) den_a[n] = zq[n] - t * q * ztq[n];
    PolySeries sm = num / (den_a * zr);
    for (int n = 0; n <= z_order; ++n) rhs[n] += MPoly::var(Var::p, m) * sm[n];
  }

  for (int n = 0; n <= z_order; ++n) {
    MPoly a = joint_enumerator(
        n, {{Stat::Maj, Var::q}, {Stat::Des, Var::p}, {Stat::Exc, Var::t}, {Stat::Fix, Var::r}});
    MPoly lhs = a;
    for (int i = 0; i <= n; ++i) {
      MPoly geo;
      for (int k = 0; k <= p_order; ++k) geo += MPoly::var(Var::p, k) * MPoly::var(Var::q, i * k);
      lhs = (lhs * geo).truncate(Var::p, p_order);
    }
    check_poly(rep, "grade", {{"n", std::to_string(n)}, {"p_order", std::to_string(p_order)}}, lhs,
               rhs[n].truncate(Var::p, p_order));
  }
  return rep;
}

Report verify_q_eulerian_formulas(int n_max) {
  Report rep("q-eulerian-formulas");
  MPoly q = q_var();
  MPoly t = t_var();
  MPoly r = r_var();
  MPoly tq = t * q;
  std::vector<MPoly> A(static_cast<std::size_t>(n_max + 1));
  std::vector<MPoly> Aco(static_cast<std::size_t>(n_max + 1));
  std::vector<MPoly> D(static_cast<std::size_t>(n_max + 1));
  std::vector<MPoly> Dco(static_cast<std::size_t>(n_max + 1));
  for (int n = 0; n <= n_max; ++n) {
    A[static_cast<std::size_t>(n)] = maj_exc_fix(n, false);
    Aco[static_cast<std::size_t>(n)] = maj_exc_fix(n, true);
    D[static_cast<std::size_t>(n)] = maj_exc(n, false, PermFilter::derangements());
    Dco[static_cast<std::size_t>(n)] = maj_exc(n, true, PermFilter::derangements());
  }
  auto at = [](const std::vector<MPoly>& v, int i) -> const MPoly& { return v[static_cast<std::size_t>(i)]; };

  for (int n = 0; n <= n_max; ++n) {
    MPoly rec = r.pow(n);
    for (int k = 0; k <= n - 2; ++k) rec += gauss(n, k) * at(A, k) * tq * q_int(tq, n - k - 1);
    check_poly(rep, "fix-recurrence", np(n), at(A, n), rec);

    MPoly closed;
    for (int k0 = 0; k0 <= n; ++k0) {
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions_min2(n - k0, cur, comps);
      for (const auto& ks : comps) {
        std::vector<int> parts{k0};
        parts.insert(parts.end(), ks.begin(), ks.end());
        MPoly term = q_multinomial(n, parts) * r.pow(k0);
        for (int k : ks) term *= tq * q_int(tq, k - 1);
        closed += term;
      }
    }
    check_poly(rep, "fix-closed-form", np(n), at(A, n), closed);

    for (int k = 0; k <= n; ++k) {
      Params pk{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
      check_poly(rep, "fixed-points-maj", pk, at(A, n).coeff_of(Var::r, k), gauss(n, k) * at(D, n - k));
      check_poly(rep, "fixed-points-comaj", pk, at(Aco, n).coeff_of(Var::r, k),
                 MPoly::var(Var::q, k * (k - 1) / 2) * gauss(n, k) * at(Dco, n - k));
    }
    MPoly der;
    MPoly der_co;
    for (int k = 0; k <= n; ++k) {
      Rational sign = k % 2 == 0 ? 1 : -1;
      der += sign * MPoly::var(Var::q, k * (k - 1) / 2) * gauss(n, k) * at(A, n - k).substitute(Var::r, 1);
      der_co += sign * gauss(n, k) * at(Aco, n - k).substitute(Var::r, 1);
    }
    check_poly(rep, "derangements-maj", np(n), at(D, n), der);
    check_poly(rep, "derangements-comaj", np(n), at(Dco, n), der_co);
  }
  return rep;
}

Report verify_q_symmetry(int n_max) {
  Report rep("q-symmetry");
  MPoly tshift = t_var() * MPoly::var(Var::q, -1);
  for (int n = 1; n <= n_max; ++n) {
    std::map<Partition, std::map<Exponents, long long>> counts;
    for_each_perm(n, [&](const Permutation& perm) {
      StatRecord s = statistics(perm);
      ++counts[cycle_type(perm)][{s.maj, s.des, s.exc, 0, 0}];
    });
    std::map<Partition, MPoly> by_type;
    for (const auto& [lam, c] : counts) by_type[lam] = from_counts(c);

    for (const auto& [lam, f] : by_type) {
      int k = lam.multiplicity(1);
      Params pl{{"lambda", lam.str()}};
      auto coeffs = t_coefficients(f);
      for (int j = 0; j <= n - k; ++j) {
        MPoly lhs = coeffs.count(j) ? coeffs[j] : MPoly();
        MPoly mirrored = coeffs.count(n - k - j) ? coeffs[n - k - j] : MPoly();
        MPoly rhs = mirrored.substitute(Var::q, MPoly::var(Var::q, -1))
                        .substitute(Var::p, MPoly::var(Var::q, n) * p_var());
        Params pj = pl;
        pj.emplace_back("j", std::to_string(j));
        check_poly(rep, "des-maj-reflection", pj, lhs, rhs);
      }
      auto sym = check_symmetric_unimodal(t_coefficients(f.substitute(Var::t, tshift)), nonneg_poly);
      rep.add("cycle-type-symmetry", pl, sym.symmetric && sym.twice_center == n - k, sym.witness);
      auto& item = rep.add("cycle-type-unimodality", pl, sym.unimodal, sym.witness);
      if (sym.unimodal) item.status = Status::Verified;
      else item.status = Status::Counterexample;
    }

    auto by_fix = maj_des_exc_by_fix(n);
    MPoly total;
    for (const auto& [k, f] : by_fix) {
      total += f;
      Params pk{{"n", std::to_string(n)}, {"k", std::to_string(k)}};
      auto sym = check_symmetric_unimodal(t_coefficients(f.substitute(Var::t, tshift)), nonneg_poly);
      rep.add("fix-symmetry", pk, sym.symmetric && sym.twice_center == n - k, sym.witness);
      if (k == 0) rep.add("derangement-unimodality", pk, sym.unimodal, sym.witness);
      auto sym1 = check_symmetric_unimodal(
          t_coefficients(f.substitute(Var::p, 1).substitute(Var::t, tshift)), nonneg_poly);
      rep.add("fix-p1-symmetric-unimodal", pk,
              sym1.symmetric && sym1.unimodal && sym1.twice_center == n - k, sym1.witness);
    }
    auto symt = check_symmetric_unimodal(
        t_coefficients(total.substitute(Var::p, 1).substitute(Var::t, tshift)), nonneg_poly);
    rep.add("all-p1-symmetric-unimodal", np(n),
            symt.symmetric && symt.unimodal && symt.twice_center == n - 1, symt.witness);
  }
  return rep;
}

}  // namespace eqs
