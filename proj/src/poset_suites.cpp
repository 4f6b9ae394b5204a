#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "eqs/combinatorics.hpp"
#include "eqs/genfun.hpp"
#include "eqs/poset.hpp"
#include "eqs/qseries.hpp"

namespace eqs {

namespace {

MPoly qvar(int e = 1) { return MPoly::var(Var::q, e); }
MPoly pvar(int e = 1) { return MPoly::var(Var::p, e); }
MPoly tvar(int e = 1) { return MPoly::var(Var::t, e); }

std::string str(long long v) { return std::to_string(v); }

Params params(std::initializer_list<std::pair<const char*, std::string>> list) {
  Params out;
  for (const auto& [k, v] : list) out.emplace_back(k, v);
  return out;
}

Integer big(long long v) { return Integer(static_cast<long>(v)); }

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

Integer at_int(const MPoly& f, Var v, long value) {
  MPoly g = f.substitute(v, value);
  if (!g.is_constant()) throw DomainError("evaluation left free variables");
  Rational c = g.constant_term();
  if (c.get_den() != 1) throw DomainError("evaluation is not integral");
  return c.get_num();
}

Integer at_qt(const MPoly& f, long q, long t) { return at_int(f.substitute(Var::q, q), Var::t, t); }

// Π_{i=lo}^{hi} (1 + x^i)
MPoly one_plus_powers(const MPoly& x, int lo, int hi) {
  MPoly out = 1;
  for (int i = lo; i <= hi; ++i) out *= MPoly(1) + x.pow(i);
  return out;
}

void check_int(Report& rep, std::string id, Params ps, const Integer& got, const Integer& want) {
  rep.add(std::move(id), std::move(ps), got == want,
          got == want ? std::string() : "direct " + got.get_str() + ", expected " + want.get_str());
}

// Compares the two Möbius recursions on every bounded poset of at most 200 elements that passes through.
class RecursionCheck {
 public:
  Integer mu(const Poset& p, const std::string& what) {
    Integer m = p.mu_bounded();
    if (p.size() <= 200) {
      ++checked_;
      Integer other = p.mobius_top_down(*p.bottom(), *p.top());
      if (m != other && witness_.empty()) witness_ = what + ": " + m.get_str() + " vs " + other.get_str();
    }
    return m;
  }
  void report(Report& rep) {
    rep.add("mobius-recursions-agree", params({{"posets", str(checked_)}}), witness_.empty(), witness_);
  }

 private:
  long checked_ = 0;
  std::string witness_;
};

std::string poset_name(const std::string& family, int n) { return family + "_" + std::to_string(n); }

// Checks that (x, i) -> (x, r_P(x) + 1 - i) maps I_j(P) isomorphically onto I_{n-j+1}(P).
std::string duality_witness(const Poset& p, int j) {
  const int n = p.length();
  Ideal a = ideal_I_j(p, j);
  Ideal b = ideal_I_j(p, n - j + 1);
  if (a.poset.size() != b.poset.size()) return "sizes differ";
  std::map<std::pair<int, int>, int> index_b;
  for (int x = 0; x < b.poset.size(); ++x) index_b[b.parts[static_cast<std::size_t>(x)]] = x;
  std::vector<int> f(static_cast<std::size_t>(a.poset.size()));
  std::set<int> image;
  for (int x = 0; x < a.poset.size(); ++x) {
    auto [e, i] = a.parts[static_cast<std::size_t>(x)];
    auto it = index_b.find({e, p.rank(e) - p.min_rank() + 1 - i});
    if (it == index_b.end()) return "image of " + a.poset.label(x) + " is missing";
    f[static_cast<std::size_t>(x)] = it->second;
    image.insert(it->second);
  }
  if (static_cast<int>(image.size()) != b.poset.size()) return "map is not injective";
  std::set<std::pair<int, int>> covers_b;
  for (auto c : b.poset.cover_pairs()) covers_b.insert(c);
  auto covers_a = a.poset.cover_pairs();
  if (covers_a.size() != covers_b.size()) return "cover counts differ";
  for (auto [x, y] : covers_a)
    if (!covers_b.count({f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]}))
      return "cover " + a.poset.label(x) + " < " + a.poset.label(y) + " is not preserved";
  return {};
}

}  // namespace

MPoly comaj_exc_sum(int n) {
  return joint_enumerator(n, [](const Permutation& p) {
    StatRecord s = statistics(p);
    return Exponents{s.comaj + s.exc, 0, 0, 0, 0};
  });
}

MPoly comaj_exc_derangement_sum(int n) {
  return joint_enumerator(
      n,
      [](const Permutation& p) {
        StatRecord s = statistics(p);
        return Exponents{s.comaj + s.exc, 0, 0, 0, 0};
      },
      PermFilter::derangements());
}

MPoly ideal_homology_poly(int n, int j) {
  MPoly a = joint_enumerator(n, {{Stat::Comaj, Var::q}, {Stat::Exc, Var::t}});
  return a.coeff_of(Var::t, j - 1).shift(Var::q, j - 1);
}

long long eulerian_number(int n, int j) {
  long long count = 0;
  for_each_perm(n, [&](const Permutation& p) {
    if (statistics(p).exc == j) ++count;
  });
  return count;
}

long long derangement_count(int n) {
  long long count = 0;
  for_each_perm(n, [&](const Permutation& p) {
    if (statistics(p).fix == 0) ++count;
  });
  return count;
}

long long signed_derangement_formula(int n) {
  long long out = 0;
  for (int j = 0; j <= n; ++j) out += sign(j) * binomial(n, j) * (1LL << (n - j)) * factorial(n - j);
  return out;
}

namespace {

// Calls fn(|σ|, bars) for every signed permutation with no unbarred fixed point.
template <class Fn>
void for_each_signed_derangement(int n, Fn fn) {
  for_each_perm(n, [&](const Permutation& p) {
    for (Subset bars = 0; bars < (Subset{1} << n); ++bars) {
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i) ok = p(i) != i || (bars & (Subset{1} << (i - 1)));
      if (ok) fn(p, bars);
    }
  });
}

std::vector<bool> bar_vector(Subset bars, int n) {
  std::vector<bool> out;
  for (int i = 0; i < n; ++i) out.push_back((bars >> i) & 1U);
  return out;
}

}  // namespace

long long signed_derangement_count(int n) {
  long long count = 0;
  for_each_signed_derangement(n, [&](const Permutation&, Subset) { ++count; });
  return count;
}

int bar_index(const std::vector<int>& values, const std::vector<bool>& barred) {
  const int n = static_cast<int>(values.size());
  if (static_cast<int>(barred.size()) != n) throw DomainError("bar index: length mismatch");
  std::vector<bool> arranged;
  for (int i = 0; i < n; ++i)
    if (values[static_cast<std::size_t>(i)] == i + 1) {
      if (!barred[static_cast<std::size_t>(i)]) throw DomainError("bar index: unbarred fixed point");
      arranged.push_back(true);
    }
  for (int i = 0; i < n; ++i)
    if (values[static_cast<std::size_t>(i)] != i + 1) arranged.push_back(barred[static_cast<std::size_t>(i)]);
  int out = 0;
  for (int i = 0; i < n; ++i)
    if (arranged[static_cast<std::size_t>(i)]) out += i + 1;
  return out;
}

MPoly isotropic_whitney(int n, int r) { return gauss(n, r) * one_plus_powers(qvar(), n - r + 1, n); }

MPoly bc_dimension_alternating(int n) {
  MPoly out;
  for (int j = 0; j <= n; ++j)
    out += sign(j) * gauss(n, j) * one_plus_powers(qvar(), j + 1, n) * comaj_exc_sum(n - j);
  return out;
}

MPoly bc_dimension_positive(int n) {
  MPoly out;
  for (int k = 0; k <= n; ++k)
    out += gauss(n, k) * qvar(k * k) * one_plus_powers(qvar(), k + 1, n) * comaj_exc_derangement_sum(n - k);
  return out;
}

MPoly bc_bnd_enumerated(int n) {
  std::map<Exponents, long long> counts;
  for_each_signed_derangement(n, [&](const Permutation& p, Subset bars) {
    StatRecord s = statistics(p);
    ++counts[{s.comaj + s.exc, bar_index(p.one_line(), bar_vector(bars, n)), 0, 0, 0}];
  });
  MPoly out;
  for (const auto& [e, c] : counts) out.add_term(e, Rational(static_cast<long>(c)));
  return out;
}

MPoly bc_bnd_formula(int n) {
  MPoly out;
  for (int k = 0; k <= n; ++k)
    out += gauss(n, k) * qvar(k * (k - 1) / 2) * comaj_exc_derangement_sum(n - k) * pvar(k * (k + 1) / 2) *
           one_plus_powers(pvar(), k + 1, n);
  return out;
}

Report verify_poset_basics(int n_max) {
  Report rep("poset-basics");
  RecursionCheck rc;
  for (int len = 0; len <= 5; ++len) {
    Integer want = len == 0 ? 1 : len == 1 ? -1 : 0;
    Integer got = rc.mu(chain(len + 1), poset_name("chain", len + 1));
    check_int(rep, "chain-mobius", params({{"length", str(len)}}), got, want);
  }
  for (int n = 0; n <= n_max; ++n) {
    Poset b = boolean_lattice(n);
    Integer got = rc.mu(b, poset_name("B", n));
    check_int(rep, "boolean-mobius", params({{"n", str(n)}}), got, sign(n));
  }
  {
    std::set<std::string> want{"({1},1)", "({2},1)", "({1,2},1)", "({1,2},2)"};
    Poset r = rees_product(minus(boolean_lattice(2)), chain(2));
    std::set<std::string> got;
    for (int x = 0; x < r.size(); ++x) got.insert(r.label(x));
    rep.add("rees-elements", params({{"P", "B_2 minus bottom"}, {"Q", "C_2"}}), got == want);
  }
  {
    Poset b = boolean_lattice(3);
    Poset r = rees_product(b, chain(1));
    bool same = r.size() == b.size() && r.cover_pairs() == b.cover_pairs();
    rep.add("rees-with-one-point", params({{"P", "B_3"}}), same);
  }
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    Poset b = boolean_lattice(n);
    ReesProduct r = rees_product_indexed(minus(b), chain(n));
    auto mx = r.poset.maximal();
    bool ok = static_cast<int>(mx.size()) == n;
    for (int x : mx) ok = ok && r.parts[static_cast<std::size_t>(x)].first + 1 == *b.top() && r.poset.rank(x) == n - 1;
    bool ranks = true;
    Poset bm = minus(b);
    for (int x = 0; x < r.poset.size(); ++x) ranks = ranks && r.poset.rank(x) == bm.rank(r.parts[static_cast<std::size_t>(x)].first);
    rep.add("rees-maximal-elements", params({{"n", str(n)}}), ok);
    rep.add("rees-rank-function", params({{"n", str(n)}}), ranks);
  }
  for (int seed = 1; seed <= 5; ++seed) {
    Poset p = random_bounded_poset(static_cast<std::uint64_t>(seed), 3, 3);
    ReesProduct r = rees_product_indexed(p, tree(2, 3));
    bool ranks = true;
    for (int x = 0; x < r.poset.size(); ++x) ranks = ranks && r.poset.rank(x) == p.rank(r.parts[static_cast<std::size_t>(x)].first);
    rep.add("rees-rank-function-random", params({{"seed", str(seed)}}), ranks);
  }
  auto whitney_check = [&](const std::string& id, Params ps, const std::vector<long long>& got,
                           const std::vector<long long>& want) {
    std::string w;
    if (got != want) {
      w = "got";
      for (long long v : got) w += " " + str(v);
    }
    rep.add(id, std::move(ps), got == want, w);
  };
  whitney_check("subspace-whitney", params({{"q", "2"}, {"n", "4"}}), subspace_lattice(2, 4).whitney(), {1, 15, 35, 15, 1});
  for (auto [q, nmax] : {std::pair{2, 5}, std::pair{3, 3}}) {
    for (int n = 0; n <= nmax; ++n) {
      std::vector<long long> want;
      for (int k = 0; k <= n; ++k) want.push_back(at_int(gauss(n, k), Var::q, q).get_si());
      Poset l = subspace_lattice(q, n);
      whitney_check("subspace-whitney", params({{"q", str(q)}, {"n", str(n)}}), l.whitney(), want);
      if (l.size() <= 200) {
        Integer got = rc.mu(l, poset_name("subspaces", n));
        Integer want_mu = sign(n) * at_int(qvar(n * (n - 1) / 2), Var::q, q);
        check_int(rep, "subspace-mobius", params({{"q", str(q)}, {"n", str(n)}}), got, want_mu);
      }
    }
  }
  for (int n = 0; n <= 4; ++n) {
    std::vector<long long> want;
    for (int r = 0; r <= n; ++r) want.push_back((1LL << r) * binomial(n, r));
    whitney_check("crosspolytope-faces", params({{"n", str(n)}}), crosspolytope(n).whitney(), want);
  }
  for (int t = 1; t <= 3; ++t) {
    std::vector<long long> want;
    long long level = 1;
    for (int d = 0; d <= 3; ++d, level *= t) want.push_back(level);
    whitney_check("tree-levels", params({{"t", str(t)}, {"n", "3"}}), tree(t, 3).whitney(), want);
  }
  for (int seed = 1; seed <= 10; ++seed) {
    Poset p = random_bounded_poset(static_cast<std::uint64_t>(seed), 4, 3);
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x)
      for (int y = 0; y < p.size() && ok; ++y)
        if (p.leq(x, y)) ok = p.mobius(x, y) == p.mobius_top_down(x, y);
    rep.add("mobius-all-intervals", params({{"seed", str(seed)}}), ok);
  }
  rc.report(rep);
  return rep;
}

Report verify_rees_chain_mobius(int n_max) {
  Report rep("rees-chain-mobius");
  rep.note = "dimensions are reported as |mu| of the bounded extension, relying on Cohen-Macaulayness";
  RecursionCheck rc;
  for (int n = 1; n <= n_max; ++n) {
    Poset b = boolean_lattice(n);
    for (int j = 1; j <= n; ++j) {
      Integer mu = rc.mu(hat(ideal_I_j(b, j).poset), "I_j(B_n)");
      Integer a = big(eulerian_number(n, j - 1));
      auto ps = params({{"n", str(n)}, {"j", str(j)}});
      check_int(rep, "ideal-mobius", ps, mu, sign(n) * a);
      check_int(rep, "ideal-dimension", ps, abs(mu), a);
      std::string w = duality_witness(b, j);
      rep.add("ideal-duality", ps, w.empty(), w);
    }
    Integer mu = rc.mu(hat(rees_product(minus(b), chain(n))), "B_n minus * C_n");
    Integer d = big(derangement_count(n));
    auto ps = params({{"n", str(n)}});
    check_int(rep, "rees-chain-mobius", ps, mu, sign(n - 1) * d);
    Integer simplicial = 0;
    for (int r = 0; r <= n; ++r) simplicial += big(sign(r - 1) * binomial(n, r) * factorial(r));
    check_int(rep, "simplicial-formula", ps, mu, simplicial);
  }
  if (n_max >= 5) {
    long long d5 = derangement_count(5);
    rep.add("derangements-5", {}, d5 == 44, "d_5 = " + str(d5));
  }
  rc.report(rep);
  return rep;
}

Report verify_q_rees_chain_mobius(int q, int n_max, int poly_n_max) {
  Report rep("q-rees-chain-mobius");
  rep.note = "dimensions are reported as |mu| of the bounded extension, relying on Cohen-Macaulayness";
  RecursionCheck rc;
  for (int n = 1; n <= n_max; ++n) {
    Poset b = subspace_lattice(q, n);
    for (int j = 1; j <= n; ++j) {
      Integer mu = rc.mu(hat(ideal_I_j(b, j).poset), "I_j(B_n(q))");
      Integer want = at_int(ideal_homology_poly(n, j), Var::q, q);
      auto ps = params({{"q", str(q)}, {"n", str(n)}, {"j", str(j)}});
      check_int(rep, "q-ideal-dimension", ps, abs(mu), want);
      check_int(rep, "q-ideal-mobius", ps, mu, sign(n) * want);
    }
    Integer mu = rc.mu(hat(rees_product(minus(b), chain(n))), "B_n(q) minus * C_n");
    Integer d = at_int(comaj_exc_derangement_sum(n), Var::q, q);
    auto ps = params({{"q", str(q)}, {"n", str(n)}});
    check_int(rep, "q-derangement-dimension", ps, abs(mu), d);
    check_int(rep, "q-rees-chain-mobius", ps, mu, sign(n - 1) * d);
    auto w = b.whitney();
    Integer simplicial = 0;
    for (int r = 0; r <= n; ++r)
      simplicial += sign(r - 1) * big(w[static_cast<std::size_t>(r)]) * at_int(comaj_exc_sum(r), Var::q, q);
    check_int(rep, "q-simplicial-formula", ps, mu, simplicial);
  }
  for (int n = 0; n <= poly_n_max; ++n) {
    MPoly alt;
    for (int m = 0; m <= n; ++m) alt += sign(n - m) * gauss(n, m) * comaj_exc_sum(m);
    check_poly(rep, "q-derangement-sum", params({{"n", str(n)}}), comaj_exc_derangement_sum(n), alt);
    MPoly sum_j;
    for (int j = 1; j <= n; ++j) sum_j += ideal_homology_poly(n, j);
    check_poly(rep, "ideal-polys-sum", params({{"n", str(n)}}), sum_j, n == 0 ? MPoly(0) : comaj_exc_sum(n));
  }
  rc.report(rep);
  return rep;
}

Report verify_tree_theorems(int n_max, int t_max, int q_n_max) {
  Report rep("tree-theorems");
  rep.note = "dimensions are reported as |mu| of the bounded extension, relying on Cohen-Macaulayness";
  RecursionCheck rc;
  auto mu_formula = [](int n) {
    if (n == 0) return MPoly(-1);
    MPoly a = joint_enumerator(n, [](const Permutation& p) {
      StatRecord s = statistics(p);
      return Exponents{s.comaj + s.exc, 0, s.exc, 0, 0};
    });
    return sign(n - 1) * tvar() * a;
  };
  std::map<std::pair<int, int>, std::map<int, Integer>> direct;  // (q, t) -> n -> μ, q = 1 for B_n
  for (int n = 0; n <= n_max; ++n) {
    Poset b = boolean_lattice(n);
    MPoly f = mu_formula(n);
    for (int t = 1; t <= t_max; ++t) {
      Integer mu = rc.mu(plus(rees_product(b, tree(t, n))), "B_n * T");
      direct[{1, t}][n] = mu;
      Integer want = at_qt(f, 1, t);
      auto ps = params({{"n", str(n)}, {"t", str(t)}});
      check_int(rep, "boolean-tree-mobius", ps, mu, want);
      if (n >= 1) {
        Integer tan = t * at_int(joint_enumerator(n, {{Stat::Exc, Var::t}}), Var::t, t);
        check_int(rep, "boolean-tree-dimension", ps, abs(mu), tan);
        if (t == 1) check_int(rep, "chain-factorial", ps, abs(mu), big(factorial(n)));
      }
    }
  }
  for (int n = 0; n <= q_n_max; ++n) {
    Poset b = subspace_lattice(2, n);
    MPoly f = mu_formula(n);
    for (int t = 1; t <= t_max; ++t) {
      Integer mu = rc.mu(plus(rees_product(b, tree(t, n))), "B_n(2) * T");
      direct[{2, t}][n] = mu;
      Integer want = at_qt(f, 2, t);
      check_int(rep, "subspace-tree-mobius", params({{"q", "2"}, {"n", str(n)}, {"t", str(t)}}), mu, want);
    }
  }
  for (const auto& [key, values] : direct) {
    auto [q, t] = key;
    for (const auto& [n, unused] : values) {
      Integer sum = 1;
      for (int k = 0; k <= n; ++k) {
        Integer w = at_int(gauss(n, k), Var::q, q);
        sum += w * (k + 1 == 1 ? Integer(1) : at_int(q_int(tvar(), k + 1), Var::t, t)) * values.at(n - k);
      }
      rep.add("uniform-recurrence-direct", params({{"q", str(q)}, {"n", str(n)}, {"t", str(t)}}), sum == 0,
              "1 + sum = " + sum.get_str());
    }
  }
  std::vector<MPoly> mus;
  for (int n = 0; n <= std::max(6, n_max); ++n) mus.push_back(mu_formula(n));
  for (int n = 0; n < static_cast<int>(mus.size()); ++n) {
    MPoly sum;
    for (int k = 0; k <= n; ++k) sum += gauss(n, k) * q_int(tvar(), k + 1) * mus[static_cast<std::size_t>(n - k)];
    check_poly(rep, "uniform-recurrence-formula", params({{"n", str(n)}}), sum, -1);
  }
  rc.report(rep);
  return rep;
}

Report verify_tree_lemma(int n_max, int q_n_max, int random_count, std::uint64_t seed) {
  Report rep("tree-lemma");
  rep.note = "random posets: seed " + std::to_string(seed);
  RecursionCheck rc;
  std::vector<std::pair<std::string, Poset>> family;
  for (int n = 1; n <= n_max; ++n) family.emplace_back(poset_name("B", n), boolean_lattice(n));
  for (int n = 1; n <= q_n_max; ++n) family.emplace_back(poset_name("B(2)", n), subspace_lattice(2, n));
  for (int n = 1; n <= 4; ++n) family.emplace_back(poset_name("chain", n + 1), chain(n + 1));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_count; ++i) {
    std::uint64_t s = rng();
    int len = 2 + static_cast<int>(s % 3);
    family.emplace_back("random_" + std::to_string(i + 1), random_bounded_poset(s, len, 3));
  }
  for (const auto& [name, p] : family) {
    const int n = p.length();
    std::vector<Integer> mus;
    for (int j = 1; j <= n; ++j) mus.push_back(rc.mu(hat(ideal_I_j(p, j).poset), name + " ideal"));
    for (int t = 1; t <= 3; ++t) {
      Integer lhs = 0;
      Integer tp = 1;
      for (int j = 1; j <= n; ++j) {
        tp *= t;
        lhs += mus[static_cast<std::size_t>(j - 1)] * tp;
      }
      Integer rhs = -rc.mu(plus(rees_product(dual(p), tree(t, n))), name + " dual * T");
      rep.add("tree-lemma", params({{"poset", name}, {"size", str(p.size())}, {"t", str(t)}}), lhs == rhs,
              "lhs " + lhs.get_str() + ", rhs " + rhs.get_str());
    }
    for (int j = 1; j <= n; ++j) {
      std::string w = duality_witness(p, j);
      rep.add("ideal-duality", params({{"poset", name}, {"j", str(j)}}), w.empty(), w);
    }
  }
  rc.report(rep);
  return rep;
}

Report verify_type_bc(int n_max, int direct_n_max, int poly_n_max, int bnd_n_max) {
  Report rep("type-bc");
  rep.note = "dimensions are reported as |mu| of the bounded extension, relying on Cohen-Macaulayness";
  RecursionCheck rc;
  for (int n = 0; n <= n_max; ++n) {
    long long f = signed_derangement_formula(n);
    long long c = signed_derangement_count(n);
    rep.add("signed-derangements", params({{"n", str(n)}}), f == c, "formula " + str(f) + ", count " + str(c));
  }
  for (int n = 1; n <= direct_n_max; ++n) {
    Integer mu = rc.mu(hat(rees_product(minus(crosspolytope(n)), chain(n))), "crosspolytope rees");
    Integer want = 0;
    for (int r = 0; r <= n; ++r) want += big(sign(r - 1) * (1LL << r) * binomial(n, r) * factorial(r));
    auto ps = params({{"n", str(n)}});
    check_int(rep, "crosspolytope-mobius", ps, mu, want);
    Integer d = big(signed_derangement_count(n));
    check_int(rep, "crosspolytope-dimension", ps, abs(mu), d);
  }
  {
    const int n = 2, q = 2;
    Poset iso = isotropic_lattice(q, n);
    auto w = iso.whitney();
    std::vector<long long> want;
    for (int r = 0; r <= n; ++r) want.push_back(at_int(isotropic_whitney(n, r), Var::q, q).get_si());
    bool maxdim = true;
    for (int x : iso.maximal()) maxdim = maxdim && iso.rank(x) == n;
    auto ps = params({{"q", str(q)}, {"n", str(n)}});
    rep.add("isotropic-whitney", ps, w == want && want == std::vector<long long>{1, 15, 15});
    rep.add("isotropic-maximal-dimension", ps, maxdim);
    Integer mu = rc.mu(hat(rees_product(minus(iso), chain(n))), "isotropic rees");
    Integer dim = at_int(bc_dimension_positive(n), Var::q, q);
    check_int(rep, "isotropic-dimension", ps, abs(mu), dim);
    Integer simplicial = 0;
    for (int r = 0; r <= n; ++r)
      simplicial += sign(r - 1) * big(w[static_cast<std::size_t>(r)]) * at_int(comaj_exc_sum(r), Var::q, q);
    check_int(rep, "isotropic-q-simplicial-formula", ps, mu, simplicial);
  }
  for (int n = 0; n <= poly_n_max; ++n) {
    MPoly pos = bc_dimension_positive(n);
    check_poly(rep, "bc-dimension-identity", params({{"n", str(n)}}), bc_dimension_alternating(n), pos);
    rep.add("bc-dimension-nonnegative", params({{"n", str(n)}}), pos.nonnegative() && pos.integral());
  }
  {
    int b = bar_index({3, 2, 5, 4, 6, 1, 7}, {true, true, false, true, true, false, true});
    rep.add("bar-index-example", {}, b == 16, "bnd = " + str(b));
  }
  for (int n = 0; n <= bnd_n_max; ++n) {
    MPoly e = bc_bnd_enumerated(n);
    check_poly(rep, "bnd-joint-distribution", params({{"n", str(n)}}), e, bc_bnd_formula(n));
    check_poly(rep, "bnd-dimension", params({{"n", str(n)}}), e.substitute(Var::p, qvar()), bc_dimension_positive(n));
  }
  rc.report(rep);
  return rep;
}

}  // namespace eqs
