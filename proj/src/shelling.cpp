#include "eqs/shelling.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "eqs/bijections.hpp"
#include "eqs/genfun.hpp"
#include "eqs/poset.hpp"
#include "eqs/qseries.hpp"

namespace eqs {

namespace {

Params params(std::initializer_list<std::pair<const char*, std::string>> list) {
  Params out;
  for (const auto& [k, v] : list) out.emplace_back(k, v);
  return out;
}

std::string str(long long v) { return std::to_string(v); }

std::string perm_str(const std::vector<int>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i > 0 && s.size() > 9 ? " " : "") + std::to_string(s[i]);
  return out;
}

// Bars forced by ascents, and positions that may not carry a bar (position 1 and each ascent top).
std::pair<Subset, Subset> forced_bars(const std::vector<int>& w) {
  Subset forced = 0;
  Subset forbidden = w.empty() ? 0 : 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) {
      forced |= Subset{1} << i;
      forbidden |= Subset{1} << (i + 1);
    }
  return {forced, forbidden};
}

template <class Fn>
void for_each_bar_mask(const std::vector<int>& w, int bars, Fn fn) {
  auto [forced, forbidden] = forced_bars(w);
  if (forced & forbidden) return;
  const int n = static_cast<int>(w.size());
  Subset all = n == 0 ? 0 : static_cast<Subset>((std::uint64_t{1} << n) - 1);
  Subset free = all & ~forced & ~forbidden;
  int need = bars - std::popcount(forced);
  if (need < 0 || need > std::popcount(free)) return;
  for (Subset s = free;; s = (s - 1) & free) {
    if (std::popcount(s) == need) fn(forced | s);
    if (s == 0) break;
  }
}

Word make_word(const std::vector<int>& values, Subset mask) {
  Word w;
  for (std::size_t i = 0; i < values.size(); ++i) w.push_back({values[i], ((mask >> i) & 1U) != 0});
  return w;
}

std::vector<int> phi_rec(const Word& w) {
  if (w.empty()) return {};
  auto it = std::min_element(w.begin(), w.end(), [](const Letter& a, const Letter& b) { return a.value < b.value; });
  const int m = it->value;
  Word alpha(w.begin(), it);
  Word beta(it + 1, w.end());
  std::vector<int> out;
  if (!it->barred) {
    out.push_back(m);
    auto rest = phi_rec(alpha);
    out.insert(out.end(), rest.begin(), rest.end());
  } else if (beta.empty()) {
    out = phi_rec(alpha);
    out.push_back(m);
  } else {
    out = phi_rec(beta);
    out.push_back(m);
    auto rest = phi_rec(alpha);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

Word psi_rec(const std::vector<int>& s) {
  if (s.empty()) return {};
  auto it = std::min_element(s.begin(), s.end());
  const int m = *it;
  std::vector<int> gamma(s.begin(), it);
  std::vector<int> delta(it + 1, s.end());
  Word out;
  if (gamma.empty()) {
    out = psi_rec(delta);
    out.push_back({m, false});
  } else if (delta.empty()) {
    out = psi_rec(gamma);
    out.push_back({m, true});
  } else {
    out = psi_rec(delta);
    out.push_back({m, true});
    auto rest = psi_rec(gamma);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

void check_distinct_positive(const std::vector<int>& v) {
  std::set<int> seen;
  for (int x : v)
    if (x < 1 || !seen.insert(x).second) throw DomainError("barred permutation: values must be distinct positive integers");
}

}  // namespace

bool in_barred_set(const Word& w) {
  if (w.empty()) return true;
  if (w.front().barred) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].value < w[i + 1].value && (!w[i].barred || w[i + 1].barred)) return false;
  return true;
}

std::vector<Word> barred_set(int n, int j) {
  check_cap("barred_n", n, 8);
  std::vector<Word> out;
  for_each_perm(n, [&](const Permutation& p) {
    for_each_bar_mask(p.one_line(), j, [&](Subset mask) { out.push_back(make_word(p.one_line(), mask)); });
  });
  return out;
}

long long barred_set_size(int n, int j) {
  check_cap("barred_n", n, 8);
  long long count = 0;
  for_each_perm(n, [&](const Permutation& p) { for_each_bar_mask(p.one_line(), j, [&](Subset) { ++count; }); });
  return count;
}

long long ascent_free_chains(int n, int j) {
  check_cap("chain_n", n, 7);
  if (j < 1 || j > n) throw DomainError("ascent-free chains: j out of range");
  long long count = 0;
  for_each_perm(n, [&](const Permutation& p) {
    const auto& s = p.one_line();
    // d_1 = 0; the remaining n-1 entries carry j-1 ones.
    for (Subset tail = 0; tail < (Subset{1} << (n - 1)); ++tail) {
      if (std::popcount(tail) != j - 1) continue;
      Subset d = tail << 1;
      bool ascent = false;
      for (int i = 0; i + 1 < n && !ascent; ++i) {
        int di = static_cast<int>((d >> i) & 1U);
        int dn = static_cast<int>((d >> (i + 1)) & 1U);
        ascent = s[static_cast<std::size_t>(i)] < s[static_cast<std::size_t>(i + 1)] && di <= dn;
      }
      if (!ascent) ++count;
    }
  });
  return count;
}

long long ascent_free_chains_in_poset(int n, int j) {
  check_cap("chain_n", n, 6);
  Ideal ideal = ideal_I_j(boolean_lattice(n), j);
  Poset h = hat(ideal.poset);
  const int top = h.size() - 1;
  // (subset mask, chain index) of each element of the completed ideal.
  std::vector<std::pair<int, int>> parts{{0, 1}};
  parts.insert(parts.end(), ideal.parts.begin(), ideal.parts.end());
  parts.emplace_back((1 << n) - 1, j);
  long long count = 0;
  std::vector<std::pair<int, int>> labels;
  auto walk = [&](auto&& self, int x) -> void {
    if (x == top) {
      bool ascent = false;
      for (std::size_t i = 0; i + 1 < labels.size() && !ascent; ++i)
        ascent = labels[i].first < labels[i + 1].first && labels[i].second <= labels[i + 1].second;
      if (!ascent) ++count;
      return;
    }
    for (int y : h.up(x)) {
      auto [sx, ix] = parts[static_cast<std::size_t>(x)];
      auto [sy, iy] = parts[static_cast<std::size_t>(y)];
      labels.emplace_back(std::countr_zero(static_cast<unsigned>(sx ^ sy)) + 1, iy - ix);
      self(self, y);
      labels.pop_back();
    }
  };
  walk(walk, 0);
  return count;
}

std::vector<int> phi_map(const Word& w) {
  check_distinct_positive(values(w));
  if (!in_barred_set(w)) throw DomainError("phi: word violates the barred-set conditions");
  return phi_rec(w);
}

Word psi_map(const std::vector<int>& sigma) {
  check_distinct_positive(sigma);
  return psi_rec(sigma);
}

int descents(const std::vector<int>& s) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) d += s[i] > s[i + 1];
  return d;
}

int inversions(const std::vector<int>& s) {
  int v = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) v += s[i] > s[j];
  return v;
}

int admissible_inversions(const std::vector<int>& s) {
  const std::size_t n = s.size();
  int count = 0;
  for (std::size_t j = 1; j < n; ++j) {
    bool rises = j + 1 < n && s[j] < s[j + 1];
    // smallest value strictly between position i and j, scanning i downward
    int between = 1 << 30;
    for (std::size_t i = j; i-- > 0;) {
      if (s[i] > s[j] && (rises || between < s[j])) ++count;
      between = std::min(between, s[i]);
    }
  }
  return count;
}

int aid(const std::vector<int>& s) { return admissible_inversions(s) + descents(s); }

MPoly aid_des_enumerator(int n) {
  return joint_enumerator(n, [](const Permutation& p) {
    return Exponents{aid(p.one_line()), 0, descents(p.one_line()), 0, 0};
  });
}

MPoly aid_by_position_of_one(int n, int pos) {
  std::map<int, long> counts;
  for_each_perm(n, [&](const Permutation& p) {
    if (p(pos) == 1) ++counts[aid(p.one_line())];
  });
  MPoly out;
  for (auto [e, c] : counts) out += MPoly::var(Var::q, e) * Rational(c);
  return out;
}

MPoly aid_position_formula(int n, int pos) {
  auto F = [](int k) { return aid_des_enumerator(k).substitute(Var::t, 1L); };
  if (pos == 1) return F(n - 1);
  if (pos == n) return MPoly::var(Var::q) * F(n - 1);
  return gauss(n - 1, pos - 1) * MPoly::var(Var::q, pos) * F(pos - 1) * F(n - pos);
}

Report verify_ascent_free_chains(int n_max, int poset_n_max) {
  Report rep("ascent-free-chains");
  rep.note = "homology dimensions are |mu| of the completed ideal, relying on Cohen-Macaulayness";
  for (int n = 1; n <= n_max; ++n) {
    for (int j = 1; j <= n; ++j) {
      long long chains = ascent_free_chains(n, j);
      long long barred = barred_set_size(n, j - 1);
      long long a = eulerian_number(n, j - 1);
      auto ps = params({{"n", str(n)}, {"j", str(j)}});
      std::string counts = "chains " + str(chains) + ", barred " + str(barred) + ", eulerian " + str(a);
      rep.add("chains-barred-eulerian", ps, chains == barred && barred == a, chains == barred && barred == a ? "" : counts);
      if (n <= 6) {
        Integer mu = abs(ideal_mobius(boolean_lattice(n), j));
        rep.add("chains-mobius", ps, mu == static_cast<long>(chains), "mobius " + mu.get_str() + ", " + counts);
      }
      if (n <= poset_n_max) {
        long long walked = ascent_free_chains_in_poset(n, j);
        rep.add("chains-in-poset", ps, walked == chains, "walked " + str(walked) + ", " + counts);
      }
    }
    auto b0 = barred_set(n, 0);
    std::vector<int> dec(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) dec[static_cast<std::size_t>(i)] = n - i;
    bool single = b0.size() == 1 && values(b0.front()) == dec && bars(b0.front()) == 0;
    rep.add("barless-member-decreasing", params({{"n", str(n)}}), single);
  }
  for (auto& it : rep.items)
    if (it.status == Status::Pass) it.witness.clear();
  return rep;
}

Report verify_barred_bijection(int n_max, int random_count, std::uint64_t seed) {
  Report rep("barred-bijection");
  rep.note = "random value sets: seed " + std::to_string(seed);
  for (int n = 0; n <= n_max; ++n) {
    const long long c2 = static_cast<long long>(n) * (n - 1) / 2;
    for (int j = 0; j <= std::max(0, n - 1); ++j) {
      auto words = barred_set(n, j);
      std::set<std::vector<int>> images;
      std::string bad_des, bad_round, bad_inv;
      for (const auto& w : words) {
        auto s = phi_map(w);
        images.insert(s);
        if (descents(s) != j && bad_des.empty()) bad_des = word_str(w) + " -> " + perm_str(s);
        if (!(psi_map(s) == w) && bad_round.empty()) bad_round = word_str(w);
        if (inversions(values(w)) != c2 - admissible_inversions(s) && bad_inv.empty()) bad_inv = word_str(w);
      }
      long long des_count = 0;
      for_each_perm(n, [&](const Permutation& p) { des_count += descents(p.one_line()) == j; });
      auto ps = params({{"n", str(n)}, {"bars", str(j)}});
      bool bij = static_cast<long long>(images.size()) == des_count && images.size() == words.size();
      rep.add("phi-bijective", ps, bij, bij ? "" : str(static_cast<long long>(images.size())) + " images, " + str(des_count) + " targets");
      rep.add("phi-descents-equal-bars", ps, bad_des.empty(), bad_des);
      rep.add("psi-after-phi", ps, bad_round.empty(), bad_round);
      rep.add("inversions-to-admissible", ps, bad_inv.empty(), bad_inv);
    }
    std::string bad;
    for_each_perm(n, [&](const Permutation& p) {
      Word w = psi_map(p.one_line());
      if (bad.empty() && (!in_barred_set(w) || phi_map(w) != p.one_line())) bad = p.str();
    });
    rep.add("phi-after-psi", params({{"n", str(n)}}), bad.empty(), bad);
  }
  std::mt19937_64 rng(seed);
  for (int k = 0; k < random_count; ++k) {
    int size = std::uniform_int_distribution<int>(0, 6)(rng);
    std::vector<int> pool(30);
    for (int i = 0; i < 30; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> x(pool.begin(), pool.begin() + size);
    Word w = psi_map(x);
    auto back = phi_map(w);
    bool ok = in_barred_set(w) && back == x && descents(x) == bars(w) &&
              inversions(values(w)) == size * (size - 1) / 2 - admissible_inversions(x);
    // a random bar pattern on a random arrangement, kept when it lies in the barred set
    Subset mask = static_cast<Subset>(rng()) & ((Subset{1} << size) - 1);
    Word v = make_word(x, mask);
    if (in_barred_set(v)) ok = ok && psi_map(phi_map(v)) == v && descents(phi_map(v)) == bars(v);
    rep.add("random-value-set", params({{"values", perm_str(x)}}), ok);
  }
  return rep;
}

Report verify_equidist(int n_max) {
  Report rep("aid-equidistribution");
  for (int n = 0; n <= n_max; ++n) {
    auto pn = params({{"n", str(n)}});
    MPoly aid_des = aid_des_enumerator(n);
    MPoly maj_exc = joint_enumerator(n, {{Stat::Maj, Var::q}, {Stat::Exc, Var::t}});
    check_poly(rep, "aid-des-equals-maj-exc", pn, aid_des, maj_exc);
    check_poly(rep, "aid-mahonian", pn, aid_des.substitute(Var::t, 1L), q_fact(n));
    for (int pos = 1; pos <= n && n >= 2; ++pos)
      check_poly(rep, "aid-position-of-one", params({{"n", str(n)}, {"position", str(pos)}}),
                 aid_by_position_of_one(n, pos), aid_position_formula(n, pos));
    if (n == 0) continue;
    std::map<int, MPoly> inv_sums, ai_sums;
    for (int j = 0; j < n; ++j)
      for (const auto& w : barred_set(n, j)) inv_sums[j + 1] += MPoly::var(Var::q, inversions(values(w)));
    const int c2 = n * (n - 1) / 2;
    for_each_perm(n, [&](const Permutation& p) {
      ai_sums[descents(p.one_line()) + 1] += MPoly::var(Var::q, c2 - admissible_inversions(p.one_line()));
    });
    for (int j = 1; j <= n; ++j) {
      auto ps = params({{"n", str(n)}, {"j", str(j)}});
      MPoly excs = ideal_homology_poly(n, j);
      check_poly(rep, "barred-inversions-equal-excedance-form", ps, inv_sums[j], excs);
      check_poly(rep, "admissible-form-equals-excedance-form", ps, ai_sums[j], excs);
      if (n <= 4) {
        Integer mu = abs(ideal_mobius(subspace_lattice(2, n), j));
        Rational at2 = inv_sums[j].substitute(Var::q, 2L).constant_term();
        rep.add("barred-inversions-at-q2-equal-mobius", ps, Rational(mu) == at2,
                Rational(mu) == at2 ? "" : "mobius " + mu.get_str() + ", sum " + at2.get_str());
      }
    }
  }
  return rep;
}

}  // namespace eqs
