#include "eqs/bijections.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace eqs {

namespace {

// Comparison of the infinite periodic readings of a starting at i and b starting at j.
int compare_periodic(const Word& a, std::size_t i, const Word& b, std::size_t j) {
  std::size_t len = a.size() + b.size();
  for (std::size_t t = 0; t < len; ++t) {
    int x = alph_rank(a[(i + t) % a.size()]);
    int y = alph_rank(b[(j + t) % b.size()]);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// Lexicographic order with the alphabet reversed; a proper prefix is smaller.
int compare_reversed(const Word& a, const Word& b) {
  std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = alph_rank(a[i]), y = alph_rank(b[i]);
    if (x != y) return x > y ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

Word rotate(const Word& w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) out.push_back(w[(start + t) % w.size()]);
  return out;
}

bool follows_ok(const Letter& a, const Letter& next) {
  return a.barred ? next.value <= a.value : next.value >= a.value;
}

Word concat(const std::vector<Word>& parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Swaps k and k+1 inside the segment [begin, end) of w, treated as linear.
void swap_segment(Word& w, std::size_t begin, std::size_t end, int k) {
  std::size_t len = end - begin;
  std::vector<std::size_t> switches;
  for (std::size_t x = begin; x + 1 < end; ++x)
    if (w[x].value != w[x + 1].value) switches.push_back(x);
  if (switches.size() % 2 == 0) {
    for (std::size_t x = begin; x < end; ++x) w[x].value = w[x].value == k ? k + 1 : k;
    for (std::size_t x : switches) w[x].barred = !w[x].barred;
    return;
  }
  // Odd: runs m_1, ..., m_{2r} starting with value v0.
  int v0 = w[begin].value;
  int v1 = v0 == k ? k + 1 : k;
  std::vector<int> runs;
  for (std::size_t x = begin; x < end; ++x) {
    if (x == begin || w[x].value != w[x - 1].value) runs.push_back(0);
    ++runs.back();
  }
  std::size_t pos = begin;
  for (std::size_t i = 0; i + 1 < runs.size(); i += 2) {
    for (int c = 0; c < runs[i + 1]; ++c) w[pos++].value = v0;
    for (int c = 0; c < runs[i]; ++c) w[pos++].value = v1;
  }
  (void)len;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < runs.size(); i += 2) {
    std::size_t a = begin + static_cast<std::size_t>(acc + runs[i + 1]) - 1;  // last v0 of the block
    std::size_t b = begin + static_cast<std::size_t>(acc + runs[i]) - 1;
    if (v0 == k) {
      if (w[a].barred) {
        w[a].barred = false;
        w[b].barred = true;
      }
    } else if (!w[a].barred) {
      w[b].barred = false;
      w[a].barred = true;
    }
    acc += runs[i] + runs[i + 1];
  }
}

}  // namespace

int compare_words(const Word& a, const Word& b) {
  std::size_t len = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = alph_rank(a[i]), y = alph_rank(b[i]);
    if (x != y) return x < y ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

int bars(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](const Letter& l) { return l.barred; }));
}

std::vector<int> values(const Word& w) {
  std::vector<int> out;
  for (const Letter& l : w) out.push_back(l.value);
  return out;
}

Word largest_rotation(const Word& w) {
  if (w.empty()) return w;
  std::size_t best = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (compare_periodic(w, i, w, best) > 0) best = i;
  return rotate(w, best);
}

bool is_primitive(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (compare_periodic(w, i, w, 0) == 0) return false;
  return true;
}

bool satisfies_necklace_rule(const Word& w) {
  if (w.empty()) return false;
  if (w.size() == 1) return !w[0].barred;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!follows_ok(w[i], w[(i + 1) % w.size()])) return false;
  return true;
}

std::optional<Necklace> make_necklace(const Word& circular) {
  for (const Letter& l : circular)
    if (l.value < 1) return std::nullopt;
  if (!satisfies_necklace_rule(circular) || !is_primitive(circular)) return std::nullopt;
  return largest_rotation(circular);
}

Ornament::Ornament(const std::vector<Word>& words) {
  for (const Word& w : words) {
    auto n = make_necklace(w);
    if (!n) throw DomainError("not a bicolored necklace: (" + word_str(w) + ")");
    necklaces_.push_back(*n);
  }
  std::sort(necklaces_.begin(), necklaces_.end(),
            [](const Word& a, const Word& b) { return compare_words(a, b) > 0; });
}

Partition Ornament::type() const {
  std::vector<int> parts;
  for (const auto& n : necklaces_) parts.push_back(static_cast<int>(n.size()));
  return Partition(parts);
}

int Ornament::bars() const {
  int total = 0;
  for (const auto& n : necklaces_) total += eqs::bars(n);
  return total;
}

int Ornament::size() const {
  int total = 0;
  for (const auto& n : necklaces_) total += static_cast<int>(n.size());
  return total;
}

std::vector<int> Ornament::weight(int m) const {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (const auto& n : necklaces_)
    for (const Letter& l : n) {
      if (l.value > m) throw DomainError("letter exceeds the number of variables");
      ++e[static_cast<std::size_t>(l.value - 1)];
    }
  return e;
}

std::string Ornament::str() const {
  if (necklaces_.empty()) return "{}";
  std::string out;
  for (const auto& n : necklaces_) out += "(" + word_str(n) + ")";
  return out;
}

bool is_banner(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].value < 1) return false;
    if (i + 1 == w.size()) return !w[i].barred;
    if (!follows_ok(w[i], w[i + 1])) return false;
  }
  return true;
}

std::vector<Word> lyndon_factorization(const Word& w) {
  // Duval's algorithm with the alphabet reversed.
  std::vector<Word> out;
  std::size_t n = w.size(), i = 0;
  auto less = [](const Letter& a, const Letter& b) { return alph_rank(a) > alph_rank(b); };
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && !less(w[j], w[k])) {
      if (less(w[k], w[j])) k = i;
      else ++k;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
      i += j - k;
    }
  }
  return out;
}

Partition lyndon_type(const Word& w) {
  std::vector<int> parts;
  for (const auto& f : lyndon_factorization(w)) parts.push_back(static_cast<int>(f.size()));
  return Partition(parts);
}

std::optional<std::vector<Word>> increasing_factorization(const Word& w) {
  if (w.empty()) return std::nullopt;
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < w.size()) {
    Letter a = w[i];
    std::size_t j = i;
    while (j < w.size() && w[j] == a) ++j;
    std::size_t u = j;
    while (u < w.size() && alph_rank(w[u]) < alph_rank(a)) ++u;
    if (u == j) return std::nullopt;
    out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(u));
    i = u;
  }
  return out;
}

Ornament banner_to_ornament(const Word& banner) {
  if (!is_banner(banner)) throw DomainError("not a banner: " + word_str(banner));
  return Ornament(lyndon_factorization(banner));
}

Word ornament_to_banner(const Ornament& r) {
  std::vector<Word> parts = r.necklaces();
  std::sort(parts.begin(), parts.end(), [](const Word& a, const Word& b) { return compare_reversed(a, b) > 0; });
  return concat(parts);
}

Ornament gr_phi(const Permutation& p, const std::vector<int>& s) {
  if (!is_compatible(p, s)) throw DomainError("sequence is not compatible with the permutation");
  std::vector<Word> words;
  for (const auto& cyc : p.cycles()) {
    Word w;
    for (int i : cyc) w.push_back(Letter{s[static_cast<std::size_t>(i - 1)], p(i) > i});
    words.push_back(std::move(w));
  }
  return Ornament(words);
}

std::pair<Permutation, std::vector<int>> gr_eta(const Ornament& r) {
  const auto& neck = r.necklaces();
  struct Pos {
    std::size_t necklace, offset;
  };
  std::vector<Pos> pos;
  for (std::size_t a = 0; a < neck.size(); ++a)
    for (std::size_t o = 0; o < neck[a].size(); ++o) pos.push_back({a, o});
  // Largest position first; equal words are broken by necklace index (earlier is smaller).
  std::stable_sort(pos.begin(), pos.end(), [&](const Pos& x, const Pos& y) {
    int c = compare_periodic(neck[x.necklace], x.offset, neck[y.necklace], y.offset);
    if (c != 0) return c > 0;
    return x.necklace > y.necklace;
  });
  std::vector<std::vector<int>> label(neck.size());
  for (std::size_t a = 0; a < neck.size(); ++a) label[a].resize(neck[a].size());
  for (std::size_t i = 0; i < pos.size(); ++i) label[pos[i].necklace][pos[i].offset] = static_cast<int>(i + 1);
  std::vector<std::vector<int>> cycles(label.begin(), label.end());
  int n = static_cast<int>(pos.size());
  std::vector<int> s;
  for (const auto& nk : neck)
    for (const Letter& l : nk) s.push_back(l.value);
  std::sort(s.begin(), s.end(), std::greater<>());
  return {Permutation::from_cycles(n, cycles), s};
}

GammaImage gamma(const Word& banner) {
  if (banner.size() < 2 || !is_banner(banner)) throw DomainError("gamma needs a banner of length at least 2");
  auto fact = increasing_factorization(banner);
  if (!fact) throw DomainError("banner has a Lyndon factor of length 1");
  Word last = fact->back();
  fact->pop_back();
  Letter a = last[0];
  std::size_t p = 0;
  while (p < last.size() && last[p] == a) ++p;
  // i_1 .. i_l are last[p .. end); i_0 := a.
  Word rest(last.begin() + static_cast<long>(p), last.end());
  std::size_t l = rest.size();
  auto at = [&](std::size_t idx) -> const Letter& { return idx == 0 ? a : rest[idx - 1]; };
  std::size_t r = 1;
  while (at(r).barred) ++r;
  int top = at(r - 1).value;
  std::size_t t = r;
  while (t + 1 <= l && !at(t + 1).barred && at(t + 1).value <= top) ++t;
  std::size_t s = t;
  if (t + 1 <= l && at(t + 1).barred && at(t + 1).value <= top) s = t + 1;

  GammaImage out;
  if (s == l) {
    out.marked.omega = values(last);
    out.marked.mark = eqs::bars(last);
  } else {
    Word taken(rest.begin(), rest.begin() + static_cast<long>(s));
    out.marked.omega = values(taken);
    out.marked.mark = eqs::bars(taken);
    Word kept(last.begin(), last.begin() + static_cast<long>(p));
    kept.insert(kept.end(), rest.begin() + static_cast<long>(s), rest.end());
    fact->push_back(kept);
  }
  std::sort(out.marked.omega.begin(), out.marked.omega.end());
  out.banner = concat(*fact);
  return out;
}

Word gamma_inverse(const Word& banner, const MarkedSequence& marked) {
  const auto& w = marked.omega;
  int N = static_cast<int>(w.size());
  int b = marked.mark;
  if (N < 2 || b < 1 || b > N - 1 || !std::is_sorted(w.begin(), w.end()) || w.front() < 1)
    throw DomainError("invalid marked sequence");
  auto om = [&](int i) { return w[static_cast<std::size_t>(i - 1)]; };
  // Block ω̄_N ... ω̄_{N-b+1} ω_1 ... ω_{N-b}.
  auto block = [&](bool hold_last_bar) {
    Word out;
    for (int i = N; i >= N - b + (hold_last_bar ? 2 : 1); --i) out.push_back(Letter{om(i), true});
    for (int i = 1; i <= N - b; ++i) out.push_back(Letter{om(i), false});
    if (hold_last_bar) out.push_back(Letter{om(N - b + 1), true});
    return out;
  };
  std::vector<Word> fact;
  if (!banner.empty()) {
    auto f = increasing_factorization(banner);
    if (!f || !is_banner(banner)) throw DomainError("first argument must be a banner without Lyndon factors of length 1");
    fact = *f;
  }
  if (fact.empty() || fact.back()[0].value <= om(N)) {
    fact.push_back(block(false));
    return concat(fact);
  }
  Word last = fact.back();
  fact.pop_back();
  Letter a = last[0];
  std::size_t p = 0;
  while (p < last.size() && last[p] == a) ++p;
  Word out(last.begin(), last.begin() + static_cast<long>(p));
  Letter j1 = last[p];
  bool hold = !(alph_rank(j1) > alph_rank(Letter{om(N - b + 1), true}));
  Word ins = block(hold);
  out.insert(out.end(), ins.begin(), ins.end());
  out.insert(out.end(), last.begin() + static_cast<long>(p), last.end());
  fact.push_back(out);
  return concat(fact);
}

Necklace value_swap(const Necklace& neck, int k) {
  std::size_t L = neck.size();
  auto in_pair = [k](const Letter& l) { return l.value == k || l.value == k + 1; };
  std::size_t intruder = L;
  bool any = false;
  for (std::size_t i = 0; i < L; ++i) {
    if (in_pair(neck[i])) any = true;
    else if (intruder == L) intruder = i;
  }
  if (!any) return neck;
  Word w;
  if (intruder == L) {
    w = neck;
    std::vector<std::size_t> switches;
    for (std::size_t i = 0; i < L; ++i)
      if (w[i].value != w[(i + 1) % L].value) switches.push_back(i);
    for (auto& l : w) l.value = l.value == k ? k + 1 : k;
    for (std::size_t i : switches) w[i].barred = !w[i].barred;
  } else {
    w = rotate(neck, intruder);
    std::size_t i = 0;
    while (i < L) {
      if (!in_pair(w[i])) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < L && in_pair(w[j])) ++j;
      swap_segment(w, i, j, k);
      i = j;
    }
  }
  auto out = make_necklace(w);
  if (!out) throw std::logic_error("value swap produced an invalid necklace");
  return *out;
}

Ornament value_swap(const Ornament& r, int k) {
  std::vector<Word> words;
  for (const auto& n : r.necklaces()) words.push_back(value_swap(n, k));
  return Ornament(words);
}

namespace {

std::map<int, int> value_reversal(const std::vector<Word>& words) {
  std::vector<int> vals;
  for (const auto& w : words)
    for (const Letter& l : w) vals.push_back(l.value);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::map<int, int> rev;
  for (std::size_t i = 0; i < vals.size(); ++i) rev[vals[i]] = vals[vals.size() - 1 - i];
  return rev;
}

}  // namespace

Ornament complement(const Ornament& r) {
  auto rev = value_reversal(r.necklaces());
  std::vector<Word> words;
  for (Word w : r.necklaces()) {
    for (auto& l : w) {
      if (w.size() > 1) l.barred = !l.barred;
      l.value = rev.at(l.value);
    }
    words.push_back(std::move(w));
  }
  return Ornament(words);
}

Word complement_banner(const Word& b) {
  auto rev = value_reversal({b});
  Word out = b;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i + 1 < out.size()) out[i].barred = !out[i].barred;
    out[i].value = rev.at(out[i].value);
  }
  return out;
}

const std::vector<Necklace>& necklaces(int size, int max_value) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Necklace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(size, max_value);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<Necklace> out;
  Word w(static_cast<std::size_t>(std::max(size, 0)));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      if (satisfies_necklace_rule(w) && is_primitive(w) && largest_rotation(w) == w) out.push_back(w);
      return;
    }
    for (int v = 1; v <= max_value; ++v)
      for (bool bar : {false, true}) {
        Letter l{v, bar};
        if (i > 0 && !follows_ok(w[i - 1], l)) continue;
        // The canonical rotation starts with its largest letter.
        if (i > 0 && alph_rank(l) > alph_rank(w[0])) continue;
        w[i] = l;
        rec(i + 1);
      }
  };
  if (size >= 1) rec(0);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return compare_words(a, b) > 0; });
  return cache.emplace(key, std::move(out)).first->second;
}

void for_each_ornament(const Partition& type, int max_value, const std::function<void(const Ornament&)>& fn) {
  // Group equal part sizes and choose multisets of necklaces for each size.
  std::vector<std::pair<int, int>> groups;  // (size, multiplicity)
  for (int part : type.parts()) {
    if (!groups.empty() && groups.back().first == part) ++groups.back().second;
    else groups.emplace_back(part, 1);
  }
  std::vector<Word> chosen;
  std::function<void(std::size_t, int, std::size_t)> rec = [&](std::size_t g, int left, std::size_t from) {
    if (g == groups.size()) {
      fn(Ornament(chosen));
      return;
    }
    if (left == 0) {
      if (g + 1 < groups.size()) rec(g + 1, groups[g + 1].second, 0);
      else rec(g + 1, 0, 0);
      return;
    }
    const auto& pool = necklaces(groups[g].first, max_value);
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(g, left - 1, i);
      chosen.pop_back();
    }
  };
  if (groups.empty()) {
    fn(Ornament());
    return;
  }
  rec(0, groups[0].second, 0);
}

void for_each_banner(int length, int max_value, const std::function<void(const Word&)>& fn) {
  Word w(static_cast<std::size_t>(std::max(length, 0)));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == w.size()) {
      fn(w);
      return;
    }
    for (int v = 1; v <= max_value; ++v)
      for (bool bar : {false, true}) {
        if (bar && i + 1 == w.size()) continue;
        Letter l{v, bar};
        if (i > 0 && !follows_ok(w[i - 1], l)) continue;
        w[i] = l;
        rec(i + 1);
      }
  };
  rec(0);
}

std::string factorization_str(const std::vector<Word>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += " . ";
    out += word_str(factors[i]);
  }
  return out;
}

}  // namespace eqs

namespace eqs {

namespace {

// Collects the first failure of a family of checks into one report item.
struct Tally {
  long long count = 0;
  std::string witness;
  void check(bool holds, const std::function<std::string()>& describe) {
    ++count;
    if (!holds && witness.empty()) witness = describe();
  }
  void emit(Report& rep, std::string id, Params ps) {
    ps.emplace_back("cases", std::to_string(count));
    rep.add(std::move(id), std::move(ps), witness.empty(), witness);
  }
};

std::string seq_str(const std::vector<int>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::vector<int> sorted_values(const Word& w) {
  auto v = values(w);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Report verify_bijection_round_trips(const RoundTripBounds& b) {
  Report rep("bijection-round-trips");
  for (int n = 0; n <= b.gr_n; ++n) {
    Tally t;
    for_each_perm(n, [&](const Permutation& p) {
      auto st = statistics(p);
      Partition type = cycle_type(p);
      for (const auto& s : compatible_sequences(p, b.gr_values)) {
        Ornament r = gr_phi(p, s);
        auto back = gr_eta(r);
        t.check(back.first == p && back.second == s && r.bars() == st.exc && r.type() == type,
                [&] { return p.str() + " " + seq_str(s) + " -> " + r.str(); });
      }
    });
    t.emit(rep, "eta-after-phi", {{"n", std::to_string(n)}, {"values", std::to_string(b.gr_values)}});
  }
  for (int n = 1; n <= b.ornament_size; ++n) {
    Tally t;
    for (const Partition& lam : partitions(n))
      for_each_ornament(lam, b.ornament_values, [&](const Ornament& r) {
        auto [p, s] = gr_eta(r);
        Ornament again = gr_phi(p, s);
        t.check(again == r, [&] { return r.str() + " -> " + again.str(); });
      });
    t.emit(rep, "phi-after-eta", {{"size", std::to_string(n)}, {"values", std::to_string(b.ornament_values)}});
  }
  for (int n = 1; n <= b.banner_length; ++n) {
    Tally t;
    for_each_banner(n, b.banner_values, [&](const Word& w) {
      Ornament r = banner_to_ornament(w);
      Word back = ornament_to_banner(r);
      t.check(back == w && r.type() == lyndon_type(w) && r.bars() == bars(w),
              [&] { return word_str(w) + " -> " + r.str() + " -> " + word_str(back); });
    });
    for (const Partition& lam : partitions(n))
      for_each_ornament(lam, b.banner_values, [&](const Ornament& r) {
        Word w = ornament_to_banner(r);
        t.check(is_banner(w) && banner_to_ornament(w) == r, [&] { return r.str() + " -> " + word_str(w); });
      });
    t.emit(rep, "banner-ornament", {{"length", std::to_string(n)}, {"values", std::to_string(b.banner_values)}});
  }
  for (int n = 2; n <= b.gamma_n; ++n) {
    Tally t;
    for_each_banner(n, b.gamma_values, [&](const Word& w) {
      if (lyndon_type(w).multiplicity(1) != 0) return;
      GammaImage g = gamma(w);
      auto joined = values(g.banner);
      joined.insert(joined.end(), g.marked.omega.begin(), g.marked.omega.end());
      std::sort(joined.begin(), joined.end());
      bool holds = lyndon_type(g.banner).multiplicity(1) == 0 && bars(w) == bars(g.banner) + g.marked.mark &&
                   joined == sorted_values(w) && gamma_inverse(g.banner, g.marked) == w;
      t.check(holds, [&] {
        return word_str(w) + " -> " + word_str(g.banner) + " " + seq_str(g.marked.omega) + "/" +
               std::to_string(g.marked.mark);
      });
    });
    t.emit(rep, "gamma", {{"n", std::to_string(n)}, {"values", std::to_string(b.gamma_values)}});
  }
  return rep;
}

Report verify_bijection_involutions(const InvolutionBounds& b) {
  Report rep("bijection-involutions");
  for (int n = 1; n <= b.swap_size; ++n) {
    Tally t;
    for (const Partition& lam : partitions(n))
      for_each_ornament(lam, b.swap_values, [&](const Ornament& r) {
        for (int k = 1; k < b.swap_values; ++k) {
          Ornament s = value_swap(r, k);
          auto wr = r.weight(b.swap_values), ws = s.weight(b.swap_values);
          std::swap(wr[static_cast<std::size_t>(k - 1)], wr[static_cast<std::size_t>(k)]);
          t.check(value_swap(s, k) == r && s.bars() == r.bars() && s.type() == r.type() && wr == ws,
                  [&] { return r.str() + " k=" + std::to_string(k) + " -> " + s.str(); });
        }
      });
    t.emit(rep, "value-swap", {{"size", std::to_string(n)}, {"values", std::to_string(b.swap_values)}});
  }
  for (int n = 1; n <= b.complement_size; ++n) {
    Tally t;
    for (const Partition& lam : partitions(n)) {
      int ones = lam.multiplicity(1);
      for_each_ornament(lam, b.complement_values, [&](const Ornament& r) {
        Ornament c = complement(r);
        t.check(complement(c) == r && c.bars() == n - ones - r.bars() && c.type() == r.type(),
                [&] { return r.str() + " -> " + c.str(); });
      });
    }
    t.emit(rep, "ornament-complement", {{"size", std::to_string(n)}, {"values", std::to_string(b.complement_values)}});
  }
  for (int n = 1; n <= b.banner_length; ++n) {
    Tally t;
    for_each_banner(n, b.banner_values, [&](const Word& w) {
      Word c = complement_banner(w);
      t.check(is_banner(c) && complement_banner(c) == w && bars(c) == n - 1 - bars(w),
              [&] { return word_str(w) + " -> " + word_str(c); });
    });
    t.emit(rep, "banner-complement", {{"length", std::to_string(n)}, {"values", std::to_string(b.banner_values)}});
  }
  return rep;
}

}  // namespace eqs
