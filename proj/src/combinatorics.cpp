#include "eqs/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace eqs {

CapExceeded::CapExceeded(const std::string& name, long limit, long requested)
    : std::runtime_error("cap exceeded: " + name + " = " + std::to_string(requested) +
                         " (limit " + std::to_string(limit) + ")"),
      name_(name),
      limit_(limit),
      requested_(requested) {}

namespace {

Caps& active_caps() {
  thread_local Caps caps = Caps::defaults_from_env();
  return caps;
}

}  // namespace

Caps Caps::defaults_from_env() {
  Caps caps;
  const char* env = std::getenv("EQS_CAPS");
  if (env == nullptr) return caps;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    int value = std::atoi(item.c_str() + eq + 1);
    if (key == "perm_n") caps.perm_n = value;
    else if (key == "sym_degree") caps.sym_degree = value;
    else if (key == "q_degree") caps.q_degree = value;
    else if (key == "series_order") caps.series_order = value;
    else if (key == "poset_elements") caps.poset_elements = value;
  }
  return caps;
}

const Caps& Caps::current() { return active_caps(); }

ScopedCaps::ScopedCaps(const Caps& caps) : saved_(active_caps()) { active_caps() = caps; }
ScopedCaps::~ScopedCaps() { active_caps() = saved_; }

void check_cap(const char* name, long requested, long limit) {
  if (requested > limit) throw CapExceeded(name, limit, requested);
}

int subset_size(Subset s) { return std::popcount(s); }

int subset_sum(Subset s) {
  int total = 0;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) total += i;
  return total;
}

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Subset subset_from(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 31) throw DomainError("subset element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

Subset full_subset(int n) { return n <= 1 ? 0 : ((Subset{1} << (n - 1)) - 1); }

std::string subset_str(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : subset_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::vector<int> subset_to_composition(Subset s, int n) {
  std::vector<int> alpha;
  int prev = 0;
  for (int e : subset_elements(s)) {
    alpha.push_back(e - prev);
    prev = e;
  }
  if (n > prev) alpha.push_back(n - prev);
  return alpha;
}

Subset composition_to_subset(const std::vector<int>& alpha) {
  Subset s = 0;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    acc += alpha[i];
    s |= Subset{1} << (acc - 1);
  }
  return s;
}

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)])
      throw DomainError("not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i];
      int to = c[(i + 1) % c.size()];
      if (from < 1 || from > n || w[static_cast<std::size_t>(from - 1)] != 0)
        throw DomainError("invalid cycle decomposition");
      w[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int i = 0; i < n; ++i)
    if (w[static_cast<std::size_t>(i)] == 0) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (text == "()" || text.empty()) return Permutation();
  if (separated) {
    std::string buf(text);
    for (char& c : buf)
      if (c == ',') c = ' ';
    std::stringstream ss(buf);
    int v;
    while (ss >> v) w.push_back(v);
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad permutation text");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(w_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::str() const {
  if (w_.empty()) return "()";
  bool wide = size() > 9;
  std::string out;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(w_[i]);
  }
  return out;
}

std::string Permutation::cycle_str() const {
  std::string out;
  for (const auto& c : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::string buf(text);
  if (!buf.empty() && (buf.front() == '(' || buf.front() == '[')) buf = buf.substr(1);
  if (!buf.empty() && (buf.back() == ')' || buf.back() == ']')) buf.pop_back();
  if (separated) {
    for (char& c : buf)
      if (c == ',') c = ' ';
    std::stringstream ss(buf);
    int v;
    while (ss >> v) parts.push_back(v);
  } else {
    for (char c : buf) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad partition text");
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

long long Partition::z() const {
  long long z = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    long long m = static_cast<long long>(j - i);
    for (long long k = 1; k <= m; ++k) z *= parts_[i] * k;
    i = j;
  }
  return z;
}

int Partition::gcd() const {
  int g = 0;
  for (int p : parts_) g = std::gcd(g, p);
  return g;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int i = 1; i <= parts_.front(); ++i) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= i) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

Partition Partition::concat(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

Partition Partition::with_ones(int k) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(all));
}

Partition Partition::without_ones() const {
  std::vector<int> all;
  for (int p : parts_)
    if (p != 1) all.push_back(p);
  return Partition(std::move(all));
}

bool Partition::dominates(const Partition& other) const {
  int a = 0;
  int b = 0;
  std::size_t len = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (Subset s = 0; s <= full_subset(n); ++s) out.push_back(subset_to_composition(s, n));
  return out;
}

bool ExdOrder::operator()(const Letter& a, const Letter& b) const {
  if (a.barred != b.barred) return a.barred;
  return a.value < b.value;
}

bool AlphOrder::operator()(const Letter& a, const Letter& b) const {
  if (a.value != b.value) return a.value < b.value;
  return !a.barred && b.barred;
}

std::string word_str(const Word& w) {
  bool wide = std::any_of(w.begin(), w.end(), [](const Letter& l) { return l.value > 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(w[i].value);
    if (w[i].barred) out += '\'';
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '.' || c == '|') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad word text");
    int v = 0;
    if (separated) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = 10 * v + (text[i++] - '0');
    } else {
      v = c - '0';
      ++i;
    }
    bool barred = i < text.size() && text[i] == '\'';
    if (barred) ++i;
    if (v < 1) throw DomainError("letters must be positive");
    w.push_back({v, barred});
  }
  return w;
}

Subset descent_set(const Permutation& p) {
  Subset s = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) s |= Subset{1} << (i - 1);
  return s;
}

Subset exd_set(const Permutation& p) {
  Subset s = 0;
  ExdOrder less;
  for (int i = 1; i < p.size(); ++i) {
    Letter a{p(i), p(i) > i};
    Letter b{p(i + 1), p(i + 1) > i + 1};
    if (less(b, a)) s |= Subset{1} << (i - 1);
  }
  return s;
}

StatRecord statistics(const Permutation& p) {
  StatRecord r;
  int n = p.size();
  r.n = n;
  r.Des = descent_set(p);
  r.des = subset_size(r.Des);
  r.maj = subset_sum(r.Des);
  r.comaj = n * (n - 1) / 2 - r.maj;
  for (int i = 1; i <= n; ++i) {
    if (p(i) > i) {
      ++r.exc;
      if (i < n) r.Exc |= Subset{1} << (i - 1);
    }
    if (p(i) == i) ++r.fix;
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) ++r.inv;
  }
  r.Exd = exd_set(p);
  return r;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : p.cycles()) lens.push_back(static_cast<int>(c.size()));
  return Partition(std::move(lens));
}

int stat_value(const StatRecord& s, Stat stat) {
  switch (stat) {
    case Stat::Maj: return s.maj;
    case Stat::Des: return s.des;
    case Stat::Exc: return s.exc;
    case Stat::Fix: return s.fix;
    case Stat::Inv: return s.inv;
    case Stat::Comaj: return s.comaj;
  }
  return 0;
}

bool PermFilter::accepts(const Permutation& p) const {
  switch (kind) {
    case Kind::All: return true;
    case Kind::CycleType: return eqs::cycle_type(p) == type;
    case Kind::FixCount: {
      int f = 0;
      for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) ++f;
      return f == fix;
    }
    case Kind::Derangement:
      for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) return false;
      return true;
  }
  return false;
}

void for_each_perm(int n, const std::function<void(const Permutation&)>& fn) {
  check_cap("perm_n", n, Caps::current().perm_n);
  Permutation p;
  p.w_.resize(static_cast<std::size_t>(n));
  std::iota(p.w_.begin(), p.w_.end(), 1);
  do {
    fn(p);
  } while (std::next_permutation(p.w_.begin(), p.w_.end()));
}

std::vector<Permutation> enumerate_perms(int n) {
  std::vector<Permutation> out;
  for_each_perm(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::vector<Permutation> enumerate_by(int n, const PermFilter& filter) {
  std::vector<Permutation> out;
  for_each_perm(n, [&](const Permutation& p) {
    if (filter.accepts(p)) out.push_back(p);
  });
  return out;
}

namespace {

void compat_rec(int pos, int n, Subset exd, int upper, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int v = upper; v >= 1; --v) {
    cur.push_back(v);
    bool strict = pos + 1 < n && (exd >> pos) & 1u;
    compat_rec(pos + 1, n, exd, strict ? v - 1 : v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compatible_sequences(const Permutation& p, int m) {
  if (m < 1) throw DomainError("compatible_sequences needs m >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compat_rec(0, p.size(), exd_set(p), m, cur, out);
  return out;
}

bool is_compatible(const Permutation& p, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) != p.size()) return false;
  Subset exd = exd_set(p);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) return false;
    if (i + 1 < s.size()) {
      if (s[i] < s[i + 1]) return false;
      if (((exd >> i) & 1u) && s[i] == s[i + 1]) return false;
    }
  }
  return true;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace eqs
