#include "eqs/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "eqs/combinatorics.hpp"

namespace eqs {

struct Poset::Cache {
  std::mutex mu;
  std::map<int, std::vector<Integer>> rows;
};

Poset::Poset() : cache_(std::make_shared<Cache>()) {}

Poset::Poset(std::vector<int> ranks, const std::vector<std::pair<int, int>>& covers,
             std::vector<std::string> labels)
    : rank_(std::move(ranks)), label_(std::move(labels)), cache_(std::make_shared<Cache>()) {
  const int n = size();
  check_cap("poset_elements", n, Caps::current().poset_elements);
  if (label_.empty()) {
    label_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label_[static_cast<std::size_t>(i)] = std::to_string(i);
  }
  if (static_cast<int>(label_.size()) != n) throw DomainError("poset: label count differs from element count");
  up_.assign(static_cast<std::size_t>(n), {});
  down_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("poset: cover index out of range");
    if (rank(b) != rank(a) + 1) throw DomainError("poset: cover does not raise the rank by one");
    up_[static_cast<std::size_t>(a)].push_back(b);
    down_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& v : up_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  for (auto& v : down_) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  order_.resize(static_cast<std::size_t>(n));
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return rank(a) < rank(b); });
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  above_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    auto& row = above_[static_cast<std::size_t>(*it)];
    row[static_cast<std::size_t>(*it) / 64] |= std::uint64_t{1} << (*it % 64);
    for (int y : up(*it)) {
      const auto& other = above_[static_cast<std::size_t>(y)];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
}

int Poset::min_rank() const {
  return size() == 0 ? 0 : *std::min_element(rank_.begin(), rank_.end());
}

int Poset::max_rank() const {
  return size() == 0 ? -1 : *std::max_element(rank_.begin(), rank_.end());
}

std::optional<int> Poset::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (label_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b : up(a)) out.emplace_back(a, b);
  return out;
}

bool Poset::leq(int x, int y) const {
  return (above_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y) / 64] >> (y % 64)) & 1U;
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down(i).empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up(i).empty()) out.push_back(i);
  return out;
}

std::optional<int> Poset::bottom() const {
  auto m = minimal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::optional<int> Poset::top() const {
  auto m = maximal();
  if (m.size() != 1) return std::nullopt;
  return m.front();
}

std::vector<long long> Poset::whitney() const {
  std::vector<long long> out(static_cast<std::size_t>(length() + 1), 0);
  for (int r : rank_) ++out[static_cast<std::size_t>(r - min_rank())];
  return out;
}

const std::vector<Integer>& Poset::mobius_row(int x) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->rows.find(x);
  if (it != cache_->rows.end()) return it->second;
  std::vector<Integer> row(static_cast<std::size_t>(size()), 0);
  std::vector<int> seen;
  for (int z : order_) {
    if (!leq(x, z)) continue;
    Integer& m = row[static_cast<std::size_t>(z)];
    if (z == x) {
      m = 1;
    } else {
      for (int w : seen)
        if (leq(w, z)) m -= row[static_cast<std::size_t>(w)];
    }
    seen.push_back(z);
  }
  return cache_->rows.emplace(x, std::move(row)).first->second;
}

Integer Poset::mobius(int x, int y) const {
  if (!leq(x, y)) throw DomainError("mobius: elements are not comparable in this order");
  return mobius_row(x)[static_cast<std::size_t>(y)];
}

Integer Poset::mobius_top_down(int x, int y) const {
  if (!leq(x, y)) throw DomainError("mobius: elements are not comparable in this order");
  std::vector<Integer> col(static_cast<std::size_t>(size()), 0);
  std::vector<int> seen;
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    int w = *it;
    if (!leq(w, y) || !leq(x, w)) continue;
    Integer& m = col[static_cast<std::size_t>(w)];
    if (w == y) {
      m = 1;
    } else {
      for (int v : seen)
        if (leq(w, v)) m -= col[static_cast<std::size_t>(v)];
    }
    seen.push_back(w);
  }
  return col[static_cast<std::size_t>(x)];
}

Integer Poset::mu_bounded() const {
  auto b = bottom();
  auto t = top();
  if (!b || !t) throw DomainError("mu_bounded: poset lacks a minimum or a maximum");
  return mobius(*b, *t);
}

namespace {

std::vector<std::string> all_labels(const Poset& p) {
  std::vector<std::string> out;
  for (int i = 0; i < p.size(); ++i) out.push_back(p.label(i));
  return out;
}

std::vector<int> all_ranks(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) out.push_back(p.rank(i));
  return out;
}

}  // namespace

Poset hat(const Poset& p) {
  const int n = p.size();
  const int shift = p.size() == 0 ? 1 : 1 - p.min_rank();
  std::vector<int> ranks{0};
  std::vector<std::string> labels{"0^"};
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    ranks.push_back(p.rank(i) + shift);
    labels.push_back(p.label(i));
  }
  ranks.push_back(n == 0 ? 1 : p.max_rank() + shift + 1);
  labels.push_back("1^");
  for (auto [a, b] : p.cover_pairs()) covers.emplace_back(a + 1, b + 1);
  for (int m : p.minimal()) covers.emplace_back(0, m + 1);
  for (int m : p.maximal()) covers.emplace_back(m + 1, n + 1);
  if (n == 0) covers.emplace_back(0, 1);
  return Poset(std::move(ranks), covers, std::move(labels));
}

Poset plus(const Poset& p) {
  auto ranks = all_ranks(p);
  auto labels = all_labels(p);
  auto covers = p.cover_pairs();
  const int n = p.size();
  ranks.push_back(p.max_rank() + 1);
  labels.push_back("1^");
  for (int m : p.maximal()) covers.emplace_back(m, n);
  return Poset(std::move(ranks), covers, std::move(labels));
}

Poset minus(const Poset& p) {
  auto b = p.bottom();
  if (!b) throw DomainError("minus: poset lacks a minimum");
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != *b) keep.push_back(i);
  Poset sub = induced(p, keep);
  std::vector<int> ranks;
  for (int i = 0; i < sub.size(); ++i) ranks.push_back(sub.rank(i) - 1);
  return Poset(std::move(ranks), sub.cover_pairs(), all_labels(sub));
}

Poset dual(const Poset& p) {
  std::vector<int> ranks;
  for (int i = 0; i < p.size(); ++i) ranks.push_back(p.max_rank() + p.min_rank() - p.rank(i));
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.cover_pairs()) covers.emplace_back(b, a);
  return Poset(std::move(ranks), covers, all_labels(p));
}

Poset induced(const Poset& p, const std::vector<int>& elements) {
  std::vector<int> index(static_cast<std::size_t>(p.size()), -1);
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index[static_cast<std::size_t>(elements[k])] = static_cast<int>(k);
    ranks.push_back(p.rank(elements[k]));
    labels.push_back(p.label(elements[k]));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.cover_pairs()) {
    int ia = index[static_cast<std::size_t>(a)];
    int ib = index[static_cast<std::size_t>(b)];
    if (ia >= 0 && ib >= 0) covers.emplace_back(ia, ib);
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

ReesProduct rees_product_indexed(const Poset& p, const Poset& q) {
  const int np = p.size();
  const int nq = q.size();
  std::vector<std::vector<int>> index(static_cast<std::size_t>(np), std::vector<int>(static_cast<std::size_t>(nq), -1));
  ReesProduct out;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (int a = 0; a < np; ++a) {
    int ra = p.rank(a) - p.min_rank();
    for (int b = 0; b < nq; ++b) {
      if (ra < q.rank(b) - q.min_rank()) continue;
      index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(out.parts.size());
      out.parts.emplace_back(a, b);
      ranks.push_back(ra);
      labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < static_cast<int>(out.parts.size()); ++x) {
    auto [a, b] = out.parts[static_cast<std::size_t>(x)];
    for (int a2 : p.up(a)) {
      covers.emplace_back(x, index[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b)]);
      for (int b2 : q.up(b)) covers.emplace_back(x, index[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b2)]);
    }
  }
  out.poset = Poset(std::move(ranks), covers, std::move(labels));
  return out;
}

Poset rees_product(const Poset& p, const Poset& q) { return rees_product_indexed(p, q).poset; }

Poset boolean_lattice(int n) {
  check_cap("boolean_n", n, 12);
  const int count = 1 << n;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int s = 0; s < count; ++s) {
    ranks.push_back(subset_size(static_cast<Subset>(s)));
    labels.push_back(subset_str(static_cast<Subset>(s)));
    for (int i = 0; i < n; ++i)
      if (!(s & (1 << i))) covers.emplace_back(s, s | (1 << i));
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

Poset chain(int n) {
  if (n < 0) throw DomainError("chain: negative size");
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    ranks.push_back(i);
    labels.push_back(std::to_string(i + 1));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

Poset tree(int t, int n) {
  if (t < 1 || n < 0) throw DomainError("tree: need t >= 1 and n >= 0");
  long total = 0;
  for (long level = 1, d = 0; d <= n; ++d, level *= t) total += level;
  check_cap("poset_elements", total, Caps::current().poset_elements);
  std::vector<int> ranks{0};
  std::vector<std::string> labels{"e"};
  std::vector<std::pair<int, int>> covers;
  std::vector<int> level{0};
  for (int d = 1; d <= n; ++d) {
    std::vector<int> next;
    for (int parent : level)
      for (int c = 1; c <= t; ++c) {
        int id = static_cast<int>(ranks.size());
        ranks.push_back(d);
        const std::string& pl = labels[static_cast<std::size_t>(parent)];
        labels.push_back(d == 1 ? std::to_string(c) : pl + "." + std::to_string(c));
        covers.emplace_back(parent, id);
        next.push_back(id);
      }
    level = std::move(next);
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

Poset crosspolytope(int n) {
  check_cap("crosspolytope_n", n, 7);
  long count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  // Coordinate i of a face code is 0 (absent), 1 (vertex i) or 2 (vertex ī).
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (long c = 0; c < count; ++c) {
    int r = 0;
    std::string label = "{";
    long rest = c;
    for (int i = 1; i <= n; ++i, rest /= 3) {
      int d = static_cast<int>(rest % 3);
      if (d == 0) continue;
      if (r++ > 0) label += ",";
      label += std::to_string(i) + (d == 2 ? "'" : "");
    }
    ranks.push_back(r);
    labels.push_back(label + "}");
    long pw = 1;
    rest = c;
    for (int i = 0; i < n; ++i, pw *= 3, rest /= 3)
      if (rest % 3 == 0) {
        covers.emplace_back(static_cast<int>(c), static_cast<int>(c + pw));
        covers.emplace_back(static_cast<int>(c), static_cast<int>(c + 2 * pw));
      }
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

namespace {

int mod(long a, int q) {
  long r = a % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(static_cast<long>(a) * x, q) == 1) return x;
  throw DomainError("no inverse modulo q");
}

int matrix_rank_mod(std::vector<std::vector<int>> m, int q) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (mod(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], q) != 0) piv = r;
    if (piv < 0) continue;
    std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    int inv = inverse_mod(mod(pr[static_cast<std::size_t>(c)], q), q);
    for (auto& v : pr) v = mod(static_cast<long>(v) * inv, q);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      auto& row = m[static_cast<std::size_t>(r)];
      int f = row[static_cast<std::size_t>(c)];
      for (int k = 0; k < cols; ++k)
        row[static_cast<std::size_t>(k)] = mod(row[static_cast<std::size_t>(k)] - static_cast<long>(f) * pr[static_cast<std::size_t>(k)], q);
    }
    ++rank;
  }
  return rank;
}

using Matrix = std::vector<std::vector<int>>;

struct Subspace {
  Matrix rref;
  std::vector<std::uint64_t> members;  // bitset over base-q codes of vectors
};

int form_value(const Matrix& g, const std::vector<int>& u, const std::vector<int>& v, int q) {
  long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long>(u[i]) * g[i][j] * v[j];
  return mod(s, q);
}

// Every subspace of F_q^n of dimension at most max_dim, in reduced row-echelon form.
std::vector<Subspace> subspaces(int q, int n, int max_dim) {
  long vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= q;
  const std::size_t words = static_cast<std::size_t>((vectors + 63) / 64);
  std::vector<Subspace> out;
  for (int k = 0; k <= max_dim; ++k) {
    for (Subset piv = 0; piv < (Subset{1} << n); ++piv) {
      if (subset_size(piv) != k) continue;
      std::vector<int> pivots;
      for (int c = 0; c < n; ++c)
        if (piv & (Subset{1} << c)) pivots.push_back(c);
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c)
          if (!(piv & (Subset{1} << c))) free.emplace_back(r, c);
      long assignments = 1;
      for (std::size_t i = 0; i < free.size(); ++i) assignments *= q;
      for (long a = 0; a < assignments; ++a) {
        Matrix m(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (int r = 0; r < k; ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
        long rest = a;
        for (auto [r, c] : free) {
          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(rest % q);
          rest /= q;
        }
        Subspace s{m, std::vector<std::uint64_t>(words, 0)};
        long combos = 1;
        for (int i = 0; i < k; ++i) combos *= q;
        for (long cf = 0; cf < combos; ++cf) {
          std::vector<int> v(static_cast<std::size_t>(n), 0);
          long cr = cf;
          for (int r = 0; r < k; ++r, cr /= q) {
            int coef = static_cast<int>(cr % q);
            for (int c = 0; c < n; ++c)
              v[static_cast<std::size_t>(c)] = mod(v[static_cast<std::size_t>(c)] + static_cast<long>(coef) * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], q);
          }
          long code = 0;
          for (int c = n - 1; c >= 0; --c) code = code * q + v[static_cast<std::size_t>(c)];
          s.members[static_cast<std::size_t>(code / 64)] |= std::uint64_t{1} << (code % 64);
        }
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::string matrix_label(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r > 0) out += ";";
    for (int v : m[r]) out += std::to_string(v);
  }
  return out + "]";
}

Poset lattice_of(const std::vector<Subspace>& spaces) {
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (const auto& s : spaces) {
    ranks.push_back(static_cast<int>(s.rref.size()));
    labels.push_back(matrix_label(s.rref));
  }
  for (std::size_t a = 0; a < spaces.size(); ++a)
    for (std::size_t b = 0; b < spaces.size(); ++b) {
      if (ranks[b] != ranks[a] + 1) continue;
      bool inside = true;
      for (std::size_t w = 0; w < spaces[a].members.size() && inside; ++w)
        inside = (spaces[a].members[w] & ~spaces[b].members[w]) == 0;
      if (inside) covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return Poset(std::move(ranks), covers, std::move(labels));
}

int subspace_limit(int q) {
  switch (q) {
    case 2: return 5;
    case 3: return 4;
    case 5: return 3;
  }
  throw DomainError("finite field order must be 2, 3 or 5");
}

int isotropic_limit(int q) {
  switch (q) {
    case 2: return 2;
    case 3: return 1;
    case 5: return 1;
  }
  throw DomainError("finite field order must be 2, 3 or 5");
}

}  // namespace

FqVectorConfig FqVectorConfig::symplectic(int q, int m) {
  FqVectorConfig cfg;
  cfg.q = q;
  cfg.n = 2 * m;
  Matrix g(static_cast<std::size_t>(2 * m), std::vector<int>(static_cast<std::size_t>(2 * m), 0));
  for (int i = 0; i < m; ++i) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + i)] = 1;
    g[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(i)] = mod(-1, q);
  }
  cfg.form = g;
  return cfg;
}

Poset subspace_lattice(const FqVectorConfig& cfg) {
  if (cfg.n < 0) throw DomainError("subspace lattice: negative dimension");
  check_cap("subspace_n", cfg.n, subspace_limit(cfg.q));
  return lattice_of(subspaces(cfg.q, cfg.n, cfg.n));
}

Poset subspace_lattice(int q, int n) {
  FqVectorConfig cfg;
  cfg.q = q;
  cfg.n = n;
  return subspace_lattice(cfg);
}

Poset isotropic_lattice(const FqVectorConfig& cfg) {
  if (!cfg.form) throw DomainError("isotropic lattice: no form given");
  const Matrix& g = *cfg.form;
  const int n = cfg.n;
  if (n % 2 != 0) throw DomainError("isotropic lattice: ambient dimension must be even");
  check_cap("isotropic_m", n / 2, isotropic_limit(cfg.q));
  if (static_cast<int>(g.size()) != n) throw DomainError("isotropic lattice: form has the wrong size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(g[static_cast<std::size_t>(i)].size()) != n) throw DomainError("isotropic lattice: form is not square");
    for (int j = 0; j < n; ++j)
      if (mod(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], cfg.q) != 0 ||
          (i == j && mod(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], cfg.q) != 0))
        throw DomainError("isotropic lattice: form is not alternating");
  }
  if (matrix_rank_mod(g, cfg.q) != n) throw DomainError("isotropic lattice: form is degenerate");
  std::vector<Subspace> keep;
  for (auto& s : subspaces(cfg.q, n, n / 2)) {
    bool iso = true;
    for (std::size_t a = 0; a < s.rref.size() && iso; ++a)
      for (std::size_t b = a + 1; b < s.rref.size() && iso; ++b) iso = form_value(g, s.rref[a], s.rref[b], cfg.q) == 0;
    if (iso) keep.push_back(std::move(s));
  }
  return lattice_of(keep);
}

Poset isotropic_lattice(int q, int m) { return isotropic_lattice(FqVectorConfig::symplectic(q, m)); }

Poset random_bounded_poset(std::uint64_t seed, int length, int max_width) {
  if (length < 1 || max_width < 1) throw DomainError("random poset: need length >= 1 and width >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> layers{{0}};
  std::vector<int> ranks{0};
  std::vector<std::string> labels{"0^"};
  for (int r = 1; r < length; ++r) {
    int w = std::uniform_int_distribution<int>(1, max_width)(rng);
    std::vector<int> layer;
    for (int i = 0; i < w; ++i) {
      layer.push_back(static_cast<int>(ranks.size()));
      ranks.push_back(r);
      labels.push_back("x" + std::to_string(r) + "." + std::to_string(i + 1));
    }
    layers.push_back(layer);
  }
  layers.push_back({static_cast<int>(ranks.size())});
  ranks.push_back(length);
  labels.push_back("1^");
  std::vector<std::pair<int, int>> covers;
  std::bernoulli_distribution coin(0.5);
  for (int r = 1; r <= length; ++r) {
    const auto& below = layers[static_cast<std::size_t>(r - 1)];
    const auto& here = layers[static_cast<std::size_t>(r)];
    std::vector<bool> has_up(below.size(), false);
    for (int x : here) {
      bool any = false;
      for (std::size_t k = 0; k < below.size(); ++k)
        if (coin(rng)) {
          covers.emplace_back(below[k], x);
          has_up[k] = any = true;
        }
      if (!any) {
        std::size_t k = std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng);
        covers.emplace_back(below[k], x);
        has_up[k] = true;
      }
    }
    for (std::size_t k = 0; k < below.size(); ++k)
      if (!has_up[k]) {
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, here.size() - 1)(rng);
        covers.emplace_back(below[k], here[i]);
      }
  }
  return Poset(std::move(ranks), covers, std::move(labels));
}

Ideal ideal_I_j(const Poset& p, int j) {
  auto b = p.bottom();
  auto t = p.top();
  if (!b || !t) throw DomainError("ideal: poset must be bounded");
  const int n = p.length();
  if (j < 1 || j > n) throw DomainError("ideal: j out of range");
  std::vector<int> to_p;
  for (int i = 0; i < p.size(); ++i)
    if (i != *b) to_p.push_back(i);
  ReesProduct r = rees_product_indexed(minus(p), chain(n));
  const int top_minus = *t - (*t > *b ? 1 : 0);
  int target = -1;
  for (int x = 0; x < r.poset.size(); ++x)
    if (r.parts[static_cast<std::size_t>(x)] == std::pair<int, int>{top_minus, j - 1}) target = x;
  std::vector<int> below;
  for (int x = 0; x < r.poset.size(); ++x)
    if (r.poset.less(x, target)) below.push_back(x);
  Ideal out;
  out.poset = induced(r.poset, below);
  for (int x : below) {
    auto [a, c] = r.parts[static_cast<std::size_t>(x)];
    out.parts.emplace_back(to_p[static_cast<std::size_t>(a)], c + 1);
  }
  return out;
}

Integer ideal_mobius(const Poset& p, int j) { return hat(ideal_I_j(p, j).poset).mu_bounded(); }

Integer rees_chain_mobius(const Poset& p) {
  if (!p.bottom()) throw DomainError("rees chain: poset lacks a minimum");
  return hat(rees_product(minus(p), chain(p.length()))).mu_bounded();
}

Integer tree_mobius(const Poset& p, int t) { return plus(rees_product(p, tree(t, p.length()))).mu_bounded(); }

Integer tree_lemma_rhs(const Poset& p, int t) {
  return -plus(rees_product(dual(p), tree(t, p.length()))).mu_bounded();
}

}  // namespace eqs
