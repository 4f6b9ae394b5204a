#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqs {

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& name, long limit, long requested);
  const std::string& name() const { return name_; }
  long limit() const { return limit_; }
  long requested() const { return requested_; }

 private:
  std::string name_;
  long limit_;
  long requested_;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration limits. Each thread sees the caps installed by the innermost ScopedCaps.
struct Caps {
  int perm_n = 10;
  int sym_degree = 12;
  int q_degree = 12;
  int series_order = 10;
  int poset_elements = 5000;

  static Caps defaults_from_env();
  static const Caps& current();
};

class ScopedCaps {
 public:
  explicit ScopedCaps(const Caps& caps);
  ~ScopedCaps();
  ScopedCaps(const ScopedCaps&) = delete;
  ScopedCaps& operator=(const ScopedCaps&) = delete;

 private:
  Caps saved_;
};

void check_cap(const char* name, long requested, long limit);

// Subsets of [n-1] are packed into bit masks: element i lives in bit i-1.
using Subset = std::uint32_t;

int subset_size(Subset s);
int subset_sum(Subset s);
std::vector<int> subset_elements(Subset s);
Subset subset_from(const std::vector<int>& elements);
Subset full_subset(int n);  // [n-1]
std::string subset_str(Subset s);
// Successive differences of S ∪ {n}.
std::vector<int> subset_to_composition(Subset s, int n);
Subset composition_to_subset(const std::vector<int>& alpha);

class Permutation;
void for_each_perm(int n, const std::function<void(const Permutation&)>& fn);

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // Accepts "32541", "3 2 5 4 1", "3,2,5,4,1" or "()" for the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  // Each cycle starts at its minimum; cycles sorted by minimum.
  std::vector<std::vector<int>> cycles() const;
  Permutation inverse() const;
  std::string str() const;
  std::string cycle_str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  friend void for_each_perm(int n, const std::function<void(const Permutation&)>& fn);
  std::vector<int> w_;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // sorts; rejects non-positive parts

  // "4,2,2", "4 2 2" or "422".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int i) const;
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  long long z() const;
  int gcd() const;
  Partition conjugate() const;
  Partition concat(const Partition& other) const;
  Partition with_ones(int k) const;
  Partition without_ones() const;
  bool dominates(const Partition& other) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Lexicographically decreasing: (n), (n-1,1), ... , (1^n). Refines dominance.
std::vector<Partition> partitions(int n);
std::vector<std::vector<int>> compositions(int n);

struct Letter {
  int value = 0;
  bool barred = false;

  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

// 1̄ < 2̄ < ... < n̄ < 1 < 2 < ... < n
struct ExdOrder {
  bool operator()(const Letter& a, const Letter& b) const;
};

// 1 < 1̄ < 2 < 2̄ < ...
struct AlphOrder {
  bool operator()(const Letter& a, const Letter& b) const;
};

// Values are printed in decimal; barred letters carry an apostrophe.
// Values above 9 force space separation.
std::string word_str(const Word& w);
Word parse_word(std::string_view text);

struct StatRecord {
  int n = 0;
  int des = 0;
  int exc = 0;
  int maj = 0;
  int inv = 0;
  int comaj = 0;
  int fix = 0;
  Subset Des = 0;
  Subset Exc = 0;
  Subset Exd = 0;
};

StatRecord statistics(const Permutation& p);
Subset descent_set(const Permutation& p);
Subset exd_set(const Permutation& p);
Partition cycle_type(const Permutation& p);

enum class Stat { Maj, Des, Exc, Fix, Inv, Comaj };
int stat_value(const StatRecord& s, Stat stat);

struct PermFilter {
  enum class Kind { All, CycleType, FixCount, Derangement };
  Kind kind = Kind::All;
  Partition type;
  int fix = 0;

  static PermFilter all() { return {}; }
  static PermFilter cycle_type(Partition lambda) { return {Kind::CycleType, std::move(lambda), 0}; }
  static PermFilter fix_count(int k) { return {Kind::FixCount, {}, k}; }
  static PermFilter derangements() { return {Kind::Derangement, {}, 0}; }
  bool accepts(const Permutation& p) const;
};

// Lexicographic order; n = 0 yields the empty permutation once.
void for_each_perm(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_perms(int n);
std::vector<Permutation> enumerate_by(int n, const PermFilter& filter);

// Weakly decreasing s with s_i > s_{i+1} for i in Exd(p), entries in [1, m].
std::vector<std::vector<int>> compatible_sequences(const Permutation& p, int m);
bool is_compatible(const Permutation& p, const std::vector<int>& s);

long long factorial(int n);
long long binomial(int n, int k);

}  // namespace eqs
