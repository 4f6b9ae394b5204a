#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqs/mpoly.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Finite ranked poset given by its cover relation. Ranks must increase by exactly one along covers.
// Immutable after construction; Möbius rows are memoized and shared between copies.
class Poset {
 public:
  Poset();
  Poset(std::vector<int> ranks, const std::vector<std::pair<int, int>>& covers,
        std::vector<std::string> labels = {});

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
  int min_rank() const;
  int max_rank() const;
  int length() const { return size() == 0 ? -1 : max_rank() - min_rank(); }
  const std::vector<int>& up(int x) const { return up_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& down(int x) const { return down_[static_cast<std::size_t>(x)]; }
  const std::string& label(int x) const { return label_[static_cast<std::size_t>(x)]; }
  std::optional<int> find(const std::string& label) const;
  std::vector<std::pair<int, int>> cover_pairs() const;

  bool leq(int x, int y) const;
  bool less(int x, int y) const { return x != y && leq(x, y); }

  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;
  bool bounded() const { return bottom() && top(); }
  // Element counts by rank, counted from the minimum rank.
  std::vector<long long> whitney() const;

  // μ(x, y) by the recursion over [x, z) for z rising from x.
  Integer mobius(int x, int y) const;
  // μ(x, y) by the recursion over (w, y] for w falling from y.
  Integer mobius_top_down(int x, int y) const;
  // μ(0̂, 1̂) of a bounded poset.
  Integer mu_bounded() const;

 private:
  struct Cache;
  std::vector<int> rank_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::string> label_;
  std::vector<std::vector<std::uint64_t>> above_;  // bitset of {y : x <= y}
  std::vector<int> order_;                          // indices sorted by rank
  std::shared_ptr<Cache> cache_;

  const std::vector<Integer>& mobius_row(int x) const;
};

// Adjoins a new minimum and maximum.
Poset hat(const Poset& p);
Poset plus(const Poset& p);   // adjoins a new maximum
Poset minus(const Poset& p);  // removes the minimum, ranks drop by one
Poset dual(const Poset& p);
// Induced subposet on a convex subset, listed in increasing index order.
Poset induced(const Poset& p, const std::vector<int>& elements);

struct ReesProduct {
  Poset poset;
  std::vector<std::pair<int, int>> parts;  // element -> (index in P, index in Q)
};
// Pairs (p, q) with r_P(p) >= r_Q(q), ranks counted from each minimum rank.
// (p1,q1) ⋖ (p2,q2) iff p1 ⋖ p2 and q2 = q1 or q1 ⋖ q2.
ReesProduct rees_product_indexed(const Poset& p, const Poset& q);
Poset rees_product(const Poset& p, const Poset& q);

Poset boolean_lattice(int n);
Poset chain(int n);  // 1 < 2 < ... < n, ranks 0..n-1
// Complete t-ary tree of height n with the root at the bottom.
Poset tree(int t, int n);
// Proper faces of the n-dimensional crosspolytope, the empty face included.
Poset crosspolytope(int n);

struct FqVectorConfig {
  int q = 2;
  int n = 1;  // ambient dimension
  // Gram matrix of an alternating form; required by isotropic_lattice.
  std::optional<std::vector<std::vector<int>>> form;

  // F_q^{2m} with <e_i, e_{m+i}> = 1.
  static FqVectorConfig symplectic(int q, int m);
};
Poset subspace_lattice(const FqVectorConfig& cfg);
Poset subspace_lattice(int q, int n);
Poset isotropic_lattice(const FqVectorConfig& cfg);
Poset isotropic_lattice(int q, int m);

// Bounded ranked poset of the given length; each inner rank holds 1..max_width elements.
Poset random_bounded_poset(std::uint64_t seed, int length, int max_width);

struct Ideal {
  Poset poset;
  std::vector<std::pair<int, int>> parts;  // element -> (index in P, chain index 1..n)
};
// {x in P⁻ * C_n : x < (1̂_P, j)} for a bounded ranked P of length n.
Ideal ideal_I_j(const Poset& p, int j);
// μ of Î_j(P) and of the completed P⁻ * C_n.
Integer ideal_mobius(const Poset& p, int j);
Integer rees_chain_mobius(const Poset& p);
// μ((P * T_{t,n})⁺) and the negated right side of the tree lemma, -μ((P* * T_{t,n})⁺).
Integer tree_mobius(const Poset& p, int t);
Integer tree_lemma_rhs(const Poset& p, int t);

// Σ_{σ ∈ S_n} q^{comaj+exc} and the same sum over derangements.
MPoly comaj_exc_sum(int n);
MPoly comaj_exc_derangement_sum(int n);
// Σ_{exc(σ) = j-1} q^{comaj(σ)+j-1}.
MPoly ideal_homology_poly(int n, int j);
long long eulerian_number(int n, int j);  // permutations of [n] with j excedances
long long derangement_count(int n);
long long signed_derangement_formula(int n);
long long signed_derangement_count(int n);

// Barred letters are the fixed points of |σ| and must carry bars.
int bar_index(const std::vector<int>& values, const std::vector<bool>& barred);

// W_r of the isotropic lattice: [n r]_q Π_{i=n-r+1}^n (q^i + 1).
MPoly isotropic_whitney(int n, int r);
// Both sides of the type BC q-dimension identity.
MPoly bc_dimension_alternating(int n);
MPoly bc_dimension_positive(int n);
// Σ over signed derangements of q^{comaj(|σ|)+exc(|σ|)} p^{bnd(σ)}, by enumeration.
MPoly bc_bnd_enumerated(int n);
MPoly bc_bnd_formula(int n);

Report verify_poset_basics(int n_max);
// Direct Möbius of Î_j(B_n) and of the completed B_n⁻ * C_n against Eulerian and derangement numbers.
Report verify_rees_chain_mobius(int n_max);
// The same over B_n(q) against the (comaj, exc) polynomials.
Report verify_q_rees_chain_mobius(int q, int n_max, int poly_n_max);
Report verify_tree_theorems(int n_max, int t_max, int q_n_max);
Report verify_tree_lemma(int n_max, int q_n_max, int random_count, std::uint64_t seed);
Report verify_type_bc(int n_max, int direct_n_max, int poly_n_max, int bnd_n_max);

}  // namespace eqs
