#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/qsym.hpp"
#include "eqs/report.hpp"
#include "eqs/sym.hpp"

namespace eqs {

// Sums of F_{Exd(σ),n} over permutations with the given excedance count and fixed points or cycle type.
QSymElem eulerian_q(int n, int j);
QSymElem eulerian_q(int n, int j, int k);
QSymElem eulerian_q(const Partition& lambda, int j);

// The same elements as symmetric functions in the h basis.
SymElem eulerian_sym(int n, int j);
SymElem eulerian_sym(int n, int j, int k);
SymElem eulerian_sym(const Partition& lambda, int j);

// Σ_j Q_{n,j} t^j, Σ_{j,k} Q_{n,j,k} t^j r^k and Σ_j Q_{λ,j} t^j, all from the definition.
SymElem eulerian_t(int n);
SymElem eulerian_tr(int n);
SymElem eulerian_t(const Partition& lambda);

// Weight sums over ornaments of type λ with j bars and over banners of Lyndon type λ with j bars,
// letters bounded by m.
MonomialExpansion q_via_ornaments(const Partition& lambda, int j, int m);
MonomialExpansion q_via_banners(const Partition& lambda, int j, int m);
// Every banner of length n with letters bounded by m, grouped by (Lyndon type, bars).
std::map<std::pair<Partition, int>, MonomialExpansion> banner_expansions(int n, int m);

// Q_n(t,r) from the composition sum and from the recurrence in n.
SymElem q_closed_form(int n);
SymElem q_recurrence(int n);

// Both right-hand sides of the symmetric generating function, as h-basis series through z^order.
SymSeries symmetric_genfun_quotient(int order);
SymSeries symmetric_genfun_geometric(int order);

// Σ_λ z_λ^{-1} A_{ℓ(λ)}(t) Π [λ_i]_t p_λ.
SymElem q_power_sum(int n);
// Eulerian polynomial Σ_{σ ∈ S_n} t^{exc(σ)}.
MPoly eulerian_polynomial(int n);
// Drops the terms a_i t^i with gcd(m, i) != 1.
MPoly erase_noncoprime(const MPoly& f, int m);
// (t A_{k-1}(t) Π [λ_i]_t) with the erasure for g(λ).
MPoly conjectured_character(const Partition& lambda);
// z_λ times the p_λ coefficient.
Integer character_value(const SymElem& f, const Partition& lambda);

struct CharTable {
  int n = 0;
  std::vector<Partition> rows;             // lexicographically decreasing
  std::vector<std::vector<Integer>> values;  // values[row][j], j = 0..n-1
};
// Character values of the representation with characteristic Q_{(n),j}.
CharTable char_table(int n);

// Stable principal specialization of an h-basis element of degree n, multiplied by (q;q)_n.
MPoly stable_spec_cleared(const SymElem& f);
// Degree-n symmetric function read off a monomial expansion in at least n variables.
SymElem sym_from_expansion(const MonomialExpansion& e, int n);

Report verify_symmetric_genfun(int order);
Report verify_stable_specialization(int n_max);
Report verify_nonstable_specialization(int n_max);
Report verify_three_way(int n_max);
Report verify_closed_form(int n_max);
Report verify_power_sum(int n_max);
Report verify_character_conjecture(int n_max);
Report verify_dimensions(int n_max);
Report verify_plethysm_formula(int n_max);
Report verify_cycle_product(int n_max);
Report verify_involutions(int n_max);
Report verify_multiset_derangements(int n_max, int spec_n_max);
Report verify_no_repeat_words(int n_max);
Report verify_double_descent_words(int n_max);
Report verify_h_positivity(int n_max);
Report verify_cycle_type_symmetry(int n_max);
// Conjectural: Schur positivity and Schur-order unimodality for all λ ⊢ n ≤ all_max and λ = (n), n ≤ single_max.
Report verify_schur_positivity(int all_max, int single_max);
Report verify_restriction(int n_max);
Report verify_derangement_homology(int n_max);

}  // namespace eqs
