#pragma once

#include <cstdint>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/mpoly.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Barred permutations are Words whose values are distinct positive integers.
// Membership in the barred set of X: the first letter is unbarred, and every ascent
// |w|(i) < |w|(i+1) has w(i) barred and w(i+1) unbarred.
bool in_barred_set(const Word& w);
// Members of the barred set over [n] with exactly j bars, ordered by permutation then bar mask.
std::vector<Word> barred_set(int n, int j);
long long barred_set_size(int n, int j);

// Maximal chains of Î_j(B_n), encoded as (σ, d), with no ascent under the labeling
// ((x,h),(y,i)) -> (y \ x, i - h) ordered componentwise.
long long ascent_free_chains(int n, int j);
// The same count, walking the maximal chains of the constructed poset Î_j(B_n).
long long ascent_free_chains_in_poset(int n, int j);

// Recursive bijection from the barred set of X onto the permutations of X, and its inverse.
std::vector<int> phi_map(const Word& w);
Word psi_map(const std::vector<int>& sigma);

int descents(const std::vector<int>& sigma);
int inversions(const std::vector<int>& sigma);
int admissible_inversions(const std::vector<int>& sigma);
int aid(const std::vector<int>& sigma);

// Σ_σ q^aid t^des over S_n, and Σ over σ(pos) = 1 of q^aid.
MPoly aid_des_enumerator(int n);
MPoly aid_by_position_of_one(int n, int pos);
// The q-count of σ with σ(pos) = 1 predicted from F_1, ..., F_{n-1}.
MPoly aid_position_formula(int n, int pos);

Report verify_ascent_free_chains(int n_max, int poset_n_max);
Report verify_barred_bijection(int n_max, int random_count, std::uint64_t seed);
Report verify_equidist(int n_max);

}  // namespace eqs
