#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/mpoly.hpp"
#include "eqs/report.hpp"

namespace eqs {

using StatVars = std::vector<std::pair<Stat, Var>>;

// Σ_σ Π v^{stat(σ)} over σ in S_n accepted by the filter. A_0 = 1.
MPoly joint_enumerator(int n, const StatVars& stats, const PermFilter& filter = PermFilter::all());
// Same, with an arbitrary exponent map.
MPoly joint_enumerator(int n, const std::function<Exponents(const Permutation&)>& weight,
                       const PermFilter& filter = PermFilter::all());

// Σ_{fix=k} q^maj p^des t^exc, keyed by k.
std::map<int, MPoly> maj_des_exc_by_fix(int n);

// Coefficients of t as a map exponent -> coefficient polynomial.
std::map<int, MPoly> t_coefficients(const MPoly& f);

// exp_q-type generating function for (maj, exc).
Report verify_maj_exc_genfun(int order);
// Adds fix (variable r); both the maj and comaj forms.
Report verify_fix_genfun(int order);
// (maj, des, exc, fix) against the (z;q)_m summation.
Report verify_four_stat_genfun(int z_order, int p_order);
// Recurrence, multinomial closed form, fixed-point and derangement formulas in both maj and comaj forms.
Report verify_q_eulerian_formulas(int n_max);
// Palindromicity under q -> 1/q, p -> q^n p and the q^{-1}t symmetry/unimodality statements.
Report verify_q_symmetry(int n_max);

}  // namespace eqs
