#include "eqs/registry.hpp"

#include <cstdint>
#include <limits>

#include "eqs/combinatorics.hpp"

#include "eqs/bijections.hpp"
#include "eqs/eulerian.hpp"
#include "eqs/genfun.hpp"
#include "eqs/poset.hpp"
#include "eqs/shelling.hpp"
#include "eqs/sym.hpp"

namespace eqs {

namespace {

int I(const Bounds& b, const char* key) { return static_cast<int>(b.at(key)); }
std::uint64_t U(const Bounds& b, const char* key) { return static_cast<std::uint64_t>(b.at(key)); }

constexpr long long kNoLimit = std::numeric_limits<long long>::max();

SuiteSpec single(std::string id, std::string summary, const char* key, long long value, long long limit,
                 std::string help, Report (*fn)(int)) {
  return {std::move(id), std::move(summary), {{key, value, limit, std::move(help)}},
          [fn, key](const Bounds& b) { return fn(I(b, key)); }};
}

std::vector<SuiteSpec> build() {
  std::vector<SuiteSpec> r;
  // Generating functions of permutation statistics.
  r.push_back(single("maj-exc-genfun", "(maj, exc) exponential generating function", "zmax", 7, 10,
                     "highest power of z", verify_maj_exc_genfun));
  r.push_back(single("fix-genfun", "(maj, exc, fix) generating function, maj and comaj forms", "zmax", 7, 10,
                     "highest power of z", verify_fix_genfun));
  r.push_back({"four-stat-genfun",
               "(maj, des, exc, fix) against the (z;q)_m summation",
               {{"zmax", 5, 8, "highest power of z"}, {"pmax", 5, 8, "highest power of p"}},
               [](const Bounds& b) { return verify_four_stat_genfun(I(b, "zmax"), I(b, "pmax")); }});
  r.push_back(single("q-eulerian-formulas", "q-Eulerian recurrence, closed form and derangement formulas", "nmax",
                     8, 10, "largest n", verify_q_eulerian_formulas));
  r.push_back(single("q-symmetry", "palindromicity and unimodality of the q-Eulerian numbers", "nmax", 8, 10,
                     "largest n", verify_q_symmetry));
  // Eulerian quasisymmetric functions.
  r.push_back(single("symmetric-genfun", "both forms of the symmetric generating function for Q_{n,j,k}", "zmax",
                     7, 10, "highest power of z", verify_symmetric_genfun));
  r.push_back(single("stable-specialization", "stable principal specialization against (maj, exc, fix)", "nmax", 7, 10,
                     "largest n", verify_stable_specialization));
  r.push_back(single("nonstable-specialization", "specialization to m variables against (maj, des, exc)", "nmax",
                     6, 8, "largest n", verify_nonstable_specialization));
  r.push_back(single("three-way", "Q_{λ,j} from permutations, ornaments and banners", "nmax", 6, 7, "largest |λ|",
                     verify_three_way));
  r.push_back(single("closed-form", "Q_n(t,r) from the composition sum and the recurrence", "nmax", 9, 10,
                     "largest n", verify_closed_form));
  r.push_back(single("power-sum", "power sum expansion of Σ_j Q_{n,j} t^j", "nmax", 8, 10, "largest n",
                     verify_power_sum));
  r.push_back(single("character-conjecture", "conjectured character values of Q_{(n),j}", "nmax", 8, 10, "largest n",
                     verify_character_conjecture));
  r.push_back(single("dimensions", "dimensions of the representations with characteristic Q_{λ,j}", "nmax", 8, 10,
                     "largest n", verify_dimensions));
  r.push_back(single("plethysm-formula", "Q_{λ,j} as a product of plethysms of single-cycle terms", "nmax", 8, 10,
                     "largest n", verify_plethysm_formula));
  r.push_back(single("cycle-product", "cycle-type generating function as a product over cycle lengths", "nmax", 7, 10,
                     "largest n", verify_cycle_product));
  r.push_back(single("involutions", "Q_{λ,j} for λ with parts at most two", "nmax", 8, 10, "largest n",
                     verify_involutions));
  r.push_back({"multiset-derangements",
               "multiset derangement generating function and its specialization",
               {{"nmax", 6, 8, "largest degree"}, {"spec-nmax", 5, 8, "largest degree for the specialization"}},
               [](const Bounds& b) { return verify_multiset_derangements(I(b, "nmax"), I(b, "spec-nmax")); }});
  r.push_back(single("no-repeat-words", "words with no equal adjacent letters", "nmax", 7, 9, "largest length",
                     verify_no_repeat_words));
  r.push_back(single("double-descent-words", "words without double descents", "nmax", 6, 8, "largest length",
                     verify_double_descent_words));
  r.push_back(single("h-positivity", "h-positivity and h-unimodality of Q_{n,j,k}", "nmax", 7, 10, "largest n",
                     verify_h_positivity));
  r.push_back(single("cycle-type-symmetry", "Q_{λ,j} = Q_{λ,n-k-j} for k parts equal to one", "nmax", 7, 10,
                     "largest n", verify_cycle_type_symmetry));
  r.push_back({"schur-positivity",
               "Schur positivity and Schur unimodality of Q_{λ,j} (conjectural)",
               {{"all-nmax", 7, 9, "largest n over all cycle types"}, {"single-nmax", 9, 10, "largest n for λ = (n)"}},
               [](const Bounds& b) { return verify_schur_positivity(I(b, "all-nmax"), I(b, "single-nmax")); }});
  r.push_back(single("restriction", "restriction of Q_{(n),j} from S_n to S_{n-1}", "nmax", 7, 10, "largest n",
                     verify_restriction));
  r.push_back(single("derangement-homology", "derangement generating function", "nmax", 7, 10, "largest n",
                     verify_derangement_homology));
  // Poset topology.
  r.push_back(single("poset-basics", "Möbius recursions, duality and Whitney numbers of small posets", "nmax", 6, 7,
                     "largest n", verify_poset_basics));
  r.push_back(single("rees-chain-mobius", "Möbius of Î_j(B_n) and of the completed B_n⁻ * C_n", "nmax", 5, 6,
                     "largest n", verify_rees_chain_mobius));
  r.push_back({"q-rees-chain-mobius",
               "Möbius of Î_j(B_n(q)) and the completed B_n(q)⁻ * C_n",
               {{"q", 2, 5, "field size"},
                {"nmax", 4, 5, "largest n for direct Möbius"},
                {"poly-nmax", 6, 10, "largest n for the polynomial identities"}},
               [](const Bounds& b) {
                 return verify_q_rees_chain_mobius(I(b, "q"), I(b, "nmax"), I(b, "poly-nmax"));
               }});
  r.push_back({"tree-theorems",
               "Möbius of Rees products with trees, Boolean and subspace lattices",
               {{"nmax", 4, 5, "largest n"}, {"tmax", 3, 4, "largest tree degree"}, {"q-nmax", 3, 4, "largest n at q = 2"}},
               [](const Bounds& b) { return verify_tree_theorems(I(b, "nmax"), I(b, "tmax"), I(b, "q-nmax")); }});
  r.push_back({"tree-lemma",
               "tree lemma on Boolean lattices, subspace lattices, chains and random posets",
               {{"nmax", 4, 5, "largest Boolean lattice"},
                {"q-nmax", 3, 4, "largest subspace lattice at q = 2"},
                {"random", 20, 500, "number of random posets"},
                {"seed", 20240601, kNoLimit, "random seed"}},
               [](const Bounds& b) {
                 return verify_tree_lemma(I(b, "nmax"), I(b, "q-nmax"), I(b, "random"), U(b, "seed"));
               }});
  r.push_back({"type-bc",
               "signed derangements, crosspolytope and isotropic lattices",
               {{"nmax", 5, 8, "largest n for counting"},
                {"direct-nmax", 3, 4, "largest n for the crosspolytope Möbius"},
                {"poly-nmax", 6, 10, "largest n for the q-identity"},
                {"bnd-nmax", 4, 6, "largest n for the bar index sum"}},
               [](const Bounds& b) {
                 return verify_type_bc(I(b, "nmax"), I(b, "direct-nmax"), I(b, "poly-nmax"), I(b, "bnd-nmax"));
               }});
  // Shelling and statistics.
  r.push_back({"ascent-free-chains",
               "ascent-free maximal chains of Î_j(B_n) against the barred set and Eulerian numbers",
               {{"nmax", 7, 7, "largest n"}, {"poset-nmax", 5, 6, "largest n for the poset walk"}},
               [](const Bounds& b) { return verify_ascent_free_chains(I(b, "nmax"), I(b, "poset-nmax")); }});
  r.push_back({"barred-bijection",
               "bijection from the barred set onto permutations",
               {{"nmax", 7, 8, "largest n"}, {"random", 50, 5000, "random value sets"}, {"seed", 99, kNoLimit, "random seed"}},
               [](const Bounds& b) {
                 return verify_barred_bijection(I(b, "nmax"), I(b, "random"), U(b, "seed"));
               }});
  r.push_back(single("aid-equidistribution", "(aid, des) against (maj, exc)", "nmax", 8, 10, "largest n",
                     verify_equidist));
  // Properties of the bijections and of basis conversion.
  r.push_back({"bijection-round-trips",
               "round trips of the Gessel-Reutenauer pair, banners and gamma",
               {{"gr-nmax", 6, 7, "largest n for (σ, s)"},
                {"gr-values", 6, 8, "largest value of s"},
                {"ornament-size", 6, 7, "largest ornament"},
                {"ornament-values", 4, 6, "largest ornament letter"},
                {"banner-length", 4, 6, "largest banner"},
                {"banner-values", 3, 6, "largest banner letter"},
                {"gamma-nmax", 6, 7, "largest banner for gamma"},
                {"gamma-values", 3, 4, "largest letter for gamma"}},
               [](const Bounds& b) {
                 RoundTripBounds rb;
                 rb.gr_n = I(b, "gr-nmax");
                 rb.gr_values = I(b, "gr-values");
                 rb.ornament_size = I(b, "ornament-size");
                 rb.ornament_values = I(b, "ornament-values");
                 rb.banner_length = I(b, "banner-length");
                 rb.banner_values = I(b, "banner-values");
                 rb.gamma_n = I(b, "gamma-nmax");
                 rb.gamma_values = I(b, "gamma-values");
                 return verify_bijection_round_trips(rb);
               }});
  r.push_back({"bijection-involutions",
               "value swap, ornament complement and banner complement",
               {{"swap-size", 6, 7, "largest ornament for the value swap"},
                {"swap-values", 3, 5, "largest letter for the value swap"},
                {"complement-size", 5, 6, "largest ornament for the complement"},
                {"complement-values", 5, 6, "largest letter for the complement"},
                {"banner-length", 5, 6, "largest banner"},
                {"banner-values", 5, 6, "largest banner letter"}},
               [](const Bounds& b) {
                 InvolutionBounds ib;
                 ib.swap_size = I(b, "swap-size");
                 ib.swap_values = I(b, "swap-values");
                 ib.complement_size = I(b, "complement-size");
                 ib.complement_values = I(b, "complement-values");
                 ib.banner_length = I(b, "banner-length");
                 ib.banner_values = I(b, "banner-values");
                 return verify_bijection_involutions(ib);
               }});
  r.push_back(single("basis-round-trips", "conversions between the m, h, e, p, s bases and ω²", "degree", 9, 12,
                     "largest degree", verify_basis_round_trips));
  return r;
}

}  // namespace

const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> registry = build();
  return registry;
}

const SuiteSpec* find_suite(std::string_view id) {
  for (const auto& s : suite_registry())
    if (s.id == id) return &s;
  return nullptr;
}

Report run_suite(const SuiteSpec& spec, const Bounds& overrides) {
  Bounds b;
  for (const auto& bound : spec.bounds) b[bound.name] = bound.value;
  for (const auto& [key, value] : overrides) {
    auto it = b.find(key);
    if (it == b.end()) throw DomainError("suite " + spec.id + " has no bound '" + key + "'");
    if (value < 0) throw DomainError("bound '" + key + "' must be nonnegative");
    for (const auto& bound : spec.bounds)
      if (bound.name == key && value > bound.limit) throw CapExceeded(spec.id + "." + key, static_cast<long>(bound.limit), static_cast<long>(value));
    it->second = value;
  }
  return spec.run(b);
}

}  // namespace eqs
