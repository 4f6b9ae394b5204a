#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqs/combinatorics.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Position of a letter in 1 < 1̄ < 2 < 2̄ < ...
inline int alph_rank(const Letter& a) { return 2 * a.value + (a.barred ? 1 : 0); }
// Lexicographic comparison under the same order; a proper prefix is smaller.
int compare_words(const Word& a, const Word& b);
int bars(const Word& w);
std::vector<int> values(const Word& w);

// A necklace is held as its lexicographically largest rotation.
using Necklace = Word;

Word largest_rotation(const Word& w);
bool is_primitive(const Word& w);
// Def. of a bicolored necklace read circularly.
bool satisfies_necklace_rule(const Word& w);
// Canonical necklace for a circular word; nullopt if the word is not a necklace.
std::optional<Necklace> make_necklace(const Word& circular);

class Ornament {
 public:
  Ornament() = default;
  // Every word is canonicalized; throws DomainError for an invalid necklace.
  explicit Ornament(const std::vector<Word>& necklaces);

  const std::vector<Necklace>& necklaces() const { return necklaces_; }
  Partition type() const;
  int bars() const;
  int size() const;
  // Exponent vector of the weight in x_1..x_m.
  std::vector<int> weight(int m) const;
  std::string str() const;

  bool operator==(const Ornament&) const = default;

 private:
  std::vector<Necklace> necklaces_;  // sorted, largest first
};

// Def. of a banner; the last letter is unbarred.
bool is_banner(const Word& w);
// Factors are Lyndon in the sense "strictly larger than every other rotation".
std::vector<Word> lyndon_factorization(const Word& w);
Partition lyndon_type(const Word& w);
// Factors a^j u with u nonempty over letters smaller than a and weakly increasing leaders.
std::optional<std::vector<Word>> increasing_factorization(const Word& w);

Ornament banner_to_ornament(const Word& banner);
Word ornament_to_banner(const Ornament& r);

// Bicolored Gessel-Reutenauer pair.
Ornament gr_phi(const Permutation& p, const std::vector<int>& s);
std::pair<Permutation, std::vector<int>> gr_eta(const Ornament& r);

struct MarkedSequence {
  std::vector<int> omega;  // weakly increasing
  int mark = 0;            // 1 <= mark <= length - 1

  bool operator==(const MarkedSequence&) const = default;
};

struct GammaImage {
  Word banner;
  MarkedSequence marked;
};

// Requires a banner whose Lyndon type has no part 1 and length >= 2.
GammaImage gamma(const Word& banner);
Word gamma_inverse(const Word& banner, const MarkedSequence& marked);

// Exchanges the multiplicities of k and k+1, keeping the bar count.
Necklace value_swap(const Necklace& n, int k);
Ornament value_swap(const Ornament& r, int k);
// Toggle bars on nonsingleton necklaces and reverse the order of the values used.
Ornament complement(const Ornament& r);
// Toggle bars except on the last letter and reverse the order of the values used.
Word complement_banner(const Word& b);

// Enumeration.
const std::vector<Necklace>& necklaces(int size, int max_value);
void for_each_ornament(const Partition& type, int max_value, const std::function<void(const Ornament&)>& fn);
void for_each_banner(int length, int max_value, const std::function<void(const Word&)>& fn);
std::string factorization_str(const std::vector<Word>& factors);

struct RoundTripBounds {
  int gr_n = 6, gr_values = 6;             // gr_eta(gr_phi(σ, s)) over compatible s
  int ornament_size = 6, ornament_values = 4;  // gr_phi(gr_eta(R))
  int banner_length = 4, banner_values = 3;    // banner <-> ornament, both directions
  int gamma_n = 6, gamma_values = 3;
};
struct InvolutionBounds {
  int swap_size = 6, swap_values = 3;
  int complement_size = 5, complement_values = 5;
  int banner_length = 5, banner_values = 5;
};

Report verify_bijection_round_trips(const RoundTripBounds& b = {});
// Value swap, ornament complement and banner complement: each squares to the identity and
// moves weights and bar counts as stated.
Report verify_bijection_involutions(const InvolutionBounds& b = {});

}  // namespace eqs
