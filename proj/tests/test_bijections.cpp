#include <doctest.h>

#include <map>
#include <set>

#include "eqs/bijections.hpp"

using namespace eqs;

namespace {

Word W(const char* s) { return parse_word(s); }

std::vector<Word> words(std::initializer_list<const char*> list) {
  std::vector<Word> out;
  for (const char* s : list) out.push_back(W(s));
  return out;
}

}  // namespace

TEST_CASE("necklace rules") {
  for (const char* s : {"3'133'22", "3'13'3'22", "3'133'2'2", "3'13'3'2'2", "2"})
    CHECK(make_necklace(W(s)).has_value());
  CHECK_FALSE(make_necklace(W("3'1'3322'")).has_value());
  CHECK_FALSE(make_necklace(W("3'")).has_value());
  CHECK(is_primitive(W("1'11")));
  CHECK_FALSE(is_primitive(W("1'21'2")));
}

TEST_CASE("ornament type and weight") {
  Ornament r(words({"3'22", "3'2'112"}));
  CHECK(r.type() == Partition({5, 3}));
  CHECK(r.weight(3) == std::vector<int>{2, 4, 2});
}

TEST_CASE("Gessel-Reutenauer map on the worked example") {
  Ornament r = gr_phi(Permutation::parse("45162387"), {7, 7, 7, 5, 5, 4, 2, 2});
  CHECK(r == Ornament(words({"7'5'47", "7'5", "2'2"})));
  CHECK(gr_phi(Permutation(), {}) == Ornament());
  CHECK(gr_phi(Permutation::parse("21"), {3, 3}) == Ornament(words({"3'3"})));
  CHECK_THROWS_AS(gr_phi(Permutation::parse("21"), {1, 3}), DomainError);
}

TEST_CASE("inverse Gessel-Reutenauer map on the worked example") {
  Ornament r(words({"7'3'35", "7'35'3", "7'35'3", "5"}));
  auto [sigma, s] = gr_eta(r);
  CHECK(s == std::vector<int>{7, 7, 7, 5, 5, 5, 5, 3, 3, 3, 3, 3, 3});
  // The two equal necklaces may trade labels; compare up to that symmetry.
  auto expect = Permutation::from_cycles(13, {{1, 8, 13, 6}, {2, 11, 4, 9}, {3, 12, 5, 10}, {7}});
  auto alt = Permutation::from_cycles(13, {{1, 8, 13, 6}, {3, 12, 5, 10}, {2, 11, 4, 9}, {7}});
  CHECK((sigma == expect || sigma == alt));
  CHECK(gr_phi(sigma, s) == r);
  auto [p2, s2] = gr_eta(Ornament(words({"2'2"})));
  CHECK(p2 == Permutation::parse("21"));
  CHECK(s2 == std::vector<int>{2, 2});
}

TEST_CASE("Gessel-Reutenauer round trips") {
  for (int n = 0; n <= 6; ++n)
    for_each_perm(n, [&](const Permutation& p) {
      auto st = statistics(p);
      for (const auto& s : compatible_sequences(p, n <= 4 ? 6 : 3)) {
        Ornament r = gr_phi(p, s);
        CHECK(r.bars() == st.exc);
        CHECK(r.type() == cycle_type(p));
        auto back = gr_eta(r);
        CHECK(back.first == p);
        CHECK(back.second == s);
      }
    });
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions(n))
      for_each_ornament(lam, 3, [](const Ornament& r) {
        auto [p, s] = gr_eta(r);
        CHECK(gr_phi(p, s) == r);
      });
}

TEST_CASE("periodic comparison matches full-length comparison") {
  std::vector<Necklace> all;
  for (int k = 1; k <= 4; ++k)
    for (const auto& n : necklaces(k, 2)) all.push_back(n);
  for (const auto& a : all)
    for (const auto& b : all)
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          std::size_t len = a.size() * b.size() * 2;
          Word x, y;
          for (std::size_t t = 0; t < len; ++t) {
            x.push_back(a[(i + t) % a.size()]);
            y.push_back(b[(j + t) % b.size()]);
          }
          Word xa(a.begin() + static_cast<long>(i), a.end());
          xa.insert(xa.end(), a.begin(), a.begin() + static_cast<long>(i));
          Word yb(b.begin() + static_cast<long>(j), b.end());
          yb.insert(yb.end(), b.begin(), b.begin() + static_cast<long>(j));
          // Two readings compare as their first a+b letters do.
          Word xs(x.begin(), x.begin() + static_cast<long>(a.size() + b.size()));
          Word ys(y.begin(), y.begin() + static_cast<long>(a.size() + b.size()));
          CHECK((compare_words(x, y) > 0) == (compare_words(xs, ys) > 0));
        }
}

TEST_CASE("Lyndon factorizations") {
  CHECK(factorization_str(lyndon_factorization(W("2'27'57'5'47"))) == "2'2 . 7'5 . 7'5'47");
  CHECK(lyndon_type(W("2'27'57'5'47")) == Partition({4, 2, 2}));
  CHECK(factorization_str(lyndon_factorization(W("87886699558795"))) == "87 . 8866 . 99558795");
  CHECK(lyndon_factorization(W("4")).size() == 1);
}

TEST_CASE("increasing factorizations") {
  auto f = increasing_factorization(W("87886699558795"));
  REQUIRE(f.has_value());
  CHECK(factorization_str(*f) == "87 . 8866 . 995587 . 95");
  CHECK_FALSE(increasing_factorization(W("3")).has_value());
}

TEST_CASE("increasing factorization exists exactly without Lyndon parts of size one, and is unique") {
  for (int n = 1; n <= 5; ++n)
    for_each_banner(n, 4, [&](const Word& b) {
      bool no_ones = lyndon_type(b).multiplicity(1) == 0;
      auto f = increasing_factorization(b);
      CHECK(f.has_value() == no_ones);
      // Brute force over all cut sets.
      int count = 0;
      for (unsigned cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
        std::vector<Word> parts;
        Word cur;
        for (int i = 0; i < n; ++i) {
          cur.push_back(b[static_cast<std::size_t>(i)]);
          if (i == n - 1 || (cuts >> i) & 1u) {
            parts.push_back(cur);
            cur.clear();
          }
        }
        bool ok = true;
        int prev = -1;
        for (const Word& part : parts) {
          std::size_t j = 0;
          while (j < part.size() && part[j] == part[0]) ++j;
          if (j == part.size()) ok = false;
          for (std::size_t u = j; u < part.size(); ++u)
            if (alph_rank(part[u]) >= alph_rank(part[0])) ok = false;
          if (alph_rank(part[0]) < prev) ok = false;
          prev = alph_rank(part[0]);
        }
        if (ok) ++count;
      }
      CHECK(count == (no_ones ? 1 : 0));
    });
}

TEST_CASE("banner and ornament correspondence") {
  Word b = W("2'27'57'5'47");
  Ornament r = banner_to_ornament(b);
  CHECK(r.necklaces().size() == 3);
  CHECK(ornament_to_banner(r) == b);
  CHECK(banner_to_ornament(W("3")) == Ornament(words({"3"})));
  for (int n = 1; n <= 4; ++n)
    for_each_banner(n, 3, [](const Word& w) {
      Ornament o = banner_to_ornament(w);
      CHECK(o.bars() == bars(w));
      CHECK(o.type() == lyndon_type(w));
      CHECK(ornament_to_banner(o) == w);
    });
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lam : partitions(n))
      for_each_ornament(lam, 3, [](const Ornament& o) {
        Word w = ornament_to_banner(o);
        CHECK(is_banner(w));
        CHECK(banner_to_ornament(w) == o);
      });
}

TEST_CASE("gamma on the worked examples") {
  auto g1 = gamma(W("2'2'2'1.5'224'2.8'8'7'5'2235"));
  CHECK(g1.marked == MarkedSequence{{2, 2, 3, 5, 5, 7, 8, 8}, 4});
  CHECK(g1.banner == W("2'2'2'1.5'224'2"));
  auto g2 = gamma(W("2'2'2'1.5'224'2.8'8'7'5'22356'24"));
  CHECK(g2.marked == MarkedSequence{{2, 2, 3, 5, 5, 7}, 2});
  CHECK(g2.banner == W("2'2'2'1.5'224'2.8'8'6'24"));
  auto g3 = gamma(W("2'2'2'1.5'224'2.8'8'7'5'2235'46'24"));
  CHECK(g3.marked == MarkedSequence{{2, 2, 3, 5, 5, 7}, 3});
  CHECK(g3.banner == W("2'2'2'1.5'224'2.8'8'46'24"));
  for (const auto* g : {&g1, &g2, &g3}) (void)g;
  CHECK(gamma_inverse(g1.banner, g1.marked) == W("2'2'2'1.5'224'2.8'8'7'5'2235"));
  CHECK(gamma_inverse(g2.banner, g2.marked) == W("2'2'2'1.5'224'2.8'8'7'5'22356'24"));
  CHECK(gamma_inverse(g3.banner, g3.marked) == W("2'2'2'1.5'224'2.8'8'7'5'2235'46'24"));
}

TEST_CASE("gamma is a bijection onto pairs") {
  int n_max = 6, m = 3;
  // Banners without Lyndon parts of size one, keyed by length.
  std::map<int, std::vector<Word>> zero;
  zero[0].push_back(Word());
  for (int n = 2; n <= n_max; ++n)
    for_each_banner(n, m, [&](const Word& b) {
      if (lyndon_type(b).multiplicity(1) == 0) zero[n].push_back(b);
    });
  for (int n = 2; n <= n_max; ++n) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    for (const Word& b : zero[n]) {
      auto g = gamma(b);
      CHECK(lyndon_type(g.banner).multiplicity(1) == 0);
      CHECK(bars(b) == bars(g.banner) + g.marked.mark);
      auto wb = values(b), wg = values(g.banner);
      wg.insert(wg.end(), g.marked.omega.begin(), g.marked.omega.end());
      std::sort(wb.begin(), wb.end());
      std::sort(wg.begin(), wg.end());
      CHECK(wb == wg);
      CHECK(gamma_inverse(g.banner, g.marked) == b);
      std::vector<int> key = values(g.banner);
      for (const Letter& l : g.banner) key.push_back(l.barred);
      images.insert({key, [&] {
                       auto v = g.marked.omega;
                       v.push_back(-g.marked.mark);
                       return v;
                     }()});
    }
    // Count the target set: banners of length n' times marked sequences of length n - n'.
    std::size_t target = 0;
    for (int mm = 0; mm <= n - 2; ++mm) {
      int len = n - mm;
      std::size_t seqs = static_cast<std::size_t>(binomial(len + m - 1, len));
      target += zero[mm].size() * seqs * static_cast<std::size_t>(len - 1);
    }
    CHECK(images.size() == zero[n].size());
    CHECK(zero[n].size() == target);
  }
}

TEST_CASE("value swap examples") {
  Necklace a = *make_necklace(W("22'11'1222'2'11111"));
  CHECK(value_swap(a, 1) == *make_necklace(W("1122'2'111'122222'")));
  Necklace b = *make_necklace(W("5'3344'3'33'366'3'334'244"));
  CHECK(value_swap(b, 3) == *make_necklace(W("5'44'334'44'466'344'4'233")));
  Necklace c = *make_necklace(W("7'5"));
  CHECK(value_swap(c, 2) == c);
}

TEST_CASE("value swap is an involution exchanging contents") {
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lam : partitions(n)) {
      std::map<std::vector<int>, int> before, after;
      for_each_ornament(lam, 3, [&](const Ornament& r) {
        for (int k = 1; k <= 2; ++k) {
          Ornament s = value_swap(r, k);
          CHECK(value_swap(s, k) == r);
          CHECK(s.bars() == r.bars());
          CHECK(s.type() == r.type());
          auto wr = r.weight(3), ws = s.weight(3);
          std::swap(wr[static_cast<std::size_t>(k - 1)], wr[static_cast<std::size_t>(k)]);
          CHECK(wr == ws);
        }
      });
    }
}

TEST_CASE("complement involutions") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions(n)) {
      int ones = lam.multiplicity(1);
      for_each_ornament(lam, 3, [&](const Ornament& r) {
        Ornament c = complement(r);
        CHECK(complement(c) == r);
        CHECK(c.bars() == n - ones - r.bars());
        CHECK(c.type() == r.type());
      });
    }
  for (int n = 1; n <= 5; ++n)
    for_each_banner(n, 3, [&](const Word& b) {
      Word c = complement_banner(b);
      CHECK(is_banner(c));
      CHECK(complement_banner(c) == b);
      CHECK(bars(c) == n - 1 - bars(b));
    });
  Ornament singles(words({"1", "3", "3"}));
  CHECK(complement(singles) == Ornament(words({"3", "1", "1"})));
}

TEST_CASE("bijection property suites at small bounds") {
  RoundTripBounds rb;
  rb.gr_n = 4;
  rb.gr_values = 4;
  rb.ornament_size = 4;
  rb.ornament_values = 3;
  rb.gamma_n = 5;
  Report r = verify_bijection_round_trips(rb);
  CHECK(r.ok());
  CHECK(r.items.size() == 5 + 4 + 4 + 4);
  InvolutionBounds ib;
  ib.complement_size = 4;
  ib.banner_length = 4;
  Report s = verify_bijection_involutions(ib);
  CHECK(s.ok());
  CHECK(s.items.size() == 6 + 4 + 4);
}
