#include <doctest.h>

#include "eqs/qseries.hpp"
#include "eqs/qsym.hpp"
#include "eqs/sym.hpp"
#include "oracle.hpp"

using namespace eqs;

namespace {

MonomialExpansion oracle_basis(Basis b, const Partition& lam, int m) {
  switch (b) {
    case Basis::h: return oracle::product(lam, m, oracle::h);
    case Basis::e: return oracle::product(lam, m, oracle::e);
    case Basis::p: return oracle::product(lam, m, oracle::p);
    case Basis::s: return oracle::schur(lam, m);
    case Basis::m: {
      SymElem f = SymElem::basis_element(Basis::m, lam);
      MonomialExpansion out;
      std::vector<int> ex(static_cast<std::size_t>(m), 0);
      std::copy(lam.parts().begin(), lam.parts().end(), ex.begin());
      std::sort(ex.begin(), ex.end());
      do out[ex] += 1;
      while (std::next_permutation(ex.begin(), ex.end()));
      return out;
    }
  }
  return {};
}

SymElem sample(int n, Basis b, int seed) {
  SymElem f(n, b);
  int i = 0;
  for (const Partition& lam : partitions(n)) f.add(lam, MPoly(static_cast<long>((seed * 7 + i++ * 13) % 11) - 5));
  return f;
}

Partition P(std::initializer_list<int> v) { return Partition(std::vector<int>(v)); }

}  // namespace

TEST_CASE("every basis element expands as its brute-force definition") {
  for (int n = 0; n <= 5; ++n)
    for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      for (const Partition& lam : partitions(n)) {
        CAPTURE(basis_name(b));
        CAPTURE(lam.str());
        CHECK(expand_monomials(SymElem::basis_element(b, lam), n) == oracle_basis(b, lam, n));
      }
}

TEST_CASE("h expands with Kostka numbers checked in seven variables") {
  for (const Partition& lam : partitions(7))
    CHECK(expand_monomials(SymElem::basis_element(Basis::h, lam), 7) == oracle::product(lam, 7, oracle::h));
}

TEST_CASE("basis round trips") {
  for (int n : {3, 6, 9})
    for (Basis a : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s}) {
        SymElem f = sample(n, a, n + static_cast<int>(a));
        SymElem back = convert(convert(f, b), a);
        CHECK(back.coeffs() == f.coeffs());
      }
}

TEST_CASE("conversion examples") {
  SymElem h2 = SymElem::basis_element(Basis::h, P({2}));
  SymElem expect(2, Basis::m);
  expect.add(P({2}), 1);
  expect.add(P({1, 1}), 1);
  CHECK(convert(h2, Basis::m).coeffs() == expect.coeffs());

  SymElem f(6, Basis::h);
  f.add(P({4, 2}), 2);
  f.add(P({4, 1, 1}), -1);
  f.add(P({3, 2, 1}), 1);
  f.add(P({5, 1}), 1);
  SymElem s(6, Basis::s);
  s.add(P({6}), 3);
  s.add(P({5, 1}), 3);
  s.add(P({4, 2}), 3);
  s.add(P({3, 3}), 1);
  s.add(P({3, 2, 1}), 1);
  CHECK(convert(f, Basis::s).coeffs() == s.coeffs());
  auto check = schur_expand_and_check_positive(f);
  CHECK(check.positive);
  CHECK_FALSE(basis_positive(f, Basis::h));
}

TEST_CASE("omega") {
  CHECK(omega(SymElem::basis_element(Basis::h, P({3}))) == SymElem::basis_element(Basis::e, P({3})));
  SymElem s321 = SymElem::basis_element(Basis::s, P({3, 2, 1}));
  CHECK(omega(omega(s321)) == s321);
  for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s}) {
    SymElem f = sample(5, b, 3);
    CHECK(omega(omega(f)) == f);
    CHECK(convert(omega(f), Basis::s) == omega(convert(f, Basis::s)));
  }
  QSymElem F = QSymElem::fundamental(4, subset_from({1, 3}));
  CHECK(omega(F) == QSymElem::fundamental(4, subset_from({2})));
}

TEST_CASE("products match monomial multiplication") {
  SymElem a = sample(2, Basis::s, 1);
  SymElem b = sample(3, Basis::p, 2);
  CHECK(expand_monomials(a * b, 5) == oracle::mul(expand_monomials(a, 5), expand_monomials(b, 5)));
}

TEST_CASE("plethysm") {
  SymElem h2 = SymElem::basis_element(Basis::h, P({2}));
  SymElem expect = SymElem::basis_element(Basis::s, P({4})) + SymElem::basis_element(Basis::s, P({2, 2}));
  CHECK(plethysm_h(2, h2) == expect);
  SymElem g = sample(3, Basis::h, 4);
  CHECK(plethysm_h(1, g) == g);
  CHECK(plethysm_h(2, g).degree() == 6);
  CHECK(plethysm_p(2, SymElem::basis_element(Basis::p, P({3}))) == SymElem::basis_element(Basis::p, P({6})));
  // p_2[t h_1] = t^2 p_2
  SymElem th1 = SymElem::basis_element(Basis::h, P({1}), MPoly::var(Var::t));
  CHECK(plethysm_p(2, th1) == SymElem::basis_element(Basis::p, P({2}), MPoly::var(Var::t, 2)));
}

TEST_CASE("p1 derivative") {
  for (int n = 1; n <= 6; ++n)
    CHECK(p1_derivative(SymElem::basis_element(Basis::h, P({n}))) ==
          (n == 1 ? SymElem::one() : SymElem::basis_element(Basis::h, P({n - 1}))));
  CHECK(p1_derivative(SymElem::one()).is_zero());
}

TEST_CASE("characters") {
  CHECK(character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(character(P({2, 1}), P({3})) == -1);
  CHECK(character(P({1, 1, 1}), P({2, 1})) == -1);
  // column orthogonality
  for (const Partition& mu : partitions(5)) {
    Integer sum = 0;
    for (const Partition& lam : partitions(5)) sum += character(lam, mu) * character(lam, mu);
    CHECK(sum == Integer(static_cast<long>(mu.z())));
  }
  CHECK(kostka(P({3, 2}), {2, 2, 1}) == 2);
}

TEST_CASE("quasisymmetric basics") {
  CHECK(from_fundamental({}).is_zero());
  QSymElem hn = from_fundamental({{3, 0}});
  CHECK(to_sym(hn) == SymElem::basis_element(Basis::h, P({3})));
  QSymElem e2 = from_fundamental({{2, subset_from({1})}});
  CHECK(is_symmetric(e2));
  CHECK(to_sym(e2).coeffs() == SymElem::basis_element(Basis::m, P({1, 1})).coeffs());
  CHECK_FALSE(is_symmetric(QSymElem::monomial({1, 2})));
  CHECK_THROWS_AS(to_sym(QSymElem::monomial({1, 2})), DomainError);
  CHECK_THROWS_AS(from_fundamental({{2, 0}, {3, 0}}), DomainError);
  for (Subset s = 0; s < 16; ++s) {
    QSymElem f = QSymElem::fundamental(5, s);
    CHECK(to_basis(to_basis(f, QBasis::M), QBasis::F) == f);
  }
  SymElem g = sample(4, Basis::s, 9);
  CHECK(to_sym(to_qsym(g)) == g);
}

TEST_CASE("fundamental functions expand as compatible sequences") {
  int n = 4, m = 3;
  for (Subset s = 0; s < 8; ++s) {
    MonomialExpansion direct;
    std::vector<int> seq(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int i, int top) {
      if (i == n) {
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (int v : seq) ++e[static_cast<std::size_t>(v - 1)];
        direct[e] += 1;
        return;
      }
      bool strict = i > 0 && (s >> (i - 1)) & 1u;
      for (int v = strict ? top - 1 : top; v >= 1; --v) {
        seq[static_cast<std::size_t>(i)] = v;
        rec(i + 1, v);
      }
    };
    rec(0, m);
    CHECK(expand_monomials(QSymElem::fundamental(n, s), m) == direct);
  }
}

TEST_CASE("specializations") {
  MPoly q5 = MPoly::var(Var::q, 5);
  CHECK(stable_spec_numerator(QSymElem::fundamental(6, subset_from({1, 4}))) == q5);
  CHECK(stable_spec_numerator(QSymElem::fundamental(4, 0)) == MPoly(1));
  CHECK(principal_spec(QSymElem::fundamental(2, 0), 1) == MPoly(1));
  CHECK(principal_spec(QSymElem::fundamental(2, 0), 0).is_zero());
  // Σ_m Λ_m(F_S) p^m (p;q)_{n+1} = p^{|S|+1} q^{ΣS}, compared below the truncation degree.
  int n = 4, N = 7;
  for (Subset s = 0; s < 8; ++s) {
    MPoly series = spec_p_series(QSymElem::fundamental(n, s), N);
    MPoly cleared = (series * pochhammer(MPoly::var(Var::p), n + 1)).truncate(Var::p, N);
    CHECK(cleared == MPoly::var(Var::p, subset_size(s) + 1) * MPoly::var(Var::q, subset_sum(s)));
  }
  // Λ_m for m >= n stabilizes toward the stable specialization: the m -> ∞ limit times (q;q)_n.
  QSymElem f = QSymElem::fundamental(3, subset_from({2}));
  MPoly lim = (principal_spec(f, 8) * pochhammer(MPoly::var(Var::q), 3)).truncate(Var::q, 7);
  CHECK(lim == stable_spec_numerator(f));
}

TEST_CASE("basis round trip suite") {
  Report r = verify_basis_round_trips(5);
  CHECK(r.ok());
  CHECK(r.items.size() == 6 * 5);
}
