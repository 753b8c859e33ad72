#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "alphadet/block_groups.hpp"
#include "alphadet/characters.hpp"
#include "alphadet/partitions.hpp"
#include "alphadet/permutations.hpp"

using namespace alphadet;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Brute-force SSYT counter: assign every cell a value in [1, len(mu)] and
// check rows/columns/content directly. Independent of the strip recursion.
long long ssyt_brute(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> cells(lambda.length());
  long long count = 0;
  const int maxv = mu.length();
  auto rec = [&](auto&& self, int r, int c) -> void {
    if (r == lambda.length()) {
      std::vector<int> content(maxv + 1, 0);
      for (const auto& row : cells)
        for (int v : row) ++content[v];
      for (int v = 1; v <= maxv; ++v)
        if (content[v] != mu.part(v - 1)) return;
      ++count;
      return;
    }
    if (c == lambda.part(r)) {
      self(self, r + 1, 0);
      return;
    }
    for (int v = 1; v <= maxv; ++v) {
      if (c > 0 && v < cells[r][c - 1]) continue;
      if (r > 0 && v <= cells[r - 1][c]) continue;
      cells[r].push_back(v);
      self(self, r, c + 1);
      cells[r].pop_back();
    }
  };
  rec(rec, 0, 0);
  return count;
}

}  // namespace

TEST_CASE("nu: ground size minus cycle count") {
  CHECK(nu(Permutation::identity(3)) == 0);
  CHECK(nu(Permutation::from_one_indexed({2, 1, 3})) == 1);
  CHECK(nu(Permutation::from_one_indexed({2, 3, 1})) == 2);
}

TEST_CASE("standard tableau counts") {
  CHECK(standard_tableau_count(P({5})) == 1);
  CHECK(standard_tableau_count(P({2, 1})) == 2);
  CHECK(standard_tableau_count(P({1, 1, 1, 1})) == 1);
  CHECK(standard_tableau_count(P({3, 2})) == 5);

  for (int m = 1; m <= 8; ++m) {
    mpz_class sum = 0;
    for (const auto& lam : partitions_of(m)) {
      mpz_class f = standard_tableau_count(lam);
      sum += f * f;
    }
    CHECK(sum == factorial(m));
  }
}

TEST_CASE("kostka numbers") {
  // K_{(nl),(l^n)} = 1 and K_{(nl-1,1),(l^n)} = n-1
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= 3; ++l) {
      Partition mu(std::vector<int>(n, l));
      CHECK(kostka(P({n * l}), mu) == 1);
      if (n * l - 1 >= 1)
        CHECK(kostka(P({n * l - 1, 1}), mu) == n - 1);
    }
  }
  // (4,2) with content (2,2,2): 3, confirmed by the brute-force oracle
  CHECK(ssyt_brute(P({4, 2}), P({2, 2, 2})) == 3);
  CHECK(kostka(P({4, 2}), P({2, 2, 2})) == 3);

  // strip recursion agrees with brute force across all shapes at weight <= 6
  for (int m = 1; m <= 6; ++m)
    for (const auto& lam : partitions_of(m))
      for (const auto& mu : partitions_of(m))
        CHECK(kostka(lam, mu) == ssyt_brute(lam, mu));

  // kostka(lambda, (1^m)) = f^lambda
  for (const auto& lam : partitions_of(6))
    CHECK(mpz_class(static_cast<long>(kostka(lam, Partition(std::vector<int>(6, 1))))) ==
          standard_tableau_count(lam));

  CHECK_THROWS_WITH(kostka(P({2}), P({1})), "weight mismatch");
}

TEST_CASE("content polynomial") {
  // (n): (1+a)(1+2a)...(1+(n-1)a)
  for (int n = 1; n <= 5; ++n) {
    AlphaPoly expect(1);
    for (int j = 1; j < n; ++j)
      expect *= AlphaPoly(std::vector<Rational>{1, j});
    CHECK(content_poly(P({n})) == expect);
  }
  // (2,1): cells (1,1),(1,2),(2,1) -> 1, 1+a, 1-a
  CHECK(content_poly(P({2, 1})) ==
        AlphaPoly(std::vector<Rational>{1, 1}) *
            AlphaPoly(std::vector<Rational>{1, -1}));
  CHECK(content_poly(P({1})) == AlphaPoly(1));
  for (const auto& lam : partitions_of(6))
    CHECK(content_poly(lam).evaluate(Rational(0)) == Rational(1));
}

TEST_CASE("murnaghan-nakayama characters") {
  // trivial representation
  for (const auto& rho : partitions_of(5))
    CHECK(character(P({5}), rho) == 1);
  // dimension = f^lambda on the identity class
  for (int m = 2; m <= 7; ++m) {
    CycleType id(std::vector<int>(m, 1));
    for (const auto& lam : partitions_of(m))
      CHECK(character(lam, id) == standard_tableau_count(lam));
  }
  // chi^{(2,1)} on (1^3), (2,1), (3) -> 2, 0, -1
  CHECK(character(P({2, 1}), P({1, 1, 1})) == 2);
  CHECK(character(P({2, 1}), P({2, 1})) == 0);
  CHECK(character(P({2, 1}), P({3})) == -1);
  // sign character
  for (const auto& rho : partitions_of(6)) {
    int sgn = (nu(rho) % 2 == 0) ? 1 : -1;
    CHECK(character(P({1, 1, 1, 1, 1, 1}), rho) == sgn);
  }
  // hook shapes (m-1,1): chi = fix - 1
  for (int m = 3; m <= 7; ++m) {
    for (const auto& rho : partitions_of(m)) {
      int fix = 0;
      for (int i = 0; i < rho.length(); ++i)
        if (rho.part(i) == 1) ++fix;
      CHECK(character(P({m - 1, 1}), rho) == fix - 1);
    }
  }
}

TEST_CASE("character orthogonality") {
  for (int m = 2; m <= 7; ++m) {
    const auto lams = partitions_of(m);
    for (size_t a = 0; a < lams.size(); ++a) {
      for (size_t b = a; b < lams.size(); ++b) {
        mpz_class sum = 0;
        for (const auto& rho : partitions_of(m))
          sum += conjugacy_class_size(rho) * character(lams[a], rho) *
                 character(lams[b], rho);
        CHECK(sum == (a == b ? factorial(m) : mpz_class(0)));
      }
    }
  }
}

TEST_CASE("block subgroups sizes and structure") {
  BlockSubgroups s22(2, 2);
  CHECK(s22.K().size() == 4);
  CHECK(s22.H().size() == 4);
  BlockSubgroups s32(3, 2);
  CHECK(s32.K().size() == 8);
  CHECK(s32.H().size() == 36);

  // all K fix blocks, all H fix residues
  for (const auto& k : s32.K())
    for (int x = 0; x < 6; ++x) CHECK(k(x) / 2 == x / 2);
  for (const auto& h : s32.H())
    for (int x = 0; x < 6; ++x) CHECK(h(x) % 2 == x % 2);

  // nu additivity along theta
  for (const auto& h : s32.H()) {
    auto sigmas = s32.theta(h);
    int total = 0;
    for (const auto& s : sigmas) total += nu(s);
    CHECK(nu(h) == total);
  }

  // theta is a homomorphism
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& h1 = s32.H()[rng() % s32.H().size()];
    const auto& h2 = s32.H()[rng() % s32.H().size()];
    auto t1 = s32.theta(h1), t2 = s32.theta(h2), t12 = s32.theta(h1 * h2);
    for (int i = 0; i < 2; ++i) CHECK(t12[i] == t1[i] * t2[i]);
  }

  CHECK_THROWS_AS(BlockSubgroups(12, 12), guard_error);
}

TEST_CASE("zonal spherical function") {
  // omega^lambda(id) = K_{lambda (l^n)}
  for (auto [n, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
    BlockSubgroups sub(n, l);
    Permutation id = Permutation::identity(n * l);
    Partition mu(std::vector<int>(n, l));
    for (const auto& lam : partitions_of(n * l, n))
      CHECK(zonal_spherical(lam, id, sub) == Rational(kostka(lam, mu)));
  }

  // n=2: trivial representation is constant 1
  BlockSubgroups s22(2, 2);
  for (const auto& h : s22.H())
    CHECK(zonal_spherical(P({4}), h, s22) == Rational(1));

  // n=2, l=1: K trivial, omega^{(1,1)} = sign
  BlockSubgroups s21(2, 1);
  CHECK(zonal_spherical(P({1, 1}), Permutation::from_one_indexed({2, 1}), s21) ==
        Rational(-1));

  // constant on double cosets K g K
  BlockSubgroups s32(3, 2);
  std::mt19937 rng(17);
  const auto s6 = symmetric_group(6);
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation& g = s6[rng() % s6.size()];
    const Permutation& k1 = s32.K()[rng() % s32.K().size()];
    const Permutation& k2 = s32.K()[rng() % s32.K().size()];
    for (const auto& lam : partitions_of(6, 3))
      CHECK(zonal_spherical(lam, k1 * g * k2, s32) == zonal_spherical(lam, g, s32));
  }
}

TEST_CASE("frobenius specialization") {
  // n=2 identity class: 1 = 1/2 (1+a) + 1/2 (1-a)
  AlphaPoly lhs = content_poly(P({2})) * Rational(1, 2) +
                  content_poly(P({1, 1})) * Rational(1, 2);
  CHECK(lhs == AlphaPoly(1));
  CHECK(frobenius_specialization_check(2));
  CHECK(frobenius_specialization_check(3));
  CHECK(frobenius_specialization_check(4));
  CHECK(frobenius_specialization_check(6));
  CHECK_THROWS_AS(frobenius_specialization_check(9), guard_error);
}

TEST_CASE("character errors") {
  CHECK_THROWS_WITH(character(P({2, 1}), P({2, 2})), "size mismatch");
  CHECK_THROWS_WITH(zonal_spherical(P({2}), Permutation::identity(4),
                                    BlockSubgroups(2, 2)),
                    "size mismatch");
}
