#include <random>
#include <set>

#include "doctest.h"
#include "tfr/lattice.hpp"

using namespace tfr;
using namespace tfr::lattice;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> dist(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

// Cofactor expansion; only for tiny matrices.
Integer det_by_expansion(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Integer t = a(0, j) * det_by_expansion(minor);
    s += (j % 2 ? -t : t);
  }
  return s;
}

Integer gcd_of_minors(const IntMatrix& a, std::size_t k) {
  // gcd of all k×k minors; independent characterisation of d1···dk
  Integer g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t r = idx.size(), i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) rs[i] = i;
  do {
    for (std::size_t i = 0; i < k; ++i) cs[i] = i;
    do {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
      Integer d = det_by_expansion(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (next(cs, a.cols()));
  } while (next(rs, a.rows()));
  return g;
}

}  // namespace

TEST_CASE("hnf contract on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a = random_matrix(rng, r, c, trial % 2 ? 3 : 20);
    auto h = hnf(a);
    CHECK(h.U * a == h.H);
    CHECK(abs(determinant(h.U)) == 1);
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = h.pivot_cols[i];
      CHECK(h.H(i, p) > 0);
      for (std::size_t j = 0; j < p; ++j) CHECK(h.H(i, j) == 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.H(k, p) >= 0);
        CHECK(h.H(k, p) < h.H(i, p));
      }
      if (i > 0) CHECK(p > h.pivot_cols[i - 1]);
    }
    for (std::size_t i = h.rank; i < r; ++i) CHECK(h.H.row(i) == zero_vector(c));
  }
}

TEST_CASE("snf contract and minors characterisation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, r, c, trial % 3 ? 4 : 30);
    auto s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    Integer prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      Integer g = gcd_of_minors(a, k);
      if (k <= s.divisors.size()) {
        prod *= s.divisors[k - 1];
        CHECK(g == prod);
      } else {
        CHECK(g == 0);
      }
    }
    CHECK(rank(a) == s.divisors.size());
    CHECK(elementary_divisors(a) == s.divisors);
  }
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 4;
    IntMatrix a = random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == det_by_expansion(a));
  }
}

TEST_CASE("unimodular inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = snf(random_matrix(rng, 3, 3, 6));
    CHECK(unimodular_inverse(s.U) * s.U == IntMatrix::identity(3));
  }
  CHECK_THROWS(unimodular_inverse(IntMatrix::from_rows({make_vector({2, 0}), make_vector({0, 1})}, 2)));
}

TEST_CASE("integer kernel is a saturated basis") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t r = 1 + rng() % 3, c = 2 + rng() % 3;
    IntMatrix a = random_matrix(rng, r, c, 5);
    auto ker = integer_kernel(a);
    CHECK(ker.size() == c - rank(a));
    for (const auto& k : ker) CHECK(is_zero(a.apply(k)));
    // brute force: every small kernel vector is an integer combination
    auto l = LatticeBasis::generated_by(c, ker);
    std::vector<long> v(c, -3);
    for (;;) {
      IntVector x(v.begin(), v.end());
      if (is_zero(a.apply(x))) CHECK(l.contains(x));
      std::size_t i = 0;
      while (i < c && v[i] == 3) v[i++] = -3;
      if (i == c) break;
      ++v[i];
    }
  }
}

TEST_CASE("membership, intersection and saturation against enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<IntVector> ga, gb;
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int i = 0; i < 2; ++i) {
      ga.push_back(make_vector({dist(rng), dist(rng), dist(rng)}));
      gb.push_back(make_vector({dist(rng), dist(rng), dist(rng)}));
    }
    auto a = LatticeBasis::generated_by(3, ga), b = LatticeBasis::generated_by(3, gb);
    auto ab = intersect(a, b);
    auto sat = saturation(a);
    // membership oracle: small combinations of generators
    std::set<IntVector> in_a;
    for (int i = -6; i <= 6; ++i)
      for (int j = -6; j <= 6; ++j) in_a.insert(add(scale(i, ga[0]), scale(j, ga[1])));
    for (const auto& x : in_a) {
      CHECK(a.contains(x));
      CHECK(ab.contains(x) == b.contains(x));
      auto coords = solve_in_lattice(a, x);
      REQUIRE(coords);
      IntVector back = zero_vector(3);
      for (std::size_t i = 0; i < a.rank(); ++i) back = add(back, scale((*coords)[i], a.basis()[i]));
      CHECK(back == x);
    }
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y)
        for (int z = -3; z <= 3; ++z) {
          IntVector v = make_vector({x, y, z});
          // v in saturation iff some multiple lies in a
          bool mult = false;
          for (int m = 1; m <= 200 && !mult; ++m) mult = a.contains(scale(m, v));
          CHECK(sat.contains(v) == mult);
          bool orth = true;
          for (const auto& e : orthogonal_complement(a)) orth = orth && sgn(dot(e, v)) == 0;
          CHECK(orth == sat.contains(v));
        }
  }
}

TEST_CASE("quotient invariants and coset representatives") {
  auto sup = LatticeBasis::full(2);
  auto sub = LatticeBasis::generated_by(2, {make_vector({2, 0}), make_vector({0, 6})});
  auto q = quotient_invariants(sub, sup);
  CHECK(q.free_rank == 0);
  CHECK(q.torsion_order() == 12);
  CHECK(q.torsion_primes() == std::vector<long>{2, 3});
  auto reps = coset_representatives(sub, sup);
  CHECK(reps.size() == 12);
  // pairwise distinct modulo sub
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(sub.contains(tfr::sub(reps[i], reps[j])));
  CHECK_THROWS_AS(quotient_invariants(sup, sub), std::invalid_argument);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dist(-5, 5);
    auto s = LatticeBasis::generated_by(2, {make_vector({dist(rng), dist(rng)}), make_vector({dist(rng), dist(rng)})});
    if (s.rank() < 2) continue;
    auto inv = quotient_invariants(s, sup);
    Integer det = abs(determinant(IntMatrix::from_rows(s.basis(), 2)));
    CHECK(inv.torsion_order() == det);
    CHECK(coset_representatives(s, sup).size() == det.get_ui());
  }
}

TEST_CASE("prime divisors") {
  CHECK(prime_divisors(Integer(360)) == std::vector<long>{2, 3, 5});
  CHECK(prime_divisors(Integer(-49)) == std::vector<long>{7});
  CHECK(prime_divisors(Integer(1)).empty());
}
