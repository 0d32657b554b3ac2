#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tfr/cech.hpp"
#include "tfr/cohomology.hpp"
#include "tfr/monoid.hpp"

using namespace tfr;
using namespace tfr::cohomology;
using fixtures::v;
using moncomplex::MonoidalComplex;

namespace {

std::size_t cone_of(const MonoidalComplex& m, std::vector<IntVector> rays) {
  return *m.fan().find(polyhedral::cone_build(rays));
}

template <class F>
void for_box(std::size_t d, long r, F f) {
  IntVector x(d, Integer(-r));
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < d && x[i] == r) x[i++] = -r;
    if (i == d) return;
    x[i] += 1;
  }
}

IntVector unit(std::size_t d, std::size_t i) {
  IntVector e = zero_vector(d);
  e[i] = 1;
  return e;
}

// Stanley complex on a simplicial complex given by its facets
MonoidalComplex stanley(std::size_t n, const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<fixtures::Cell> cells;
  for (const auto& f : facets) {
    fixtures::Cell c;
    for (auto i : f) c.rays.push_back(unit(n, i));
    cells.push_back(c);
  }
  return fixtures::make(cells, true);
}

MonoidalComplex rp2() {
  return stanley(6, {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                     {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

}  // namespace

TEST_CASE("stars in the F-injectivity example") {
  auto c = fixtures::fix_c();
  auto C = cone_of(c, {v({1, 0}), v({0, 1})});
  auto Cp = cone_of(c, {v({0, 1}), v({-1, 1})});
  auto y = cone_of(c, {v({0, 1})});
  CHECK(star(c, v({0, 1})) == std::vector<std::size_t>{C});
  std::vector<std::size_t> s2{y, C, Cp};
  std::sort(s2.begin(), s2.end());
  CHECK(star(c, v({0, 2})) == s2);
  CHECK(star(c, v({0, -1})).empty());
  CHECK(star(c, v({0, 0})).size() == c.fan().size());
}

TEST_CASE("star classes partition the support") {
  auto c = fixtures::fix_c();
  auto classes = star_classes(c);
  REQUIRE(classes.size() == 12);
  CHECK(classes.back().exterior);
  std::map<std::size_t, std::size_t> per_carrier;
  for (const auto& k : classes)
    if (!k.exterior) ++per_carrier[k.carrier];
  CHECK(per_carrier[0] == 1);
  CHECK(per_carrier[cone_of(c, {v({1, 0})})] == 1);
  CHECK(per_carrier[cone_of(c, {v({0, 1})})] == 2);
  CHECK(per_carrier[cone_of(c, {v({-1, 1})})] == 2);
  CHECK(per_carrier[cone_of(c, {v({1, 0}), v({0, 1})})] == 1);
  CHECK(per_carrier[cone_of(c, {v({0, 1}), v({-1, 1})})] == 4);
  for (const auto& k : classes) {
    if (k.exterior) continue;
    CHECK(k.class_count == Integer(per_carrier[k.carrier]));
  }
  // every degree in a box lands in a class with the same star
  for (const auto& m : {fixtures::fix_a(), fixtures::fix_c(), fixtures::two_rays(), fixtures::octant_boundary()}) {
    auto cl = star_classes(m);
    std::set<std::size_t> hit;
    for_box(m.ambient_dim(), m.ambient_dim() == 3 ? 3 : 6, [&](const IntVector& b) {
      auto i = classify(m, cl, b);
      hit.insert(i);
      CHECK(star(m, b) == cl[i].star);
    });
    // the exterior class is empty for complete fans
    const bool complete = m.ambient_dim() == 1;
    CHECK(hit.size() == cl.size() - (complete ? 1 : 0));
  }
}

TEST_CASE("star formula agrees with the Čech complex") {
  for (const auto& m : {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_c(), fixtures::two_rays(), fixtures::octant_boundary()}) {
    const long r = m.ambient_dim() == 3 ? 2 : 4;
    for_box(m.ambient_dim(), r, [&](const IntVector& a) {
      auto f = local_cohomology_degree(m, a);
      auto o = cech::cech_degree(m, a).table;
      INFO("degree " << to_string(a));
      for (long p : {0L, 2L, 3L}) CHECK(f.dims(p) == o.dims(p));
    });
  }
}

TEST_CASE("the non-seminormal example goes through the recursion") {
  auto b = fixtures::fix_b();
  CHECK_FALSE(b.seminormal());
  auto t = local_cohomology_degree(b, v({0, -1}));
  CHECK(t.dims(0) == std::vector<std::size_t>{0, 0, 1});
  CHECK(t.oracle_computed);
  CHECK_THROWS_AS(cohomology_report(b), std::invalid_argument);
  CHECK_THROWS_AS(depth(b, 0), std::invalid_argument);
}

TEST_CASE("for seminormal complexes the complement of the star contributes nothing") {
  for (const auto& m : {fixtures::fix_a(), fixtures::fix_c(), fixtures::octant_boundary()}) {
    REQUIRE(m.seminormal());
    for_box(m.ambient_dim(), 2, [&](const IntVector& a) {
      auto st = star(m, negate(a));
      std::vector<std::size_t> rest;
      for (std::size_t c = 0; c < m.fan().size(); ++c)
        if (!std::binary_search(st.begin(), st.end(), c)) rest.push_back(c);
      if (rest.empty()) return;
      auto sub = moncomplex::restrict(m, polyhedral::subfan(m.fan(), rest));
      CHECK(cech::cech_degree(sub, a).table.is_zero());
    });
  }
}

TEST_CASE("report and vanishing") {
  for (const auto& m : {fixtures::fix_a(), fixtures::fix_c(), fixtures::two_rays(), fixtures::octant_boundary()}) {
    auto rep = cohomology_report(m);
    CHECK(rep.back().star_class.exterior);
    CHECK(rep.back().table.is_zero());
    auto d = depth(m, 0);
    for (const auto& e : rep) {
      auto dims = e.table.dims(0);
      REQUIRE(dims.size() == m.dim() + 1);
      for (std::size_t i = 0; i < d.depth; ++i) CHECK(dims[i] == 0);
    }
  }
}

TEST_CASE("depth") {
  auto c = depth(fixtures::fix_c(), 0);
  CHECK(c.depth == 2);
  CHECK(c.cohen_macaulay);
  CHECK(depth(fixtures::two_rays(), 0).depth == 1);
  auto o = depth(fixtures::octant_boundary(), 0);
  CHECK(o.depth == 2);
  CHECK(o.skeleton_cm == std::vector<bool>{true, true, true});
  // two planes meeting at the origin
  auto split = depth(stanley(4, {{0, 1}, {2, 3}}), 0);
  CHECK(split.dim == 2);
  CHECK(split.depth == 1);
  CHECK(split.m_k == 1);
  CHECK(split.skeleton_cm == std::vector<bool>{true, true, false});
  // the projective plane is Cohen–Macaulay exactly away from characteristic 2
  auto p = rp2();
  CHECK(depth(p, 0).depth == 3);
  CHECK(depth(p, 3).depth == 3);
  CHECK(depth(p, 2).depth == 2);
  CHECK(depth(p, 2).m_k == 2);
}

TEST_CASE("c_k of seminormal monoids") {
  auto sq = monoid::AffineMonoid::generated_by(3, {v({1, 0, 1}), v({0, 1, 1}), v({1, 1, 1}), v({0, 0, 1})});
  auto r = c_k_monoid(sq, 0);
  CHECK(r.c_k == 3);
  CHECK(r.m_k == 3);
  auto fc = monoid::AffineMonoid::generated_by(2, {v({1, 0}), v({0, 2}), v({1, 1})});
  CHECK(c_k_monoid(fc, 0).c_k == 2);
  auto b = monoid::AffineMonoid::generated_by(2, {v({3, 0}), v({3, 1}), v({3, 3})});
  CHECK_THROWS_AS(c_k_monoid(b, 0), std::invalid_argument);
  auto sn = monoid::seminormalize(b).monoid;
  auto rs = c_k_monoid(sn, 0);
  CHECK(rs.c_k <= rs.m_k);
}

TEST_CASE("order complex formula on Stanley complexes") {
  auto o = fixtures::octant_boundary();
  auto entries = bbr_formula(o);
  REQUIRE(entries.size() == o.fan().size());
  // the link of the origin is a hexagon
  CHECK(entries[0].order_complex.dims(0) == std::vector<std::size_t>{0, 0, 1});
  for (const auto& m : {fixtures::two_rays(), rp2(), stanley(4, {{0, 1}, {2, 3}})}) CHECK_NOTHROW(bbr_formula(m));
  auto p = bbr_formula(rp2());
  CHECK(p[0].order_complex.dims(0) == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(p[0].order_complex.dims(2) == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK_THROWS_AS(bbr_formula(fixtures::fix_c()), std::invalid_argument);
}
