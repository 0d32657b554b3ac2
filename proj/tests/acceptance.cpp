// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "tfr/cech.hpp"
#include "tfr/cli.hpp"
#include "tfr/cohomology.hpp"
#include "tfr/frobenius.hpp"
#include "tfr/lattice.hpp"
#include "tfr/monoid.hpp"

using namespace tfr;
using fixtures::v;
using moncomplex::MonoidalComplex;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

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

std::size_t cone_of(const MonoidalComplex& m, std::vector<IntVector> rays) {
  return *m.fan().find(polyhedral::cone_build(rays));
}

std::vector<std::size_t> complement(const MonoidalComplex& m, const std::vector<std::size_t>& st) {
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < m.fan().size(); ++c)
    if (!std::binary_search(st.begin(), st.end(), c)) rest.push_back(c);
  return rest;
}

using Dims = std::vector<std::size_t>;
const long kChars[] = {0, 2, 3};

struct Named {
  const char* name;
  MonoidalComplex m;
};

std::vector<Named> all_fixtures() {
  return {{"fix_a", fixtures::fix_a()},
          {"fix_b", fixtures::fix_b()},
          {"fix_c", fixtures::fix_c()},
          {"two_rays", fixtures::two_rays()},
          {"octant_boundary", fixtures::octant_boundary()}};
}

// ---- criteria ----

void ac1(Check& ok) {
  auto b = fixtures::fix_b();
  const IntVector a = v({0, -1});
  const auto formula = cohomology::local_cohomology_degree(b, a);
  const auto oracle = cech::cech_degree(b, a).table;
  const auto st = cohomology::star(b, negate(a));
  const auto restricted = moncomplex::restrict(b, polyhedral::subfan(b.fan(), complement(b, st)));
  const auto step = cech::cech_degree(restricted, a).table;
  for (long p : {0L, 2L}) {
    const std::string c = " (char " + std::to_string(p) + ")";
    ok(formula.dims(p) == Dims{0, 0, 1}, "formula H^2 != 1" + c);
    ok(oracle.dims(p) == Dims{0, 0, 1}, "oracle H^2 != 1" + c);
    ok(step.dims(p).size() == 3 && step.dims(p)[2] == 1, "restricted step H^2 != 1" + c);
  }
}

void ac2(Check& ok) {
  auto c = fixtures::fix_c();
  const auto C = cone_of(c, {v({1, 0}), v({0, 1})});
  const auto Cp = cone_of(c, {v({0, 1}), v({-1, 1})});
  const auto D = cone_of(c, {v({0, 1})});
  const auto& M = c.monoid(C);
  ok(monoid::normalization_gap(M, 6) == std::vector<IntVector>{v({0, 1}), v({0, 3}), v({0, 5})}, "(a) gap");
  const auto sn = monoid::check_seminormal_normal(M);
  ok(sn.seminormal && !sn.normal, "(b) seminormal/normal flags");
  const auto fp = frobenius::excluded_primes(c);
  ok(fp.excluded_primes() == std::vector<long>{2}, "(c) excluded primes");
  bool witness = false;
  if (fp.excluded.count(2))
    for (const auto& w : fp.excluded.at(2)) witness = witness || (w.maximal_cone == C && w.face == D);
  ok(witness, "(c) witness pair");
  for (long p : {0L, 2L}) {
    const auto d = cohomology::depth(c, p);
    ok(d.depth == 2 && d.cohen_macaulay, "(d) depth at char " + std::to_string(p));
  }
  ok(cohomology::star(c, v({0, 1})) == std::vector<std::size_t>{C}, "(e) star(-b)");
  std::vector<std::size_t> s2{D, C, Cp};
  std::sort(s2.begin(), s2.end());
  ok(cohomology::star(c, v({0, 2})) == s2, "(e) star(-2b)");
  for (const auto& b : {v({0, -1}), v({0, -2}), v({-1, -1}), v({-2, -2})}) {
    const auto f = cech::frobenius_check(c, b, 2);
    ok(f.per_degree.size() == 3 && f.per_degree[2].source_dim == 1 && f.per_degree[2].bijective,
       "(f) Frobenius at " + to_string(b));
  }
}

void ac3(Check& ok) {
  auto a = fixtures::fix_a();
  const auto p = moncomplex::presentation(a, 6);
  // variables by degree: A1 = (2,0,0), A2 = (0,2,0), A3 = (0,0,2), A4 = (1,1,0)
  auto idx = [&](const IntVector& g) {
    return static_cast<std::size_t>(std::find(p.variables.begin(), p.variables.end(), g) - p.variables.begin());
  };
  const std::size_t n = p.variables.size();
  const std::size_t x1 = idx(v({2, 0, 0})), x2 = idx(v({0, 2, 0})), x3 = idx(v({0, 0, 2})), x4 = idx(v({1, 1, 0}));
  if (n != 4 || x1 >= n || x2 >= n || x3 >= n || x4 >= n) {
    ok(false, "variables are not A1..A4");
    return;
  }
  moncomplex::Exponents x1x2(4, 0), x4sq(4, 0), x3x4(4, 0);
  x1x2[x1] = x1x2[x2] = 1;
  x4sq[x4] = 2;
  x3x4[x3] = x3x4[x4] = 1;
  ok(p.binomials.size() == 1, "one binomial");
  if (p.binomials.size() == 1) {
    const auto& [l, r] = p.binomials[0];
    ok((l == x1x2 && r == x4sq) || (l == x4sq && r == x1x2), "binomial is X1X2 - X4^2");
  }
  ok(p.monomials == std::vector<moncomplex::Exponents>{x3x4}, "monomial is X3X4");
  ok(p.verified, "congruence-closure verification");
}

void ac4_5(Check& ok4, Check& ok5) {
  for (const auto& f : all_fixtures()) {
    const auto& m = f.m;
    for_box(m.ambient_dim(), 5, [&](const IntVector& a) {
      const auto formula = cohomology::local_cohomology_degree(m, a);
      const auto oracle = cech::cech_degree(m, a).table;
      for (long p : kChars)
        ok4(formula.dims(p) == oracle.dims(p), std::string(f.name) + " at " + to_string(a) + " char " + std::to_string(p));
      if (m.seminormal() && !m.fan().support_contains(negate(a)))
        ok5(formula.is_zero() && oracle.is_zero(), std::string(f.name) + " nonzero at " + to_string(a));
    });
  }
}

bool boundary_squares_vanish(const MonoidalComplex& m) {
  const auto& cx = m.cells();
  const auto& fan = m.fan();
  for (std::size_t k = 2; k <= cx.top_cone_dim(); ++k)
    if (!(cx.boundary(k - 1) * cx.boundary(k)).is_zero()) return false;
  // diamond: every interval [E, G] of length 2 has exactly two middle cones with opposite sign products
  for (std::size_t g = 0; g < fan.size(); ++g)
    for (std::size_t e = 0; e < fan.size(); ++e) {
      if (fan.cone(g).dim() != fan.cone(e).dim() + 2 || !fan.is_face(e, g)) continue;
      int count = 0, sum = 0;
      for (std::size_t f = 0; f < fan.size(); ++f)
        if (fan.cone(f).dim() == fan.cone(e).dim() + 1 && fan.is_face(e, f) && fan.is_face(f, g)) {
          ++count;
          sum += cx.incidence(g, f) * cx.incidence(f, e);
        }
      if (count != 2 || sum != 0) return false;
    }
  return true;
}

void ac6(Check& ok) {
  const auto fx = all_fixtures();
  // cell complexes
  for (const auto& f : fx) ok(boundary_squares_vanish(f.m), std::string(f.name) + ": boundary / diamond");

  // HNF / SNF contracts
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = dist(rng);
    const auto h = lattice::hnf(a);
    bool hok = h.U * a == h.H && abs(lattice::determinant(h.U)) == 1;
    for (std::size_t i = 0; i < h.rank && hok; ++i) {
      const std::size_t p = h.pivot_cols[i];
      hok = h.H(i, p) > 0;
      for (std::size_t j = 0; j < p; ++j) hok = hok && h.H(i, j) == 0;
      for (std::size_t k = 0; k < i; ++k) hok = hok && h.H(k, p) >= 0 && h.H(k, p) < h.H(i, p);
    }
    for (std::size_t i = h.rank; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) hok = hok && h.H(i, j) == 0;
    ok(hok, "HNF contract, trial " + std::to_string(t));
    const auto s = lattice::snf(a);
    bool sok = s.U * a * s.V == s.D && abs(lattice::determinant(s.U)) == 1 && abs(lattice::determinant(s.V)) == 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) sok = sok && s.D(i, j) == 0;
    for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i) sok = sok && s.divisors[i + 1] % s.divisors[i] == 0;
    ok(sok, "SNF contract, trial " + std::to_string(t));
  }

  // monoid chain M ⊆ ⁺M ⊆ M̄ and idempotence
  std::vector<monoid::AffineMonoid> seminormal_monoids;
  for (const auto& f : fx)
    for (std::size_t i : f.m.fan().maximal()) {
      const auto& mon = f.m.monoid(i);
      const auto plus = monoid::seminormalize(mon).monoid;
      const auto bar = monoid::normalization(mon);
      const auto bar_m = monoid::AffineMonoid::generated_by(mon.ambient_dim(), bar.elements);
      bool chain = true;
      for (const auto& g : mon.generators()) chain = chain && plus.contains(g);
      for (const auto& g : plus.generators()) chain = chain && mon.normalization_contains(g);
      ok(chain, std::string(f.name) + ": M ⊆ +M ⊆ normalization");
      ok(monoid::same_monoid(monoid::seminormalize(plus).monoid, plus), std::string(f.name) + ": seminormalization idempotent");
      ok(monoid::same_monoid(monoid::AffineMonoid::generated_by(mon.ambient_dim(), monoid::normalization(bar_m).elements), bar_m),
         std::string(f.name) + ": normalization idempotent");
      seminormal_monoids.push_back(plus);
    }

  // order complex = star complex on Stanley fixtures
  for (const auto& f : fx)
    if (f.m.stanley()) {
      bool same = true;
      try {
        for (const auto& e : cohomology::bbr_formula(f.m)) same = same && e.order_complex.same_dims(e.star_complex);
      } catch (const std::exception&) {
        same = false;
      }
      ok(same, std::string(f.name) + ": order complex formula");
    }

  // summand identity: R_a = star part ⊕ restriction to the complement
  for (const auto& f : fx) {
    const auto& m = f.m;
    for_box(m.ambient_dim(), m.ambient_dim() == 3 ? 2 : 4, [&](const IntVector& a) {
      const auto whole = cech::cech_degree(m, a).table;
      const auto st = cohomology::star(m, negate(a));
      auto sum = cohomology::star_cohomology(m, st);
      sum.resize(m.dim());
      const auto rest = complement(m, st);
      if (!rest.empty()) {
        auto r = cech::cech_degree(moncomplex::restrict(m, polyhedral::subfan(m.fan(), rest)), a).table;
        r.resize(m.dim());
        sum += r;
      }
      for (long p : kChars) ok(whole.dims(p) == sum.dims(p), std::string(f.name) + ": summand identity at " + to_string(a));
    });
  }

  // star classes on fix_c
  {
    auto c = fixtures::fix_c();
    const auto cl = cohomology::star_classes(c);
    ok(cl.size() == 12 && cl.back().exterior, "fix_c: 11 classes + exterior");
    std::set<std::size_t> hit;
    for_box(2, 8, [&](const IntVector& b) {
      const auto i = cohomology::classify(c, cl, b);
      hit.insert(i);
      ok(cohomology::star(c, b) == cl[i].star, "fix_c: star constant on class at " + to_string(b));
    });
    ok(hit.size() == cl.size(), "fix_c: every class met in the scan");
  }

  // m_k ≥ c_k
  for (const auto& mon : seminormal_monoids) {
    const auto r = cohomology::c_k_monoid(mon, 0);
    ok(r.m_k >= r.c_k, "m_k < c_k");
  }

  // Stanley → F-pure everywhere
  for (const auto& f : fx)
    if (f.m.stanley()) ok(frobenius::excluded_primes(f.m).excluded.empty(), std::string(f.name) + ": excluded primes");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// all golden CLI cases, rendered in-process
std::vector<std::pair<std::string, std::string>> run_suite() {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream cases(slurp(std::string(SOURCE_DIR) + "/tests/golden_cases.txt"));
  std::string line;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string part;
    while (std::getline(ls, part, '|')) f.push_back(part);
    const auto doc = cli::parse_input(slurp(std::string(SOURCE_DIR) + "/fixtures/" + f[1] + ".json"));
    cli::CommandOptions o;
    std::istringstream args(f[3]);
    args >> o.command;
    std::string tok;
    while (args >> tok) {
      std::string val;
      if (tok == "--report") {
        o.report = true;
        continue;
      }
      args >> val;
      if (tok == "--degree") o.degree = cli::parse_degree(val, doc.dimension);
      else if (tok == "--char") o.characteristic = val;
      else if (tok == "-p") o.prime = std::stol(val);
      else if (tok == "--bound") o.bound = Integer(val);
      else if (tok == "--box") o.box = std::stol(val);
    }
    std::string text;
    try {
      text = cli::run_command(doc, o).text();
    } catch (const cli::InputError& e) {
      text = std::string("input error: ") + e.what() + "\n";
    }
    out.emplace_back(f[0], text);
  }
  return out;
}

void ac7(Check& ok) {
  const auto first = run_suite();
  const auto second = run_suite();
  ok(first == second, "two runs differ");
  for (const auto& [name, text] : first) {
    if (text.rfind("input error", 0) == 0) continue;
    ok(text == slurp(std::string(SOURCE_DIR) + "/fixtures/golden/" + name + ".json"), name + " differs from its golden report");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> run;
  };
  Check ac5_check;
  const std::vector<Criterion> criteria{
      {"AC1", "fix_b: H^2 = 1 at a = (0,-1), chars 0 and 2, formula and oracle", 1.0, ac1},
      {"AC2", "fix_c: gap, flags, excluded primes, depth, stars, Frobenius", 10.0, ac2},
      {"AC3", "fix_a: presentation at degree 6", 5.0, ac3},
      {"AC4", "formula = Čech oracle on [-5,5]^d over Q, F_2, F_3", 300.0, [&](Check& c) { ac4_5(c, ac5_check); }},
      {"AC5", "vanishing outside -|Σ| for seminormal fixtures (from the AC4 scan)", 300.0, [&](Check& c) { c = ac5_check; }},
      {"AC6", "property suites", 300.0, ac6},
      {"AC7", "determinism: two in-process suite runs byte-identical and equal to golden reports", 300.0, ac7},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Check ok;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ok);
    } catch (const std::exception& e) {
      ok(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit_s) ok(false, "took " + std::to_string(s) + " s, limit " + std::to_string(c.limit_s) + " s");
    const bool pass = ok.failures.empty();
    all = all && pass;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", s);
    std::cout << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << ok.count << " checks, " << buf << " s]";
    if (!pass) {
      std::cout << "  " << ok.failures.size() << " failure(s), first: " << ok.failures.front();
    }
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
