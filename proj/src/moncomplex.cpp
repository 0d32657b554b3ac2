#include "tfr/moncomplex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tfr::moncomplex {

using monoid::AffineMonoid;
using polyhedral::Cone;
using polyhedral::Fan;

void MonoidalComplex::set_flags(std::vector<ConeFlags> flags) {
  flags_ = std::move(flags);
  seminormal_ = normal_ = stanley_ = true;
  seminormal_witness_.reset();
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    normal_ = normal_ && flags_[i].normal;
    if (!flags_[i].seminormal) {
      if (seminormal_) seminormal_witness_ = std::make_pair(i, *flags_[i].seminormal_witness);
      seminormal_ = false;
    }
    stanley_ = stanley_ && flags_[i].normal && monoids_[i].group() == fan_.cone(i).lin_lattice();
  }
}

const polyhedral::CellComplex& MonoidalComplex::cells() const {
  if (!cells_) cells_ = std::make_shared<const polyhedral::CellComplex>(polyhedral::cell_complex(fan_));
  return *cells_;
}

namespace {

std::string cone_label(std::size_t i) { return "cone " + std::to_string(i); }

void check_monoid_spans_cone(const Fan& fan, const AffineMonoid& m, std::size_t i) {
  const Cone& c = fan.cone(i);
  for (const auto& g : m.generators())
    if (!c.contains(g))
      throw ComplexAxiomViolation("generator " + to_string(g) + " of " + cone_label(i) + " lies outside the cone", i, i, g);
  for (const auto& r : c.rays())
    if (!m.cone().contains(r))
      throw ComplexAxiomViolation("monoid of " + cone_label(i) + " does not span the ray " + to_string(r), i, i, r);
}

void check_face_compatibility(const Fan& fan, const std::vector<AffineMonoid>& monoids, std::size_t face, std::size_t c) {
  const Cone& d = fan.cone(face);
  for (const auto& g : monoids[face].generators())
    if (!monoids[c].contains(g))
      throw ComplexAxiomViolation("generator " + to_string(g) + " of " + cone_label(face) + " is not in the monoid of " +
                                      cone_label(c),
                                  c, face, g);
  for (const auto& g : monoids[c].generators())
    if (d.contains(g) && !monoids[face].contains(g))
      throw ComplexAxiomViolation("generator " + to_string(g) + " of " + cone_label(c) + " lies in " + cone_label(face) +
                                      " but not in its monoid",
                                  c, face, g);
}

IntVector facet_sum(const Cone& c) {
  IntVector l = zero_vector(c.ambient_dim());
  for (const auto& u : c.facets()) l = add(l, u);
  return l;
}

}  // namespace

MonoidalComplex assemble(Fan fan, std::vector<AffineMonoid> monoids, std::optional<Integer> seminormal_bound) {
  if (monoids.size() != fan.size()) throw std::invalid_argument("assemble: one monoid per cone is required");
  for (std::size_t i = 0; i < fan.size(); ++i) check_monoid_spans_cone(fan, monoids[i], i);
  for (std::size_t i = 0; i < fan.size(); ++i)
    for (std::size_t j = 0; j < fan.size(); ++j)
      if (i != j && fan.is_face(j, i)) check_face_compatibility(fan, monoids, j, i);

  std::vector<MonoidalComplex::ConeFlags> flags;
  for (const auto& m : monoids) {
    auto sn = monoid::check_seminormal_normal(m, seminormal_bound);
    flags.push_back({sn.seminormal, sn.normal, sn.seminormal_witness});
  }
  MonoidalComplex out;
  out.fan_ = std::move(fan);
  out.monoids_ = std::move(monoids);
  out.set_flags(std::move(flags));
  return out;
}

MonoidalComplex build_complex(const Fan& fan, const std::map<std::size_t, std::vector<IntVector>>& maximal_generators,
                              bool stanley, std::optional<Integer> seminormal_bound) {
  const std::size_t d = fan.ambient_dim();
  std::map<std::size_t, AffineMonoid> top;
  if (!stanley)
    for (const auto& [i, gens] : maximal_generators)
      if (std::find(fan.maximal().begin(), fan.maximal().end(), i) == fan.maximal().end())
        throw std::invalid_argument("monoid generators given for " + cone_label(i) + ", which is not maximal");
  for (std::size_t i : fan.maximal()) {
    const Cone& c = fan.cone(i);
    std::vector<IntVector> gens;
    if (stanley) {
      gens = monoid::hilbert_basis(c, c.lin_lattice(), facet_sum(c)).elements;
    } else {
      auto it = maximal_generators.find(i);
      if (it == maximal_generators.end()) throw std::invalid_argument("no monoid generators for maximal " + cone_label(i));
      gens = it->second;
    }
    for (const auto& g : gens)
      if (g.size() != d) throw std::invalid_argument("generator " + to_string(g) + " has wrong dimension");
    top.emplace(i, AffineMonoid::generated_by(d, gens));
  }
  std::vector<AffineMonoid> monoids;
  for (std::size_t j = 0; j < fan.size(); ++j) {
    auto it = top.find(j);
    if (it != top.end()) {
      monoids.push_back(it->second);
      continue;
    }
    // restriction from the first maximal cone containing j; the others are
    // checked against it in assemble
    for (std::size_t i : fan.maximal())
      if (fan.is_face(j, i)) {
        monoids.push_back(top.at(i).face_monoid(fan.cone(j)));
        break;
      }
  }
  return assemble(fan, std::move(monoids), seminormal_bound);
}

MonoidalComplex restrict(const MonoidalComplex& m, const Fan& subfan) {
  MonoidalComplex out;
  std::vector<MonoidalComplex::ConeFlags> flags;
  for (const auto& c : subfan.cones()) {
    auto idx = m.fan().find(c);
    if (!idx) throw std::invalid_argument("restrict: subfan cone with rays " + to_string(c.interior_vector()) + " is not in the fan");
    out.monoids_.push_back(m.monoids_[*idx]);
    flags.push_back(m.flags_[*idx]);
  }
  out.fan_ = subfan;
  out.set_flags(std::move(flags));
  return out;
}

GradedPiece graded_dim(const MonoidalComplex& m, const IntVector& a) {
  GradedPiece p;
  for (std::size_t i = 0; i < m.fan().size(); ++i)
    if (m.fan().cone(i).contains(a) && m.monoid(i).contains(a)) p.carrier.push_back(i);
  p.nonzero = !p.carrier.empty();
  return p;
}

MonoidalComplex seminormalize_complex(const MonoidalComplex& m, std::optional<Integer> bound) {
  std::map<std::size_t, std::vector<IntVector>> gens;
  for (std::size_t i : m.fan().maximal()) gens[i] = monoid::seminormalize(m.monoid(i), bound).generators;
  MonoidalComplex out = build_complex(m.fan(), gens, false, bound);
  if (!out.seminormal()) throw std::logic_error("seminormalized complex is not seminormal");
  // cone-wise: the restriction of ⁺M_C to a face D must be ⁺M_D
  for (std::size_t j = 0; j < m.fan().size(); ++j)
    if (!monoid::same_monoid(out.monoid(j), monoid::seminormalize(m.monoid(j), bound).monoid))
      throw std::logic_error("seminormalization does not commute with restriction to " + cone_label(j));
  return out;
}

namespace {

struct MonomialTable {
  std::vector<Exponents> all;
  std::map<Exponents, std::size_t> index;
  std::vector<std::size_t> parent;
  std::vector<bool> zero;

  MonomialTable(std::size_t n, std::size_t bound) {
    Exponents e(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
      if (i == n) {
        index.emplace(e, all.size());
        all.push_back(e);
        return;
      }
      for (long k = 0; k <= left; ++k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
      e[i] = 0;
    };
    rec(0, static_cast<long>(bound));
    parent.resize(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    zero.assign(all.size(), false);
  }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    zero[a] = zero[a] || zero[b];
  }
  bool is_zero(std::size_t x) { return zero[find(x)]; }
};

long total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0L); }

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

PresentationIdeal presentation(const MonoidalComplex& m, std::size_t degree_bound) {
  const Fan& fan = m.fan();
  const std::size_t d = m.ambient_dim();
  PresentationIdeal out;
  out.degree_bound = degree_bound;
  for (std::size_t i : fan.maximal())
    for (const auto& g : m.monoid(i).generators()) out.variables.push_back(g);
  std::sort(out.variables.begin(), out.variables.end(), lex_less);
  out.variables.erase(std::unique(out.variables.begin(), out.variables.end()), out.variables.end());
  const std::size_t n = out.variables.size();
  if (n > 62) throw std::length_error("presentation: too many variables");

  // support masks of the maximal cones
  std::vector<unsigned long long> cone_masks;
  for (std::size_t i : fan.maximal()) {
    unsigned long long mask = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (fan.cone(i).contains(out.variables[v])) mask |= 1ull << v;
    cone_masks.push_back(mask);
  }
  auto is_face = [&](unsigned long long s) {
    return std::any_of(cone_masks.begin(), cone_masks.end(), [&](unsigned long long c) { return (s & ~c) == 0; });
  };
  auto support = [&](const Exponents& e) {
    unsigned long long s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (e[v] > 0) s |= 1ull << v;
    return s;
  };
  auto evaluate = [&](const Exponents& e) {
    IntVector a = zero_vector(d);
    for (std::size_t v = 0; v < n; ++v)
      if (e[v]) a = add(a, scale(e[v], out.variables[v]));
    return a;
  };

  // candidates: generator kind, exponent data, ordered by degree
  struct Candidate {
    long degree;
    int kind;  // 0 binomial, 1 monomial
    Exponents u, v;
  };
  std::vector<Candidate> cand;

  // minimal non-faces (only ones of degree <= bound can matter for the check)
  for (unsigned long long s = 1; s < (1ull << n); ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if ((s >> v & 1) && !is_face(s & ~(1ull << v))) minimal = false;
    if (!minimal) continue;
    Exponents e(n, 0);
    for (std::size_t v = 0; v < n; ++v) e[v] = (s >> v) & 1;
    cand.push_back({total(e), 1, e, {}});
  }

  MonomialTable table(n, degree_bound);
  for (unsigned long long c : cone_masks) {
    std::map<IntVector, std::vector<std::size_t>, decltype(&lex_less)> fibres(&lex_less);
    for (std::size_t k = 0; k < table.all.size(); ++k)
      if ((support(table.all[k]) & ~c) == 0) fibres[evaluate(table.all[k])].push_back(k);
    for (auto& [a, members] : fibres) {
      std::sort(members.begin(), members.end(), [&](std::size_t x, std::size_t y) {
        long tx = total(table.all[x]), ty = total(table.all[y]);
        if (tx != ty) return tx < ty;
        return table.all[x] > table.all[y];
      });
      for (std::size_t k = 1; k < members.size(); ++k) {
        const Exponents& u = table.all[members[0]];
        const Exponents& v = table.all[members[k]];
        cand.push_back({std::max(total(u), total(v)), 0, v, u});
      }
    }
  }
  std::stable_sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.kind < b.kind;
  });

  const long bound = static_cast<long>(degree_bound);
  for (const auto& c : cand) {
    if (c.kind == 1) {
      if (c.degree <= bound && table.is_zero(table.index.at(c.u))) continue;
      out.monomials.push_back(c.u);
      if (c.degree > bound) continue;
      for (const auto& w : table.all)
        if (total(w) + c.degree <= bound) table.zero[table.find(table.index.at(add_exp(c.u, w)))] = true;
    } else {
      const std::size_t iu = table.index.at(c.u), iv = table.index.at(c.v);
      if (table.find(iu) == table.find(iv)) continue;
      out.binomials.emplace_back(c.u, c.v);
      for (const auto& w : table.all)
        if (total(w) + c.degree <= bound) table.unite(table.index.at(add_exp(c.u, w)), table.index.at(add_exp(c.v, w)));
    }
  }

  // verification: zero classes are exactly the vanishing monomials, and all
  // nonvanishing monomials of one multidegree form a single class
  std::map<IntVector, std::size_t, decltype(&lex_less)> class_of_degree(&lex_less);
  for (std::size_t k = 0; k < table.all.size(); ++k) {
    const Exponents& e = table.all[k];
    const bool vanishes = !is_face(support(e));
    if (vanishes != table.is_zero(k))
      throw std::logic_error("presentation check failed at monomial of total degree " + std::to_string(total(e)) +
                             (vanishes ? ": vanishing monomial not in the ideal" : ": nonvanishing monomial in the ideal"));
    if (vanishes) continue;
    IntVector a = evaluate(e);
    auto [it, fresh] = class_of_degree.emplace(a, table.find(k));
    if (!fresh && it->second != table.find(k))
      throw std::logic_error("presentation check failed in multidegree " + to_string(a) + ": two classes where graded_dim is 1");
    if (fresh && !graded_dim(m, a).nonzero)
      throw std::logic_error("presentation check failed: multidegree " + to_string(a) + " is not in the support");
  }
  out.monomials_checked = table.all.size();
  out.verified = true;
  return out;
}

}  // namespace tfr::moncomplex
