#include "tfr/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "tfr/cech.hpp"

namespace tfr::cohomology {

using moncomplex::MonoidalComplex;
using polyhedral::Fan;

std::vector<std::size_t> star(const MonoidalComplex& m, const IntVector& b) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < m.fan().size(); ++d)
    if (m.fan().cone(d).contains(b) && m.monoid(d).group().contains(b)) out.push_back(d);
  return out;
}

CohomologyTable star_cohomology(const MonoidalComplex& m, const std::vector<std::size_t>& cones) {
  const Fan& fan = m.fan();
  const auto& cx = m.cells();
  const std::size_t top = fan.dim();
  std::vector<std::vector<std::size_t>> by_dim(top + 1);
  for (std::size_t c : cones) by_dim[fan.cone(c).dim()].push_back(c);
  std::vector<std::size_t> sizes;
  for (const auto& v : by_dim) sizes.push_back(v.size());
  std::vector<IntMatrix> maps;
  for (std::size_t i = 0; i < top; ++i) {
    IntMatrix d(by_dim[i + 1].size(), by_dim[i].size());
    for (std::size_t r = 0; r < by_dim[i + 1].size(); ++r)
      for (std::size_t c = 0; c < by_dim[i].size(); ++c) d(r, c) = cx.incidence(by_dim[i + 1][r], by_dim[i][c]);
    maps.push_back(std::move(d));
  }
  return CohomologyTable::of_cochain_complex(sizes, maps);
}

CohomologyTable local_cohomology_degree(const MonoidalComplex& m, const IntVector& a, std::optional<Integer> oracle_bound) {
  if (a.size() != m.ambient_dim()) throw std::invalid_argument("degree has wrong dimension");
  const IntVector b = negate(a);
  const auto st = star(m, b);
  const std::size_t top = m.dim();
  if (m.seminormal()) return star_cohomology(m, st);
  if (st.empty()) {
    // the formula says nothing here; ask the Čech complex
    CohomologyTable t = cech::cech_degree(m, a, oracle_bound).table;
    t.resize(top);
    return t;
  }
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < m.fan().size(); ++c)
    if (!std::binary_search(st.begin(), st.end(), c)) rest.push_back(c);
  CohomologyTable t = star_cohomology(m, st);
  t.resize(top);
  if (!rest.empty()) {
    const MonoidalComplex sub = moncomplex::restrict(m, polyhedral::subfan(m.fan(), rest));
    CohomologyTable below = local_cohomology_degree(sub, a, oracle_bound);
    below.resize(top);
    t += below;
  }
  return t;
}

namespace {

bool same_class(const StarClass& c, const IntVector& b) {
  return c.class_lattice.contains(sub(b, c.representative));
}

}  // namespace

std::vector<StarClass> star_classes(const MonoidalComplex& m) {
  const Fan& fan = m.fan();
  std::vector<StarClass> out;
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto& cone = fan.cone(c);
    const auto& lin = cone.lin_lattice();
    lattice::LatticeBasis k = lin;
    for (std::size_t d : fan.cofaces(c)) k = lattice::intersect(k, lattice::intersect(m.monoid(d).group(), lin));
    const auto inv = lattice::quotient_invariants(k, lin);
    if (inv.free_rank != 0) throw std::logic_error("class lattice does not have full rank");
    const Integer exponent = inv.divisors.empty() ? Integer(1) : inv.divisors.back();
    const IntVector step = scale(exponent, cone.interior_vector());
    auto into_relint = [&](IntVector x) {
      while (!cone.relint_contains(x)) x = add(x, step);
      return x;
    };
    std::vector<StarClass> here;
    for (const auto& rep : lattice::coset_representatives(k, lin)) {
      StarClass sc;
      sc.carrier = c;
      sc.representative = into_relint(rep);
      sc.star = star(m, sc.representative);
      sc.class_lattice = k;
      sc.class_count = inv.torsion_order();
      // the star must not depend on the representative
      for (int trial = 0; trial < 3; ++trial) {
        IntVector y = add(sc.representative, scale(trial + 1, step));
        for (const auto& kb : k.basis()) y = add(y, scale(coef(rng), kb));
        y = into_relint(y);
        if (star(m, y) != sc.star)
          throw std::logic_error("star differs between " + to_string(sc.representative) + " and " + to_string(y));
      }
      here.push_back(std::move(sc));
    }
    std::sort(here.begin(), here.end(), [](const StarClass& x, const StarClass& y) { return lex_less(x.representative, y.representative); });
    for (auto& sc : here) out.push_back(std::move(sc));
  }
  StarClass ext;
  ext.exterior = true;
  ext.carrier = fan.size();
  ext.class_lattice = lattice::LatticeBasis::zero(m.ambient_dim());
  ext.class_count = 1;
  out.push_back(std::move(ext));
  return out;
}

std::size_t classify(const MonoidalComplex& m, const std::vector<StarClass>& classes, const IntVector& b) {
  auto carrier = m.fan().carrier(b);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    if (!carrier) {
      if (c.exterior) return i;
    } else if (!c.exterior && c.carrier == *carrier && same_class(c, b)) {
      return i;
    }
  }
  throw std::logic_error("degree " + to_string(b) + " belongs to no star class");
}

std::vector<ReportEntry> cohomology_report(const MonoidalComplex& m) {
  if (!m.seminormal())
    throw std::invalid_argument("the class report needs a seminormal complex; use per-degree computation instead");
  std::vector<ReportEntry> out;
  for (auto& sc : star_classes(m)) {
    ReportEntry e;
    e.table = star_cohomology(m, sc.star);
    e.star_class = std::move(sc);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// smallest i with a nonzero H^i over F_p somewhere, or dim + 1 if none
std::size_t first_nonvanishing(const MonoidalComplex& m, long p) {
  std::size_t best = m.dim() + 1;
  for (const auto& e : cohomology_report(m)) {
    const auto d = e.table.dims(p);
    for (std::size_t i = 0; i < d.size() && i < best; ++i)
      if (d[i] != 0) best = i;
  }
  return best;
}

}  // namespace

DepthResult depth(const MonoidalComplex& m, long p) {
  if (!m.seminormal()) throw std::invalid_argument("depth via rank selection needs a seminormal complex");
  DepthResult r;
  r.dim = m.dim();
  r.depth = first_nonvanishing(m, p);
  if (r.depth > r.dim) throw std::logic_error("no nonvanishing local cohomology");
  bool all_so_far = true;
  for (std::size_t t = 0; t <= r.dim; ++t) {
    const MonoidalComplex skel = moncomplex::restrict(m, polyhedral::skeleton_fan(m.fan(), t));
    const bool cm = first_nonvanishing(skel, p) == skel.dim();
    r.skeleton_cm.push_back(cm);
    all_so_far = all_so_far && cm;
    if (all_so_far) r.m_k = t;
  }
  if (r.m_k != r.depth)
    throw std::logic_error("rank selection failed: depth " + std::to_string(r.depth) + " but m_k " + std::to_string(r.m_k));
  r.cohen_macaulay = r.depth == r.dim;
  return r;
}

MonoidalComplex face_poset_complex(const monoid::AffineMonoid& mon) {
  const Fan fan = polyhedral::fan_build({mon.cone()});
  return moncomplex::build_complex(fan, {{fan.maximal().front(), mon.generators()}}, false);
}

CkResult c_k_monoid(const monoid::AffineMonoid& mon, long p) {
  if (!monoid::check_seminormal_normal(mon).seminormal) throw std::invalid_argument("c_k needs a seminormal monoid");
  const auto faces = polyhedral::face_lattice(mon.cone());
  const std::size_t dim = mon.cone().dim();
  std::vector<bool> cm_up_to(dim + 1, true);
  for (std::size_t i = 0; i < faces.faces.size(); ++i) {
    const auto face = mon.face_monoid(faces.faces[i]);
    if (!depth(face_poset_complex(face), p).cohen_macaulay)
      for (std::size_t t = faces.dims[i]; t <= dim; ++t) cm_up_to[t] = false;
  }
  CkResult r;
  for (std::size_t t = 0; t <= dim && cm_up_to[t]; ++t) r.c_k = t;
  r.m_k = depth(face_poset_complex(mon), p).m_k;
  if (r.m_k < r.c_k) throw std::logic_error("m_k < c_k");
  return r;
}

namespace {

// Reduced cohomology of the order complex of the poset `elems` (ordered by
// the face relation); index j of the result is H̃^{j−1}.
CohomologyTable order_complex_cohomology(const Fan& fan, const std::vector<std::size_t>& elems) {
  std::vector<std::vector<std::vector<std::size_t>>> chains(1, {{}});  // by length
  std::function<void(std::vector<std::size_t>&)> grow = [&](std::vector<std::size_t>& chain) {
    for (std::size_t e : elems) {
      if (!chain.empty() && (e == chain.back() || !fan.is_face(chain.back(), e))) continue;
      chain.push_back(e);
      if (chains.size() <= chain.size()) chains.resize(chain.size() + 1);
      chains[chain.size()].push_back(chain);
      grow(chain);
      chain.pop_back();
    }
  };
  std::vector<std::size_t> start;
  grow(start);
  for (auto& level : chains) std::sort(level.begin(), level.end());
  std::vector<std::size_t> sizes;
  for (const auto& level : chains) sizes.push_back(level.size());
  std::vector<IntMatrix> maps;
  for (std::size_t j = 0; j + 1 < chains.size(); ++j) {
    // coboundary from chains of length j to length j + 1
    IntMatrix d(chains[j + 1].size(), chains[j].size());
    for (std::size_t r = 0; r < chains[j + 1].size(); ++r) {
      const auto& big = chains[j + 1][r];
      for (std::size_t drop = 0; drop < big.size(); ++drop) {
        std::vector<std::size_t> face = big;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = std::lower_bound(chains[j].begin(), chains[j].end(), face);
        d(r, static_cast<std::size_t>(it - chains[j].begin())) = drop % 2 ? -1 : 1;
      }
    }
    maps.push_back(std::move(d));
  }
  return CohomologyTable::of_cochain_complex(sizes, maps);
}

CohomologyTable shifted(const CohomologyTable& t, std::size_t offset, std::size_t top) {
  CohomologyTable out = CohomologyTable::zero(top);
  auto move = [&](const std::vector<std::size_t>& src) {
    std::vector<std::size_t> v(top + 1, 0);
    for (std::size_t j = 0; j < src.size(); ++j)
      if (src[j] != 0) {
        if (j + offset > top) throw std::logic_error("order complex cohomology beyond the top degree");
        v[j + offset] = src[j];
      }
    return v;
  };
  out.dims_q = move(t.dims_q);
  for (const auto& [p, d] : t.exceptional) out.exceptional[p] = move(d);
  return out;
}

}  // namespace

std::vector<BbrEntry> bbr_formula(const MonoidalComplex& m) {
  if (!m.stanley()) throw std::invalid_argument("the order complex formula applies to Stanley complexes only");
  const Fan& fan = m.fan();
  std::vector<BbrEntry> out;
  for (std::size_t c = 0; c < fan.size(); ++c) {
    const auto st = fan.cofaces(c);
    std::vector<std::size_t> above;
    for (std::size_t d : st)
      if (d != c) above.push_back(d);
    BbrEntry e;
    e.cone = c;
    e.order_complex = shifted(order_complex_cohomology(fan, above), fan.cone(c).dim(), m.dim());
    e.star_complex = star_cohomology(m, st);
    e.star_complex.resize(m.dim());
    if (!e.order_complex.same_dims(e.star_complex))
      throw std::logic_error("order complex and star complex disagree at cone " + std::to_string(c));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace tfr::cohomology
