#include "tfr/monoid.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace tfr::monoid {

using lattice::LatticeBasis;
using polyhedral::Cone;

struct AffineMonoid::Memo {
  std::unordered_map<IntVector, long, IntVectorHash> table;
};

namespace {

constexpr long kAbsent = -1;
constexpr long kEmptySum = -2;

IntVector sum_of_facets(const Cone& c) {
  IntVector l = zero_vector(c.ambient_dim());
  for (const auto& u : c.facets()) l = add(l, u);
  return l;
}

bool degree_lex_less(const AffineMonoid& m, const IntVector& a, const IntVector& b) {
  Integer da = m.degree(a), db = m.degree(b);
  if (da != db) return da < db;
  return lex_less(a, b);
}

}  // namespace

AffineMonoid AffineMonoid::generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  AffineMonoid m;
  m.ambient_dim_ = ambient_dim;
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("monoid generator " + to_string(g) + " has wrong dimension");
    if (!is_zero(g)) m.generators_.push_back(g);
  }
  std::sort(m.generators_.begin(), m.generators_.end(), lex_less);
  m.generators_.erase(std::unique(m.generators_.begin(), m.generators_.end()), m.generators_.end());
  m.cone_ = m.generators_.empty() ? Cone::zero(ambient_dim) : polyhedral::cone_build(m.generators_);
  m.group_ = LatticeBasis::generated_by(ambient_dim, m.generators_);
  m.grading_ = sum_of_facets(m.cone_);
  for (const auto& g : m.generators_)
    if (sgn(dot(m.grading_, g)) <= 0) throw std::logic_error("grading is not positive on generator " + to_string(g));
  m.memo_ = std::make_shared<Memo>();
  return m;
}

long AffineMonoid::step(const IntVector& v) const {
  if (is_zero(v)) return kEmptySum;
  if (sgn(degree(v)) <= 0 || !cone_.contains(v) || !group_.contains(v)) return kAbsent;
  auto it = memo_->table.find(v);
  if (it != memo_->table.end()) return it->second;
  long found = kAbsent;
  for (std::size_t i = 0; i < generators_.size() && found == kAbsent; ++i)
    if (step(sub(v, generators_[i])) != kAbsent) found = static_cast<long>(i);
  memo_->table.emplace(v, found);
  return found;
}

bool AffineMonoid::contains(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("monoid membership: dimension mismatch");
  return step(v) != kAbsent;
}

std::optional<std::vector<Integer>> AffineMonoid::decompose(const IntVector& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Integer> coeff(generators_.size(), Integer(0));
  IntVector rest = v;
  for (long s = step(rest); s != kEmptySum; s = step(rest)) {
    coeff[static_cast<std::size_t>(s)] += 1;
    rest = sub(rest, generators_[static_cast<std::size_t>(s)]);
  }
  return coeff;
}

AffineMonoid AffineMonoid::face_monoid(const Cone& face) const {
  std::vector<IntVector> gens;
  for (const auto& g : generators_)
    if (face.contains(g)) gens.push_back(g);
  return generated_by(ambient_dim_, gens);
}

bool same_monoid(const AffineMonoid& a, const AffineMonoid& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

namespace {

// Pulling triangulation on the extreme rays: cone the first ray over a
// triangulation of every facet not containing it.
void triangulate(const Cone& c, std::vector<std::vector<IntVector>>& out) {
  const auto& rays = c.rays();
  if (rays.size() == c.dim()) {
    out.push_back(rays);
    return;
  }
  const IntVector& apex = rays.front();
  for (const auto& u : c.facets()) {
    if (sgn(dot(u, apex)) == 0) continue;
    std::vector<IntVector> face;
    for (const auto& r : rays)
      if (sgn(dot(u, r)) == 0) face.push_back(r);
    std::vector<std::vector<IntVector>> sub;
    triangulate(polyhedral::cone_build(face), sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

std::vector<Integer> coords(const LatticeBasis& l, const IntVector& v) {
  auto c = lattice::solve_in_lattice(l, v);
  if (!c) throw std::logic_error("vector " + to_string(v) + " is not in the lattice");
  return *c;
}

// Points of L in the half-open parallelepiped spanned by the lattice
// multiples of the given rays, plus those multiples themselves.
std::vector<IntVector> parallelepiped_points(const std::vector<IntVector>& rays, const LatticeBasis& l) {
  const std::size_t k = rays.size();
  const std::size_t d = l.ambient_dim();
  std::vector<IntVector> s;
  for (const auto& r : rays) {
    IntVector m = r;
    while (!l.contains(m)) m = add(m, r);
    s.push_back(m);
  }
  IntMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    auto c = coords(l, s[i]);
    for (std::size_t j = 0; j < k; ++j) a(i, j) = c[j];
  }
  Integer det = lattice::determinant(a);
  const int sign = sgn(det);
  if (sign == 0) throw std::logic_error("degenerate simplicial cone");
  std::vector<IntVector> out = s;
  for (const auto& rep : lattice::coset_representatives(LatticeBasis::generated_by(d, s), l)) {
    auto c = coords(l, rep);
    IntVector point = zero_vector(d);
    for (std::size_t i = 0; i < k; ++i) {
      // Cramer: coefficient of s_i is det(a with row i replaced by c) / det
      IntMatrix ai = a;
      for (std::size_t j = 0; j < k; ++j) ai(i, j) = c[j];
      Integer num = lattice::determinant(ai) * sign;
      Integer q = abs(det);
      Integer frac;
      mpz_fdiv_r(frac.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
      point = add(point, scale(frac, s[i]));
    }
    Integer q = abs(det);
    for (auto& x : point) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    if (!is_zero(point)) out.push_back(point);
  }
  return out;
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c, const LatticeBasis& l, const IntVector& grading) {
  HilbertBasis hb;
  hb.max_parallelepiped_degree = 0;
  if (c.dim() == 0) return hb;
  if (l.rank() != c.dim()) throw std::invalid_argument("hilbert_basis: lattice does not span the cone");
  std::vector<std::vector<IntVector>> simplices;
  triangulate(c, simplices);
  std::vector<IntVector> cand;
  for (const auto& s : simplices)
    for (auto& p : parallelepiped_points(s, l)) cand.push_back(std::move(p));
  std::sort(cand.begin(), cand.end(), lex_less);
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& p : cand) hb.max_parallelepiped_degree = std::max(hb.max_parallelepiped_degree, Integer(dot(grading, p)));

  auto in_closure = [&](const IntVector& v) { return l.contains(v) && c.contains(v); };
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& g : cand)
      if (g != x && in_closure(sub(x, g))) {
        reducible = true;
        break;
      }
    if (!reducible) hb.elements.push_back(x);
  }
  return hb;
}

HilbertBasis normalization(const AffineMonoid& m) { return hilbert_basis(m.cone(), m.group(), m.grading()); }

std::vector<IntVector> enumerate_normalization(const AffineMonoid& m, const HilbertBasis& hb, const Integer& bound) {
  std::set<IntVector> seen{zero_vector(m.ambient_dim())};
  std::vector<IntVector> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& h : hb.elements) {
      IntVector y = add(queue[i], h);
      if (m.degree(y) <= bound && seen.insert(y).second) queue.push_back(y);
    }
  std::sort(queue.begin(), queue.end(), [&](const IntVector& a, const IntVector& b) { return degree_lex_less(m, a, b); });
  return queue;
}

std::vector<IntVector> normalization_gap(const AffineMonoid& m, const Integer& bound) {
  std::vector<IntVector> out;
  for (const auto& x : enumerate_normalization(m, normalization(m), bound))
    if (!m.contains(x)) out.push_back(x);
  return out;
}

Integer default_seminormal_bound(const AffineMonoid& m) {
  Integer b = 2 * normalization(m).max_parallelepiped_degree;
  // generators of M living on a thin face can sit above the parallelepiped
  for (const auto& g : m.generators()) b = std::max(b, m.degree(g));
  return b < 1 ? Integer(1) : b;
}

SeminormalizationResult seminormalize(const AffineMonoid& m, std::optional<Integer> bound) {
  const HilbertBasis hb = normalization(m);
  SeminormalizationResult res;
  res.bound = bound ? *bound : default_seminormal_bound(m);
  if (res.bound < 0) throw std::invalid_argument("seminormalization bound must be non-negative");
  res.verified_bound = 2 * res.bound;

  // Reid–Roberts: ⁺M is the union over faces F of Z(M ∩ F) ∩ relint F.
  const auto faces = polyhedral::face_lattice(m.cone()).faces;
  std::vector<LatticeBasis> face_groups;
  for (const auto& f : faces) face_groups.push_back(m.face_monoid(f).group());
  auto in_plus = [&](const IntVector& x) {
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].relint_contains(x)) return face_groups[i].contains(x);
    return false;
  };

  std::vector<IntVector> plus;
  for (auto& x : enumerate_normalization(m, hb, res.verified_bound))
    if (in_plus(x)) plus.push_back(std::move(x));
  std::set<IntVector> plus_set(plus.begin(), plus.end());

  // in degree order, x is irreducible iff no smaller irreducible g has x - g ∈ ⁺M
  std::vector<IntVector> gens;
  for (const auto& x : plus) {
    if (is_zero(x) || m.degree(x) > res.bound) continue;
    bool reducible = std::any_of(gens.begin(), gens.end(), [&](const IntVector& g) { return plus_set.count(sub(x, g)) > 0; });
    if (!reducible) gens.push_back(x);
  }
  res.monoid = AffineMonoid::generated_by(m.ambient_dim(), gens);
  for (const auto& x : plus)
    if (!res.monoid.contains(x))
      throw BoundTooSmall("seminormalization bound " + res.bound.get_str() + " too small: " + to_string(x) +
                              " is not generated",
                          x);
  // M ⊆ ⁺M must hold whatever the degree of its generators
  for (const auto& g : m.generators())
    if (!res.monoid.contains(g))
      throw BoundTooSmall("seminormalization bound " + res.bound.get_str() + " too small: generator " + to_string(g) +
                              " is not generated",
                          g);
  for (const auto& g : gens)
    if (!m.contains(g)) {
      res.witness = g;
      break;
    }
  res.generators = res.monoid.generators();
  return res;
}

SeminormalNormal check_seminormal_normal(const AffineMonoid& m, std::optional<Integer> bound) {
  SeminormalNormal out;
  HilbertBasis hb = normalization(m);
  std::sort(hb.elements.begin(), hb.elements.end(), [&](const IntVector& a, const IntVector& b) { return degree_lex_less(m, a, b); });
  out.normal = true;
  for (const auto& h : hb.elements)
    if (!m.contains(h)) {
      out.normal = false;
      out.normal_witness = h;
      break;
    }
  const SeminormalizationResult sn = seminormalize(m, bound);
  out.seminormal = !sn.witness.has_value();
  out.seminormal_witness = sn.witness;
  out.verified_bound = sn.verified_bound;

  // definition: 2x, 3x ∈ M and x ∈ Z M force x ∈ M
  auto violates = [&](const IntVector& x) { return !m.contains(x) && m.contains(scale(2, x)) && m.contains(scale(3, x)); };
  for (const auto& x : enumerate_normalization(m, hb, sn.bound))
    if (violates(x)) {
      out.definition_witness = x;
      break;
    }
  if (out.seminormal && out.definition_witness)
    throw std::logic_error("seminormality scan found " + to_string(*out.definition_witness) + " but the face union did not");
  if (!out.seminormal && !out.definition_witness) {
    // c·w ∈ M for all large c; the last c with c·w ∉ M violates the definition
    for (int c = 1; c <= 1000 && !out.definition_witness; ++c) {
      IntVector x = scale(c, *sn.witness);
      if (violates(x)) out.definition_witness = x;
    }
    if (!out.definition_witness) throw std::logic_error("no definition witness along multiples of " + to_string(*sn.witness));
  }
  if (out.normal && !out.seminormal) throw std::logic_error("normal monoid reported non-seminormal");
  return out;
}

}  // namespace tfr::monoid
