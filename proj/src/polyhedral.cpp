#include "tfr/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

namespace tfr::polyhedral {

using lattice::LatticeBasis;

NonPointedCone::NonPointedCone(IntVector w)
    : std::invalid_argument("cone is not pointed; contains both " + to_string(w) + " and its negative"),
      witness(std::move(w)) {}

FanAxiomViolation::FanAxiomViolation(std::size_t a, std::size_t b, const std::string& what)
    : std::invalid_argument(what), first(a), second(b) {}

namespace {

// Calls fn(indices) for every r-subset of {0..n-1}, in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Rays of {x in span(rows of basis) : A x >= 0} by tight-subset enumeration.
// `gram` holds A·basis^T.
std::vector<IntVector> rays_in_subspace(const std::vector<IntVector>& basis, const IntMatrix& gram) {
  std::vector<IntVector> out;
  const std::size_t m = basis.size();
  if (m == 0) return out;
  const std::size_t d = basis.front().size();
  const IntMatrix b = IntMatrix::from_rows(basis, d);
  for_each_subset(gram.rows(), m - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVector> rows;
    for (std::size_t i : s) rows.push_back(gram.row(i));
    auto ker = lattice::integer_kernel(IntMatrix::from_rows(rows, m));
    if (ker.size() != 1) return;
    IntVector vals = gram.apply(ker[0]);
    bool pos = false, neg = false;
    for (const auto& x : vals) {
      if (x > 0) pos = true;
      if (x < 0) neg = true;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;  // lineality direction
    IntVector c = neg ? negate(ker[0]) : ker[0];
    out.push_back(primitive(b.apply_left(c)));
  });
  sort_unique(out);
  return out;
}

}  // namespace

Cone Cone::zero(std::size_t ambient_dim) {
  Cone c;
  c.ambient_dim_ = ambient_dim;
  c.lin_ = LatticeBasis::zero(ambient_dim);
  c.equations_ = LatticeBasis::full(ambient_dim).basis();
  return c;
}

bool Cone::in_span(const IntVector& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("cone membership: dimension mismatch");
  for (const auto& e : equations_)
    if (sgn(dot(e, v)) != 0) return false;
  return true;
}

bool Cone::contains(const IntVector& v) const {
  if (!in_span(v)) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) < 0) return false;
  return true;
}

bool Cone::relint_contains(const IntVector& v) const {
  if (!in_span(v)) return false;
  for (const auto& f : facets_)
    if (sgn(dot(f, v)) <= 0) return false;
  return true;
}

IntVector Cone::interior_vector() const {
  IntVector s = zero_vector(ambient_dim_);
  for (const auto& r : rays_) s = add(s, r);
  return s;
}

bool relint_contains(const Cone& c, const IntVector& v) { return c.relint_contains(v); }

std::vector<IntVector> extreme_rays(std::size_t ambient_dim, const std::vector<IntVector>& equations,
                                    const std::vector<IntVector>& inequalities) {
  std::vector<IntVector> basis = equations.empty()
                                     ? LatticeBasis::full(ambient_dim).basis()
                                     : lattice::integer_kernel(IntMatrix::from_rows(equations, ambient_dim));
  if (basis.empty()) return {};
  IntMatrix gram = IntMatrix::from_rows(inequalities, ambient_dim) * IntMatrix::from_rows(basis, ambient_dim).transpose();
  return rays_in_subspace(basis, gram);
}

Cone cone_build(const std::vector<IntVector>& generators) {
  if (generators.empty()) throw std::invalid_argument("cone_build: empty generator list");
  const std::size_t d = generators.front().size();
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("cone_build: generators of different dimensions");
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  sort_unique(gens);
  if (gens.empty()) return Cone::zero(d);

  Cone c;
  c.ambient_dim_ = d;
  c.generators_ = gens;
  c.lin_ = lattice::saturation(LatticeBasis::generated_by(d, gens));
  c.equations_ = lattice::orthogonal_complement(c.lin_);
  const std::size_t k = c.lin_.rank();
  const auto& basis = c.lin_.basis();
  const IntMatrix b = IntMatrix::from_rows(basis, d);
  const IntMatrix gram = IntMatrix::from_rows(gens, d) * b.transpose();

  // Facet hyperplanes are spanned (inside lin C) by k-1 independent generators.
  std::vector<IntVector> normals;
  for_each_subset(gens.size(), k - 1, [&](const std::vector<std::size_t>& s) {
    std::vector<IntVector> rows;
    for (std::size_t i : s) rows.push_back(gram.row(i));
    auto ker = lattice::integer_kernel(IntMatrix::from_rows(rows, k));
    if (ker.size() != 1) return;
    IntVector u = primitive(b.apply_left(ker[0]));
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s2 = sgn(dot(u, g));
      if (s2 > 0) pos = true;
      if (s2 < 0) neg = true;
    }
    if (pos && neg) return;
    normals.push_back(neg ? negate(u) : u);
  });
  sort_unique(normals);
  c.facets_ = normals;

  const std::size_t facet_rank =
      normals.empty() ? 0 : lattice::rank(IntMatrix::from_rows(normals, d) * b.transpose());
  if (facet_rank < k) {
    // lineality: directions of lin C on which every facet functional vanishes
    IntMatrix fb = normals.empty() ? IntMatrix(0, k) : IntMatrix::from_rows(normals, d) * b.transpose();
    auto ker = lattice::integer_kernel(fb);
    throw NonPointedCone(primitive(b.apply_left(ker.at(0))));
  }

  for (const auto& g : gens) {
    std::vector<IntVector> tight;
    for (const auto& u : normals)
      if (sgn(dot(u, g)) == 0) tight.push_back(u);
    const std::size_t r = tight.empty() ? 0 : lattice::rank(IntMatrix::from_rows(tight, d) * b.transpose());
    if (r == k - 1) c.rays_.push_back(g);
  }

  // The facet description must generate back exactly the extreme rays.
  auto back = extreme_rays(d, c.equations_, c.facets_);
  if (back != c.rays_) throw std::logic_error("cone_build: generator and facet descriptions disagree");
  return c;
}

FaceLattice face_lattice(const Cone& c) {
  const auto& rays = c.rays();
  if (rays.size() > 64) throw std::length_error("face_lattice: more than 64 extreme rays");
  const std::uint64_t full = rays.empty() ? 0 : (rays.size() == 64 ? ~0ull : ((1ull << rays.size()) - 1));
  std::vector<std::uint64_t> facet_masks;
  for (const auto& u : c.facets()) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sgn(dot(u, rays[i])) == 0) m |= 1ull << i;
    facet_masks.push_back(m);
  }
  std::set<std::uint64_t> seen{full};
  std::vector<std::uint64_t> queue{full};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (auto fm : facet_masks) {
      std::uint64_t m = queue[q] & fm;
      if (seen.insert(m).second) queue.push_back(m);
    }

  struct Entry {
    std::size_t dim;
    std::vector<IntVector> rays;
    std::uint64_t mask;
  };
  std::vector<Entry> entries;
  for (auto m : seen) {
    std::vector<IntVector> r;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (m & (1ull << i)) r.push_back(rays[i]);
    std::size_t dm = r.empty() ? 0 : lattice::rank(IntMatrix::from_rows(r, c.ambient_dim()));
    entries.push_back({dm, std::move(r), m});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return std::lexicographical_compare(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(), lex_less);
  });

  FaceLattice fl;
  for (const auto& e : entries) {
    fl.faces.push_back(e.rays.empty() ? Cone::zero(c.ambient_dim()) : cone_build(e.rays));
    fl.dims.push_back(e.dim);
  }
  fl.order.assign(entries.size(), std::vector<bool>(entries.size(), false));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) fl.order[i][j] = (entries[i].mask & ~entries[j].mask) == 0;
  return fl;
}

std::size_t Fan::dim() const {
  std::size_t m = 0;
  for (const auto& c : cones_) m = std::max(m, c.dim());
  return m;
}

bool Fan::is_face(std::size_t face, std::size_t c) const {
  const auto& a = cone_rays_[face];
  const auto& b = cone_rays_[c];
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].dim() == k) out.push_back(i);
  return out;
}

std::vector<std::size_t> Fan::cofaces(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < cones_.size(); ++j)
    if (is_face(i, j)) out.push_back(j);
  return out;
}

std::optional<std::size_t> Fan::find(const Cone& c) const {
  std::vector<std::size_t> key;
  for (const auto& r : c.rays()) {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), r, lex_less);
    if (it == rays_.end() || *it != r) return std::nullopt;
    key.push_back(static_cast<std::size_t>(it - rays_.begin()));
  }
  auto it = by_rays_.find(key);
  if (it == by_rays_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Fan::carrier(const IntVector& v) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].relint_contains(v)) return i;
  return std::nullopt;
}

Fan Fan::from_valid_cones(std::size_t ambient_dim, const std::vector<Cone>& cones) {
  Fan f;
  f.ambient_dim_ = ambient_dim;
  for (const auto& c : cones)
    for (const auto& r : c.rays()) f.rays_.push_back(r);
  sort_unique(f.rays_);

  std::map<std::vector<std::size_t>, Cone> unique;
  for (const auto& c : cones) {
    if (c.ambient_dim() != ambient_dim) throw std::invalid_argument("fan: cones of different ambient dimension");
    std::vector<std::size_t> key;
    for (const auto& r : c.rays())
      key.push_back(static_cast<std::size_t>(std::lower_bound(f.rays_.begin(), f.rays_.end(), r, lex_less) - f.rays_.begin()));
    unique.emplace(key, c);
  }
  std::vector<std::pair<std::vector<std::size_t>, Cone>> ordered(unique.begin(), unique.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.second.dim() < b.second.dim(); });
  if (ordered.empty() || !ordered.front().first.empty())
    throw std::invalid_argument("fan: the zero cone is missing (cone list not face-closed)");
  for (auto& [key, c] : ordered) {
    f.by_rays_[key] = f.cones_.size();
    f.cone_rays_.push_back(key);
    f.cones_.push_back(c);
  }
  f.facets_of_.resize(f.cones_.size());
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < f.cones_.size(); ++j) {
      if (i == j || !f.is_face(i, j)) continue;
      if (f.cones_[j].dim() > f.cones_[i].dim()) is_max = false;
      if (f.cones_[j].dim() == f.cones_[i].dim() + 1) f.facets_of_[j].push_back(i);
    }
    if (is_max) f.maximal_.push_back(i);
  }
  // face-closedness
  for (std::size_t i = 0; i < f.cones_.size(); ++i) {
    const auto fl = face_lattice(f.cones_[i]);
    for (const auto& face : fl.faces)
      if (!f.find(face)) throw std::invalid_argument("fan: cone list is not face-closed");
  }
  return f;
}

Fan fan_build(const std::vector<Cone>& maximal_cones) {
  if (maximal_cones.empty()) throw std::invalid_argument("fan_build: no cones given");
  const std::size_t d = maximal_cones.front().ambient_dim();
  std::vector<FaceLattice> lattices;
  std::vector<Cone> all;
  for (const auto& c : maximal_cones) {
    if (c.ambient_dim() != d) throw std::invalid_argument("fan_build: cones of different ambient dimension");
    lattices.push_back(face_lattice(c));
    all.insert(all.end(), lattices.back().faces.begin(), lattices.back().faces.end());
  }
  auto has_face_with_rays = [](const FaceLattice& fl, const std::vector<IntVector>& rays) {
    return std::any_of(fl.faces.begin(), fl.faces.end(), [&](const Cone& f) { return f.rays() == rays; });
  };
  for (std::size_t i = 0; i < maximal_cones.size(); ++i)
    for (std::size_t j = i + 1; j < maximal_cones.size(); ++j) {
      const Cone& a = maximal_cones[i];
      const Cone& b = maximal_cones[j];
      std::vector<IntVector> eq = a.lin_equations();
      eq.insert(eq.end(), b.lin_equations().begin(), b.lin_equations().end());
      std::vector<IntVector> ineq = a.facets();
      ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
      auto meet = extreme_rays(d, eq, ineq);
      if (!has_face_with_rays(lattices[i], meet) || !has_face_with_rays(lattices[j], meet))
        throw FanAxiomViolation(i, j,
                                "fan_build: cones " + std::to_string(i) + " and " + std::to_string(j) +
                                    " do not intersect in a common face");
    }
  return Fan::from_valid_cones(d, all);
}

Fan skeleton_fan(const Fan& f, std::size_t i) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < f.size(); ++c)
    if (f.cone(c).dim() <= i) keep.push_back(c);
  return subfan(f, keep);
}

Fan subfan(const Fan& f, const std::vector<std::size_t>& cone_indices) {
  std::vector<Cone> cones;
  for (auto i : cone_indices) cones.push_back(f.cone(i));
  return Fan::from_valid_cones(f.ambient_dim(), cones);
}

int CellComplex::incidence(std::size_t cone, std::size_t facet) const {
  auto it = incidence_.find({cone, facet});
  return it == incidence_.end() ? 0 : it->second;
}

IntMatrix CellComplex::boundary(std::size_t k) const {
  if (k == 0 || k >= by_dim_.size()) throw std::out_of_range("CellComplex::boundary: no such dimension");
  const auto& src = by_dim_[k];
  const auto& dst = by_dim_[k - 1];
  IntMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c)
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = incidence(src[c], dst[r]);
  return m;
}

namespace {

// First dim C linearly independent rays of C in canonical order.
std::vector<IntVector> orientation(const Cone& c) {
  std::vector<IntVector> picked;
  for (const auto& r : c.rays()) {
    auto trial = picked;
    trial.push_back(r);
    if (lattice::rank(IntMatrix::from_rows(trial, c.ambient_dim())) == trial.size()) picked = std::move(trial);
    if (picked.size() == c.dim()) break;
  }
  return picked;
}

int sign_of_frame(const Cone& c, const std::vector<IntVector>& frame) {
  IntMatrix m(frame.size(), c.dim());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    auto coords = lattice::solve_in_lattice(c.lin_lattice(), frame[i]);
    if (!coords) throw std::logic_error("orientation frame leaves the span of its cone");
    for (std::size_t j = 0; j < c.dim(); ++j) m(i, j) = (*coords)[j];
  }
  return sgn(lattice::determinant(m));
}

}  // namespace

CellComplex cell_complex(const Fan& f) {
  CellComplex cx;
  cx.by_dim_.resize(f.dim() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) cx.by_dim_[f.cone(i).dim()].push_back(i);

  std::vector<std::vector<IntVector>> frames(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) frames[i] = orientation(f.cone(i));

  for (std::size_t i = 0; i < f.size(); ++i) {
    const Cone& c = f.cone(i);
    if (c.dim() == 0) continue;
    const int own = sign_of_frame(c, frames[i]);
    for (std::size_t facet : f.facets_of(i)) {
      const Cone& sub = f.cone(facet);
      const IntVector* w = nullptr;
      for (const auto& r : c.rays())
        if (!sub.contains(r)) {
          w = &r;
          break;
        }
      std::vector<IntVector> frame{*w};
      frame.insert(frame.end(), frames[facet].begin(), frames[facet].end());
      cx.incidence_[{i, facet}] = sign_of_frame(c, frame) * own;
    }
  }

  for (std::size_t k = 2; k < cx.by_dim_.size(); ++k)
    if (!(cx.boundary(k - 1) * cx.boundary(k)).is_zero())
      throw std::logic_error("cell_complex: boundary of boundary is nonzero in dimension " + std::to_string(k));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.cone(i).dim() < 2) continue;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f.cone(j).dim() + 2 != f.cone(i).dim() || !f.is_face(j, i)) continue;
      std::vector<std::size_t> mids;
      for (std::size_t m : f.facets_of(i))
        if (f.is_face(j, m)) mids.push_back(m);
      if (mids.size() != 2) throw std::logic_error("cell_complex: face interval is not a diamond");
      if (cx.incidence(i, mids[0]) * cx.incidence(mids[0], j) + cx.incidence(i, mids[1]) * cx.incidence(mids[1], j) != 0)
        throw std::logic_error("cell_complex: diamond identity fails");
    }
  }
  return cx;
}

}  // namespace tfr::polyhedral
