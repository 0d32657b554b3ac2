#pragma once

// Rational pointed cones, their face lattices, fans, and the augmented
// oriented cellular chain complex of a fan.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tfr/integer.hpp"
#include "tfr/lattice.hpp"

namespace tfr::polyhedral {

/// Thrown when the generators span a cone containing a line; `witness`
/// and its negative both lie in the cone.
class NonPointedCone : public std::invalid_argument {
 public:
  explicit NonPointedCone(IntVector witness);
  IntVector witness;
};

/// Thrown when two cones of a proposed fan meet in something that is not a
/// common face.
class FanAxiomViolation : public std::invalid_argument {
 public:
  FanAxiomViolation(std::size_t first, std::size_t second, const std::string& what);
  std::size_t first;
  std::size_t second;
};

class Cone {
 public:
  Cone() = default;
  static Cone zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return lin_.rank(); }

  /// Primitive, deduplicated input generators in lexicographic order.
  const std::vector<IntVector>& generators() const { return generators_; }
  /// Primitive extreme rays in lexicographic order.
  const std::vector<IntVector>& rays() const { return rays_; }
  /// Primitive inward facet normals, each lying in lin C.
  const std::vector<IntVector>& facets() const { return facets_; }
  /// Z^d ∩ lin C.
  const lattice::LatticeBasis& lin_lattice() const { return lin_; }
  /// Rows spanning the orthogonal complement of lin C.
  const std::vector<IntVector>& lin_equations() const { return equations_; }

  bool in_span(const IntVector& v) const;
  bool contains(const IntVector& v) const;
  bool relint_contains(const IntVector& v) const;

  /// Sum of the extreme rays; lies in the relative interior.
  IntVector interior_vector() const;

  friend Cone cone_build(const std::vector<IntVector>& generators);
  friend bool operator==(const Cone& a, const Cone& b) { return a.rays_ == b.rays_ && a.ambient_dim_ == b.ambient_dim_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> facets_;
  lattice::LatticeBasis lin_;
  std::vector<IntVector> equations_;
};

/// Builds the cone R_+(generators). Zero vectors are ignored; an all-zero
/// list gives the zero cone. Throws NonPointedCone.
Cone cone_build(const std::vector<IntVector>& generators);

bool relint_contains(const Cone& c, const IntVector& v);

/// Extreme rays of the pointed cone {x : E·x = 0, A·x >= 0}.
std::vector<IntVector> extreme_rays(std::size_t ambient_dim, const std::vector<IntVector>& equations,
                                    const std::vector<IntVector>& inequalities);

struct FaceLattice {
  std::vector<Cone> faces;               // ordered by dimension, then by rays
  std::vector<std::vector<bool>> order;  // order[i][j]: faces[i] is a face of faces[j]
  std::vector<std::size_t> dims;
};

FaceLattice face_lattice(const Cone& c);

class Fan {
 public:
  Fan() = default;

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const;
  std::size_t size() const { return cones_.size(); }

  /// All primitive rays of the fan, lexicographic.
  const std::vector<IntVector>& rays() const { return rays_; }
  const Cone& cone(std::size_t i) const { return cones_[i]; }
  const std::vector<Cone>& cones() const { return cones_; }
  /// Indices into rays() of the extreme rays of cone i, ascending.
  const std::vector<std::size_t>& cone_rays(std::size_t i) const { return cone_rays_[i]; }
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  /// Cones of dimension dim(i) - 1 contained in cone i.
  const std::vector<std::size_t>& facets_of(std::size_t i) const { return facets_of_[i]; }
  /// True iff cone `face` is a face of cone `c` (including equality).
  bool is_face(std::size_t face, std::size_t c) const;
  std::vector<std::size_t> cones_of_dim(std::size_t k) const;
  /// Cones containing cone i (including i).
  std::vector<std::size_t> cofaces(std::size_t i) const;

  std::size_t zero_cone() const { return 0; }
  std::optional<std::size_t> find(const Cone& c) const;
  /// Index of the unique cone whose relative interior contains v.
  std::optional<std::size_t> carrier(const IntVector& v) const;
  bool support_contains(const IntVector& v) const { return carrier(v).has_value(); }

  /// Builds a fan from a face-closed list of cones known to satisfy the fan
  /// axioms (used for subfans).
  static Fan from_valid_cones(std::size_t ambient_dim, const std::vector<Cone>& cones);

  friend Fan fan_build(const std::vector<Cone>& maximal_cones);
  friend bool operator==(const Fan& a, const Fan& b) { return a.ambient_dim_ == b.ambient_dim_ && a.cones_ == b.cones_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<std::size_t>> cone_rays_;
  std::vector<std::size_t> maximal_;
  std::vector<std::vector<std::size_t>> facets_of_;
  std::map<std::vector<std::size_t>, std::size_t> by_rays_;
};

/// Face closure of the given cones with the pairwise intersection axiom
/// verified exactly. Throws FanAxiomViolation.
Fan fan_build(const std::vector<Cone>& maximal_cones);

/// Cones of dimension <= i.
Fan skeleton_fan(const Fan& f, std::size_t i);

/// The subfan on the given cone indices, which must be face-closed.
Fan subfan(const Fan& f, const std::vector<std::size_t>& cone_indices);

/// Augmented oriented cellular chain complex of a fan. The cell e_C of a
/// nonzero cone has dimension dim C - 1; the zero cone is the augmentation
/// cell of dimension -1. Cells are addressed by fan cone index.
class CellComplex {
 public:
  /// delta(e_C, e_F) for F a facet of C; zero otherwise.
  int incidence(std::size_t cone, std::size_t facet) const;
  /// Boundary map from cells of cones of dimension k (k >= 1) to cells of
  /// cones of dimension k - 1, as a matrix acting on column vectors.
  IntMatrix boundary(std::size_t k) const;
  const std::vector<std::size_t>& cones_of_dim(std::size_t k) const { return by_dim_[k]; }
  std::size_t top_cone_dim() const { return by_dim_.empty() ? 0 : by_dim_.size() - 1; }

  friend CellComplex cell_complex(const Fan& f);

 private:
  std::vector<std::vector<std::size_t>> by_dim_;
  std::map<std::pair<std::size_t, std::size_t>, int> incidence_;
};

/// Assigns incidence signs and verifies the boundary-of-boundary and diamond
/// identities; throws std::logic_error if either fails.
CellComplex cell_complex(const Fan& f);

}  // namespace tfr::polyhedral
