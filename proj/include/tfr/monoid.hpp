#pragma once

// Affine monoids: membership, normalization (Hilbert bases),
// seminormalization and the seminormal/normal decisions.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfr/integer.hpp"
#include "tfr/lattice.hpp"
#include "tfr/polyhedral.hpp"

namespace tfr::monoid {

/// Raised when a search bound is too small to certify a result. `element`
/// is the first element that could not be accounted for.
class BoundTooSmall : public std::runtime_error {
 public:
  BoundTooSmall(const std::string& what, IntVector element)
      : std::runtime_error(what), element(std::move(element)) {}
  IntVector element;
};

class AffineMonoid {
 public:
  AffineMonoid() = default;

  /// Zero generators are dropped, duplicates removed, order made lexicographic.
  /// Throws polyhedral::NonPointedCone if the monoid is not positive.
  static AffineMonoid generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const polyhedral::Cone& cone() const { return cone_; }
  /// Z M.
  const lattice::LatticeBasis& group() const { return group_; }
  /// Integral functional, >= 1 on every nonzero element.
  const IntVector& grading() const { return grading_; }
  Integer degree(const IntVector& v) const { return dot(grading_, v); }

  bool contains(const IntVector& v) const;
  /// Coefficients over generators() when v ∈ M.
  std::optional<std::vector<Integer>> decompose(const IntVector& v) const;
  /// v ∈ M̄ = Z M ∩ R₊M.
  bool normalization_contains(const IntVector& v) const { return group_.contains(v) && cone_.contains(v); }

  /// M ∩ F for a face F of the cone: the generators lying in F.
  AffineMonoid face_monoid(const polyhedral::Cone& face) const;

 private:
  struct Memo;
  // decided membership, with the generator used last (or -1 when absent)
  long step(const IntVector& v) const;

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> generators_;
  polyhedral::Cone cone_;
  lattice::LatticeBasis group_;
  IntVector grading_;
  std::shared_ptr<Memo> memo_;
};

/// Same element set (mutual generator membership).
bool same_monoid(const AffineMonoid& a, const AffineMonoid& b);

struct HilbertBasis {
  std::vector<IntVector> elements;      // lexicographic
  Integer max_parallelepiped_degree;    // w.r.t. the grading used
};

/// Hilbert basis of C ∩ L for a pointed cone C and a lattice L spanning lin C.
HilbertBasis hilbert_basis(const polyhedral::Cone& c, const lattice::LatticeBasis& l, const IntVector& grading);

/// Hilbert basis of M̄.
HilbertBasis normalization(const AffineMonoid& m);

/// Elements of M̄ of degree <= bound, ordered by degree then lexicographically.
std::vector<IntVector> enumerate_normalization(const AffineMonoid& m, const HilbertBasis& hb, const Integer& bound);

/// M̄ ∖ M up to the given degree.
std::vector<IntVector> normalization_gap(const AffineMonoid& m, const Integer& bound);

struct SeminormalizationResult {
  AffineMonoid monoid;                  // ⁺M
  std::vector<IntVector> generators;    // irreducibles of ⁺M, lexicographic
  Integer bound;                        // enumeration bound used
  Integer verified_bound;               // generation certified through this degree
  std::optional<IntVector> witness;     // an element of ⁺M ∖ M
};

/// Throws BoundTooSmall when generation cannot be certified.
SeminormalizationResult seminormalize(const AffineMonoid& m, std::optional<Integer> bound = std::nullopt);

Integer default_seminormal_bound(const AffineMonoid& m);

struct SeminormalNormal {
  bool seminormal = false;
  bool normal = false;
  std::optional<IntVector> normal_witness;      // in M̄ ∖ M
  std::optional<IntVector> seminormal_witness;  // in ⁺M ∖ M
  std::optional<IntVector> definition_witness;  // x ∉ M with 2x, 3x ∈ M
  Integer verified_bound;
};

SeminormalNormal check_seminormal_normal(const AffineMonoid& m, std::optional<Integer> bound = std::nullopt);

}  // namespace tfr::monoid
