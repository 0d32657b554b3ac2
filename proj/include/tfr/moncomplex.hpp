#pragma once

// Monoidal complexes on fans and the presentation of their toric face rings.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tfr/monoid.hpp"
#include "tfr/polyhedral.hpp"

namespace tfr::moncomplex {

class ComplexAxiomViolation : public std::invalid_argument {
 public:
  ComplexAxiomViolation(const std::string& what, std::size_t cone, std::size_t face, IntVector witness)
      : std::invalid_argument(what), cone(cone), face(face), witness(std::move(witness)) {}
  std::size_t cone;
  std::size_t face;
  IntVector witness;
};

class MonoidalComplex {
 public:
  const polyhedral::Fan& fan() const { return fan_; }
  std::size_t ambient_dim() const { return fan_.ambient_dim(); }
  std::size_t dim() const { return fan_.dim(); }
  const monoid::AffineMonoid& monoid(std::size_t cone) const { return monoids_[cone]; }
  /// Every M_C seminormal / normal.
  bool seminormal() const { return seminormal_; }
  bool normal_monoids() const { return normal_; }
  bool stanley() const { return stanley_; }
  /// First cone whose monoid is not seminormal, with an element of ⁺M_C ∖ M_C.
  const std::optional<std::pair<std::size_t, IntVector>>& seminormal_witness() const { return seminormal_witness_; }
  /// Oriented cell complex of the fan, built on first use.
  const polyhedral::CellComplex& cells() const;

  friend MonoidalComplex assemble(polyhedral::Fan fan, std::vector<monoid::AffineMonoid> monoids,
                                  std::optional<Integer> seminormal_bound);
  friend MonoidalComplex restrict(const MonoidalComplex& m, const polyhedral::Fan& subfan);

 private:
  struct ConeFlags {
    bool seminormal = false;
    bool normal = false;
    std::optional<IntVector> seminormal_witness;
  };
  void set_flags(std::vector<ConeFlags> flags);

  polyhedral::Fan fan_;
  std::vector<monoid::AffineMonoid> monoids_;
  bool seminormal_ = false;
  bool normal_ = false;
  bool stanley_ = false;
  std::optional<std::pair<std::size_t, IntVector>> seminormal_witness_;
  std::vector<ConeFlags> flags_;
  mutable std::shared_ptr<const polyhedral::CellComplex> cells_;
};

/// Validates the axioms and computes the flags; monoids are indexed by cone.
MonoidalComplex assemble(polyhedral::Fan fan, std::vector<monoid::AffineMonoid> monoids,
                         std::optional<Integer> seminormal_bound = std::nullopt);

/// `maximal_generators` is keyed by index of a maximal cone of `fan`; it is
/// ignored when `stanley` is set.
MonoidalComplex build_complex(const polyhedral::Fan& fan, const std::map<std::size_t, std::vector<IntVector>>& maximal_generators,
                              bool stanley, std::optional<Integer> seminormal_bound = std::nullopt);

MonoidalComplex restrict(const MonoidalComplex& m, const polyhedral::Fan& subfan);

struct GradedPiece {
  bool nonzero = false;
  std::vector<std::size_t> carrier;  // cones whose monoid contains the degree
};

GradedPiece graded_dim(const MonoidalComplex& m, const IntVector& a);

MonoidalComplex seminormalize_complex(const MonoidalComplex& m, std::optional<Integer> bound = std::nullopt);

using Exponents = std::vector<long>;

struct PresentationIdeal {
  std::vector<IntVector> variables;                     // lexicographic
  std::vector<Exponents> monomials;                     // squarefree
  std::vector<std::pair<Exponents, Exponents>> binomials;
  std::size_t degree_bound = 0;
  bool verified = false;
  std::size_t monomials_checked = 0;
};

/// Throws std::logic_error when the congruence check fails.
PresentationIdeal presentation(const MonoidalComplex& m, std::size_t degree_bound);

}  // namespace tfr::moncomplex
