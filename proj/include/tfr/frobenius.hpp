#pragma once

// Characteristic p: the primes at which a seminormal toric face ring fails
// to be F-pure, the F-injectivity criterion for a single affine monoid, and
// the obstruction to weak F-regularity.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tfr/moncomplex.hpp"

namespace tfr::frobenius {

struct PrimeWitness {
  std::size_t maximal_cone = 0;  // C
  std::size_t face = 0;          // D ⊆ C
  Integer divisor;               // elementary divisor of (Z M_C ∩ lin D)/Z M_D divisible by p
  IntVector element;             // in Z M_C ∩ lin D, not in Z M_D, p·element ∈ Z M_D
};

struct Verdict {
  bool f_pure = false;
  bool f_split = false;
};

struct FPurityReport {
  std::map<long, std::vector<PrimeWitness>> excluded;
  std::vector<long> excluded_primes() const;
  Verdict verdict(long p) const;
};

/// Throws std::invalid_argument for non-seminormal complexes: a toric face
/// ring that is F-pure at some p has seminormal monoids.
FPurityReport excluded_primes(const moncomplex::MonoidalComplex& m);

struct FInjectivity {
  bool injective = false;
  std::optional<polyhedral::Cone> witness_face;
  std::optional<IntVector> witness_element;  // in Z M ∩ lin F, not in Z(M ∩ F)
};

/// Throws std::invalid_argument when the monoid is not seminormal.
FInjectivity monoid_F_injective(const monoid::AffineMonoid& mon, long p);

struct WeakFRegularity {
  bool possible = false;
  std::string reason;
  std::optional<IntVector> witness;  // M̄ ∖ M element when the monoid is not normal
};

WeakFRegularity weak_F_regular(const moncomplex::MonoidalComplex& m);

bool is_prime(long p);

}  // namespace tfr::frobenius
