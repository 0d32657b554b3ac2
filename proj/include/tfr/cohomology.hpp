#pragma once

// Graded local cohomology of toric face rings from the cellular cohomology
// of stars, its finite class decomposition of Z^d, depth by rank selection,
// and the Stanley (order complex) specialization.

#include <optional>
#include <string>
#include <vector>

#include "tfr/cohomology_table.hpp"
#include "tfr/lattice.hpp"
#include "tfr/moncomplex.hpp"

namespace tfr::cohomology {

/// Cones D with b ∈ D and b ∈ Z M_D, ascending cone index.
std::vector<std::size_t> star(const moncomplex::MonoidalComplex& m, const IntVector& b);

/// Cohomology of the cochain complex supported on the given up-closed cone
/// set: H^i has one generator per cone of dimension i (the shifted reduced
/// cohomology H̃^{i−1} of the star cells).
CohomologyTable star_cohomology(const moncomplex::MonoidalComplex& m, const std::vector<std::size_t>& cones);

/// H^i_m(R)_a for i = 0..dim. Seminormal complexes use the star of −a only;
/// otherwise the restriction to Σ(−a) is recursed into, and when that
/// restriction's star is empty the Čech oracle supplies the value
/// (oracle_computed is then set).
CohomologyTable local_cohomology_degree(const moncomplex::MonoidalComplex& m, const IntVector& a,
                                        std::optional<Integer> oracle_bound = std::nullopt);

struct StarClass {
  bool exterior = false;                 // degrees outside the support of the fan
  std::size_t carrier = 0;               // cone whose relative interior holds the class
  IntVector representative;              // in relint of the carrier
  std::vector<std::size_t> star;
  lattice::LatticeBasis class_lattice;   // K_C
  Integer class_count;                   // [Z^d ∩ lin C : K_C]
};

/// Classes of star degrees b with constant star, ordered by carrier index
/// and then representative; the exterior class comes last.
std::vector<StarClass> star_classes(const moncomplex::MonoidalComplex& m);

/// The class containing the star degree b.
std::size_t classify(const moncomplex::MonoidalComplex& m, const std::vector<StarClass>& classes, const IntVector& b);

struct ReportEntry {
  StarClass star_class;
  CohomologyTable table;  // H^i_m(R)_a for every a with −a in the class
};

/// Throws std::invalid_argument for non-seminormal complexes.
std::vector<ReportEntry> cohomology_report(const moncomplex::MonoidalComplex& m);

struct DepthResult {
  std::size_t depth = 0;
  std::size_t dim = 0;
  bool cohen_macaulay = false;
  std::size_t m_k = 0;
  std::vector<bool> skeleton_cm;  // index t: is the t-skeleton CM
};

/// p = 0 for characteristic zero. Throws for non-seminormal input.
DepthResult depth(const moncomplex::MonoidalComplex& m, long p);

struct CkResult {
  std::size_t c_k = 0;
  std::size_t m_k = 0;
};

/// c_k of a seminormal affine monoid, together with m_k of its face-poset
/// complex; throws if the monoid is not seminormal.
CkResult c_k_monoid(const monoid::AffineMonoid& mon, long p);

/// The single-cone complex on the face poset of R₊M.
moncomplex::MonoidalComplex face_poset_complex(const monoid::AffineMonoid& mon);

struct BbrEntry {
  std::size_t cone = 0;
  CohomologyTable order_complex;  // index i: H̃^{i − dim C − 1}(Δ(st(C) ∖ {C}))
  CohomologyTable star_complex;   // index i: H̃^{i − 1}(Γ_st(C))
};

/// Throws for non-Stanley input or when the two sides disagree.
std::vector<BbrEntry> bbr_formula(const moncomplex::MonoidalComplex& m);

}  // namespace tfr::cohomology
