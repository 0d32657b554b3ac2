#pragma once

// Exact integer linear algebra: Hermite and Smith normal forms, sublattices
// of Z^d, membership, intersection and quotient invariants.

#include <optional>
#include <vector>

#include "tfr/integer.hpp"

namespace tfr::lattice {

/// Row-style Hermite normal form: U·A = H with U unimodular. The first
/// `rank` rows of H are in echelon form with positive pivots, entries above
/// each pivot reduced into [0, pivot); the remaining rows are zero.
struct HNFResult {
  IntMatrix H;
  IntMatrix U;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HNFResult hnf(const IntMatrix& a);

/// U·A·V = D, D diagonal with divisors d1 | d2 | ... on the leading diagonal.
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> divisors;  // nonzero diagonal entries, all positive
};

SNFResult snf(const IntMatrix& a);

/// Nonzero elementary divisors only (no transforms tracked).
std::vector<Integer> elementary_divisors(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular matrix. Throws if |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Basis (as rows) of {x ∈ Z^n : A·x = 0}, in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Primes dividing n (n != 0), ascending.
std::vector<long> prime_divisors(const Integer& n);

/// A sublattice of Z^d stored by its canonical (HNF) basis.
class LatticeBasis {
 public:
  LatticeBasis() = default;

  static LatticeBasis generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators);
  static LatticeBasis full(std::size_t ambient_dim);
  static LatticeBasis zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> basis_;
};

/// Lattice equality by mutual basis membership.
bool operator==(const LatticeBasis& a, const LatticeBasis& b);

/// Integer coefficients c with Σ c_i·basis_i = v, or nothing if v ∉ L.
std::optional<std::vector<Integer>> solve_in_lattice(const LatticeBasis& l, const IntVector& v);

LatticeBasis intersect(const LatticeBasis& a, const LatticeBasis& b);

/// Z^d ∩ (R-span of L).
LatticeBasis saturation(const LatticeBasis& l);

/// Integer basis (rows) of the orthogonal complement of span(L) in Z^d.
std::vector<IntVector> orthogonal_complement(const LatticeBasis& l);

struct QuotientInvariants {
  std::vector<Integer> divisors;  // elementary divisors of sup/sub, including 1s
  std::size_t free_rank = 0;      // rank(sup) - rank(sub)

  Integer torsion_order() const;
  std::vector<long> torsion_primes() const;
};

/// Invariants of sup/sub. Throws std::invalid_argument if sub ⊄ sup.
QuotientInvariants quotient_invariants(const LatticeBasis& sub, const LatticeBasis& sup);

/// Coset representatives of sup/sub for a finite-index sublattice.
std::vector<IntVector> coset_representatives(const LatticeBasis& sub, const LatticeBasis& sup);

}  // namespace tfr::lattice
