#pragma once

// Graded Čech complex of a toric face ring at a single degree, and the
// Frobenius action between degrees a and p·a.

#include <optional>
#include <vector>

#include "tfr/cohomology_table.hpp"
#include "tfr/moncomplex.hpp"

namespace tfr::cech {

enum class Status { complete, bound_exhausted };

/// Degree-a piece of the localization R_C: zero or one-dimensional.
struct Piece {
  std::size_t cone = 0;
  bool nonzero = false;
  // z − y = a, y ∈ M_C, z ∈ M_D for some D ⊇ C; absent when the search
  // for a witness ran out of bound (status bound_exhausted)
  std::optional<IntVector> z;
  std::optional<IntVector> y;
  std::size_t refuge = 0;  // the cone D
};

struct CechSlice {
  IntVector degree;
  std::vector<Piece> pieces;                      // one per fan cone
  std::vector<std::vector<std::size_t>> basis;    // per t: cones of dim t with nonzero piece
  std::vector<IntMatrix> maps;                    // maps[t]: L^t_a → L^{t+1}_a
  Status status = Status::complete;
  Integer bound;
};

/// 8 × the largest grading degree of any monoid generator (at least 8).
Integer default_bound(const moncomplex::MonoidalComplex& m);

Piece localization_piece(const moncomplex::MonoidalComplex& m, std::size_t cone, const IntVector& a, const Integer& bound);

/// Whether the natural map (R_from)_a → (R_to)_a is nonzero (from a facet of to).
bool transition(const moncomplex::MonoidalComplex& m, std::size_t from, std::size_t to, const IntVector& a);

CechSlice cech_slice(const moncomplex::MonoidalComplex& m, const IntVector& a, std::optional<Integer> bound = std::nullopt);

struct CechResult {
  CohomologyTable table;
  CechSlice slice;
};

CechResult cech_degree(const moncomplex::MonoidalComplex& m, const IntVector& a, std::optional<Integer> bound = std::nullopt);

struct FrobeniusDegree {
  std::size_t source_dim = 0;  // dim H^i_a over F_p
  std::size_t target_dim = 0;  // dim H^i_{pa} over F_p
  std::size_t rank = 0;
  bool injective = false;
  bool bijective = false;
};

struct FrobeniusResult {
  IntVector degree;
  long prime = 0;
  std::vector<FrobeniusDegree> per_degree;  // index i
  Status status = Status::complete;
};

FrobeniusResult frobenius_check(const moncomplex::MonoidalComplex& m, const IntVector& a, long p,
                                std::optional<Integer> bound = std::nullopt);

}  // namespace tfr::cech
