#pragma once

// Dimensions of cohomology over Q together with the finitely many primes at
// which they change, read off from integral Smith forms.

#include <map>
#include <vector>

#include "tfr/integer.hpp"

namespace tfr {

struct CohomologyTable {
  std::vector<std::size_t> dims_q;                        // index i: H^i
  std::map<long, std::vector<std::size_t>> exceptional;   // primes where dims differ
  bool oracle_computed = false;
  bool bound_exhausted = false;  // an oracle witness search ran out of bound

  /// Dimensions over Q (p = 0) or over F_p.
  std::vector<std::size_t> dims(long p) const;
  bool is_zero() const;
  bool same_dims(const CohomologyTable& other) const;

  /// Zero table with H^0..H^top.
  static CohomologyTable zero(std::size_t top);
  /// Cohomology of 0 → K^0 → K^1 → ... with sizes[i] = rank K^i and
  /// maps[i] : K^i → K^{i+1} (sizes[i+1] × sizes[i]).
  static CohomologyTable of_cochain_complex(const std::vector<std::size_t>& sizes, const std::vector<IntMatrix>& maps);

  CohomologyTable& operator+=(const CohomologyTable& other);
  /// Extends (or trims trailing zeros) to H^0..H^top.
  void resize(std::size_t top);
};

}  // namespace tfr
