#include "tfr/cohomology_table.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tfr/lattice.hpp"

namespace tfr {

std::vector<std::size_t> CohomologyTable::dims(long p) const {
  if (p == 0) return dims_q;
  auto it = exceptional.find(p);
  return it == exceptional.end() ? dims_q : it->second;
}

bool CohomologyTable::is_zero() const {
  auto zero = [](const std::vector<std::size_t>& v) { return std::all_of(v.begin(), v.end(), [](std::size_t x) { return x == 0; }); };
  if (!zero(dims_q)) return false;
  for (const auto& [p, d] : exceptional)
    if (!zero(d)) return false;
  return true;
}

bool CohomologyTable::same_dims(const CohomologyTable& other) const {
  return dims_q == other.dims_q && exceptional == other.exceptional;
}

CohomologyTable CohomologyTable::zero(std::size_t top) {
  CohomologyTable t;
  t.dims_q.assign(top + 1, 0);
  return t;
}

CohomologyTable CohomologyTable::of_cochain_complex(const std::vector<std::size_t>& sizes, const std::vector<IntMatrix>& maps) {
  const std::size_t n = sizes.size();
  if (maps.size() + 1 != n && !(n == 0 && maps.empty())) throw std::invalid_argument("cochain complex: need one map between consecutive terms");
  std::vector<std::vector<Integer>> divisors;
  std::set<long> primes;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (maps[i].rows() != sizes[i + 1] || maps[i].cols() != sizes[i]) throw std::invalid_argument("cochain complex: map shape mismatch");
    divisors.push_back(lattice::elementary_divisors(maps[i]));
    for (const auto& d : divisors.back())
      for (long p : lattice::prime_divisors(d)) primes.insert(p);
  }
  auto rank_mod = [&](std::size_t i, long p) {
    std::size_t r = 0;
    for (const auto& d : divisors[i])
      if (p == 0 || mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p)) == 0) ++r;
    return r;
  };
  auto dims_at = [&](long p) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t out_rank = i + 1 < n ? rank_mod(i, p) : 0;
      std::size_t in_rank = i > 0 ? rank_mod(i - 1, p) : 0;
      out[i] = sizes[i] - out_rank - in_rank;
    }
    return out;
  };
  CohomologyTable t;
  t.dims_q = dims_at(0);
  for (long p : primes) {
    auto d = dims_at(p);
    if (d != t.dims_q) t.exceptional[p] = d;
  }
  return t;
}

CohomologyTable& CohomologyTable::operator+=(const CohomologyTable& other) {
  const std::size_t n = std::max(dims_q.size(), other.dims_q.size());
  auto sum = [n](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.resize(n, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
  };
  std::set<long> primes;
  for (const auto& [p, d] : exceptional) primes.insert(p);
  for (const auto& [p, d] : other.exceptional) primes.insert(p);
  std::map<long, std::vector<std::size_t>> ex;
  for (long p : primes) ex[p] = sum(dims(p), other.dims(p));
  dims_q = sum(dims_q, other.dims_q);
  exceptional.clear();
  for (auto& [p, d] : ex)
    if (d != dims_q) exceptional[p] = std::move(d);
  oracle_computed = oracle_computed || other.oracle_computed;
  bound_exhausted = bound_exhausted || other.bound_exhausted;
  return *this;
}

void CohomologyTable::resize(std::size_t top) {
  auto fit = [top](std::vector<std::size_t>& v) {
    for (std::size_t i = top + 1; i < v.size(); ++i)
      if (v[i] != 0) throw std::logic_error("cohomology beyond the top degree");
    v.resize(top + 1, 0);
  };
  fit(dims_q);
  for (auto& [p, d] : exceptional) fit(d);
}

}  // namespace tfr
