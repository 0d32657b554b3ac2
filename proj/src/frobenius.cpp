#include "tfr/frobenius.hpp"

#include <stdexcept>

namespace tfr::frobenius {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

// an element of sup ∖ sub killed by p; exists whenever p divides the order
IntVector p_torsion_element(const lattice::LatticeBasis& sub, const lattice::LatticeBasis& sup, long p) {
  for (const auto& r : lattice::coset_representatives(sub, sup))
    if (!sub.contains(r) && sub.contains(scale(Integer(p), r))) return r;
  throw std::logic_error("no element of order p in the quotient");
}

// (p, divisor) for every prime p dividing a divisor of sup/sub
std::vector<std::pair<long, Integer>> torsion(const lattice::LatticeBasis& sub, const lattice::LatticeBasis& sup) {
  const auto inv = lattice::quotient_invariants(sub, sup);
  if (inv.free_rank != 0) throw std::logic_error("face lattice of smaller rank than its span");
  std::vector<std::pair<long, Integer>> out;
  for (const auto& d : inv.divisors)
    for (long p : lattice::prime_divisors(d)) {
      bool seen = false;
      for (const auto& [q, e] : out) seen = seen || q == p;
      if (!seen) out.emplace_back(p, d);
    }
  return out;
}

}  // namespace

std::vector<long> FPurityReport::excluded_primes() const {
  std::vector<long> out;
  for (const auto& [p, w] : excluded) out.push_back(p);
  return out;
}

Verdict FPurityReport::verdict(long p) const {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const bool ok = !excluded.count(p);
  return {ok, ok};
}

FPurityReport excluded_primes(const moncomplex::MonoidalComplex& m) {
  if (!m.seminormal())
    throw std::invalid_argument("F-purity needs every monoid seminormal; F-injectivity already forces seminormality");
  const auto& fan = m.fan();
  FPurityReport r;
  for (std::size_t c : fan.maximal()) {
    const auto& zc = m.monoid(c).group();
    for (std::size_t d = 0; d < fan.size(); ++d) {
      if (!fan.is_face(d, c)) continue;
      const auto& zd = m.monoid(d).group();
      const auto sup = lattice::intersect(zc, fan.cone(d).lin_lattice());
      for (const auto& [p, div] : torsion(zd, sup))
        r.excluded[p].push_back({c, d, div, p_torsion_element(zd, sup, p)});
    }
  }
  return r;
}

FInjectivity monoid_F_injective(const monoid::AffineMonoid& mon, long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!monoid::check_seminormal_normal(mon).seminormal) throw std::invalid_argument("monoid is not seminormal");
  for (const auto& face : polyhedral::face_lattice(mon.cone()).faces) {
    const auto sub = mon.face_monoid(face).group();
    const auto sup = lattice::intersect(mon.group(), face.lin_lattice());
    for (const auto& [q, div] : torsion(sub, sup))
      if (q == p) return {false, face, p_torsion_element(sub, sup, p)};
  }
  return {true, std::nullopt, std::nullopt};
}

WeakFRegularity weak_F_regular(const moncomplex::MonoidalComplex& m) {
  const auto& maximal = m.fan().maximal();
  if (maximal.size() != 1)
    return {false, std::to_string(maximal.size()) + " maximal cones; a weakly F-regular ring is a domain", std::nullopt};
  const auto sn = monoid::check_seminormal_normal(m.monoid(maximal.front()));
  if (!sn.normal) return {false, "the monoid is not normal", sn.normal_witness};
  return {true, "single normal cone", std::nullopt};
}

}  // namespace tfr::frobenius
