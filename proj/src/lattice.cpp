#include "tfr/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace tfr::lattice {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smith reduction shared by snf() and elementary_divisors(); null transforms
// are not tracked.
void smith_reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  auto swap_r = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto swap_c = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  auto add_r = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  };
  auto add_c = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col_multiple(dst, src, k);
    if (v) v->add_col_multiple(dst, src, k);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // pivot: smallest nonzero entry of the trailing block
    std::size_t pr = m, pc = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d(i, j)) != 0 && (pr == m || abs_of(d(i, j)) < abs_of(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m) break;
    swap_r(t, pr);
    swap_c(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        add_r(i, t, -trunc_div(d(i, t), d(t, t)));
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        add_c(j, t, -trunc_div(d(t, j), d(t, t)));
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) {
        // move the smallest remainder in row/column t onto the pivot
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d(i, t)) != 0 && abs_of(d(i, t)) < abs_of(d(br, bc))) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(t, j)) != 0 && abs_of(d(t, j)) < abs_of(d(br, bc))) {
            br = t;
            bc = j;
          }
        swap_r(t, br);
        swap_c(t, bc);
        continue;
      }
      // divisibility of the trailing block by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d(i, j)) != 0 && !mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      add_r(t, bad, Integer(1));
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

std::vector<std::size_t> pivot_columns(const std::vector<IntVector>& rows) {
  std::vector<std::size_t> piv;
  for (const auto& r : rows) {
    std::size_t c = 0;
    while (c < r.size() && sgn(r[c]) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

}  // namespace

HNFResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  HNFResult res{a, IntMatrix::identity(m), 0, {}};
  IntMatrix& h = res.H;
  IntMatrix& u = res.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (sgn(h(i, c)) != 0 && (best == m || abs_of(h(i, c)) < abs_of(h(best, c)))) best = i;
      if (best == m) break;
      found = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        Integer q = trunc_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (!found) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

SNFResult snf(const IntMatrix& a) {
  SNFResult res{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()), {}};
  smith_reduce(res.D, &res.U, &res.V);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (sgn(res.D(i, i)) == 0) break;
    res.divisors.push_back(res.D(i, i));
  }
  return res;
}

std::vector<Integer> elementary_divisors(const IntMatrix& a) {
  IntMatrix d = a;
  smith_reduce(d, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (sgn(d(i, i)) == 0) break;
    out.push_back(d(i, i));
  }
  return out;
}

std::size_t rank(const IntMatrix& a) { return hnf(a).rank; }

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = a;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t s = k + 1;
      while (s < n && sgn(m(s, k)) == 0) ++s;
      if (s == n) return 0;
      m.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  HNFResult h = hnf(a);
  if (!(h.H == IntMatrix::identity(a.rows()))) throw std::invalid_argument("matrix is not unimodular");
  return h.U;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HNFResult h = hnf(a.transpose());
  std::vector<IntVector> rows;
  for (std::size_t i = h.rank; i < n; ++i) rows.push_back(h.U.row(i));
  if (rows.empty()) return rows;
  HNFResult canon = hnf(IntMatrix::from_rows(rows, n));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.H.row(i));
  return out;
}

std::vector<long> prime_divisors(const Integer& n) {
  if (n == 0) throw std::invalid_argument("prime_divisors of zero");
  Integer x = abs_of(n);
  std::vector<long> out;
  for (long p = 2; Integer(p) * p <= x; ++p) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
      out.push_back(p);
      while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) x /= p;
    }
  }
  if (x > 1) {
    if (!x.fits_slong_p()) throw std::overflow_error("prime factor exceeds machine range");
    out.push_back(x.get_si());
  }
  return out;
}

LatticeBasis LatticeBasis::generated_by(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  LatticeBasis l;
  l.ambient_dim_ = ambient_dim;
  if (generators.empty()) return l;
  HNFResult h = hnf(IntMatrix::from_rows(generators, ambient_dim));
  for (std::size_t i = 0; i < h.rank; ++i) l.basis_.push_back(h.H.row(i));
  return l;
}

LatticeBasis LatticeBasis::full(std::size_t ambient_dim) {
  LatticeBasis l;
  l.ambient_dim_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    IntVector e = zero_vector(ambient_dim);
    e[i] = 1;
    l.basis_.push_back(e);
  }
  return l;
}

LatticeBasis LatticeBasis::zero(std::size_t ambient_dim) {
  LatticeBasis l;
  l.ambient_dim_ = ambient_dim;
  return l;
}

bool LatticeBasis::contains(const IntVector& v) const { return solve_in_lattice(*this, v).has_value(); }

bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.rank() != b.rank()) return false;
  for (const auto& v : a.basis())
    if (!b.contains(v)) return false;
  for (const auto& v : b.basis())
    if (!a.contains(v)) return false;
  return true;
}

std::optional<std::vector<Integer>> solve_in_lattice(const LatticeBasis& l, const IntVector& v) {
  if (v.size() != l.ambient_dim()) throw std::invalid_argument("solve_in_lattice: dimension mismatch");
  const auto& basis = l.basis();
  const auto piv = pivot_columns(basis);
  IntVector rest = v;
  std::vector<Integer> coeff(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t c = piv[i];
    for (std::size_t j = (i == 0 ? 0 : piv[i - 1] + 1); j < c; ++j)
      if (sgn(rest[j]) != 0) return std::nullopt;
    if (!mpz_divisible_p(rest[c].get_mpz_t(), basis[i][c].get_mpz_t())) return std::nullopt;
    mpz_divexact(coeff[i].get_mpz_t(), rest[c].get_mpz_t(), basis[i][c].get_mpz_t());
    for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= coeff[i] * basis[i][j];
  }
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

LatticeBasis intersect(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: dimension mismatch");
  const std::size_t d = a.ambient_dim();
  if (a.rank() == 0 || b.rank() == 0) return LatticeBasis::zero(d);
  std::vector<IntVector> stacked = a.basis();
  stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
  HNFResult h = hnf(IntMatrix::from_rows(stacked, d));
  // rows of U killing the stack are relations x·A + y·B = 0
  std::vector<IntVector> gens;
  for (std::size_t i = h.rank; i < stacked.size(); ++i) {
    const IntVector row = h.U.row(i);
    IntVector x(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    gens.push_back(IntMatrix::from_rows(a.basis(), d).apply_left(x));
  }
  return LatticeBasis::generated_by(d, gens);
}

std::vector<IntVector> orthogonal_complement(const LatticeBasis& l) {
  const std::size_t d = l.ambient_dim();
  if (l.rank() == 0) return LatticeBasis::full(d).basis();
  return integer_kernel(IntMatrix::from_rows(l.basis(), d));
}

LatticeBasis saturation(const LatticeBasis& l) {
  const std::size_t d = l.ambient_dim();
  auto perp = orthogonal_complement(l);
  if (perp.empty()) return LatticeBasis::full(d);
  return LatticeBasis::generated_by(d, integer_kernel(IntMatrix::from_rows(perp, d)));
}

Integer QuotientInvariants::torsion_order() const {
  Integer p = 1;
  for (const auto& x : divisors) p *= x;
  return p;
}

std::vector<long> QuotientInvariants::torsion_primes() const {
  std::vector<long> out;
  for (const auto& x : divisors)
    if (x > 1)
      for (long p : prime_divisors(x)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

IntMatrix coordinates_in(const LatticeBasis& sub, const LatticeBasis& sup) {
  IntMatrix x(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = solve_in_lattice(sup, sub.basis()[i]);
    if (!c) throw std::invalid_argument("quotient_invariants: sublattice is not contained in the superlattice");
    for (std::size_t j = 0; j < sup.rank(); ++j) x(i, j) = (*c)[j];
  }
  return x;
}

}  // namespace

QuotientInvariants quotient_invariants(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw std::invalid_argument("quotient_invariants: dimension mismatch");
  QuotientInvariants q;
  q.free_rank = sup.rank() - sub.rank();
  if (sub.rank() == 0) return q;
  q.divisors = elementary_divisors(coordinates_in(sub, sup));
  return q;
}

std::vector<IntVector> coset_representatives(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.rank() != sup.rank()) throw std::invalid_argument("coset_representatives: index is infinite");
  const std::size_t d = sup.ambient_dim();
  const std::size_t k = sup.rank();
  if (k == 0) return {zero_vector(d)};
  SNFResult s = snf(coordinates_in(sub, sup));
  IntMatrix vinv = unimodular_inverse(s.V);
  IntMatrix sup_rows = IntMatrix::from_rows(sup.basis(), d);
  std::vector<IntVector> out;
  IntVector digits = zero_vector(k);
  for (;;) {
    out.push_back(sup_rows.apply_left(vinv.apply_left(digits)));
    std::size_t i = k;
    bool carry = true;
    while (carry && i > 0) {
      --i;
      digits[i] += 1;
      if (digits[i] < s.divisors[i])
        carry = false;
      else
        digits[i] = 0;
    }
    if (carry) break;
  }
  return out;
}

}  // namespace tfr::lattice
