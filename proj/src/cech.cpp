#include "tfr/cech.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tfr::cech {

using moncomplex::MonoidalComplex;

namespace {

// Sum of the facet normals of cone d that vanish on its face c; positive on
// d ∖ c and zero on c.
IntVector relative_grading(const MonoidalComplex& m, std::size_t d, std::size_t c) {
  const auto& dc = m.fan().cone(d);
  const auto& cc = m.fan().cone(c);
  IntVector l = zero_vector(m.ambient_dim());
  for (const auto& u : dc.facets()) {
    bool vanishes = true;
    for (const auto& r : cc.rays()) vanishes = vanishes && sgn(dot(u, r)) == 0;
    if (vanishes) l = add(l, u);
  }
  return l;
}

// Decides a ∈ M_D + Z M_C for a face c of d. On success `part` receives
// an element of M_D with a − part ∈ Z M_C.
class SumDecider {
 public:
  SumDecider(const MonoidalComplex& m, std::size_t d, std::size_t c) : group_(m.monoid(c).group()) {
    grading_ = relative_grading(m, d, c);
    for (const auto& g : m.monoid(d).generators())
      if (!m.fan().cone(c).contains(g)) outside_.push_back(g);
  }

  bool decide(const IntVector& a, IntVector* part) {
    if (!solve(a)) return false;
    if (part) {
      IntVector r = a;
      *part = zero_vector(a.size());
      while (sgn(dot(grading_, r)) > 0) {
        const IntVector& g = outside_[static_cast<std::size_t>(choice_.at(r))];
        r = sub(r, g);
        *part = add(*part, g);
      }
    }
    return true;
  }

 private:
  bool solve(const IntVector& r) {
    const int s = sgn(dot(grading_, r));
    if (s < 0) return false;
    if (s == 0) return group_.contains(r);
    auto it = choice_.find(r);
    if (it != choice_.end()) return it->second >= 0;
    long found = -1;
    for (std::size_t i = 0; i < outside_.size() && found < 0; ++i)
      if (solve(sub(r, outside_[i]))) found = static_cast<long>(i);
    choice_.emplace(r, found);
    return found >= 0;
  }

  lattice::LatticeBasis group_;
  IntVector grading_;
  std::vector<IntVector> outside_;
  std::unordered_map<IntVector, long, IntVectorHash> choice_;
};

IntVector generator_sum(const monoid::AffineMonoid& mon) {
  IntVector s = zero_vector(mon.ambient_dim());
  for (const auto& g : mon.generators()) s = add(s, g);
  return s;
}

// --- linear algebra over F_p on small dense matrices ---

using ModMatrix = std::vector<std::vector<long>>;

long mod(const Integer& x, long p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

long inverse_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Column vectors as rows of the returned reduced list; rank of their span.
std::size_t rank_mod_p(ModMatrix rows, long p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const long f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Basis of the kernel of a (rows × cols) over F_p.
std::vector<std::vector<long>> kernel_mod_p(const ModMatrix& a, std::size_t cols, long p) {
  ModMatrix m = a;
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const long inv = inverse_mod(m[rank][c], p);
    for (auto& x : m[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    pivot_of_col[c] = static_cast<long>(rank++);
  }
  std::vector<std::vector<long>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<long> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = (p - m[static_cast<std::size_t>(pivot_of_col[c])][free]) % p;
    out.push_back(v);
  }
  return out;
}

ModMatrix reduce(const IntMatrix& a, long p) {
  ModMatrix m(a.rows(), std::vector<long>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = mod(a(r, c), p);
  return m;
}

}  // namespace

Integer default_bound(const MonoidalComplex& m) {
  Integer top = 1;
  for (std::size_t i = 0; i < m.fan().size(); ++i)
    for (const auto& g : m.monoid(i).generators()) top = std::max(top, m.monoid(i).degree(g));
  return 8 * top;
}

Piece localization_piece(const MonoidalComplex& m, std::size_t cone, const IntVector& a, const Integer& bound) {
  Piece piece;
  piece.cone = cone;
  const auto& fan = m.fan();
  for (std::size_t d : fan.cofaces(cone)) {
    SumDecider decider(m, d, cone);
    IntVector part;
    if (!decider.decide(a, &part)) continue;
    piece.nonzero = true;
    piece.refuge = d;
    // a = part + w with w ∈ Z M_C; push w into M_C along the generator sum
    const auto& mc = m.monoid(cone);
    const IntVector sigma = generator_sum(mc);
    const IntVector w = sub(a, part);
    IntVector shifted = w;
    for (Integer t = 0; t <= bound; ++t, shifted = add(shifted, sigma)) {
      if (!mc.contains(shifted)) continue;
      IntVector y = scale(t, sigma);
      IntVector z = add(a, y);
      if (!m.monoid(d).contains(z) || sub(z, y) != a || !mc.contains(y))
        throw std::logic_error("invalid localization witness at " + to_string(a));
      piece.z = z;
      piece.y = y;
      break;
    }
    return piece;
  }
  return piece;
}

bool transition(const MonoidalComplex& m, std::size_t from, std::size_t to, const IntVector& a) {
  if (!m.fan().is_face(from, to)) throw std::invalid_argument("transition: not a face pair");
  for (std::size_t d : m.fan().cofaces(to)) {
    SumDecider decider(m, d, from);
    if (decider.decide(a, nullptr)) return true;
  }
  return false;
}

CechSlice cech_slice(const MonoidalComplex& m, const IntVector& a, std::optional<Integer> bound) {
  if (a.size() != m.ambient_dim()) throw std::invalid_argument("degree has wrong dimension");
  const auto& fan = m.fan();
  const auto& cx = m.cells();
  CechSlice s;
  s.degree = a;
  s.bound = bound ? *bound : default_bound(m);
  const std::size_t top = fan.dim();
  s.basis.resize(top + 1);
  for (std::size_t i = 0; i < fan.size(); ++i) {
    s.pieces.push_back(localization_piece(m, i, a, s.bound));
    const Piece& p = s.pieces.back();
    if (p.nonzero) {
      s.basis[fan.cone(i).dim()].push_back(i);
      if (!p.z) s.status = Status::bound_exhausted;
    }
  }
  for (std::size_t t = 0; t < top; ++t) {
    const auto& src = s.basis[t];
    const auto& dst = s.basis[t + 1];
    IntMatrix map(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t r = 0; r < dst.size(); ++r) {
        const int sign = cx.incidence(dst[r], src[c]);
        if (sign != 0 && transition(m, src[c], dst[r], a)) map(r, c) = sign;
      }
    s.maps.push_back(std::move(map));
  }
  for (std::size_t t = 0; t + 1 < s.maps.size(); ++t)
    if (!(s.maps[t + 1] * s.maps[t]).is_zero())
      throw std::logic_error("Čech slice at " + to_string(a) + " is not a complex");
  return s;
}

CechResult cech_degree(const MonoidalComplex& m, const IntVector& a, std::optional<Integer> bound) {
  CechResult r;
  r.slice = cech_slice(m, a, bound);
  std::vector<std::size_t> sizes;
  for (const auto& b : r.slice.basis) sizes.push_back(b.size());
  r.table = CohomologyTable::of_cochain_complex(sizes, r.slice.maps);
  r.table.oracle_computed = true;
  r.table.bound_exhausted = r.slice.status == Status::bound_exhausted;
  return r;
}

FrobeniusResult frobenius_check(const MonoidalComplex& m, const IntVector& a, long p, std::optional<Integer> bound) {
  if (p < 2 || lattice::prime_divisors(Integer(p)) != std::vector<long>{p})
    throw std::invalid_argument("frobenius_check: " + std::to_string(p) + " is not a prime");
  FrobeniusResult res;
  res.degree = a;
  res.prime = p;
  const CechSlice src = cech_slice(m, a, bound);
  const CechSlice dst = cech_slice(m, scale(p, a), bound);
  if (src.status != Status::complete || dst.status != Status::complete) res.status = Status::bound_exhausted;
  const std::size_t top = m.fan().dim();

  for (std::size_t i = 0; i <= top; ++i) {
    const auto& sb = src.basis[i];
    const auto& db = dst.basis[i];
    // cocycles at a
    ModMatrix out_src = i < top ? reduce(src.maps[i], p) : ModMatrix{};
    auto cocycles = kernel_mod_p(out_src, sb.size(), p);
    if (i == top) {
      cocycles.clear();
      for (std::size_t k = 0; k < sb.size(); ++k) {
        std::vector<long> e(sb.size(), 0);
        e[k] = 1;
        cocycles.push_back(e);
      }
    }
    // coboundaries at p·a, as row vectors in the basis db
    ModMatrix coboundaries;
    if (i > 0) {
      ModMatrix in_dst = reduce(dst.maps[i - 1], p);
      for (std::size_t c = 0; c < dst.basis[i - 1].size(); ++c) {
        std::vector<long> col(db.size());
        for (std::size_t r = 0; r < db.size(); ++r) col[r] = in_dst[r][c];
        coboundaries.push_back(col);
      }
    }
    // Frobenius sends the generator of each nonzero piece to the generator
    // of the same cone's piece at p·a
    ModMatrix images;
    for (const auto& z : cocycles) {
      std::vector<long> img(db.size(), 0);
      for (std::size_t k = 0; k < sb.size(); ++k) {
        auto pos = std::find(db.begin(), db.end(), sb[k]);
        if (pos == db.end()) throw std::logic_error("Frobenius image of a nonzero piece vanished");
        img[static_cast<std::size_t>(pos - db.begin())] = z[k];
      }
      images.push_back(img);
    }
    const std::size_t rank_b_dst = rank_mod_p(coboundaries, p);
    ModMatrix both = images;
    both.insert(both.end(), coboundaries.begin(), coboundaries.end());
    FrobeniusDegree fd;
    ModMatrix in_src;
    std::size_t rank_b_src = 0;
    if (i > 0) {
      ModMatrix in = reduce(src.maps[i - 1], p);
      for (std::size_t c = 0; c < src.basis[i - 1].size(); ++c) {
        std::vector<long> col(sb.size());
        for (std::size_t r = 0; r < sb.size(); ++r) col[r] = in[r][c];
        in_src.push_back(col);
      }
      rank_b_src = rank_mod_p(in_src, p);
    }
    fd.source_dim = cocycles.size() - rank_b_src;
    const std::size_t dst_cocycles =
        i < top ? kernel_mod_p(reduce(dst.maps[i], p), db.size(), p).size() : db.size();
    fd.target_dim = dst_cocycles - rank_b_dst;
    fd.rank = (both.empty() ? 0 : rank_mod_p(both, p)) - rank_b_dst;
    fd.injective = fd.rank == fd.source_dim;
    fd.bijective = fd.injective && fd.source_dim == fd.target_dim;
    res.per_degree.push_back(fd);
  }
  return res;
}

}  // namespace tfr::cech
