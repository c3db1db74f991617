#include "fuschar/char_table.hpp"

#include "fuschar/fp_poly.hpp"
#include "fuschar/modp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace fuschar {

Int CharacterTable::degree(std::size_t i) const {
  auto d = irr.at(i).values.at(0).to_integer();
  internal_check(d.has_value(), "CharacterTable: degree is not an integer");
  return *d;
}

std::uint64_t class_mult_coefficient(const PermGroup::Ptr& g, std::uint32_t i, std::uint32_t j,
                                     std::uint32_t k) {
  const auto& classes = g->conjugacy_classes();
  if (i >= classes.size() || j >= classes.size() || k >= classes.size())
    throw DomainError("class_mult_coefficient: class index out of range");
  const Permutation z = classes[k].representative;
  std::uint64_t count = 0;
  for (std::uint32_t xi : classes[i].member_indices) {
    const Permutation& x = g->elements()[xi];
    if (g->class_of(x.inverse() * z) == j) ++count;
  }
  return count;
}

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

std::uint64_t isqrt_u64(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, std::uint64_t q) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const std::uint64_t inv = inv_mod(m[r][c], q);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = mul_mod(m[r][j], inv, q);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = (m[i][j] + q - mul_mod(f, m[r][j], q)) % q;
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis (as rows) of the null space of the square matrix a.
Mat null_space(Mat a, std::uint64_t q) {
  const std::size_t n = a.size();
  const std::vector<std::size_t> pivots = rref(a, q);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      // row r reads x_{pivot_r} + sum_{c > pivot_r} a[r][c] x_c = 0
      const std::uint64_t coef = a[r][free];
      if (coef != 0) v[pivots[r]] = q - coef;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t det_mod(Mat a, std::uint64_t q) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i)
      if (a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[sel], a[c]);
      det = q - det;
    }
    det = mul_mod(det, a[c][c], q);
    const std::uint64_t inv = inv_mod(a[c][c], q);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(a[i][c], inv, q);
      for (std::size_t j = c; j < n; ++j) a[i][j] = (a[i][j] + q - mul_mod(f, a[c][j], q)) % q;
    }
  }
  return det % q;
}

// Characteristic polynomial det(xI - R) by evaluation at x = 0..d and
// Lagrange interpolation; monic of degree d, constant term first.
FpPoly char_poly(const Mat& r, std::uint64_t q) {
  const std::size_t d = r.size();
  internal_check(d < q, "char_poly: field too small for interpolation");
  std::vector<std::uint64_t> xs(d + 1), ys(d + 1);
  for (std::size_t s = 0; s <= d; ++s) {
    xs[s] = s % q;
    Mat shifted = r;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::uint64_t v = (q - shifted[i][j]) % q;  // -R
        if (i == j) v = (v + xs[s]) % q;
        shifted[i][j] = v;
      }
    ys[s] = det_mod(std::move(shifted), q);
  }
  // N(x) = prod (x - x_s)
  FpPoly big{1};
  for (std::size_t s = 0; s <= d; ++s) big = fp_mul(big, FpPoly{(q - xs[s]) % q, 1}, q);
  FpPoly acc(d + 1, 0);
  for (std::size_t s = 0; s <= d; ++s) {
    FpPoly num = fp_div_exact(big, FpPoly{(q - xs[s]) % q, 1}, q);
    std::uint64_t denom = 1;
    for (std::size_t t = 0; t <= d; ++t) {
      if (t == s) continue;
      denom = mul_mod(denom, (xs[s] + q - xs[t]) % q, q);
    }
    const std::uint64_t scale = mul_mod(ys[s], inv_mod(denom, q), q);
    for (std::size_t i = 0; i < num.size(); ++i)
      acc[i] = (acc[i] + mul_mod(scale, num[i], q)) % q;
  }
  internal_check(acc.size() == d + 1 && acc.back() == 1, "char_poly: result not monic");
  return acc;
}

// All distinct roots in F_q of f (monic), ascending.  Separable part via
// gcd(f, x^q - x), then Cantor-Zassenhaus splitting with a fixed-seed
// generator so runs are reproducible.
std::vector<std::uint64_t> distinct_roots(const FpPoly& f, std::uint64_t q) {
  FpPoly xq = fp_pow_mod(FpPoly{0, 1}, q, f, q);  // x^q mod f
  if (xq.size() < 2) xq.resize(2, 0);
  xq[1] = (xq[1] + q - 1) % q;
  fp_trim(xq);
  FpPoly g = fp_gcd(f, xq, q);  // product of distinct linear factors
  std::vector<std::uint64_t> roots;
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<FpPoly> stack{g};
  while (!stack.empty()) {
    FpPoly h = std::move(stack.back());
    stack.pop_back();
    fp_trim(h);
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      // h = x + c (monic): root = -c
      const std::uint64_t c = mul_mod(h[0], inv_mod(h[1], q), q);
      roots.push_back((q - c) % q);
      continue;
    }
    for (;;) {
      const std::uint64_t a = rng() % q;
      FpPoly probe = fp_pow_mod(FpPoly{a, 1}, (q - 1) / 2, h, q);
      if (probe.empty())
        probe = {q - 1};
      else
        probe[0] = (probe[0] + q - 1) % q;
      fp_trim(probe);
      FpPoly w = fp_gcd(h, probe, q);
      if (w.size() > 1 && w.size() < h.size()) {
        stack.push_back(fp_div_exact(h, w, q));
        stack.push_back(std::move(w));
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Subspace {
  Mat rows;                    // rref basis
  std::vector<std::size_t> pivots;
};

// Matrix-vector product A v over F_q.
Vec apply(const Mat& a, const Vec& v, std::uint64_t q) {
  const std::size_t n = a.size();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += static_cast<unsigned __int128>(a[i][j]) * v[j];
    out[i] = static_cast<std::uint64_t>(acc % q);
  }
  return out;
}

}  // namespace

CharacterTable character_table(const PermGroup::Ptr& g) {
  const std::size_t k = g->class_count();
  const std::uint64_t n = g->order();
  const auto& classes = g->conjugacy_classes();
  const std::uint64_t e = g->exponent();
  // q > 2 sqrt(|G|) for the degree bound, q > #classes so the characteristic
  // polynomial of any invariant subspace has enough interpolation points.
  const std::uint64_t q =
      next_prime_in_progression(e, std::max<std::uint64_t>(isqrt_u64(4 * n), k), n);

  std::vector<std::uint32_t> inv_class(k);
  for (std::uint32_t j = 0; j < k; ++j) inv_class[j] = g->inverse_class(j);

  // Class multiplication matrices, built on demand:
  // A_i[j][k] = #{ x in K_i : x^{-1} z_k in K_j }.
  std::map<std::size_t, Mat> amats;
  auto class_matrix = [&](std::size_t i) -> const Mat& {
    auto it = amats.find(i);
    if (it != amats.end()) return it->second;
    Mat a(k, Vec(k, 0));
    for (std::size_t c = 0; c < k; ++c) {
      const Permutation& z = classes[c].representative;
      for (std::uint32_t xi : classes[i].member_indices) {
        const Permutation& x = g->elements()[xi];
        a[g->class_of(x.inverse() * z)][c] += 1;
      }
    }
    for (auto& row : a)
      for (auto& v : row) v %= q;
    return amats.emplace(i, std::move(a)).first->second;
  };

  // Split the class algebra into its k one-dimensional common eigenspaces.
  std::vector<Subspace> spaces;
  {
    Subspace full;
    full.rows.assign(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
      full.rows[i][i] = 1;
      full.pivots.push_back(i);
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(),
                                 [](const Subspace& s) { return s.rows.size() == 1; });
    if (all_split) break;
    const Mat& a = class_matrix(i);
    std::vector<Subspace> next;
    for (Subspace& sub : spaces) {
      const std::size_t d = sub.rows.size();
      if (d == 1) {
        next.push_back(std::move(sub));
        continue;
      }
      // Restrict A_i to the subspace: columns are coordinates of A_i b_t.
      Mat images(d);
      for (std::size_t t = 0; t < d; ++t) images[t] = apply(a, sub.rows[t], q);
      Mat r(d, Vec(d, 0));
      for (std::size_t t = 0; t < d; ++t) {
        // Read coordinates off the rref pivots, then verify the expansion.
        Vec coord(d);
        for (std::size_t s = 0; s < d; ++s) coord[s] = images[t][sub.pivots[s]];
        Vec rebuilt(k, 0);
        for (std::size_t s = 0; s < d; ++s)
          for (std::size_t c = 0; c < k; ++c)
            rebuilt[c] = (rebuilt[c] + mul_mod(coord[s], sub.rows[s][c], q)) % q;
        internal_check(rebuilt == images[t], "character_table: subspace not invariant");
        for (std::size_t s = 0; s < d; ++s) r[s][t] = coord[s];
      }
      const std::vector<std::uint64_t> roots = distinct_roots(char_poly(r, q), q);
      internal_check(!roots.empty(), "character_table: no eigenvalues over F_q");
      if (roots.size() == 1) {
        next.push_back(std::move(sub));
        continue;
      }
      std::size_t total = 0;
      for (std::uint64_t lam : roots) {
        Mat shifted = r;
        for (std::size_t t = 0; t < d; ++t) shifted[t][t] = (shifted[t][t] + q - lam) % q;
        Mat ker = null_space(std::move(shifted), q);
        internal_check(!ker.empty(), "character_table: claimed eigenvalue has no eigenvector");
        Subspace piece;
        piece.rows.assign(ker.size(), Vec(k, 0));
        for (std::size_t t = 0; t < ker.size(); ++t)
          for (std::size_t s = 0; s < d; ++s)
            for (std::size_t c = 0; c < k; ++c)
              piece.rows[t][c] =
                  (piece.rows[t][c] + mul_mod(ker[t][s], sub.rows[s][c], q)) % q;
        piece.pivots = rref(piece.rows, q);
        internal_check(piece.rows.size() == ker.size(), "character_table: eigenspace collapsed");
        total += piece.rows.size();
        next.push_back(std::move(piece));
      }
      internal_check(total == d, "character_table: eigenspaces do not fill the subspace");
    }
    spaces = std::move(next);
  }
  internal_check(spaces.size() == k, "character_table: class algebra did not split completely");

  // Central characters, normalized to omega(K_0) = 1.
  Mat omegas;
  for (const Subspace& sub : spaces) {
    internal_check(sub.rows.size() == 1, "character_table: eigenspace dimension exceeds 1");
    Vec u = sub.rows[0];
    internal_check(u[0] != 0, "character_table: central character vanishes at the identity class");
    const std::uint64_t scale = inv_mod(u[0], q);
    for (auto& v : u) v = mul_mod(v, scale, q);
    omegas.push_back(std::move(u));
  }

  // Degrees from d^2 = |G| / sum_j omega_j omega_{j*} / |K_j|.
  const std::uint64_t deg_bound = isqrt_u64(n);
  std::vector<std::uint64_t> degrees(k, 0);
  Mat values(k, Vec(k, 0));  // chi_t(g_j) mod q
  for (std::size_t t = 0; t < k; ++t) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t term =
          mul_mod(mul_mod(omegas[t][j], omegas[t][inv_class[j]], q),
                  inv_mod(classes[j].size() % q, q), q);
      s = (s + term) % q;
    }
    internal_check(s != 0, "character_table: degree denominator vanished mod q");
    const std::uint64_t d2 = mul_mod(n % q, inv_mod(s, q), q);
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d <= deg_bound; ++d) {
      if (mul_mod(d % q, d % q, q) == d2) {
        deg = d;
        break;
      }
    }
    internal_check(deg != 0, "character_table: no degree d <= sqrt(|G|) matches d^2 mod q");
    degrees[t] = deg;
    for (std::size_t j = 0; j < k; ++j)
      values[t][j] = mul_mod(mul_mod(deg % q, omegas[t][j], q),
                             inv_mod(classes[j].size() % q, q), q);
  }

  // Lift mod-q values to Z[zeta_e].  For each class j of element order n_j,
  // chi(g_j) = sum_u c_u zeta_{n_j}^u where c_u is the multiplicity of the
  // eigenvalue zeta^u of the representing matrix; the c_u are recovered by
  // an inverse DFT over F_q.  Degree-1 rows are also read off directly as a
  // discrete logarithm of the value itself, and the two must agree.
  const std::uint64_t w = primitive_root_mod(q);
  std::vector<std::vector<std::uint32_t>> power_class(k);
  std::vector<std::uint64_t> elt_order(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Permutation& rep = classes[j].representative;
    const std::uint64_t nj = rep.order();
    elt_order[j] = nj;
    power_class[j].resize(nj);
    Permutation pw(g->degree());
    for (std::uint64_t v = 0; v < nj; ++v) {
      power_class[j][v] = g->class_of(pw);
      pw = pw * rep;
    }
  }

  std::vector<ClassFunction> rows(k);
  for (std::size_t t = 0; t < k; ++t) {
    ClassFunction cf;
    cf.group = g;
    cf.values.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t nj = elt_order[j];
      const std::uint64_t zn = pow_mod(w, (q - 1) / nj, q);
      const std::uint64_t zn_inv = inv_mod(zn, q);
      const std::uint64_t n_inv = inv_mod(nj % q, q);
      std::vector<std::uint64_t> mult(nj, 0);
      std::uint64_t total = 0;
      for (std::uint64_t u = 0; u < nj; ++u) {
        std::uint64_t acc = 0;
        std::uint64_t zpow = 1;  // zn_inv^{u v}
        const std::uint64_t step = pow_mod(zn_inv, u, q);
        for (std::uint64_t v = 0; v < nj; ++v) {
          acc = (acc + mul_mod(values[t][power_class[j][v]], zpow, q)) % q;
          zpow = mul_mod(zpow, step, q);
        }
        mult[u] = mul_mod(acc, n_inv, q);
        internal_check(mult[u] <= degrees[t], "character_table: lifted multiplicity exceeds degree");
        total += mult[u];
      }
      internal_check(total == degrees[t], "character_table: eigenvalue multiplicities do not sum to degree");
      Cyclotomic val = Cyclotomic::zero(e);
      for (std::uint64_t u = 0; u < nj; ++u) {
        if (mult[u] == 0) continue;
        val += Cyclotomic(Rat(mult[u])) *
               Cyclotomic::root_of_unity(e, static_cast<long long>(u * (e / nj)));
      }
      if (degrees[t] == 1) {
        const std::uint64_t a = bsgs_log(zn, values[t][j], nj, q);
        const Cyclotomic direct = Cyclotomic::root_of_unity(e, static_cast<long long>(a * (e / nj)));
        internal_check(direct == val, "character_table: discrete-log and DFT lifts disagree");
      }
      cf.values.push_back(std::move(val));
    }
    rows[t] = std::move(cf);
  }

  std::sort(rows.begin(), rows.end(), [&](const ClassFunction& a, const ClassFunction& b) {
    const int c0 = Cyclotomic::compare(a.values[0], b.values[0]);
    if (c0 != 0) return c0 < 0;
    for (std::size_t j = 1; j < k; ++j) {
      const int c = Cyclotomic::compare(a.values[j], b.values[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable table;
  table.group = g;
  table.conductor = e;
  table.irr = std::move(rows);

  // Orthogonality and degree checks; a failure here is an implementation bug.
  Int degsq = 0;
  for (std::size_t t = 0; t < k; ++t) degsq += table.degree(t) * table.degree(t);
  internal_check(degsq == Int(n), "character_table: sum of squared degrees is not |G|");
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t) {
      Cyclotomic acc;
      for (std::size_t j = 0; j < k; ++j)
        acc += Rat(classes[j].size()) *
               (table.irr[s].values[j] * table.irr[t].values[j].conj());
      const Cyclotomic expect = (s == t) ? Cyclotomic(Rat(n)) : Cyclotomic(Rat(0));
      internal_check(acc == expect, "character_table: first orthogonality relation failed");
    }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t j2 = 0; j2 < k; ++j2) {
      Cyclotomic acc;
      for (std::size_t t = 0; t < k; ++t)
        acc += table.irr[t].values[j] * table.irr[t].values[j2].conj();
      const Cyclotomic expect =
          (j == j2) ? Cyclotomic(Rat(classes[j].centralizer_order)) : Cyclotomic(Rat(0));
      internal_check(acc == expect, "character_table: second orthogonality relation failed");
    }
  return table;
}

ClassFunction restrict_to(const ClassFunction& f, const PermGroup::Ptr& s) {
  ClassFunction out;
  out.group = s;
  out.values.reserve(s->class_count());
  for (const ConjClass& c : s->conjugacy_classes()) {
    if (!f.group->contains(c.representative))
      throw DomainError("restrict_to: subgroup element missing from the ambient group");
    out.values.push_back(f.value_at(c.representative));
  }
  return out;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw DomainError("inner_product: class functions on different groups");
  const auto& classes = a.group->conjugacy_classes();
  Cyclotomic acc;
  for (std::size_t j = 0; j < classes.size(); ++j)
    acc += Rat(classes[j].size()) * (a.values[j] * b.values[j].conj());
  return acc.scaled(Rat(Int(1), Int(a.group->order())));
}

IrrDecomposition irr_decompose(const ClassFunction& f, const CharacterTable& table) {
  if (f.group != table.group)
    throw DomainError("irr_decompose: class function and table on different groups");
  IrrDecomposition out;
  out.rational = true;
  out.integral = true;
  for (const ClassFunction& chi : table.irr) {
    const Cyclotomic ip = inner_product(f, chi);
    const auto r = ip.to_rational();
    if (!r) {
      out.rational = false;
      out.integral = false;
      out.coeffs.clear();
      out.integers.clear();
      return out;
    }
    out.coeffs.push_back(*r);
    if (boost::multiprecision::denominator(*r) != 1) out.integral = false;
  }
  if (out.integral)
    for (const Rat& c : out.coeffs) out.integers.emplace_back(boost::multiprecision::numerator(c));
  return out;
}

ClassFunction regular_character(const PermGroup::Ptr& g) {
  ClassFunction out;
  out.group = g;
  out.values.assign(g->class_count(), Cyclotomic(Rat(0)));
  internal_check(g->conjugacy_classes()[0].representative.is_identity(),
                 "regular_character: identity class is not first");
  out.values[0] = Cyclotomic(Rat(g->order()));
  return out;
}

}  // namespace fuschar
