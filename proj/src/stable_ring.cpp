#include "fuschar/stable_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace fuschar {

namespace {

// S-class index -> fusion class index (every S-class sits inside one fusion
// class because S-conjugate elements are G-conjugate).
std::vector<std::uint32_t> s_class_to_f_class(const FusionData& f) {
  const auto& classes = f.s->conjugacy_classes();
  std::vector<std::uint32_t> out(classes.size());
  for (std::size_t j = 0; j < classes.size(); ++j)
    out[j] = f.class_of_s_element[classes[j].member_indices[0]];
  return out;
}

// Groups the S-classes by fusion class, ascending within each group.
std::vector<std::vector<std::uint32_t>> merged_s_classes(const FusionData& f) {
  const std::vector<std::uint32_t> map = s_class_to_f_class(f);
  std::vector<std::vector<std::uint32_t>> groups(f.class_count());
  for (std::uint32_t j = 0; j < map.size(); ++j) groups[map[j]].push_back(j);
  return groups;
}

}  // namespace

StableBasis stable_basis(const FusionData& f, const CharacterTable& irr_s) {
  if (irr_s.group != f.s) throw DomainError("stable_basis: table is not for the fusion's subgroup");
  const std::size_t n_irr = irr_s.size();
  const std::uint64_t conductor = irr_s.conductor;
  const std::size_t phi = Cyclotomic::euler_phi(conductor);
  const auto groups = merged_s_classes(f);

  // Stability constraints: for every fusion class and every S-class j fused
  // with the group's first S-class j0, the equation
  //     sum_chi a_chi (chi(j0) - chi(j)) = 0
  // contributes phi(e) integer rows (one per power-basis coordinate).
  std::vector<std::vector<Int>> rows;
  for (const auto& group : groups) {
    for (std::size_t t = 1; t < group.size(); ++t) {
      std::vector<std::vector<Rat>> diff(n_irr);
      Int denom_lcm = 1;
      for (std::size_t c = 0; c < n_irr; ++c) {
        const Cyclotomic d =
            (irr_s.irr[c].values[group[0]] - irr_s.irr[c].values[group[t]]).promoted(conductor);
        diff[c] = d.coeffs();
        for (const Rat& r : diff[c]) {
          const Int den(boost::multiprecision::denominator(r));
          denom_lcm = boost::multiprecision::lcm(denom_lcm, den);
        }
      }
      for (std::size_t coord = 0; coord < phi; ++coord) {
        std::vector<Int> row(n_irr);
        bool nonzero = false;
        for (std::size_t c = 0; c < n_irr; ++c) {
          const Rat scaled = diff[c][coord] * Rat(denom_lcm);
          internal_check(boost::multiprecision::denominator(scaled) == 1,
                         "stable_basis: constraint scaling failed to clear denominators");
          row[c] = Int(boost::multiprecision::numerator(scaled));
          nonzero |= row[c] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  StableBasis b;
  b.irr_s = irr_s;
  b.constraints = IntMatrix(rows.size(), n_irr);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n_irr; ++c) b.constraints.at(r, c) = rows[r][c];

  IntMatrix kernel = rows.empty() ? IntMatrix::identity(n_irr) : int_kernel_basis(b.constraints);
  const HnfResult h = hnf(kernel);
  internal_check(h.rank == kernel.rows(), "stable_basis: kernel basis is rank-deficient");
  b.rows = IntMatrix(h.rank, n_irr);
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t c = 0; c < n_irr; ++c) b.rows.at(r, c) = h.h.at(r, c);
  b.pivot_cols = h.pivot_cols;
  internal_check(b.rows.rows() == f.class_count(),
                 "stable_basis: lattice rank differs from the fusion class count");

  // Views and the class-value matrix X.
  const std::size_t n = b.rows.rows();
  b.views.reserve(n);
  const std::vector<std::uint32_t> cls_map = s_class_to_f_class(f);
  for (std::size_t i = 0; i < n; ++i) {
    ClassFunction v;
    v.group = f.s;
    for (std::size_t j = 0; j < f.s->class_count(); ++j) {
      Cyclotomic acc = Cyclotomic::zero(conductor);
      for (std::size_t c = 0; c < n_irr; ++c) {
        if (b.rows.at(i, c) == 0) continue;
        acc += Cyclotomic(Rat(b.rows.at(i, c))) * irr_s.irr[c].values[j];
      }
      v.values.push_back(std::move(acc));
    }
    // Stability by construction; verify anyway.
    for (const auto& group : merged_s_classes(f))
      for (std::size_t t = 1; t < group.size(); ++t)
        internal_check(v.values[group[0]] == v.values[group[t]],
                       "stable_basis: basis vector is not constant on a fusion class");
    b.views.push_back(std::move(v));
  }
  b.class_values.assign(n, std::vector<Cyclotomic>(n, Cyclotomic(Rat(0))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      b.class_values[i][k] = b.views[i].values[f.s->class_of(f.reps[k])];
  return b;
}

std::vector<Int> coordinates(const ClassFunction& x, const FusionData& f, const StableBasis& b) {
  if (x.group != f.s) throw DomainError("coordinates: class function is not on the fusion subgroup");
  for (const auto& group : merged_s_classes(f))
    for (std::size_t t = 1; t < group.size(); ++t)
      if (!(x.values[group[0]] == x.values[group[t]]))
        throw DomainError("coordinates: class function is not F-stable");
  const IrrDecomposition dec = irr_decompose(x, b.irr_s);
  if (!dec.integral)
    throw DomainError("coordinates: class function is not an integral combination of Irr(S)");
  const auto solved = solve_in_row_lattice(b.rows, b.pivot_cols, dec.integers);
  internal_check(solved.has_value(),
                 "coordinates: stable integral character lies outside the basis lattice");
  return *solved;
}

IndecomposableSet indecomposables(const FusionData& f, const StableBasis& b,
                                  std::uint64_t degree_bound, std::uint64_t node_cap) {
  IndecomposableSet out;
  out.degree_bound = degree_bound;

  const std::size_t n_irr = b.irr_s.size();
  std::vector<std::uint64_t> deg(n_irr);
  for (std::size_t c = 0; c < n_irr; ++c)
    deg[c] = b.irr_s.degree(c).convert_to<std::uint64_t>();

  // Reduced stability constraints for fast membership tests.
  const HnfResult hc = hnf(b.constraints);
  std::vector<std::vector<Int>> cons;
  for (std::size_t r = 0; r < hc.rank; ++r) cons.push_back(matrix_row(hc.h, r));

  // Depth-first enumeration of all nonzero, nonnegative, stable coordinate
  // vectors of degree <= degree_bound, in lexicographic order.
  std::vector<std::vector<Int>> stable;  // sorted by (degree, lex) later
  std::vector<Int> current(n_irr, Int(0));
  std::uint64_t nodes = 0;
  bool capped = false;
  auto stable_ok = [&](const std::vector<Int>& a) {
    for (const auto& row : cons) {
      Int acc = 0;
      for (std::size_t c = 0; c < n_irr; ++c)
        if (row[c] != 0) acc += row[c] * a[c];
      if (acc != 0) return false;
    }
    return true;
  };
  std::function<void(std::size_t, std::uint64_t)> dfs = [&](std::size_t pos, std::uint64_t budget) {
    if (capped) return;
    if (++nodes > node_cap) {
      capped = true;
      return;
    }
    if (pos == n_irr) {
      bool nonzero = std::any_of(current.begin(), current.end(), [](const Int& v) { return v != 0; });
      if (nonzero && stable_ok(current)) stable.push_back(current);
      return;
    }
    const std::uint64_t max_mult = deg[pos] == 0 ? 0 : budget / deg[pos];
    for (std::uint64_t m = 0; m <= max_mult; ++m) {
      current[pos] = Int(m);
      dfs(pos + 1, budget - m * deg[pos]);
      if (capped) break;
    }
    current[pos] = 0;
  };
  dfs(0, degree_bound);
  out.capped = capped;

  auto degree_of = [&](const std::vector<Int>& a) {
    std::uint64_t d = 0;
    for (std::size_t c = 0; c < n_irr; ++c) d += a[c].convert_to<std::uint64_t>() * deg[c];
    return d;
  };
  std::sort(stable.begin(), stable.end(), [&](const auto& a, const auto& bb) {
    const std::uint64_t da = degree_of(a), db = degree_of(bb);
    if (da != db) return da < db;
    return a < bb;
  });
  std::set<std::vector<Int>> members(stable.begin(), stable.end());

  for (const auto& a : stable) {
    const std::uint64_t da = degree_of(a);
    bool atom = true;
    for (const auto& bb : stable) {
      const std::uint64_t db = degree_of(bb);
      if (2 * db > da) break;  // sorted by degree; parts can be assumed <= da/2
      bool leq = true;
      for (std::size_t c = 0; c < n_irr && leq; ++c) leq = bb[c] <= a[c];
      if (!leq) continue;
      std::vector<Int> rest(n_irr);
      for (std::size_t c = 0; c < n_irr; ++c) rest[c] = a[c] - bb[c];
      if (members.count(rest)) {
        atom = false;
        break;
      }
    }
    if (atom) out.atoms.push_back(a);
  }

  // Completeness certificates (sound only; otherwise stay incomplete).
  out.complete = false;
  if (capped) {
    out.note = "enumeration interrupted by the node cap; atom list may be incomplete";
    return out;
  }
  if (is_transitive_fusion(f)) {
    // Transitive fusion: the indecomposables are exactly 1_S and rho_S - 1_S.
    std::size_t triv = n_irr;
    for (std::size_t c = 0; c < n_irr; ++c) {
      bool all_one = true;
      for (const Cyclotomic& v : b.irr_s.irr[c].values)
        all_one &= v == Cyclotomic(Rat(1));
      if (all_one) {
        triv = c;
        break;
      }
    }
    internal_check(triv < n_irr, "indecomposables: trivial character missing from Irr(S)");
    std::vector<Int> one(n_irr, Int(0));
    one[triv] = 1;
    std::vector<Int> rho_minus(n_irr);
    for (std::size_t c = 0; c < n_irr; ++c) rho_minus[c] = b.irr_s.degree(c);
    rho_minus[triv] -= 1;
    const std::uint64_t rho_deg = f.s->order() - 1;
    if (rho_deg <= degree_bound) {
      std::vector<std::vector<Int>> expect{one, rho_minus};
      std::sort(expect.begin(), expect.end(), [&](const auto& a, const auto& bb) {
        const std::uint64_t da = degree_of(a), db = degree_of(bb);
        if (da != db) return da < db;
        return a < bb;
      });
      internal_check(out.atoms == expect,
                     "indecomposables: transitive fusion atoms differ from {1_S, rho_S - 1_S}");
      out.complete = true;
      out.note = "transitive fusion: indecomposables are exactly 1_S and rho_S - 1_S";
    } else {
      out.note = "degree bound below |S| - 1; the atom rho_S - 1_S is out of range";
    }
    return out;
  }
  if (b.rows == IntMatrix::identity(n_irr)) {
    // Full lattice: the stable characters are all characters, so the
    // indecomposables are exactly Irr(S).
    const std::uint64_t dmax = *std::max_element(deg.begin(), deg.end());
    if (dmax <= degree_bound) {
      internal_check(out.atoms.size() == n_irr,
                     "indecomposables: full lattice should have |Irr(S)| atoms");
      out.complete = true;
      out.note = "stable lattice equals Z Irr(S): indecomposables are exactly Irr(S)";
    } else {
      out.note = "degree bound below max Irr(S) degree";
    }
    return out;
  }
  out.note = "no completeness certificate applies; atom list is exact up to the degree bound";
  return out;
}

FreeGenerationVerdict free_generation_verdict(const FusionData& f, const StableBasis& b,
                                              const IndecomposableSet& ind) {
  FreeGenerationVerdict v;
  const std::size_t n = f.class_count();
  if (!ind.capped && ind.atoms.size() > n) {
    v.verdict = FreeGeneration::kNotFree;
    v.reason = "more indecomposables than the lattice rank " + std::to_string(n);
    return v;
  }
  if (ind.complete && ind.atoms.size() == n) {
    // Atoms generate the monoid (certificate) and form a lattice basis
    // (unimodular in B) => unique factorization.
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto coords = solve_in_row_lattice(b.rows, b.pivot_cols, ind.atoms[i]);
      if (!coords) {
        v.verdict = FreeGeneration::kUndecided;
        v.reason = "an atom lies outside the stable lattice basis";
        return v;
      }
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = (*coords)[j];
    }
    const Int det = int_det(t);
    if (det == 1 || det == -1) {
      v.verdict = FreeGeneration::kFree;
      v.reason = "complete atom set of size |cl(F)| forming a unimodular basis of R(F)";
    } else {
      v.verdict = FreeGeneration::kNotFree;
      v.reason = "complete atom set does not span the stable lattice (index > 1)";
    }
    return v;
  }
  v.verdict = FreeGeneration::kUndecided;
  v.reason = ind.capped ? "atom enumeration was interrupted by the node cap"
                        : "no completeness certificate for the atom list";
  return v;
}

SublatticeIndex restriction_sublattice_index(const CharacterTable& irr_g, const FusionData& f,
                                             const StableBasis& b) {
  if (irr_g.group != f.g) throw DomainError("restriction_sublattice_index: table is not for the fusion's group");
  const std::size_t n = b.size();
  IntMatrix t(irr_g.size(), n);
  for (std::size_t r = 0; r < irr_g.size(); ++r) {
    const std::vector<Int> coords = coordinates(restrict_to(irr_g.irr[r], f.s), f, b);
    for (std::size_t c = 0; c < n; ++c) t.at(r, c) = coords[c];
  }
  const SnfResult s = snf(t);
  SublatticeIndex out;
  if (s.rank < n) {
    out.finite = false;
    return out;
  }
  out.finite = true;
  out.index = 1;
  for (const Int& d : s.divisors) out.index *= d;
  return out;
}

}  // namespace fuschar
