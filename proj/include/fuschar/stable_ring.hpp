#pragma once

#include "fuschar/char_table.hpp"
#include "fuschar/cyclotomic.hpp"
#include "fuschar/fusion.hpp"
#include "fuschar/int_matrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fuschar {

// The lattice R(F) of F-stable virtual characters of S, presented by its
// canonical basis: the Hermite normal form of the integer kernel of the
// stability constraints (equality of values across the S-classes fused into
// one F-class), expressed in Irr(S) coordinates.
struct StableBasis {
  CharacterTable irr_s;
  IntMatrix constraints;                // stability constraints (integer rows)
  IntMatrix rows;                       // basis, n x |Irr(S)|, HNF
  std::vector<std::size_t> pivot_cols;  // HNF pivots of `rows`
  std::vector<ClassFunction> views;     // the basis vectors as class functions on S
  CycloMatrix class_values;             // X: basis evaluated at fusion reps, n x n

  std::size_t size() const { return rows.rows(); }
};

StableBasis stable_basis(const FusionData& f, const CharacterTable& irr_s);

// Integer coordinates of an F-stable virtual character in the basis.
// DomainError if x is not F-stable or not an integral combination of Irr(S).
std::vector<Int> coordinates(const ClassFunction& x, const FusionData& f, const StableBasis& b);

// Bounded search for the indecomposable F-stable characters: the nonzero
// elements a of R(F) with nonnegative Irr(S) coordinates that admit no
// splitting a = b + c into two such elements.  Every genuine character of
// degree <= degree_bound is classified exactly (a splitting never raises
// degree), so the atom list below the bound is exact unless the node cap
// interrupts enumeration.
struct IndecomposableSet {
  std::vector<std::vector<Int>> atoms;  // Irr(S) coordinate vectors, (degree, lex) order
  std::uint64_t degree_bound = 0;
  bool complete = false;  // true only with a certificate that atoms = all indecomposables
  bool capped = false;    // node cap interrupted the enumeration
  std::string note;       // the certificate, or why completeness is unknown
};

IndecomposableSet indecomposables(const FusionData& f, const StableBasis& b,
                                  std::uint64_t degree_bound,
                                  std::uint64_t node_cap = 5000000);

enum class FreeGeneration { kFree, kNotFree, kUndecided };

struct FreeGenerationVerdict {
  FreeGeneration verdict = FreeGeneration::kUndecided;
  std::string reason;
};

// Sound verdict on whether the found atoms freely generate the monoid of
// F-stable characters: "free" needs a completeness certificate plus a
// unimodular atom basis; more atoms than the lattice rank refutes freeness;
// anything else stays undecided.
FreeGenerationVerdict free_generation_verdict(const FusionData& f, const StableBasis& b,
                                              const IndecomposableSet& ind);

struct SublatticeIndex {
  bool finite = false;
  Int index = 0;  // [R(F) : span of restrictions], valid when finite
};

// Index in R(F) of the sublattice spanned by the restrictions of Irr(G).
SublatticeIndex restriction_sublattice_index(const CharacterTable& irr_g, const FusionData& f,
                                             const StableBasis& b);

}  // namespace fuschar
