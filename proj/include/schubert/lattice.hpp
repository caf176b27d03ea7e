#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// Exact integer scalar for normal-form elimination; Smith-form
/// intermediates can outgrow machine words.
using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

enum class IsogenyType { adjoint, simply_connected };

/// The character lattice X(T): basis is the simple roots (adjoint) or the
/// fundamental weights (simply connected). Provides coordinates of roots in
/// that basis.
struct CharacterLattice {
  IsogenyType isogeny;
  const RootSystem* rs;

  int rank() const { return rs->rank(); }

  /// Coordinates of a root (given in simple-root coordinates) in the lattice
  /// basis. Adjoint: identity. Simply connected: multiply by the Cartan
  /// matrix, so that alpha_j maps to the j-th column of the Cartan matrix.
  std::vector<BigInt> root_coords(const Root& beta) const;
};

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ...
  int rank_of_image = 0;
};

struct KernelReport {
  int torus_dimension = 0;
  std::vector<BigInt> component_group;  // invariant factors > 1
  bool connected = true;
};

SmithForm smith_normal_form(BigMatrix m);

/// Row-style Hermite normal form: row echelon with positive pivots and
/// entries below each pivot reduced into [0, pivot); zero rows dropped.
/// Canonical, so two row spans over Z coincide iff the forms are equal.
BigMatrix hermite_normal_form(BigMatrix m);

/// beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) for a reduced word.
/// Throws NotReduced when the word is not reduced.
std::vector<Root> beta_sequence(const RootSystem& rs, const Word& word);

/// Whether two sets of roots span the same sublattice of the root lattice.
bool sublattice_equal(const RootSystem& rs, const std::vector<Root>& roots_a,
                      const std::vector<Root>& roots_b);

/// Structure of X(T) / <roots>: torus dimension of the joint kernel and the
/// component group (invariant factors > 1). Empty root set means the kernel
/// is the full torus.
KernelReport kernel_report(const CharacterLattice& lat, const std::vector<Root>& roots);

/// The joint kernel over the beta-sequence of a reduced word equals the
/// joint kernel over the support simple roots: checks sublattice equality
/// and, for both isogeny types, agreement of the kernel reports.
bool verify_lemma_A(const RootSystem& rs, const WeylElement& w);

/// Same check against one specific reduced word of w.
bool verify_lemma_A_word(const RootSystem& rs, const Word& word);

}  // namespace schubert
