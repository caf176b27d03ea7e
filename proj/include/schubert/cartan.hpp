#pragma once

#include <Eigen/Dense>
#include <set>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

using Matrix = Eigen::MatrixXi;

/// A root in simple-root coordinates. Positive roots have all coordinates
/// nonnegative, negative roots all nonpositive; no root is mixed.
using Root = Eigen::VectorXi;

/// A word in simple reflections, letters are 1-based simple-root indices.
using Word = std::vector<int>;

/// A subset of 1-based simple-root indices (the combinatorial Levi datum J).
using LeviSubset = std::set<int>;

enum class CartanLetter : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  CartanLetter letter;
  int rank;

  /// Parses "<Letter><rank>", case-insensitive ("A3", "g2").
  static CartanType parse(const std::string& s);
  std::string str() const;

  bool operator==(const CartanType&) const = default;
};

/// The Bourbaki Cartan matrix of a simple type. Entry (i,j) is the pairing
/// <alpha_j, alpha_i^vee>, stored 0-based. Numbering follows Bourbaki: in
/// B_n the last root is short, in C_n the last root is long, in D_n the two
/// fork nodes are n-1 and n, in E types node 2 hangs off node 4, in F4 roots
/// 1,2 are long, and in G2 alpha_1 is long.
Matrix bourbaki_cartan_matrix(CartanType t);

/// Immutable root-system context: simple roots, the full positive-root set
/// (ordered by height then lexicographically), and per-generator reflection
/// tables on the signed root set.
class RootSystem {
 public:
  explicit RootSystem(CartanType t);

  const CartanType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const Matrix& cartan() const { return cartan_; }

  /// Cartan entry for 1-based simple indices: <alpha_j, alpha_i^vee>.
  int cartan_entry(int i, int j) const;

  /// Pairing <beta, alpha_i^vee> for a root in simple-root coordinates.
  int pairing(const Root& beta, int i) const;

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  int num_positive_roots() const { return static_cast<int>(positive_roots_.size()); }

  Root simple_root(int i) const;  // 1-based

  /// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  Root reflect(int i, const Root& beta) const;

  /// Signed-root indexing: positive root k has index k, its negative has
  /// index k + num_positive_roots(). Returns the permutation induced by s_i.
  const std::vector<int>& reflection_table(int i) const;

  /// Index of a root (positive or negative) in the signed-root indexing.
  int signed_root_index(const Root& beta) const;

 private:
  CartanType type_;
  Matrix cartan_;
  std::vector<Root> positive_roots_;
  std::vector<std::vector<int>> reflection_tables_;
};

/// True iff some j in J has a nonzero Cartan pairing with i (i.e. the node i
/// is adjacent to J in the Dynkin diagram). Requires i outside J.
bool simple_root_adjacent(const RootSystem& rs, int i, const LeviSubset& J);

bool is_connected_diagram(const RootSystem& rs);

std::string word_to_string(const Word& w);

}  // namespace schubert
