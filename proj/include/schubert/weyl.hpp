#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

/// A Weyl group element, represented by its integer action on the
/// simple-root basis: column j of the matrix is w(alpha_j) in simple-root
/// coordinates. Equality is matrix equality; the canonical reduced word is
/// cached on first use.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  static WeylElement from_word(const RootSystem& rs, const Word& word);

  const RootSystem& context() const { return *rs_; }
  const Matrix& action() const { return m_; }

  Root apply(const Root& beta) const { return m_ * beta; }

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement& other) const;
  bool operator!=(const WeylElement& other) const { return !(*this == other); }

  bool is_identity() const { return m_.isIdentity(); }

  /// |{beta in R+ : w(beta) < 0}|.
  int length() const;

  /// Lexicographically smallest reduced word under repeated stripping of the
  /// smallest left descent. Cached; safe for concurrent readers.
  const Word& canonical_word() const;

  std::size_t hash() const;

 private:
  WeylElement(const RootSystem& rs, Matrix m) : rs_(&rs), m_(std::move(m)) {}

  const RootSystem* rs_;
  Matrix m_;
  mutable std::shared_ptr<const Word> word_cache_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Orders elements by (length, canonical word lexicographic).
struct WeylElementLess {
  bool operator()(const WeylElement& a, const WeylElement& b) const;
};

int length(const WeylElement& w);

/// R+(w) = {beta in R+ : w(beta) < 0}.
std::vector<Root> inversion_set(const WeylElement& w);

/// R+(w^{-1}).
std::vector<Root> left_inversion_set(const WeylElement& w);

Word canonical_reduced_word(const WeylElement& w);

struct ReducedWords {
  std::vector<Word> words;
  bool truncated = false;
};

/// All distinct reduced words of w, up to cap; truncated is set instead of
/// failing when the cap is hit.
ReducedWords all_reduced_words(const WeylElement& w, std::size_t cap = 100000);

LeviSubset support(const WeylElement& w);

/// I_w = {i : l(s_i w) < l(w)} = {i : w^{-1}(alpha_i) < 0}.
LeviSubset left_descents(const WeylElement& w);

/// l(w) == |supp(w)|, i.e. some reduced word has pairwise-distinct letters.
bool is_coxeter_type(const WeylElement& w);

/// w_{0,J}: longest element of the parabolic subgroup W_J.
WeylElement longest_element(const RootSystem& rs, const LeviSubset& J);

/// ^JW: minimal right coset representatives, |W|/|W_J| elements, sorted by
/// (length, canonical word).
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const LeviSubset& J);

inline constexpr std::size_t kDefaultEnumerationCap = 10000000;

/// Breadth-first enumeration of W by length; each element exactly once,
/// sorted by (length, canonical word).
std::vector<WeylElement> enumerate_group(const RootSystem& rs,
                                         std::optional<int> max_length = std::nullopt,
                                         std::size_t cap = kDefaultEnumerationCap);

/// w = u * v with u in W_J, v in ^JW, lengths additive; unique.
std::pair<WeylElement, WeylElement> parabolic_decompose(const WeylElement& w,
                                                        const LeviSubset& J);

/// Requires matching root-system contexts, throws ContextMismatch otherwise.
void require_same_context(const WeylElement& a, const WeylElement& b);

}  // namespace schubert
