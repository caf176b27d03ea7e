#include "schubert/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace schubert {

namespace {

bool root_is_negative(const Root& v) { return (v.array() <= 0).all() && !(v.array() == 0).all(); }

Matrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  Matrix m = Matrix::Identity(n, n);
  // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
  for (int j = 0; j < n; ++j) m(i - 1, j) -= rs.cartan()(i - 1, j);
  return m;
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  return WeylElement(rs, Matrix::Identity(rs.rank(), rs.rank()));
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw IndexOutOfRange("simple index out of range");
  return WeylElement(rs, simple_reflection_matrix(rs, i));
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  Matrix m = Matrix::Identity(rs.rank(), rs.rank());
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw IndexOutOfRange("word letter out of range");
    m = m * simple_reflection_matrix(rs, i);
  }
  return WeylElement(rs, std::move(m));
}

void require_same_context(const WeylElement& a, const WeylElement& b) {
  if (!(a.context().type() == b.context().type()))
    throw ContextMismatch("elements from different root systems: " + a.context().type().str() +
                          " vs " + b.context().type().str());
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  require_same_context(*this, other);
  return WeylElement(*rs_, m_ * other.m_);
}

WeylElement WeylElement::inverse() const {
  const Word& word = canonical_word();
  Matrix m = Matrix::Identity(rs_->rank(), rs_->rank());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = m * simple_reflection_matrix(*rs_, *it);
  return WeylElement(*rs_, std::move(m));
}

bool WeylElement::operator==(const WeylElement& other) const {
  require_same_context(*this, other);
  return (m_.array() == other.m_.array()).all();
}

int WeylElement::length() const {
  int count = 0;
  for (const Root& beta : rs_->positive_roots())
    if (root_is_negative(m_ * beta)) ++count;
  return count;
}

const Word& WeylElement::canonical_word() const {
  auto cached = std::atomic_load(&word_cache_);
  if (cached) return *cached;
  Word word;
  Matrix m = m_;
  for (;;) {
    // smallest i with w^{-1}(alpha_i) < 0, i.e. some positive root mapped
    // onto -alpha_i
    int descent = 0;
    Root best;
    for (const Root& beta : rs_->positive_roots()) {
      Root img = m * beta;
      if (root_is_negative(img) && img.sum() == -1) {
        for (int i = 0; i < rs_->rank(); ++i) {
          if (img(i) == -1 && (descent == 0 || i + 1 < descent)) descent = i + 1;
        }
      }
    }
    if (descent == 0) break;
    word.push_back(descent);
    m = simple_reflection_matrix(*rs_, descent) * m;
  }
  auto fresh = std::make_shared<const Word>(std::move(word));
  std::atomic_store(&word_cache_, std::static_pointer_cast<const Word>(fresh));
  return *std::atomic_load(&word_cache_);
}

std::size_t WeylElement::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int j = 0; j < m_.cols(); ++j)
    for (int i = 0; i < m_.rows(); ++i) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(m_(i, j)));
      h *= 1099511628211ull;
    }
  return h;
}

bool WeylElementLess::operator()(const WeylElement& a, const WeylElement& b) const {
  const Word& wa = a.canonical_word();
  const Word& wb = b.canonical_word();
  if (wa.size() != wb.size()) return wa.size() < wb.size();
  return wa < wb;
}

int length(const WeylElement& w) { return w.length(); }

std::vector<Root> inversion_set(const WeylElement& w) {
  std::vector<Root> out;
  for (const Root& beta : w.context().positive_roots())
    if (root_is_negative(w.apply(beta))) out.push_back(beta);
  return out;
}

std::vector<Root> left_inversion_set(const WeylElement& w) {
  // R+(w^{-1}) = {-w(beta) : beta in R+(w)}
  std::vector<Root> out;
  for (const Root& beta : w.context().positive_roots()) {
    Root img = w.apply(beta);
    if (root_is_negative(img)) out.push_back(-img);
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  });
  return out;
}

Word canonical_reduced_word(const WeylElement& w) { return w.canonical_word(); }

namespace {

void reduced_words_dfs(const WeylElement& w, Word& prefix, ReducedWords& out, std::size_t cap) {
  if (w.is_identity()) {
    if (out.words.size() >= cap) {
      out.truncated = true;
      return;
    }
    out.words.push_back(prefix);
    return;
  }
  for (int i : left_descents(w)) {
    if (out.truncated) return;
    prefix.push_back(i);
    reduced_words_dfs(WeylElement::simple_reflection(w.context(), i) * w, prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

ReducedWords all_reduced_words(const WeylElement& w, std::size_t cap) {
  ReducedWords out;
  Word prefix;
  reduced_words_dfs(w, prefix, out, cap);
  return out;
}

LeviSubset support(const WeylElement& w) {
  const Word& word = w.canonical_word();
  return LeviSubset(word.begin(), word.end());
}

LeviSubset left_descents(const WeylElement& w) {
  LeviSubset out;
  for (const Root& beta : w.context().positive_roots()) {
    Root img = w.apply(beta);
    if (root_is_negative(img) && img.sum() == -1) {
      for (int i = 0; i < w.context().rank(); ++i)
        if (img(i) == -1) out.insert(i + 1);
    }
  }
  return out;
}

bool is_coxeter_type(const WeylElement& w) {
  return w.length() == static_cast<int>(support(w).size());
}

WeylElement longest_element(const RootSystem& rs, const LeviSubset& J) {
  for (int j : J)
    if (j < 1 || j > rs.rank()) throw IndexOutOfRange("Levi index out of range");
  WeylElement w = WeylElement::identity(rs);
  for (;;) {
    LeviSubset desc = left_descents(w);
    int pick = 0;
    for (int j : J) {
      if (!desc.count(j)) {
        pick = j;
        break;
      }
    }
    if (pick == 0) return w;
    w = WeylElement::simple_reflection(rs, pick) * w;
  }
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const LeviSubset& J) {
  std::vector<WeylElement> out;
  for (const WeylElement& u : enumerate_group(rs)) {
    LeviSubset desc = left_descents(u);
    bool minimal = true;
    for (int j : J)
      if (desc.count(j)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(u);
  }
  return out;
}

std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::optional<int> max_length,
                                         std::size_t cap) {
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs)};
  seen.insert(frontier.front());
  std::vector<WeylElement> out = frontier;
  int len = 0;
  while (!frontier.empty()) {
    if (max_length && len >= *max_length) break;
    std::vector<WeylElement> next;
    for (const WeylElement& w : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        WeylElement cand = WeylElement::simple_reflection(rs, i) * w;
        if (cand.length() != len + 1) continue;
        if (seen.insert(cand).second) {
          next.push_back(cand);
          if (seen.size() > cap)
            throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    ++len;
  }
  std::sort(out.begin(), out.end(), WeylElementLess{});
  return out;
}

std::pair<WeylElement, WeylElement> parabolic_decompose(const WeylElement& w,
                                                        const LeviSubset& J) {
  const RootSystem& rs = w.context();
  WeylElement u = WeylElement::identity(rs);
  WeylElement v = w;
  for (;;) {
    LeviSubset desc = left_descents(v);
    int pick = 0;
    for (int j : J) {
      if (desc.count(j)) {
        pick = j;
        break;
      }
    }
    if (pick == 0) break;
    u = u * WeylElement::simple_reflection(rs, pick);
    v = WeylElement::simple_reflection(rs, pick) * v;
  }
  return {u, v};
}

}  // namespace schubert
