#include "schubert/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace schubert {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw ParseError("cannot parse Cartan type: '" + s + "'");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G') throw ParseError("unknown Cartan letter in '" + s + "'");
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw ParseError("bad rank in Cartan type '" + s + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 1000) throw ParseError("rank too large in '" + s + "'");
  }
  return CartanType{static_cast<CartanLetter>(c), rank};
}

std::string CartanType::str() const {
  std::ostringstream os;
  os << static_cast<char>(letter) << rank;
  return os.str();
}

namespace {

void check_rank_bounds(CartanType t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.letter) {
    case CartanLetter::A: ok = n >= 1; break;
    case CartanLetter::B: ok = n >= 2; break;
    case CartanLetter::C: ok = n >= 2; break;
    case CartanLetter::D: ok = n >= 3; break;
    case CartanLetter::E: ok = n == 6 || n == 7 || n == 8; break;
    case CartanLetter::F: ok = n == 4; break;
    case CartanLetter::G: ok = n == 2; break;
  }
  if (!ok) throw InvalidRank("rank " + std::to_string(n) + " out of bounds for type " + t.str());
}

void link(Matrix& c, int i, int j) {  // 0-based simple bond
  c(i, j) = -1;
  c(j, i) = -1;
}

}  // namespace

Matrix bourbaki_cartan_matrix(CartanType t) {
  check_rank_bounds(t);
  const int n = t.rank;
  Matrix c = 2 * Matrix::Identity(n, n);
  switch (t.letter) {
    case CartanLetter::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case CartanLetter::B:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case CartanLetter::C:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case CartanLetter::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      c(n - 2, n - 1) = 0;
      c(n - 1, n - 2) = 0;
      break;
    case CartanLetter::E:
      // chain 1-3-4-5-...-n, node 2 attached to node 4
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case CartanLetter::F:
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case CartanLetter::G:
      link(c, 0, 1);
      c(1, 0) = -3;  // alpha_1 long
      break;
  }
  return c;
}

namespace {

bool is_positive_vec(const Root& v) {
  return (v.array() >= 0).all() && !(v.array() == 0).all();
}

struct RootLess {
  bool operator()(const Root& a, const Root& b) const {
    int ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

}  // namespace

RootSystem::RootSystem(CartanType t) : type_(t), cartan_(bourbaki_cartan_matrix(t)) {
  const int n = rank();
  // close the simple roots under the simple-reflection action, keeping the
  // all-nonnegative vectors
  std::set<Root, RootLess> pos;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root e = Root::Zero(n);
    e(i) = 1;
    pos.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int i = 1; i <= n; ++i) {
        Root img = reflect(i, beta);
        if (is_positive_vec(img) && pos.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(pos.begin(), pos.end());

  const int m = num_positive_roots();
  reflection_tables_.assign(n, std::vector<int>(2 * m, -1));
  for (int i = 1; i <= n; ++i) {
    auto& table = reflection_tables_[i - 1];
    for (int k = 0; k < m; ++k) {
      Root img = reflect(i, positive_roots_[k]);
      table[k] = signed_root_index(img);
      table[k + m] = table[k] < m ? table[k] + m : table[k] - m;
    }
  }
}

int RootSystem::cartan_entry(int i, int j) const {
  if (i < 1 || i > rank() || j < 1 || j > rank())
    throw IndexOutOfRange("simple index out of range for " + type_.str());
  return cartan_(i - 1, j - 1);
}

int RootSystem::pairing(const Root& beta, int i) const {
  if (i < 1 || i > rank()) throw IndexOutOfRange("simple index out of range");
  return cartan_.row(i - 1).dot(beta);
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw IndexOutOfRange("simple index out of range");
  Root e = Root::Zero(rank());
  e(i - 1) = 1;
  return e;
}

Root RootSystem::reflect(int i, const Root& beta) const {
  Root r = beta;
  r(i - 1) -= pairing(beta, i);
  return r;
}

const std::vector<int>& RootSystem::reflection_table(int i) const {
  if (i < 1 || i > rank()) throw IndexOutOfRange("simple index out of range");
  return reflection_tables_[i - 1];
}

int RootSystem::signed_root_index(const Root& beta) const {
  const int m = num_positive_roots();
  const bool neg = (beta.array() <= 0).all();
  Root key = neg ? Root(-beta) : beta;
  auto it = std::lower_bound(positive_roots_.begin(), positive_roots_.end(), key, RootLess{});
  if (it == positive_roots_.end() || RootLess{}(key, *it))
    throw IndexOutOfRange("vector is not a root of " + type_.str());
  int k = static_cast<int>(it - positive_roots_.begin());
  return neg ? k + m : k;
}

bool simple_root_adjacent(const RootSystem& rs, int i, const LeviSubset& J) {
  if (i < 1 || i > rs.rank()) throw IndexOutOfRange("simple index out of range");
  for (int j : J) {
    if (j < 1 || j > rs.rank()) throw IndexOutOfRange("Levi index out of range");
    if (j != i && rs.cartan_entry(i, j) != 0) return true;
  }
  return false;
}

bool is_connected_diagram(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int count = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 1; j <= n; ++j) {
      if (!seen[j] && j != i && rs.cartan_entry(i, j) != 0) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == n;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ' ';
    os << w[k];
  }
  return os.str();
}

}  // namespace schubert
