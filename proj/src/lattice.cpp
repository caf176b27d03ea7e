#include "schubert/lattice.hpp"

#include <algorithm>

namespace schubert {

namespace {

using boost::multiprecision::abs;

int find_pivot(const BigMatrix& m, int t, int& pi, int& pj) {
  // smallest nonzero absolute value in the trailing submatrix
  BigInt best = 0;
  pi = pj = -1;
  for (int i = t; i < static_cast<int>(m.size()); ++i)
    for (int j = t; j < static_cast<int>(m[i].size()); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs(m[i][j]);
      if (pi < 0 || a < best) {
        best = a;
        pi = i;
        pj = j;
      }
    }
  return pi >= 0;
}

}  // namespace

SmithForm smith_normal_form(BigMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SmithForm out;
  int t = 0;
  while (t < rows && t < cols) {
    int pi, pj;
    if (!find_pivot(m, t, pi, pj)) break;
    std::swap(m[t], m[pi]);
    for (auto& row : m) std::swap(row[t], row[pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {  // remainder became the smaller pivot
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
    }

    // enforce the divisibility chain: pivot must divide the rest
    bool restart = false;
    for (int i = t + 1; i < rows && !restart; ++i)
      for (int j = t + 1; j < cols && !restart; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (int k = t; k < cols; ++k) m[t][k] += m[i][k];
          restart = true;
        }
    if (restart) continue;

    if (m[t][t] < 0) m[t][t] = -m[t][t];
    out.invariant_factors.push_back(m[t][t]);
    ++t;
  }
  out.rank_of_image = static_cast<int>(out.invariant_factors.size());
  return out;
}

BigMatrix hermite_normal_form(BigMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    // gcd-eliminate the column below row r
    for (;;) {
      int best = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][col] != 0 && (best < 0 || abs(m[i][col]) < abs(m[best][col]))) best = i;
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) continue;
        BigInt q = m[i][col] / m[r][col];
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][col] == 0) continue;
    if (m[r][col] < 0)
      for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    // reduce the rows above modulo the pivot
    for (int i = 0; i < r; ++i) {
      BigInt q = m[i][col] / m[r][col];
      if (m[i][col] % m[r][col] < 0) q -= 1;  // floor division
      if (q != 0)
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<BigInt> CharacterLattice::root_coords(const Root& beta) const {
  const int n = rs->rank();
  std::vector<BigInt> out(n);
  if (isogeny == IsogenyType::adjoint) {
    for (int i = 0; i < n; ++i) out[i] = beta(i);
  } else {
    // fundamental-weight coordinates: alpha_j = sum_i C(i,j) varpi_i
    for (int i = 0; i < n; ++i) {
      BigInt v = 0;
      for (int j = 0; j < n; ++j) v += BigInt(rs->cartan()(i, j)) * beta(j);
      out[i] = v;
    }
  }
  return out;
}

std::vector<Root> beta_sequence(const RootSystem& rs, const Word& word) {
  WeylElement w = WeylElement::from_word(rs, word);
  if (w.length() != static_cast<int>(word.size()))
    throw NotReduced("word of length " + std::to_string(word.size()) +
                     " multiplies to an element of length " + std::to_string(w.length()));
  std::vector<Root> betas;
  WeylElement prefix = WeylElement::identity(rs);
  for (int i : word) {
    betas.push_back(prefix.apply(rs.simple_root(i)));
    prefix = prefix * WeylElement::simple_reflection(rs, i);
  }
  return betas;
}

namespace {

BigMatrix roots_to_rows(const std::vector<Root>& roots) {
  BigMatrix m;
  for (const Root& beta : roots) {
    std::vector<BigInt> row(beta.size());
    for (int j = 0; j < beta.size(); ++j) row[j] = beta(j);
    m.push_back(std::move(row));
  }
  return m;
}

BigMatrix coords_to_rows(const CharacterLattice& lat, const std::vector<Root>& roots) {
  BigMatrix m;
  for (const Root& beta : roots) m.push_back(lat.root_coords(beta));
  return m;
}

}  // namespace

bool sublattice_equal(const RootSystem& rs, const std::vector<Root>& roots_a,
                      const std::vector<Root>& roots_b) {
  (void)rs;
  return hermite_normal_form(roots_to_rows(roots_a)) ==
         hermite_normal_form(roots_to_rows(roots_b));
}

KernelReport kernel_report(const CharacterLattice& lat, const std::vector<Root>& roots) {
  KernelReport out;
  if (roots.empty()) {
    out.torus_dimension = lat.rank();
    out.connected = true;
    return out;
  }
  SmithForm sf = smith_normal_form(coords_to_rows(lat, roots));
  out.torus_dimension = lat.rank() - sf.rank_of_image;
  for (const BigInt& d : sf.invariant_factors)
    if (d > 1) out.component_group.push_back(d);
  out.connected = out.component_group.empty();
  return out;
}

bool verify_lemma_A(const RootSystem& rs, const WeylElement& w) {
  return verify_lemma_A_word(rs, w.canonical_word());
}

bool verify_lemma_A_word(const RootSystem& rs, const Word& word) {
  std::vector<Root> betas = beta_sequence(rs, word);
  std::vector<Root> alphas;
  for (int i : LeviSubset(word.begin(), word.end())) alphas.push_back(rs.simple_root(i));

  if (!sublattice_equal(rs, betas, alphas)) return false;
  for (IsogenyType iso : {IsogenyType::adjoint, IsogenyType::simply_connected}) {
    CharacterLattice lat{iso, &rs};
    KernelReport a = kernel_report(lat, betas);
    KernelReport b = kernel_report(lat, alphas);
    if (a.torus_dimension != b.torus_dimension || a.component_group != b.component_group)
      return false;
  }
  return true;
}

}  // namespace schubert
