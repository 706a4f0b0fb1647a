#include "orbipres/abelian.hpp"

#include <algorithm>
#include <cstdlib>

namespace orbipres {

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m) {
  const int rows = (int)m.size();
  const int cols = rows ? (int)m[0].size() : 0;
  std::vector<long long> diag;
  int top = 0;
  while (top < rows && top < cols) {
    // find a nonzero pivot in the remaining block
    int pr = -1, pc = -1;
    for (int i = top; i < rows && pr < 0; ++i)
      for (int j = top; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(m[top], m[pr]);
    for (int i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = top + 1; i < rows; ++i)
        while (m[i][top] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[i][top] / m[top][top];
          for (int j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
          if (m[i][top] != 0) {
            std::swap(m[i], m[top]);
            clean = false;
          }
        }
      for (int j = top + 1; j < cols; ++j)
        while (m[top][j] != 0) {
          long long q = m[top][top] == 0 ? 0 : m[top][j] / m[top][top];
          for (int i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
          if (m[top][j] != 0) {
            for (int i = top; i < rows; ++i) std::swap(m[i][j], m[i][top]);
            clean = false;
          }
        }
      if (!clean) continue;
      // divisibility: pivot must divide the rest of the block
      for (int i = top + 1; i < rows && clean; ++i)
        for (int j = top + 1; j < cols && clean; ++j)
          if (m[i][j] % m[top][top] != 0) {
            for (int jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
            clean = false;
          }
    }
    diag.push_back(std::llabs(m[top][top]));
    ++top;
  }
  while ((int)diag.size() < std::min(rows, cols)) diag.push_back(0);
  return diag;
}

Abelianization abelianization(const Presentation& P) {
  const int g = (int)P.generators.size();
  std::vector<std::vector<long long>> mat;
  for (const auto& rel : P.relators) {
    std::vector<long long> row(g, 0);
    for (const auto& l : rel.word()) row[l.gen] += l.exp;
    mat.push_back(std::move(row));
  }
  Abelianization out;
  if (mat.empty()) {
    out.free_rank = g;
    return out;
  }
  auto diag = smith_normal_form(std::move(mat));
  int rank = 0;
  for (long long v : diag)
    if (v != 0) {
      ++rank;
      if (v > 1) out.torsion.push_back(v);
    }
  out.free_rank = g - rank;
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace orbipres
