// Brute-force reference computations for tests. Nothing here calls into the
// library's algorithms; inputs and outputs are plain containers.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Subset = std::set<int>;
using Family = std::set<Subset>;
using Matrix = std::vector<std::vector<int>>;

inline Subset subset_of(std::uint32_t mask) {
  Subset s;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1U) s.insert(i);
  }
  return s;
}

inline Family family_of(const std::vector<std::uint32_t>& masks) {
  Family f;
  for (auto m : masks) f.insert(subset_of(m));
  return f;
}

inline Subset sym_diff(const Subset& a, const Subset& b) {
  Subset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

inline bool is_delta_matroid(const Family& f) {
  for (const auto& p1 : f) {
    for (const auto& p2 : f) {
      for (int e : sym_diff(p1, p2)) {
        bool found = false;
        for (int e2 : sym_diff(p1, p2)) {
          if (f.count(sym_diff(p1, Subset{e, e2}))) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// Leibniz expansion mod 2.
inline int det_f2(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int total = 0;
  do {
    int term = 1;
    for (int i = 0; i < n && term; ++i) term &= m[i][perm[i]];
    total ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Matrix submatrix(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  Matrix out(rows.size(), std::vector<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = m[rows[i]][cols[j]];
  }
  return out;
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (__builtin_popcount(m) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1U) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

// Largest k with a nonzero k x k minor.
inline int rank_f2(const Matrix& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (int k = std::min(rows, cols); k > 0; --k) {
    for (const auto& r : subsets_of_size(rows, k)) {
      for (const auto& c : subsets_of_size(cols, k)) {
        if (det_f2(submatrix(m, r, c))) return k;
      }
    }
  }
  return 0;
}

inline Family nondegenerate_subsets(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  Family f;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
      if ((m >> i) & 1U) idx.push_back(i);
    }
    if (det_f2(submatrix(adj, idx, idx))) f.insert(subset_of(m));
  }
  return f;
}

inline Family relabel(const Family& f, const std::vector<int>& perm) {
  Family out;
  for (const auto& s : f) {
    Subset t;
    for (int e : s) t.insert(perm[e]);
    out.insert(t);
  }
  return out;
}

inline bool isomorphic(int n, const Family& a, const Family& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Number of isomorphism classes among a list of families on n elements.
inline std::size_t count_classes(int n, const std::vector<Family>& families) {
  std::vector<Family> reps;
  for (const auto& f : families) {
    bool seen = false;
    for (const auto& r : reps) {
      if (isomorphic(n, f, r)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(f);
  }
  return reps.size();
}

// Words of length 2n in which chord i is the i-th label to appear; one per
// perfect matching of 2n points on a line.
inline std::vector<std::vector<int>> chord_words(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> word(2 * n, -1);
  auto rec = [&](auto&& self, int next_label) -> void {
    auto first = std::find(word.begin(), word.end(), -1);
    if (first == word.end()) {
      out.push_back(word);
      return;
    }
    *first = next_label;
    for (auto it = first + 1; it != word.end(); ++it) {
      if (*it != -1) continue;
      *it = next_label;
      self(self, next_label + 1);
      *it = -1;
    }
    *first = -1;
  };
  rec(rec, 0);
  return out;
}

inline bool interleaved(const std::vector<int>& word, int a, int b) {
  std::vector<int> pa, pb;
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    if (word[i] == a) pa.push_back(i);
    if (word[i] == b) pb.push_back(i);
  }
  const bool b0_inside = pa[0] < pb[0] && pb[0] < pa[1];
  const bool b1_inside = pa[0] < pb[1] && pb[1] < pa[1];
  return b0_inside != b1_inside;
}

// Symmetric 0/1 matrices on n vertices indexed by a code of n(n+1)/2 bits.
inline Matrix framed_matrix(int n, std::uint32_t code) {
  Matrix m(n, std::vector<int>(n, 0));
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m[i][j] = m[j][i] = static_cast<int>((code >> bit++) & 1U);
    }
  }
  return m;
}

inline std::uint32_t framed_matrix_count(int n) { return 1U << (n * (n + 1) / 2); }

}  // namespace oracle
