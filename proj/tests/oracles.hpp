#pragma once

// Independent brute-force reference implementations used by the tests. They
// share no code with the library beyond plain integer letters.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Letters = std::vector<int>;

/// Repeatedly scans for an adjacent cancelling pair until none remains.
inline Letters slow_reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// All letter sequences of length k, keeping the reduced ones.
inline std::set<Letters> brute_sphere(int d, int k) {
  std::set<Letters> out;
  std::vector<int> alphabet;
  for (int i = 1; i <= d; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  Letters w(static_cast<std::size_t>(k));
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) total *= alphabet.size();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < k; ++i) {
      w[static_cast<std::size_t>(i)] = alphabet[c % alphabet.size()];
      c /= alphabet.size();
    }
    if (slow_reduce(w).size() == static_cast<std::size_t>(k)) out.insert(w);
  }
  return out;
}

using M2 = std::array<long long, 4>;

inline M2 mul(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

/// Number of 2x2 matrices over Z/N with determinant 1, by exhaustive count.
inline long count_sl2(long n) {
  long count = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        for (long d = 0; d < n; ++d)
          if (((a * d - b * c) % n + n) % n == 1 % n) ++count;
  return count;
}

inline Letters random_letters(std::mt19937_64& rng, int d, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, d), sign(0, 1);
  Letters w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = gen(rng) * (sign(rng) ? 1 : -1);
  return w;
}

/// Direct symmetric eigen-free bound check helpers.
inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
