#include "exotica/truncated_regular.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

// Reduced words of length <= R, built by prepending letters; the parent of a
// node drops its first letter.
struct Ball {
  int rank = 0;
  int radius = 0;
  std::vector<std::int32_t> parent;
  std::vector<Letter> first;
  std::vector<std::int32_t> length;
  std::vector<std::int32_t> child;  // [node * 2d + letter_rank], -1 if absent

  std::int32_t prepend(std::int32_t node, Letter l) const {
    return child[static_cast<std::size_t>(node) * 2 * rank + letter_rank(l)];
  }
};

Ball build_ball(int rank, int radius, std::size_t cap) {
  BigInt count = ball_count(rank, radius);
  if (count > cap) throw EnumerationTooLarge(count.str(), "ball of radius " + std::to_string(radius));
  const auto n = static_cast<std::size_t>(count);
  const int alphabet = 2 * rank;
  Ball b{rank, radius, {}, {}, {}, std::vector<std::int32_t>(n * alphabet, -1)};
  b.parent.reserve(n);
  b.first.reserve(n);
  b.length.reserve(n);
  b.parent.push_back(-1);
  b.first.push_back(0);
  b.length.push_back(0);
  std::size_t layer_begin = 0, layer_end = 1;
  for (int k = 0; k < radius; ++k) {
    for (std::size_t t = layer_begin; t < layer_end; ++t) {
      for (int r = 0; r < alphabet; ++r) {
        Letter l = letter_from_rank(r);
        if (b.first[t] == -l) continue;
        b.child[t * alphabet + r] = static_cast<std::int32_t>(b.parent.size());
        b.parent.push_back(static_cast<std::int32_t>(t));
        b.first.push_back(l);
        b.length.push_back(k + 1);
      }
    }
    layer_begin = layer_end;
    layer_end = b.parent.size();
  }
  return b;
}

// Index of s t in the ball, or -1 when |s t| > R.
std::int32_t left_multiply(const Ball& b, std::span<const Letter> s, std::int32_t t) {
  auto i = static_cast<std::ptrdiff_t>(s.size()) - 1;
  while (i >= 0 && t != 0 && b.first[t] == -s[i]) {
    t = b.parent[t];
    --i;
  }
  if (b.length[t] + i + 1 > b.radius) return -1;
  for (; i >= 0; --i) t = b.prepend(t, s[i]);
  return t;
}

}  // namespace

TruncatedRegularResult truncated_regular(const GroupRingElement& x, int radius, std::size_t cap) {
  if (!x.group().is_free()) throw Error(ErrorCode::GroupMismatch, "truncated regular bound needs a free group");
  if (radius < 1) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  TruncatedRegularResult res;
  res.radius = radius;
  if (x.is_zero()) {
    res.converged = true;
    return res;
  }
  const int rank = x.group().free_rank();
  std::vector<Word> support;
  std::vector<std::complex<double>> coeff;
  for (const auto& [s, c] : x.terms()) {
    if (static_cast<int>(s.word().length()) > radius) {
      throw Error(ErrorCode::InvalidArgument, "radius is smaller than |" + to_string(s) + "|");
    }
    support.push_back(s.word());
    coeff.push_back(c.to_complex());
  }

  const Ball b = build_ball(rank, radius, cap);
  const std::size_t n = b.parent.size();
  res.ball_size = n;
  // target[j][t] = index of s_j t, or -1
  std::vector<std::vector<std::int32_t>> target(support.size(), std::vector<std::int32_t>(n));
  for (std::size_t j = 0; j < support.size(); ++j) {
    for (std::size_t t = 0; t < n; ++t) target[j][t] = left_multiply(b, support[j].letters(), static_cast<std::int32_t>(t));
  }

  std::vector<std::complex<double>> v(n), w(n);
  v[0] = 1.0;
  double prev = -1.0;
  for (int it = 1; it <= 10000; ++it) {
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t j = 0; j < support.size(); ++j) {
      const auto& tg = target[j];
      for (std::size_t t = 0; t < n; ++t) {
        if (tg[t] >= 0) w[static_cast<std::size_t>(tg[t])] += coeff[j] * v[t];
      }
    }
    double aw = 0.0;
    for (const auto& z : w) aw += std::norm(z);
    const double estimate = std::sqrt(aw);
    res.lower_bound = std::max(res.lower_bound, estimate);
    res.iterations = it;
    if (std::abs(estimate - prev) < 1e-10) {
      res.converged = true;
      break;
    }
    prev = estimate;
    // v <- A* w, normalised
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t j = 0; j < support.size(); ++j) {
      const auto& tg = target[j];
      const auto cj = std::conj(coeff[j]);
      for (std::size_t t = 0; t < n; ++t) {
        if (tg[t] >= 0) v[t] += cj * w[static_cast<std::size_t>(tg[t])];
      }
    }
    double vn = 0.0;
    for (const auto& z : v) vn += std::norm(z);
    if (vn == 0.0) {
      res.converged = true;
      break;
    }
    const double scale = 1.0 / std::sqrt(vn);
    for (auto& z : v) z *= scale;
  }
  return res;
}

}  // namespace exotica
