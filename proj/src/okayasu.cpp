#include <cmath>
#include <limits>

#include "exotica/errors.hpp"
#include "exotica/posdef.hpp"

namespace exotica {

namespace {

constexpr std::size_t kSphereCap = 2'000'000;

double enumerate_sphere(const PosDefFamily& phi, double p, int rank, int k) {
  if (sphere_count(rank, k) > kSphereCap) {
    throw EnumerationTooLarge(sphere_count(rank, k).str(), "sphere of radius " + std::to_string(k));
  }
  // Neumaier summation: a sphere holds up to millions of nearly equal terms
  double total = 0.0, carry = 0.0;
  for_each_word_of_length(rank, k, [&](std::span<const Letter> letters) {
    const double v = std::pow(std::abs(eval_posdef(phi, GroupElement(reduce_word(letters, rank)))), p);
    const double t = total + v;
    carry += std::abs(total) >= v ? (total - t) + v : (v - t) + total;
    total = t;
  });
  return total + carry;
}

// log of ||phi chi_k||_p^p - p log(k+1), convex in k
double excess(double log_ratio, double log_lead, double p, double k) {
  return log_lead + k * log_ratio - p * std::log(k + 1.0);
}

// smallest k >= 1 with excess > 0, for ratio > 1
long first_failure(double ratio, double lead, double p) {
  const double lr = std::log(ratio), ll = std::log(lead);
  auto f = [&](double k) { return excess(lr, ll, p, k); };
  if (f(1) > 0) return 1;
  // f is decreasing up to its minimum, so f <= 0 on [1, k0]
  long lo = std::max(1L, static_cast<long>(std::floor(p / lr - 1.0)));
  long hi = lo;
  while (f(static_cast<double>(hi)) <= 0) {
    lo = hi;
    if (hi > (std::numeric_limits<long>::max() >> 2)) return -1;
    hi *= 2;
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (f(static_cast<double>(mid)) > 0 ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace

OkayasuTable okayasu_table(const PosDefFamily& phi, double p, int k_max, int enumerate_up_to) {
  if (!(p >= 2.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "the sphere criterion needs p >= 2");
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "k_max must be positive");
  const Group g = phi.ambient();
  if (!g.is_free() || g.free_rank() < 2) throw Error(ErrorCode::GroupMismatch, "needs F_d with d >= 2, got " + to_string(g));
  const int rank = g.free_rank();
  if (std::abs(eval_posdef(phi, g.identity()) - 1.0) > 1e-12) {
    throw Error(ErrorCode::NotNormalized, describe(phi) + " has phi(e) != 1");
  }

  OkayasuTable table{rank, p, {}, true, std::nullopt, std::nullopt, std::nullopt};
  const auto* hg = std::get_if<Haagerup>(&phi.variant());
  for (int k = 1; k <= k_max; ++k) {
    OkayasuRow row{k, 0.0, static_cast<double>(k + 1), false, std::nullopt};
    if (k <= enumerate_up_to || !hg) row.enumerated = std::pow(enumerate_sphere(phi, p, rank, k), 1.0 / p);
    row.norm = hg ? std::pow(haagerup_sphere_mass(hg->alpha, p, rank, k), 1.0 / p) : *row.enumerated;
    row.pass = row.norm <= row.bound * (1.0 + 1e-12);
    table.finite_decision = table.finite_decision && row.pass;
    table.rows.push_back(row);
  }

  if (hg) {
    auto th = haagerup_threshold(hg->alpha, p, rank);
    table.alpha_star = th.alpha_star;
    table.analytic_decision = th.side != ThresholdSide::Above;
    if (th.side == ThresholdSide::Above) {
      long k = first_failure(th.ratio, 2.0 * rank / (2.0 * rank - 1.0), p);
      if (k > 0) table.first_failing_k = k;
    }
  }
  return table;
}

}  // namespace exotica
