#include "exotica/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

constexpr std::size_t kLhsCap = 2'000'000;

// Mass of |phi_h|^p on intrinsic words longer than m.
double intrinsic_tail(const PosDefFamily& phi_h, double p, long m) {
  if (m < 0) return std::numeric_limits<double>::infinity();
  if (const auto* hg = std::get_if<Haagerup>(&phi_h.variant())) {
    const double r = 2.0 * hg->rank - 1.0;
    const double q = std::pow(hg->alpha, p);
    return 2.0 * hg->rank * std::pow(r, static_cast<double>(m)) * std::pow(q, static_cast<double>(m + 1)) / (1.0 - r * q);
  }
  if (std::holds_alternative<PointMass>(phi_h.variant())) return 0.0;
  throw Error(ErrorCode::MissingCertificate, "no tail bound for " + describe(phi_h));
}

}  // namespace

PosDefFamily induced_coefficient(const Group& ambient, const SubgroupSpec& h, const PosDefFamily& phi_h,
                                 const Word& r_i, const Word& r_j) {
  return PosDefFamily::gns(zero_extend(phi_h, h, ambient), GroupElement(r_i), GroupElement(r_j));
}

InducedIdentityReport induced_lp_identity(const Group& ambient, const SubgroupSpec& h, const PosDefFamily& phi_h,
                                          const Word& r_i, const Word& r_j, double p, int truncation) {
  if (!ambient.is_free()) throw Error(ErrorCode::GroupMismatch, "coefficient identity is checked on free groups");
  if (truncation < 0) throw Error(ErrorCode::InvalidArgument, "truncation must be nonnegative");
  auto cert = lp_certify(phi_h, p);
  if (cert.decision != LpDecision::Summable) {
    throw Error(ErrorCode::MissingCertificate, describe(phi_h) + " is not certified l^p");
  }
  const PosDefFamily coeff = induced_coefficient(ambient, h, phi_h, r_i, r_j);
  const Word ri_inv = r_i.inverse();
  const long shift = static_cast<long>(r_i.length() + r_j.length());
  const long t = truncation;

  InducedIdentityReport rep;
  rep.closed_form = cert.closed_form;
  double lhs = 0.0, rhs = 0.0;
  std::size_t terms = 0, rhs_terms = 0;
  auto add_lhs = [&](const Word& xi) {
    Word s = r_j * xi * ri_inv;
    if (static_cast<long>(s.length()) > t) return;
    lhs += std::pow(std::abs(eval_posdef(coeff, GroupElement(s))), p);
    ++terms;
  };
  long scale = 1;  // ambient letters per intrinsic letter

  if (const auto* cg = std::get_if<CyclicGen>(&h)) {
    const Word& w = cg->generator;
    if (w.empty()) throw Error(ErrorCode::InvalidArgument, "cyclic subgroup needs a nontrivial generator");
    scale = static_cast<long>(w.length());
    auto letters = w.letters();
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
      ++lo;
      --hi;
    }
    const long u_len = static_cast<long>(lo), c_len = static_cast<long>(hi - lo);
    // |r_j w^n r_i^-1| >= 2|u| + |n||c| - |r_i| - |r_j|
    const long n_max = std::max(0L, (t + shift - 2 * u_len) / c_len + 1);
    const Word winv = w.inverse();
    Word fwd(ambient.free_rank()), bwd(ambient.free_rank());
    add_lhs(fwd);
    for (long n = 1; n <= n_max; ++n) {
      fwd = fwd * w;
      bwd = bwd * winv;
      add_lhs(fwd);
      add_lhs(bwd);
    }
    const Word gen = Word::generator(1, 0);
    rhs += std::pow(std::abs(eval_posdef(phi_h, GroupElement(Word(1)))), p);
    for (long n = 1; n <= t; ++n) {
      rhs += std::pow(std::abs(eval_posdef(phi_h, GroupElement(gen.pow(n)))), p);
      rhs += std::pow(std::abs(eval_posdef(phi_h, GroupElement(gen.pow(-n)))), p);
    }
    rhs_terms = static_cast<std::size_t>(2 * t + 1);
  } else if (const auto* ff = std::get_if<FreeFactor>(&h)) {
    const int xi_radius = static_cast<int>(t + shift);
    if (ball_count(ff->rank, xi_radius) > kLhsCap || ball_count(ff->rank, truncation) > kLhsCap) {
      throw EnumerationTooLarge(ball_count(ff->rank, xi_radius).str(), "subgroup ball for the coefficient identity");
    }
    for (int k = 0; k <= xi_radius; ++k) {
      for_each_word_of_length(ff->rank, k, [&](std::span<const Letter> letters) {
        Word xi = reduce_word(letters, ambient.free_rank());
        add_lhs(xi);
        if (k <= truncation) {
          rhs += std::pow(std::abs(eval_posdef(phi_h, GroupElement(reduce_word(letters, ff->rank)))), p);
          ++rhs_terms;
        }
      });
    }
  } else {
    throw Error(ErrorCode::GroupMismatch, "coefficient identity supports free factors and cyclic subgroups");
  }

  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.lhs_terms = terms;
  // omitted lhs terms have |xi| > T - |r_i| - |r_j| in the ambient metric
  const long m_lhs = (t - shift) < 0 ? -1 : (t - shift) / scale;
  const double rounding =
      static_cast<double>(terms + rhs_terms) * std::numeric_limits<double>::epsilon() * std::max(lhs, rhs);
  rep.tail_bound = intrinsic_tail(phi_h, p, m_lhs) + intrinsic_tail(phi_h, p, t) + rounding;
  rep.pass = std::abs(lhs - rhs) <= rep.tail_bound;
  return rep;
}

MarginalReport marginal_dominance(const ProductFunction& f, const GroupElement& k) {
  double norm2 = 0.0;
  for (const auto& [s, v] : f) norm2 += std::norm(v);
  if (norm2 == 0.0) throw Error(ErrorCode::ZeroVector, "f vanishes");
  const double inv = 1.0 / std::sqrt(norm2);

  std::map<GroupElement, double> g2;  // k' -> ||f restricted to H x {k'}||^2
  std::complex<double> lhs = 0.0;
  const GroupElement kinv = k.inverse();
  for (const auto& [s, v] : f) {
    g2[s.second()] += std::norm(v * inv);
    auto it = f.find(GroupElement::pair(s.first(), kinv * s.second()));
    if (it != f.end()) lhs += it->second * std::conj(v) * inv * inv;
  }
  MarginalReport rep;
  rep.lhs = std::abs(lhs);
  double gn = 0.0;
  for (const auto& [kp, v] : g2) {
    gn += v;
    auto it = g2.find(kinv * kp);
    if (it != g2.end()) rep.rhs += std::sqrt(it->second * v);
  }
  rep.g_norm = std::sqrt(gn);
  rep.pass = rep.lhs <= rep.rhs + 1e-12 && std::abs(rep.g_norm - 1.0) <= 1e-12;
  return rep;
}

MarginalTrials marginal_trials(const std::vector<GroupElement>& hs, const std::vector<GroupElement>& ks, int trials,
                               std::uint64_t seed) {
  if (hs.empty() || ks.empty()) throw Error(ErrorCode::InvalidArgument, "grid factors must be nonempty");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::set<GroupElement> shifts;
  for (const auto& a : ks)
    for (const auto& b : ks) shifts.insert(a.inverse() * b);

  MarginalTrials out;
  out.trials = trials;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    ProductFunction f;
    for (const auto& x : hs)
      for (const auto& y : ks) f[GroupElement::pair(x, y)] = {gauss(rng), gauss(rng)};
    for (const auto& k : shifts) {
      auto r = marginal_dominance(f, k);
      ++out.checks;
      if (!r.pass) ++out.violations;
      out.worst_margin = std::min(out.worst_margin, r.rhs - r.lhs);
      out.worst_g_defect = std::max(out.worst_g_defect, std::abs(r.g_norm - 1.0));
    }
  }
  return out;
}

}  // namespace exotica
