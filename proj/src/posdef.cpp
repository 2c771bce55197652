#include "exotica/posdef.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

constexpr double kTailTarget = 1e-15;
constexpr int kMaxRadius = 100000;

void require_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidArgument, "p must lie in [1, inf)");
}

// Sum of (2d-1)^{k-1} 2d q^k over k <= radius. `tail` is the exact geometric
// tail plus a floating-point rounding bound for the partial and closed sums.
struct BallSum {
  double partial;
  double tail;
  int radius;
};

double rounding(int terms, double sum) {
  return (terms + 8) * std::numeric_limits<double>::epsilon() * sum;
}

BallSum haagerup_ball_sum(double q, int rank) {
  const double r = 2.0 * rank - 1.0;
  const double rq = r * q;
  double partial = 1.0;
  double term = 2.0 * rank * q;  // sphere k = 1
  int k = 1;
  for (; k <= kMaxRadius; ++k) {
    partial += term;
    double tail = term * rq / (1.0 - rq);
    if (tail <= kTailTarget * partial) return {partial, tail + rounding(k, partial), k};
    term *= rq;
  }
  return {partial, term / (1.0 - rq) + rounding(kMaxRadius, partial), kMaxRadius};
}

LpCertificate certify_haagerup(const Haagerup& h, double p) {
  LpCertificate cert;
  cert.p = p;
  const auto th = haagerup_threshold(h.alpha, p, h.rank);
  const double q = std::pow(h.alpha, p);
  if (th.side == ThresholdSide::Below) {
    const double r = 2.0 * h.rank - 1.0;
    cert.decision = LpDecision::Summable;
    cert.closed_form = 1.0 + 2.0 * h.rank * q / (1.0 - r * q);
    auto ball = haagerup_ball_sum(q, h.rank);
    cert.partial_sum = ball.partial;
    cert.tail_bound = ball.tail;
    cert.enumeration_radius = ball.radius;
    cert.evidence = "geometric series over spheres, ratio (2d-1)alpha^p = " + std::to_string(th.ratio);
  } else {
    cert.decision = LpDecision::NotSummable;
    // every sphere contributes (2d/(2d-1)) ratio^k >= 2d/(2d-1)
    cert.divergence_witness = 2.0 * h.rank / (2.0 * h.rank - 1.0);
    const int radius = 30;
    double partial = 1.0;
    for (int k = 1; k <= radius; ++k) partial += haagerup_sphere_mass(h.alpha, p, h.rank, k);
    cert.partial_sum = partial;
    cert.enumeration_radius = radius;
    cert.evidence = "sphere terms bounded below by 2d/(2d-1); ratio (2d-1)alpha^p = " + std::to_string(th.ratio);
  }
  return cert;
}

// Canonical (shortest) representative of r H for H = F_{d'} or H = <g>.
Word strip_suffix(const Word& r, const std::function<bool(Letter)>& in_h) {
  auto letters = r.letters();
  std::size_t n = letters.size();
  while (n > 0 && in_h(letters[n - 1])) --n;
  return reduce_word(letters.subspan(0, n), r.rank());
}

std::vector<GroupElement> distinct_cosets(const SubgroupSpec& h, const std::vector<GroupElement>& cosets) {
  std::vector<GroupElement> out;
  for (const auto& r : cosets) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const GroupElement& s) { return contains(h, s.inverse() * r); });
    if (!seen) out.push_back(r);
  }
  return out;
}

LpCertificate certify_cutoff(const CutoffProduct& cp, double p) {
  LpCertificate cert;
  cert.p = p;
  const auto cosets = distinct_cosets(cp.subgroup, cp.cosets);

  if (std::holds_alternative<PointMass>(cp.base->variant())) {
    bool has_e = std::any_of(cosets.begin(), cosets.end(), [&](const GroupElement& r) { return contains(cp.subgroup, r); });
    cert.decision = LpDecision::Summable;
    cert.closed_form = has_e ? 1.0 : 0.0;
    cert.partial_sum = *cert.closed_form;
    cert.tail_bound = 0.0;
    cert.evidence = "point mass; finite support";
    return cert;
  }
  const auto* hg = std::get_if<Haagerup>(&cp.base->variant());
  if (!hg) {
    cert.evidence = "no symbolic tail bound for " + describe(*cp.base);
    return cert;
  }

  if (const auto* ff = std::get_if<FreeFactor>(&cp.subgroup)) {
    // |r' h| = |r'| + |h| for the stripped representative r'
    auto inner = certify_haagerup(Haagerup{hg->alpha, std::max(ff->rank, 1)}, p);
    if (ff->rank == 0) inner = LpCertificate{p, LpDecision::Summable, 1.0, 1.0, 0.0, 0, std::nullopt, ""};
    double scale = 0.0;
    double min_scale = std::numeric_limits<double>::infinity();
    for (const auto& r : cosets) {
      Word rep = strip_suffix(r.word(), [&](Letter l) { return (l < 0 ? -l : l) <= ff->rank; });
      double s = std::pow(hg->alpha, p * static_cast<double>(rep.length()));
      scale += s;
      min_scale = std::min(min_scale, s);
    }
    cert.enumeration_radius = inner.enumeration_radius;
    if (inner.decision == LpDecision::Summable) {
      cert.decision = LpDecision::Summable;
      cert.closed_form = scale * *inner.closed_form;
      cert.partial_sum = scale * inner.partial_sum;
      cert.tail_bound = scale * inner.tail_bound;
      cert.evidence = "coset sums alpha^{p|r|} * S_H over " + std::to_string(cosets.size()) + " cosets";
    } else if (!cosets.empty()) {
      cert.decision = LpDecision::NotSummable;
      cert.divergence_witness = min_scale * *inner.divergence_witness;
      cert.partial_sum = scale * inner.partial_sum;
      cert.evidence = "subgroup sum diverges on every coset";
    } else {
      cert.decision = LpDecision::Summable;
      cert.closed_form = 0.0;
      cert.tail_bound = 0.0;
    }
    return cert;
  }

  if (const auto* cg = std::get_if<CyclicGen>(&cp.subgroup)) {
    const Word& w = cg->generator;
    cert.decision = LpDecision::Summable;
    if (w.empty()) {
      double total = 0.0;
      for (const auto& r : cosets) total += std::pow(hg->alpha, p * static_cast<double>(r.word().length()));
      cert.closed_form = total;
      cert.partial_sum = total;
      cert.tail_bound = 0.0;
      cert.evidence = "trivial subgroup";
      return cert;
    }
    // w = u c u^-1; |r w^n| >= 2|u| + |n||c| - |r|
    auto letters = w.letters();
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
      ++lo;
      --hi;
    }
    const double u_len = static_cast<double>(lo);
    const double c_len = static_cast<double>(hi - lo);
    const double rho = std::pow(hg->alpha, p * c_len);

    double partial = 0.0, tail = 0.0;
    std::optional<double> closed = (w.length() == 1) ? std::optional<double>(0.0) : std::nullopt;
    int radius = 0;
    for (const auto& r : cosets) {
      const double r_len = static_cast<double>(r.word().length());
      const double pref = 2.0 * std::pow(hg->alpha, p * (2.0 * u_len - r_len)) / (1.0 - rho);
      long n_max = 0;
      while (pref * std::pow(rho, static_cast<double>(n_max + 1)) > kTailTarget && n_max < kMaxRadius) ++n_max;
      double sum = std::pow(hg->alpha, p * r_len);
      Word fwd = r.word(), bwd = r.word();
      const Word winv = w.inverse();
      for (long n = 1; n <= n_max; ++n) {
        fwd = fwd * w;
        bwd = bwd * winv;
        sum += std::pow(hg->alpha, p * static_cast<double>(fwd.length()));
        sum += std::pow(hg->alpha, p * static_cast<double>(bwd.length()));
      }
      partial += sum;
      tail += pref * std::pow(rho, static_cast<double>(n_max + 1));
      radius = std::max(radius, static_cast<int>(n_max));
      if (closed) {
        Letter g = w.front();
        Word rep = strip_suffix(r.word(), [&](Letter l) { return l == g || l == -g; });
        const double q = std::pow(hg->alpha, p);
        *closed += std::pow(hg->alpha, p * static_cast<double>(rep.length())) * (1.0 + 2.0 * q / (1.0 - q));
      }
    }
    cert.closed_form = closed;
    cert.partial_sum = partial;
    cert.tail_bound = tail;
    cert.enumeration_radius = radius;
    cert.evidence = "exponent sums over each coset r<w> with geometric tail";
    return cert;
  }

  throw Error(ErrorCode::GroupMismatch, "Haagerup family lives on a free group, not on " + to_string(cp.subgroup));
}

}  // namespace

PosDefFamily::PosDefFamily(Variant v) : v_(std::move(v)) {
  if (auto* h = std::get_if<Haagerup>(&v_)) {
    if (!(h->alpha > 0.0 && h->alpha < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "Haagerup parameter must lie strictly inside (0, 1)");
    }
    if (h->rank < 1) throw Error(ErrorCode::InvalidArgument, "Haagerup rank must be positive");
  }
}

PosDefFamily PosDefFamily::haagerup(double alpha, int rank) { return PosDefFamily(Haagerup{alpha, rank}); }

PosDefFamily PosDefFamily::point_mass(Group group) { return PosDefFamily(PointMass{std::move(group)}); }

PosDefFamily PosDefFamily::gns(const PosDefFamily& base, GroupElement u, GroupElement v) {
  Group g = base.ambient();
  if (u.group() != g || v.group() != g) throw Error(ErrorCode::GroupMismatch, "GNS translates must lie in " + to_string(g));
  return PosDefFamily(GnsCoefficient{std::make_shared<const PosDefFamily>(base), std::move(u), std::move(v)});
}

Group PosDefFamily::ambient() const {
  return std::visit(overloaded{
                        [](const Haagerup& h) { return Group::free(h.rank); },
                        [](const PointMass& m) { return m.group; },
                        [](const ZeroExtension& z) { return z.ambient; },
                        [](const GnsCoefficient& g) { return g.base->ambient(); },
                        [](const CutoffProduct& c) { return c.base->ambient(); },
                    },
                    v_);
}

std::string describe(const PosDefFamily& phi) {
  return std::visit(overloaded{
                        [](const Haagerup& h) {
                          return "Haagerup(alpha=" + std::to_string(h.alpha) + ", F" + std::to_string(h.rank) + ")";
                        },
                        [](const PointMass& m) { return "PointMass(" + to_string(m.group) + ")"; },
                        [](const ZeroExtension& z) {
                          return "ZeroExtension(" + describe(*z.inner) + " via " + to_string(z.subgroup) + " into " +
                                 to_string(z.ambient) + ")";
                        },
                        [](const GnsCoefficient& g) {
                          return "Gns(" + describe(*g.base) + ", u=" + to_string(g.u) + ", v=" + to_string(g.v) + ")";
                        },
                        [](const CutoffProduct& c) {
                          return "Cutoff(" + describe(*c.base) + ", " + to_string(c.subgroup) + ", " +
                                 std::to_string(c.cosets.size()) + " cosets)";
                        },
                    },
                    phi.variant());
}

std::complex<double> eval_posdef(const PosDefFamily& phi, const GroupElement& s) {
  if (s.group() != phi.ambient()) {
    throw Error(ErrorCode::GroupMismatch, to_string(s) + " is not in the ambient group " + to_string(phi.ambient()) +
                                              " of " + describe(phi));
  }
  return std::visit(overloaded{
                        [&](const Haagerup& h) -> std::complex<double> {
                          return std::pow(h.alpha, static_cast<double>(s.word().length()));
                        },
                        [&](const PointMass&) -> std::complex<double> { return s.is_identity() ? 1.0 : 0.0; },
                        [&](const ZeroExtension& z) -> std::complex<double> {
                          auto coords = to_subgroup(z.subgroup, s);
                          return coords ? eval_posdef(*z.inner, *coords) : 0.0;
                        },
                        [&](const GnsCoefficient& g) { return eval_posdef(*g.base, g.v.inverse() * s * g.u); },
                        [&](const CutoffProduct& c) -> std::complex<double> {
                          bool inside = std::any_of(c.cosets.begin(), c.cosets.end(), [&](const GroupElement& r) {
                            return contains(c.subgroup, r.inverse() * s);
                          });
                          return inside ? eval_posdef(*c.base, s) : 0.0;
                        },
                    },
                    phi.variant());
}

std::string_view to_string(LpDecision d) noexcept {
  switch (d) {
    case LpDecision::Summable: return "Summable";
    case LpDecision::NotSummable: return "NotSummable";
    case LpDecision::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

HaagerupThreshold haagerup_threshold(double alpha, double p, int rank) {
  const double r = 2.0 * rank - 1.0;
  const double ratio = r * std::pow(alpha, p);
  ThresholdSide side = ThresholdSide::Above;
  if (std::abs(ratio - 1.0) <= 1e-12) {
    side = ThresholdSide::Boundary;
  } else if (ratio < 1.0) {
    side = ThresholdSide::Below;
  }
  return {std::pow(r, -1.0 / p), ratio, side};
}

double haagerup_sphere_mass(double alpha, double p, int rank, int k) {
  if (k == 0) return 1.0;
  const double r = 2.0 * rank - 1.0;
  // (2d/(2d-1)) ((2d-1) alpha^p)^k stays finite for large k
  return 2.0 * rank / r * std::pow(r * std::pow(alpha, p), k);
}

LpCertificate lp_certify(const PosDefFamily& phi, double p) {
  require_p(p);
  return std::visit(overloaded{
                        [&](const Haagerup& h) { return certify_haagerup(h, p); },
                        [&](const PointMass&) {
                          return LpCertificate{p, LpDecision::Summable, 1.0, 1.0, 0.0, 0, std::nullopt, "finite support"};
                        },
                        [&](const ZeroExtension& z) {
                          // extension by zero adds only zero terms
                          auto cert = lp_certify(*z.inner, p);
                          cert.evidence = "zero extension of: " + cert.evidence;
                          return cert;
                        },
                        [&](const GnsCoefficient& g) {
                          // s -> v^-1 s u is a bijection of the group
                          auto cert = lp_certify(*g.base, p);
                          cert.evidence = "translate of: " + cert.evidence;
                          return cert;
                        },
                        [&](const CutoffProduct& c) { return certify_cutoff(c, p); },
                    },
                    phi.variant());
}

PosDefFamily zero_extend(const PosDefFamily& psi, const SubgroupSpec& h, const Group& ambient) {
  if (psi.ambient() != intrinsic_group(h)) {
    throw Error(ErrorCode::GroupMismatch, describe(psi) + " does not live on " + to_string(h) + " (expected " +
                                              to_string(intrinsic_group(h)) + ")");
  }
  // validates that h is a subgroup of ambient
  (void)from_subgroup(h, ambient, intrinsic_group(h).identity());
  return PosDefFamily(ZeroExtension{std::make_shared<const PosDefFamily>(psi), h, ambient});
}

GramCheck gram_psd_check(const std::function<std::complex<double>(const GroupElement&)>& phi,
                         const std::vector<GroupElement>& sample) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "Gram sample must be nonempty");
  std::vector<GroupElement> sorted = sample;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "Gram sample must be duplicate-free");
  }
  const auto n = static_cast<Eigen::Index>(sample.size());
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const GroupElement si = sample[static_cast<std::size_t>(i)].inverse();
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = phi(si * sample[static_cast<std::size_t>(j)]);
  }
  // Hermitian part; equal to G whenever phi(s^-1) = conj(phi(s))
  Eigen::MatrixXcd herm = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double norm = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  return {ev(0), norm, ev(0) >= -1e-9 * norm};
}

GramCheck gram_psd_check(const PosDefFamily& phi, const std::vector<GroupElement>& sample) {
  return gram_psd_check([&](const GroupElement& s) { return eval_posdef(phi, s); }, sample);
}

DpCertificate dp_certify(const PosDefFamily& phi, const SubgroupSpec& h, double p) {
  require_p(p);
  if (const auto* hg = std::get_if<Haagerup>(&phi.variant())) {
    if (const auto* ff = std::get_if<FreeFactor>(&h)) {
      if (ff->rank == 0) return {LpDecision::Summable, "trivial subgroup: double cosets are finite"};
      auto th = haagerup_threshold(hg->alpha, p, ff->rank);
      if (th.side == ThresholdSide::Below) {
        return {LpDecision::Summable, "translates of F_d' sums sandwiched by alpha^{+-p(|t1|+|t2|)} S"};
      }
      return {LpDecision::NotSummable, "the double coset H itself carries a divergent sum"};
    }
    if (std::holds_alternative<CyclicGen>(h)) {
      return {LpDecision::Summable, "word length grows linearly along every double coset s<w>t"};
    }
    throw Error(ErrorCode::GroupMismatch, "Haagerup family against " + to_string(h));
  }
  if (const auto* g = std::get_if<GnsCoefficient>(&phi.variant())) {
    // translates of a D_p function stay in D_p (double cosets map to double cosets)
    return dp_certify(*g->base, h, p);
  }
  // l^p(Gamma) is contained in D_p(H)
  auto cert = lp_certify(phi, p);
  if (cert.decision == LpDecision::Summable) return {LpDecision::Summable, "l^p summable on the whole group"};
  return {LpDecision::Inconclusive, "no D_p evidence for " + describe(phi)};
}

DpHaagerupReport dp_certify_haagerup(double alpha, double p, int subgroup_rank, int ambient_rank, const Word& t1,
                                     const Word& t2, int enumeration_radius) {
  require_p(p);
  if (subgroup_rank < 2 || subgroup_rank > ambient_rank) {
    throw Error(ErrorCode::InvalidArgument, "need 2 <= d' <= D");
  }
  if (t1.rank() != ambient_rank || t2.rank() != ambient_rank) {
    throw Error(ErrorCode::GroupMismatch, "translates must be words in F_" + std::to_string(ambient_rank));
  }
  (void)PosDefFamily::haagerup(alpha, ambient_rank);  // validates alpha

  DpHaagerupReport rep;
  const double shift = p * static_cast<double>(t1.length() + t2.length());
  const double lo_factor = std::pow(alpha, shift);
  const double hi_factor = std::pow(alpha, -shift);
  auto inner = certify_haagerup(Haagerup{alpha, subgroup_rank}, p);
  rep.decision = inner.decision;

  // explicit sum of alpha^{p|t1 s t2|} over the F_d' ball
  double enumerated = 0.0, ball_plain = 0.0;
  for (int k = 0; k <= enumeration_radius; ++k) {
    for_each_word_of_length(subgroup_rank, k, [&](std::span<const Letter> letters) {
      Word s = reduce_word(letters, ambient_rank);
      enumerated += std::pow(alpha, p * static_cast<double>((t1 * s * t2).length()));
    });
    ball_plain += haagerup_sphere_mass(alpha, p, subgroup_rank, k);
  }
  rep.enumerated = enumerated;
  rep.enumeration_radius = enumeration_radius;
  // termwise: | |t1 s t2| - |s| | <= |t1| + |t2|
  bool termwise = enumerated >= lo_factor * ball_plain * (1 - 1e-12) && enumerated <= hi_factor * ball_plain * (1 + 1e-12);

  if (inner.decision == LpDecision::Summable) {
    const double s_total = *inner.closed_form;
    rep.subgroup_sum = s_total;
    rep.lower = lo_factor * s_total;
    rep.upper = hi_factor * s_total;
    rep.enumerated_tail = hi_factor * std::max(0.0, s_total - ball_plain);
    rep.sandwich_holds = termwise && enumerated <= rep.upper * (1 + 1e-12) &&
                         enumerated + rep.enumerated_tail >= rep.lower * (1 - 1e-12);
  } else {
    rep.lower = rep.upper = std::numeric_limits<double>::infinity();
    rep.enumerated_tail = std::numeric_limits<double>::infinity();
    rep.divergence_witness = lo_factor * *inner.divergence_witness;
    rep.sandwich_holds = termwise;
  }
  return rep;
}

std::pair<PosDefFamily, LpCertificate> coset_cutoff_product(const PosDefFamily& phi, const SubgroupSpec& h,
                                                            const std::vector<GroupElement>& cosets, double p) {
  require_p(p);
  auto dp = dp_certify(phi, h, p);
  if (dp.decision != LpDecision::Summable) {
    throw Error(ErrorCode::MissingCertificate, describe(phi) + " has no D_p(" + to_string(h) + ") certificate");
  }
  for (const auto& r : cosets) {
    if (r.group() != phi.ambient()) throw Error(ErrorCode::GroupMismatch, "coset representative outside the ambient group");
  }
  PosDefFamily cut(CutoffProduct{std::make_shared<const PosDefFamily>(phi), h, cosets});
  auto cert = lp_certify(cut, p);
  return {std::move(cut), std::move(cert)};
}

}  // namespace exotica
