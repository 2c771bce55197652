#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "exotica/posdef.hpp"

namespace exotica {

/// Both sides of the coefficient identity for an induced representation.
///
/// With f on r_i H and g on r_j H the canonical sections through the GNS
/// vector of phi_H, the coefficient is s -> phi_H(r_j^-1 s r_i) on r_j H r_i^-1
/// and 0 elsewhere, so its l^p mass equals that of phi_H.
struct InducedIdentityReport {
  double lhs = 0.0;  // sum over |s| <= T in the ambient group
  double rhs = 0.0;  // sum over the radius-T ball of H
  double tail_bound = 0.0;  // omitted mass of both sides plus summation rounding
  std::optional<double> closed_form;  // sum over all of H when known
  std::size_t lhs_terms = 0;
  bool pass = false;
};

/// Ambient group must be free; H is a FreeFactor or a CyclicGen. Throws
/// MissingCertificate when phi_H is not certified l^p.
InducedIdentityReport induced_lp_identity(const Group& ambient, const SubgroupSpec& h, const PosDefFamily& phi_h,
                                          const Word& r_i, const Word& r_j, double p, int truncation);

/// The coefficient s -> <pi(s) f, g> above, as a positive definite family on
/// the ambient group.
PosDefFamily induced_coefficient(const Group& ambient, const SubgroupSpec& h, const PosDefFamily& phi_h,
                                 const Word& r_i, const Word& r_j);

/// Finitely supported function on H x K (keys are pair elements).
using ProductFunction = std::map<GroupElement, std::complex<double>>;

struct MarginalReport {
  double lhs = 0.0;     // |lambda_{f,f}(e, k)|
  double rhs = 0.0;     // lambda_{g,g}(k), g(k') = ||f restricted to H x {k'}||_2
  double g_norm = 0.0;  // ||g||_2
  bool pass = false;
};

/// f is normalised internally; throws ZeroVector for f = 0.
MarginalReport marginal_dominance(const ProductFunction& f, const GroupElement& k);

struct MarginalTrials {
  int trials = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  double worst_margin = 0.0;   // min over checks of rhs - lhs
  double worst_g_defect = 0.0;  // max | ||g||_2 - 1 |
};

/// Random complex unit vectors on the grid hs x ks (seeded), each checked at
/// every k = k_a^-1 k_b.
MarginalTrials marginal_trials(const std::vector<GroupElement>& hs, const std::vector<GroupElement>& ks, int trials,
                               std::uint64_t seed);

}  // namespace exotica
