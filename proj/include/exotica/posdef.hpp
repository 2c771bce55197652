#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exotica/group.hpp"
#include "exotica/subgroups.hpp"

namespace exotica {

class PosDefFamily;
using PosDefPtr = std::shared_ptr<const PosDefFamily>;

/// s -> alpha^|s| on F_d.
struct Haagerup {
  double alpha;
  int rank;
};

/// delta_e.
struct PointMass {
  Group group;
};

/// psi on H extended by zero to the ambient group.
struct ZeroExtension {
  PosDefPtr inner;  // lives on intrinsic_group(subgroup)
  SubgroupSpec subgroup;
  Group ambient;
};

/// Matrix coefficient s -> phi(v^-1 s u) of the GNS representation of phi.
struct GnsCoefficient {
  PosDefPtr base;
  GroupElement u;
  GroupElement v;
};

/// phi restricted to a finite union of left cosets r H.
struct CutoffProduct {
  PosDefPtr base;
  SubgroupSpec subgroup;
  std::vector<GroupElement> cosets;  // representatives r
};

/// Symbolic positive definite function, evaluable at any group element.
class PosDefFamily {
 public:
  using Variant = std::variant<Haagerup, PointMass, ZeroExtension, GnsCoefficient, CutoffProduct>;

  explicit PosDefFamily(Variant v);

  static PosDefFamily haagerup(double alpha, int rank);
  static PosDefFamily point_mass(Group group);
  static PosDefFamily gns(const PosDefFamily& base, GroupElement u, GroupElement v);

  const Variant& variant() const noexcept { return v_; }
  Group ambient() const;

 private:
  Variant v_;
};

std::string describe(const PosDefFamily& phi);

std::complex<double> eval_posdef(const PosDefFamily& phi, const GroupElement& s);

enum class LpDecision { Summable, NotSummable, Inconclusive };
std::string_view to_string(LpDecision d) noexcept;

/// Evidence that sum_s |phi(s)|^p is (or is not) finite.
struct LpCertificate {
  double p = 2.0;
  LpDecision decision = LpDecision::Inconclusive;
  std::optional<double> closed_form;
  double partial_sum = 0.0;
  double tail_bound = std::numeric_limits<double>::infinity();
  int enumeration_radius = 0;
  /// For NotSummable: a positive lower bound on every sphere (or coset) term.
  std::optional<double> divergence_witness;
  std::string evidence;
};

/// Where (2d-1) alpha^p sits relative to 1. Values within 1e-12 (relative)
/// count as the boundary so grid points computed as (2d-1)^(-1/p) land on it.
enum class ThresholdSide { Below, Boundary, Above };

struct HaagerupThreshold {
  double alpha_star;  // (2d-1)^(-1/p)
  double ratio;       // (2d-1) alpha^p
  ThresholdSide side;
};

HaagerupThreshold haagerup_threshold(double alpha, double p, int rank);

/// sum_{|s| = k} alpha^{pk} over F_d, in closed form: 2d (2d-1)^(k-1) alpha^(pk).
double haagerup_sphere_mass(double alpha, double p, int rank, int k);

LpCertificate lp_certify(const PosDefFamily& phi, double p);

/// Okayasu's criterion evidence: per-k values of ||phi chi_k||_p against k + 1.
struct OkayasuRow {
  int k;
  double norm;                     // ||phi chi_k||_p
  double bound;                    // k + 1
  bool pass;
  std::optional<double> enumerated;  // same norm from explicit sphere enumeration
};

struct OkayasuTable {
  int rank;
  double p;
  std::vector<OkayasuRow> rows;  // k = 1 .. k_max
  bool finite_decision;          // every listed row passes
  /// Haagerup only: the decision over all k (alpha <= (2d-1)^(-1/p)).
  std::optional<bool> analytic_decision;
  std::optional<double> alpha_star;
  /// Haagerup only: the first k with ||phi chi_k||_p > k + 1, if any.
  std::optional<long> first_failing_k;
};

/// Rows for k = 1..k_max; spheres with k <= enumerate_up_to are also summed
/// explicitly. Throws NotNormalized when |phi(e) - 1| > 1e-12.
OkayasuTable okayasu_table(const PosDefFamily& phi, double p, int k_max, int enumerate_up_to = 8);

/// psi on H, extended by zero to the ambient group.
PosDefFamily zero_extend(const PosDefFamily& psi, const SubgroupSpec& h, const Group& ambient);

struct GramCheck {
  double min_eigenvalue;
  double norm;  // spectral norm of G
  bool pass;    // min_eigenvalue >= -1e-9 * norm
};

/// Gram matrix G_st = phi(s^-1 t) on a nonempty duplicate-free sample.
GramCheck gram_psd_check(const std::function<std::complex<double>(const GroupElement&)>& phi,
                         const std::vector<GroupElement>& sample);
GramCheck gram_psd_check(const PosDefFamily& phi, const std::vector<GroupElement>& sample);

/// D_p(H) membership of phi, i.e. l^p summability on every double coset sHt.
struct DpCertificate {
  LpDecision decision = LpDecision::Inconclusive;
  std::string evidence;
};

DpCertificate dp_certify(const PosDefFamily& phi, const SubgroupSpec& h, double p);

/// Haagerup family on F_D against H = F_{d'}: membership in D_p(H) together
/// with the translated-sum sandwich for caller-supplied t1, t2.
struct DpHaagerupReport {
  LpDecision decision = LpDecision::Inconclusive;
  std::optional<double> subgroup_sum;  // S = sum_{s in F_d'} alpha^{p|s|}
  double lower = 0.0;                  // alpha^{p(|t1|+|t2|)} S
  double upper = 0.0;                  // alpha^{-p(|t1|+|t2|)} S
  double enumerated = 0.0;             // sum over the F_d' ball of alpha^{p|t1 s t2|}
  double enumerated_tail = 0.0;        // bound on the omitted terms
  int enumeration_radius = 0;
  bool sandwich_holds = false;
  std::optional<double> divergence_witness;
};

DpHaagerupReport dp_certify_haagerup(double alpha, double p, int subgroup_rank, int ambient_rank,
                                     const Word& t1, const Word& t2, int enumeration_radius = 8);

/// phi cut down to the union of the given cosets, with an l^p certificate
/// assembled coset by coset. Throws MissingCertificate unless phi is in D_p(H).
std::pair<PosDefFamily, LpCertificate> coset_cutoff_product(const PosDefFamily& phi, const SubgroupSpec& h,
                                                            const std::vector<GroupElement>& cosets, double p);

}  // namespace exotica
