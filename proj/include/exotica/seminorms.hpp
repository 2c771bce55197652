#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exotica/reps.hpp"
#include "exotica/ring.hpp"

namespace exotica {

class SeminormSpec;

/// Maximal C*-norm, enclosed between the trivial and regular values and ||x||_1.
struct L1Cap {};

/// sup of ||pi(x)|| over the listed representations.
struct FiniteDimSet {
  std::vector<ComplexRep> reps;
  std::vector<std::string> labels;  // parallel to reps, for provenance
};

/// Reduced norm on F_d, bounded below by the compression to the ball B_R.
struct TruncatedRegular {
  int radius = 1;
};

/// Representations of SL_2(Z) factoring through SL_2(Z/NZ), N in levels.
struct CongruenceSet {
  std::vector<std::int64_t> levels;
};

struct Join {
  std::vector<SeminormSpec> children;
};

/// A child spec whose upper bound is replaced by caller-certified caps.
struct Capped {
  std::shared_ptr<const SeminormSpec> child;
  std::vector<std::pair<GroupRingElement, double>> caps;  // per element
  std::optional<double> uniform;                          // applies to every element
  std::string label;
};

class SeminormSpec {
 public:
  using Variant = std::variant<L1Cap, FiniteDimSet, TruncatedRegular, CongruenceSet, Join, Capped>;

  SeminormSpec(Variant v);

  const Variant& variant() const noexcept { return v_; }

 private:
  Variant v_;
};

std::string describe(const SeminormSpec& spec);

/// The group forced by the spec, if any (reps fix it; CongruenceSet is SL_2(Z)).
std::optional<Group> spec_group(const SeminormSpec& spec);

struct NormInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::string> provenance;
};

NormInterval eval_seminorm(const SeminormSpec& spec, const GroupRingElement& x);

/// Flattened join; a single member is returned unchanged. Throws EmptyJoin,
/// or GroupMismatch when members force different groups.
SeminormSpec join(const std::vector<SeminormSpec>& specs);

/// Regular representations of SL_2(Z/NZ), N in levels, acting on x in C[SL_2(Z)].
NormInterval congruence_seminorm(const GroupRingElement& x, const std::vector<std::int64_t>& levels);

/// Caps for the given child. `label` names where the caps come from.
SeminormSpec capped(const SeminormSpec& child, std::vector<std::pair<GroupRingElement, double>> caps,
                    std::optional<double> uniform, std::string label);

enum class Verdict { ADominates, BDominates, Overlapping };
std::string_view to_string(Verdict v) noexcept;

struct DominanceReport {
  std::vector<GroupRingElement> samples;
  std::vector<NormInterval> a;
  std::vector<NormInterval> b;
  std::vector<Verdict> verdicts;
  std::vector<double> gaps;  // lower of the dominating side minus upper of the other; 0 when overlapping
};

/// Per-sample verdicts from disjoint intervals only.
DominanceReport compare(const SeminormSpec& a, const SeminormSpec& b, const std::vector<GroupRingElement>& samples);

/// Text form used by the CLI: "l1", "trivial", "regular:N", "trunc:R",
/// "cong:2,3,5", "join(a;b;...)". Reps are built over `group`.
SeminormSpec parse_spec(std::string_view text, const Group& group);

}  // namespace exotica
