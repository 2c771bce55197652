#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "exotica/group.hpp"

namespace exotica {

/// F_{d'} inside F_d, generated by the first d' generators.
struct FreeFactor {
  int rank = 1;
  friend auto operator<=>(const FreeFactor&, const FreeFactor&) = default;
};

/// Cyclic subgroup generated by one reduced word.
struct CyclicGen {
  Word generator;
  friend bool operator==(const CyclicGen&, const CyclicGen&) = default;
};

/// Subgroup of SL_2(Z) generated by [[1,2],[0,1]] and [[1,0],[2,1]].
struct Sanov {
  friend auto operator<=>(const Sanov&, const Sanov&) = default;
};

/// Principal congruence subgroup Gamma(N) = ker(SL_2(Z) -> SL_2(Z/NZ)).
struct Congruence {
  std::int64_t level = 2;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

using SubgroupSpec = std::variant<FreeFactor, CyclicGen, Sanov, Congruence>;

std::string to_string(const SubgroupSpec& h);

/// Exponent n with s = w^n, or nullopt. Exact: conjugates w to its cyclically
/// reduced core and compares normal forms.
std::optional<long> cyclic_exponent(const Word& w, const Word& s);

/// Membership test; throws GroupMismatch when s lives in the wrong ambient group.
bool contains(const SubgroupSpec& h, const GroupElement& s);

/// Abstract group H is identified with: F_{d'}, F_1 = Z, F_2 or SL_2(Z).
Group intrinsic_group(const SubgroupSpec& h);

/// Coordinates of s inside intrinsic_group(h), nullopt when s is not in H.
std::optional<GroupElement> to_subgroup(const SubgroupSpec& h, const GroupElement& s);

/// Inverse of to_subgroup: the ambient element represented by h-coordinates.
GroupElement from_subgroup(const SubgroupSpec& h, const Group& ambient, const GroupElement& coords);

/// Left coset table for H in an ambient group.
struct CosetTable {
  SubgroupSpec subgroup;
  Group ambient;
  /// Coset representatives r_i; r_0 is the identity and each r_i is the
  /// shortlex-least word (over the ambient generators) in its coset.
  std::vector<GroupElement> section;
  std::vector<Word> section_words;
  /// nullopt marks infinite index (section then holds the first `bound` cosets).
  std::optional<std::size_t> index;
  std::string infinite_certificate;
  /// action[g][i] = j with g r_i H = r_j H, for each ambient generator g;
  /// -1 when the image coset lies outside an infinite section.
  std::vector<std::vector<int>> action;
  /// Normal-form key -> section index, for subgroups with a coset normal form.
  std::map<GroupElement, int> canonical;

  /// Index j with s H = r_j H, or -1 if that coset is not in the section.
  int find(const GroupElement& s) const;
};

/// Explores cosets r H by prepending generators, layer by layer in shortlex
/// order, until closure or `bound` cosets. Infinite index is reported only
/// with a structural certificate; otherwise hitting the bound is Inconclusive.
CosetTable coset_table(const Group& ambient, const SubgroupSpec& h, std::size_t bound);

}  // namespace exotica
