#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "exotica/group.hpp"

namespace exotica {

/// Enumerated finite quotient SL_2(Z/NZ).
///
/// Elements are listed in breadth-first order from the identity over the
/// images of S and T (and their inverses); `words[i]` is the BFS-tree word in
/// (S, T) reaching element i, so every element has a known preimage word.
class QuotientGroup {
 public:
  std::int64_t modulus() const noexcept { return modulus_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<ModMatrix2>& elements() const noexcept { return elements_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  /// Images of S and T.
  const std::vector<ModMatrix2>& generator_images() const noexcept { return generators_; }

  /// Index of a residue matrix; -1 if absent.
  int index_of(const ModMatrix2& m) const;

  /// Permutation i -> index(g * elements[i]) of left multiplication.
  std::vector<int> left_action(const ModMatrix2& g) const;

 private:
  friend QuotientGroup enumerate_quotient(std::int64_t, std::size_t);
  std::int64_t key(const ModMatrix2& m) const;

  std::int64_t modulus_ = 2;
  std::vector<ModMatrix2> elements_;
  std::vector<Word> words_;
  std::vector<ModMatrix2> generators_;
  std::unordered_map<std::int64_t, int> index_;
};

/// BFS closure of the images of S and T in SL_2(Z/NZ). Throws
/// EnumerationTooLarge when more than `cap` elements appear.
QuotientGroup enumerate_quotient(std::int64_t level, std::size_t cap = kDefaultEnumerationCap);

}  // namespace exotica
