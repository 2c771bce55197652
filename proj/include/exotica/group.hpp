#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exotica/matrices.hpp"
#include "exotica/words.hpp"

namespace exotica {

class Group;
class GroupElement;

struct FreeGroup {
  int rank = 2;
  friend auto operator<=>(const FreeGroup&, const FreeGroup&) = default;
};

struct SL2Z {
  friend auto operator<=>(const SL2Z&, const SL2Z&) = default;
};

struct SL2ZMod {
  std::int64_t modulus = 2;
  friend auto operator<=>(const SL2ZMod&, const SL2ZMod&) = default;
};

/// Direct product of two groups.
struct ProductGroup {
  std::vector<Group> factors;  // exactly two
  friend bool operator==(const ProductGroup&, const ProductGroup&);
  friend std::strong_ordering operator<=>(const ProductGroup&, const ProductGroup&);
};

/// Descriptor of an ambient group: F_d, SL_2(Z), SL_2(Z/NZ) or H x K.
class Group {
 public:
  using Variant = std::variant<FreeGroup, SL2Z, SL2ZMod, ProductGroup>;

  Group() = default;
  Group(FreeGroup g) : v_(g) {}
  Group(SL2Z g) : v_(g) {}
  Group(SL2ZMod g) : v_(g) {}
  Group(ProductGroup g) : v_(std::move(g)) {}

  static Group free(int rank) { return FreeGroup{rank}; }
  static Group sl2z() { return SL2Z{}; }
  static Group sl2z_mod(std::int64_t n) { return SL2ZMod{n}; }
  static Group product(Group h, Group k);

  const Variant& variant() const noexcept { return v_; }
  bool is_free() const noexcept { return std::holds_alternative<FreeGroup>(v_); }
  int free_rank() const;  // GroupMismatch unless free

  /// Number of designated generators (rank, or 2 for S, T).
  int generator_count() const;
  GroupElement generator(int index) const;
  GroupElement identity() const;

  friend bool operator==(const Group& x, const Group& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Group& x, const Group& y);

 private:
  Variant v_ = FreeGroup{2};
};

/// "F2", "SL2Z", "SL2Z/5", "F2xF3" (products may be parenthesised to nest).
std::string to_string(const Group& g);
Group parse_group(std::string_view text);

struct ProductElement {
  std::vector<GroupElement> parts;  // exactly two
  friend bool operator==(const ProductElement&, const ProductElement&);
  friend std::strong_ordering operator<=>(const ProductElement&, const ProductElement&);
};

/// A group element of one of the supported ambient groups.
class GroupElement {
 public:
  using Variant = std::variant<Word, IntMatrix2, ModMatrix2, ProductElement>;

  GroupElement() : v_(Word(2)) {}
  GroupElement(Word w) : v_(std::move(w)) {}
  GroupElement(IntMatrix2 m);
  GroupElement(ModMatrix2 m);
  GroupElement(ProductElement p);

  static GroupElement pair(GroupElement h, GroupElement k);

  const Variant& variant() const noexcept { return v_; }
  const Word& word() const;             // GroupMismatch unless a free word
  const IntMatrix2& matrix() const;     // GroupMismatch unless SL_2(Z)
  const ModMatrix2& residues() const;   // GroupMismatch unless SL_2(Z/NZ)
  const GroupElement& first() const;    // GroupMismatch unless a pair
  const GroupElement& second() const;

  Group group() const;
  bool is_identity() const;
  GroupElement inverse() const;

  /// Word length for free groups; GroupMismatch otherwise.
  std::size_t word_length() const { return word().length(); }

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y);

 private:
  Variant v_;
};

/// Reduction map SL_2(Z) -> SL_2(Z/NZ), identity on quotient elements of level N.
GroupElement reduce_mod(const GroupElement& g, std::int64_t n);

std::string to_string(const GroupElement& g);
GroupElement parse_element(std::string_view text, const Group& group);

}  // namespace exotica
