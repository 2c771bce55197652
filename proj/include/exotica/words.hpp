#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace exotica {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Default cap on explicit enumerations (words, quotient elements, cosets).
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// A letter of the free group alphabet: +(i+1) is generator i, -(i+1) its inverse.
using Letter = std::int32_t;

/// Position of a letter in the canonical order a < A < b < B < ...
inline int letter_rank(Letter l) noexcept { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0); }

/// Inverse of letter_rank.
inline Letter letter_from_rank(int r) noexcept { return (r % 2 == 0) ? (r / 2 + 1) : -(r / 2 + 1); }

/// Reduced word in the free group of rank d.
///
/// Always stored in reduced form; the only way to build one from arbitrary
/// letters is reduce_word().
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  static Word identity(int rank) { return Word(rank); }
  static Word generator(int rank, int index, bool inverse = false);

  int rank() const noexcept { return rank_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;

  /// Reduced product; ranks must agree (GroupMismatch otherwise).
  friend Word operator*(const Word& x, const Word& y);

  /// Integer power, reduced.
  Word pow(long n) const;

  /// Same letters viewed in a free group of another rank. Throws
  /// GroupMismatch if a letter does not exist there.
  Word with_rank(int rank) const;

  /// Largest generator index used, plus one (0 for the identity).
  int support_rank() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex order: shorter first, then lexicographic in a < A < b < B < ...
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  friend Word reduce_word(std::span<const Letter>, int);
  int rank_ = 0;
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence. Throws InvalidLetter when a
/// letter index is outside the 2d-letter alphabet.
Word reduce_word(std::span<const Letter> letters, int rank);

inline Word reduce_word(std::initializer_list<Letter> letters, int rank) {
  return reduce_word(std::span<const Letter>(letters.begin(), letters.size()), rank);
}

/// "abA" notation: a..z are generators, A..Z their inverses, "" is the identity.
std::string to_string(const Word& w);
Word parse_word(std::string_view text, int rank);

/// Number of reduced words of length k in F_d: 1 if k = 0, else 2d(2d-1)^(k-1).
BigInt sphere_count(int rank, int radius);
BigInt ball_count(int rank, int radius);

struct Sphere {
  std::vector<Word> words;  // shortlex sorted
  BigInt count;
};

/// All reduced words of length exactly `radius`. Throws EnumerationTooLarge
/// (carrying the closed-form count) when the count exceeds `cap`.
Sphere sphere(int rank, int radius, std::size_t cap = kDefaultEnumerationCap);

/// All reduced words of length <= radius, shortlex sorted.
std::vector<Word> ball(int rank, int radius, std::size_t cap = kDefaultEnumerationCap);

/// Visit every reduced word of length exactly `radius` in shortlex order
/// without materialising the list. The callback receives the letter buffer.
template <class Visitor>
void for_each_word_of_length(int rank, int radius, Visitor&& visit) {
  std::vector<Letter> buf(static_cast<std::size_t>(radius));
  const int alphabet = 2 * rank;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == radius) {
      visit(std::span<const Letter>(buf));
      return;
    }
    for (int r = 0; r < alphabet; ++r) {
      Letter l = letter_from_rank(r);
      if (pos > 0 && buf[pos - 1] == -l) continue;
      buf[pos] = l;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace exotica
