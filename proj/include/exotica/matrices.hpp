#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "exotica/words.hpp"

namespace exotica {

/// Element of SL_2(Z), row-major [[a, b], [c, d]], arbitrary precision.
struct IntMatrix2 {
  BigInt a = 1, b = 0, c = 0, d = 1;

  static IntMatrix2 identity() { return {}; }
  BigInt det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix.
  IntMatrix2 inverse() const { return {d, -b, -c, a}; }

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix2& x, const IntMatrix2& y);
};

/// Element of SL_2(Z/NZ) with residues in [0, N).
struct ModMatrix2 {
  std::int64_t modulus = 2;
  std::array<std::int64_t, 4> e{1, 0, 0, 1};

  static ModMatrix2 identity(std::int64_t n);
  static ModMatrix2 reduce(const IntMatrix2& m, std::int64_t n);
  std::int64_t det() const;
  ModMatrix2 inverse() const;

  friend ModMatrix2 operator*(const ModMatrix2& x, const ModMatrix2& y);
  friend bool operator==(const ModMatrix2&, const ModMatrix2&) = default;
  friend auto operator<=>(const ModMatrix2&, const ModMatrix2&) = default;
};

/// Standard generators of SL_2(Z): S = [[0,-1],[1,0]] and T = [[1,1],[0,1]].
IntMatrix2 standard_s();
IntMatrix2 standard_t();

/// Generators of the free subgroup used as the finite-index copy of F_2:
/// a -> [[1,2],[0,1]], b -> [[1,0],[2,1]].
IntMatrix2 sanov_a();
IntMatrix2 sanov_b();

/// Homomorphism F_2 -> SL_2(Z) sending a, b to the matrices above.
IntMatrix2 sanov_embed(const Word& w);

/// Preimage of m under sanov_embed, or nullopt when m is not in the image.
/// Decided exactly by a Euclid-style descent on the first column.
std::optional<Word> sanov_word(const IntMatrix2& m);

/// Writes m as a word in (S, T): letter a stands for S, b for T.
Word standard_word(const IntMatrix2& m);

/// Evaluates a word over (S, T) (a = S, b = T).
IntMatrix2 evaluate_standard_word(const Word& w);

/// "[a,b,c,d]".
std::string to_string(const IntMatrix2& m);
std::string to_string(const ModMatrix2& m);

}  // namespace exotica
