#include "exotica/matrices.hpp"

#include <numeric>
#include <vector>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_big(const BigInt& x, std::int64_t n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return static_cast<std::int64_t>(r);
}

// q minimising |x + 2 q y| for y != 0.
BigInt nearest_even_shift(const BigInt& x, const BigInt& y) {
  // x + 2qy closest to 0  <=>  q closest to -x / (2y).
  BigInt two_y = 2 * y;
  BigInt q = -x / two_y;  // truncates toward zero
  BigInt best = q;
  BigInt best_abs = abs(x + two_y * q);
  for (BigInt cand : {BigInt(q - 1), BigInt(q + 1)}) {
    BigInt v = abs(x + two_y * cand);
    if (v < best_abs) {
      best_abs = v;
      best = cand;
    }
  }
  return best;
}

BigInt nearest_shift(const BigInt& x, const BigInt& y) {
  BigInt q = -x / y;
  BigInt best = q;
  BigInt best_abs = abs(x + y * q);
  for (BigInt cand : {BigInt(q - 1), BigInt(q + 1)}) {
    BigInt v = abs(x + y * cand);
    if (v < best_abs) {
      best_abs = v;
      best = cand;
    }
  }
  return best;
}

void append_power(std::vector<Letter>& out, Letter gen, const BigInt& k) {
  Letter l = k < 0 ? -gen : gen;
  BigInt m = abs(k);
  for (BigInt i = 0; i < m; ++i) out.push_back(l);
}

}  // namespace

std::strong_ordering operator<=>(const IntMatrix2& x, const IntMatrix2& y) {
  for (auto [p, q] : {std::pair{&x.a, &y.a}, {&x.b, &y.b}, {&x.c, &y.c}, {&x.d, &y.d}}) {
    if (*p < *q) return std::strong_ordering::less;
    if (*q < *p) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ModMatrix2 ModMatrix2::identity(std::int64_t n) { return {n, {1 % n, 0, 0, 1 % n}}; }

ModMatrix2 ModMatrix2::reduce(const IntMatrix2& m, std::int64_t n) {
  return {n, {mod_big(m.a, n), mod_big(m.b, n), mod_big(m.c, n), mod_big(m.d, n)}};
}

std::int64_t ModMatrix2::det() const { return mod(e[0] * e[3] - e[1] * e[2], modulus); }

ModMatrix2 ModMatrix2::inverse() const {
  return {modulus, {e[3], mod(-e[1], modulus), mod(-e[2], modulus), e[0]}};
}

ModMatrix2 operator*(const ModMatrix2& x, const ModMatrix2& y) {
  if (x.modulus != y.modulus) {
    throw Error(ErrorCode::GroupMismatch, "multiplying residues mod " + std::to_string(x.modulus) +
                                              " and mod " + std::to_string(y.modulus));
  }
  const std::int64_t n = x.modulus;
  const auto& a = x.e;
  const auto& b = y.e;
  return {n,
          {mod(a[0] * b[0] + a[1] * b[2], n), mod(a[0] * b[1] + a[1] * b[3], n),
           mod(a[2] * b[0] + a[3] * b[2], n), mod(a[2] * b[1] + a[3] * b[3], n)}};
}

IntMatrix2 standard_s() { return {0, -1, 1, 0}; }
IntMatrix2 standard_t() { return {1, 1, 0, 1}; }
IntMatrix2 sanov_a() { return {1, 2, 0, 1}; }
IntMatrix2 sanov_b() { return {1, 0, 2, 1}; }

IntMatrix2 sanov_embed(const Word& w) {
  if (w.rank() != 2) throw Error(ErrorCode::GroupMismatch, "sanov_embed expects a word in F_2");
  const IntMatrix2 gens[2] = {sanov_a(), sanov_b()};
  const IntMatrix2 invs[2] = {sanov_a().inverse(), sanov_b().inverse()};
  IntMatrix2 m;
  for (Letter l : w.letters()) m = m * (l > 0 ? gens[l - 1] : invs[-l - 1]);
  return m;
}

std::optional<Word> sanov_word(const IntMatrix2& m) {
  if (m.det() != 1) return std::nullopt;
  // Image of F_2 is {M = I mod 2, a = 1 mod 4}; the descent below decides
  // membership constructively and produces the preimage word.
  auto odd = [](const BigInt& x) { return (x % 2) != 0; };
  if (!odd(m.a) || !odd(m.d) || odd(m.b) || odd(m.c)) return std::nullopt;

  // Left-multiply by a^q (a += 2qc) or b^q (c += 2qa) until c == 0; since a
  // is odd and c even, each step strictly shrinks the larger entry.
  IntMatrix2 cur = m;
  std::vector<std::pair<Letter, BigInt>> steps;
  while (cur.c != 0) {
    if (abs(cur.a) > abs(cur.c)) {
      BigInt q = nearest_even_shift(cur.a, cur.c);
      cur.a += 2 * q * cur.c;
      cur.b += 2 * q * cur.d;
      steps.emplace_back(1, q);
    } else {
      BigInt q = nearest_even_shift(cur.c, cur.a);
      cur.c += 2 * q * cur.a;
      cur.d += 2 * q * cur.b;
      steps.emplace_back(2, q);
    }
  }
  if (cur.a != 1) return std::nullopt;  // -I times an image element
  // steps_k ... steps_1 m = a^{b/2}  =>  m = steps_1^{-1} ... steps_k^{-1} a^{b/2}
  std::vector<Letter> letters;
  for (const auto& [gen, q] : steps) append_power(letters, gen, -q);
  append_power(letters, 1, cur.b / 2);
  return reduce_word(letters, 2);
}

Word standard_word(const IntMatrix2& m) {
  if (m.det() != 1) throw Error(ErrorCode::GroupMismatch, "matrix " + to_string(m) + " is not in SL_2(Z)");
  // Apply T^q then S on the left until the lower-left entry vanishes.
  IntMatrix2 cur = m;
  std::vector<Letter> ops;  // recorded as left factors, in application order
  const IntMatrix2 s = standard_s();
  while (cur.c != 0) {
    BigInt q = nearest_shift(cur.a, cur.c);
    if (q != 0) {
      cur.a += q * cur.c;
      cur.b += q * cur.d;
      append_power(ops, 2, q);
    }
    cur = s * cur;
    ops.push_back(1);
  }
  // cur = [[e, x], [0, e]] with e = +-1.
  std::vector<Letter> letters;
  for (auto it = ops.begin(); it != ops.end(); ++it) letters.push_back(-*it);
  if (cur.a == 1) {
    append_power(letters, 2, cur.b);
  } else {
    // [[-1, x], [0, -1]] = S^2 T^{-x}
    letters.push_back(1);
    letters.push_back(1);
    append_power(letters, 2, -cur.b);
  }
  return reduce_word(letters, 2);
}

IntMatrix2 evaluate_standard_word(const Word& w) {
  const IntMatrix2 gens[2] = {standard_s(), standard_t()};
  const IntMatrix2 invs[2] = {standard_s().inverse(), standard_t().inverse()};
  IntMatrix2 m;
  for (Letter l : w.letters()) m = m * (l > 0 ? gens[l - 1] : invs[-l - 1]);
  return m;
}

std::string to_string(const IntMatrix2& m) {
  return "[" + m.a.str() + "," + m.b.str() + "," + m.c.str() + "," + m.d.str() + "]";
}

std::string to_string(const ModMatrix2& m) {
  return "[" + std::to_string(m.e[0]) + "," + std::to_string(m.e[1]) + "," + std::to_string(m.e[2]) + "," +
         std::to_string(m.e[3]) + "]";
}

}  // namespace exotica
