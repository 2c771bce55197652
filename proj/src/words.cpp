#include "exotica/words.hpp"

#include <algorithm>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

void check_letter(Letter l, int rank) {
  if (l == 0 || l > rank || l < -rank) {
    throw Error(ErrorCode::InvalidLetter,
                "letter " + std::to_string(l) + " outside the alphabet of F_" + std::to_string(rank));
  }
}

}  // namespace

Word Word::generator(int rank, int index, bool inverse) {
  Letter l = index + 1;
  check_letter(l, rank);
  Word w(rank);
  w.letters_.push_back(inverse ? -l : l);
  return w;
}

Word reduce_word(std::span<const Letter> letters, int rank) {
  if (rank < 1) throw Error(ErrorCode::InvalidLetter, "free group rank must be positive");
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    if (!w.letters_.empty() && w.letters_.back() == -l) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::inverse() const {
  Word w(rank_);
  w.letters_.resize(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(), [](Letter l) { return -l; });
  return w;
}

Word operator*(const Word& x, const Word& y) {
  if (x.rank_ != y.rank_) {
    throw Error(ErrorCode::GroupMismatch, "multiplying words of ranks " + std::to_string(x.rank_) +
                                              " and " + std::to_string(y.rank_));
  }
  std::size_t cancel = 0;
  const std::size_t nx = x.letters_.size(), ny = y.letters_.size();
  while (cancel < nx && cancel < ny && x.letters_[nx - 1 - cancel] == -y.letters_[cancel]) ++cancel;
  Word w(x.rank_);
  w.letters_.reserve(nx + ny - 2 * cancel);
  w.letters_.insert(w.letters_.end(), x.letters_.begin(), x.letters_.end() - static_cast<long>(cancel));
  w.letters_.insert(w.letters_.end(), y.letters_.begin() + static_cast<long>(cancel), y.letters_.end());
  return w;
}

Word Word::pow(long n) const {
  Word base = n < 0 ? inverse() : *this;
  unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Word result(rank_);
  for (unsigned long i = 0; i < m; ++i) result = result * base;
  return result;
}

Word Word::with_rank(int rank) const {
  if (support_rank() > rank) {
    throw Error(ErrorCode::GroupMismatch,
                "word " + to_string(*this) + " does not live in F_" + std::to_string(rank));
  }
  Word w(rank);
  w.letters_ = letters_;
  return w;
}

int Word::support_rank() const noexcept {
  int r = 0;
  for (Letter l : letters_) r = std::max(r, l < 0 ? -l : l);
  return r;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
  if (auto c = x.letters_.size() <=> y.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.letters_.size(); ++i) {
    if (auto c = letter_rank(x.letters_[i]) <=> letter_rank(y.letters_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Word& w) {
  std::string s;
  s.reserve(w.length());
  for (Letter l : w.letters()) {
    s.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' + (-l) - 1));
  }
  return s;
}

Word parse_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      letters.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      letters.push_back(-(c - 'A' + 1));
    } else {
      throw Error(ErrorCode::InvalidLetter, std::string("character '") + c + "' in word \"" +
                                                std::string(text) + "\"");
    }
  }
  return reduce_word(letters, rank);
}

BigInt sphere_count(int rank, int radius) {
  if (radius == 0) return 1;
  BigInt n = 2 * rank;
  BigInt r = 2 * rank - 1;
  return n * boost::multiprecision::pow(r, static_cast<unsigned>(radius - 1));
}

BigInt ball_count(int rank, int radius) {
  BigInt total = 0;
  for (int k = 0; k <= radius; ++k) total += sphere_count(rank, k);
  return total;
}

Sphere sphere(int rank, int radius, std::size_t cap) {
  if (rank < 1 || radius < 0) throw Error(ErrorCode::InvalidLetter, "sphere needs d >= 1 and k >= 0");
  Sphere s{{}, sphere_count(rank, radius)};
  if (s.count > cap) {
    throw EnumerationTooLarge(s.count.str(), "sphere of radius " + std::to_string(radius) + " in F_" +
                                                 std::to_string(rank));
  }
  s.words.reserve(static_cast<std::size_t>(s.count));
  for_each_word_of_length(rank, radius, [&](std::span<const Letter> letters) {
    s.words.push_back(reduce_word(letters, rank));
  });
  return s;
}

std::vector<Word> ball(int rank, int radius, std::size_t cap) {
  BigInt total = ball_count(rank, radius);
  if (total > cap) {
    throw EnumerationTooLarge(total.str(), "ball of radius " + std::to_string(radius) + " in F_" +
                                               std::to_string(rank));
  }
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int k = 0; k <= radius; ++k) {
    for_each_word_of_length(rank, k, [&](std::span<const Letter> letters) {
      out.push_back(reduce_word(letters, rank));
    });
  }
  return out;
}

}  // namespace exotica
