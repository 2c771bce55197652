#include "exotica/quotient.hpp"

#include <deque>

#include "exotica/errors.hpp"

namespace exotica {

std::int64_t QuotientGroup::key(const ModMatrix2& m) const {
  const std::int64_t n = modulus_;
  return ((m.e[0] * n + m.e[1]) * n + m.e[2]) * n + m.e[3];
}

int QuotientGroup::index_of(const ModMatrix2& m) const {
  if (m.modulus != modulus_) return -1;
  auto it = index_.find(key(m));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> QuotientGroup::left_action(const ModMatrix2& g) const {
  std::vector<int> perm(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) perm[i] = index_of(g * elements_[i]);
  return perm;
}

QuotientGroup enumerate_quotient(std::int64_t level, std::size_t cap) {
  if (level < 2) throw Error(ErrorCode::GroupMismatch, "quotient level must be >= 2");
  // keys are N^4-sized; keep them inside int64
  if (level > 40000) throw EnumerationTooLarge("?", "quotient level " + std::to_string(level));
  QuotientGroup q;
  q.modulus_ = level;
  q.generators_ = {ModMatrix2::reduce(standard_s(), level), ModMatrix2::reduce(standard_t(), level)};
  const ModMatrix2 steps[4] = {q.generators_[0], q.generators_[0].inverse(), q.generators_[1],
                               q.generators_[1].inverse()};
  const Letter step_letters[4] = {1, -1, 2, -2};

  auto add = [&](const ModMatrix2& m, Word w) {
    if (q.elements_.size() >= cap) {
      throw EnumerationTooLarge("> " + std::to_string(cap), "SL_2(Z/" + std::to_string(level) + "Z)");
    }
    q.index_.emplace(q.key(m), static_cast<int>(q.elements_.size()));
    q.elements_.push_back(m);
    q.words_.push_back(std::move(w));
  };

  add(ModMatrix2::identity(level), Word(2));
  for (std::size_t head = 0; head < q.elements_.size(); ++head) {
    for (int s = 0; s < 4; ++s) {
      ModMatrix2 next = q.elements_[head] * steps[s];
      if (q.index_.contains(q.key(next))) continue;
      Letter l = step_letters[s];
      add(next, q.words_[head] * reduce_word({l}, 2));
    }
  }
  return q;
}

}  // namespace exotica
