#include "exotica/reps.hpp"

namespace exotica {

std::function<Word(const GroupElement&)> generator_word_fn(const Group& group) {
  if (group.is_free()) return [](const GroupElement& s) { return s.word(); };
  if (std::holds_alternative<SL2Z>(group.variant())) {
    return [](const GroupElement& s) { return standard_word(s.matrix()); };
  }
  if (const auto* q = std::get_if<SL2ZMod>(&group.variant())) {
    auto quotient = std::make_shared<const QuotientGroup>(enumerate_quotient(q->modulus));
    return [quotient](const GroupElement& s) {
      return quotient->words()[static_cast<std::size_t>(quotient->index_of(s.residues()))];
    };
  }
  throw Error(ErrorCode::GroupMismatch, "no generator normal form for " + to_string(group));
}

RealRep quotient_regular_rep(std::int64_t level, const Group& acting, std::size_t cap) {
  const bool lifted = std::holds_alternative<SL2Z>(acting.variant());
  if (!lifted && acting != Group::sl2z_mod(level)) {
    throw Error(ErrorCode::GroupMismatch, "regular representation of SL2Z/" + std::to_string(level) +
                                              " cannot act as " + to_string(acting));
  }
  auto quotient = std::make_shared<const QuotientGroup>(enumerate_quotient(level, cap));
  const auto n = static_cast<Eigen::Index>(quotient->order());
  auto eval = [quotient, level, n](const GroupElement& s) {
    const auto perm = quotient->left_action(reduce_mod(s, level).residues());
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1.0;
    return p;
  };
  std::vector<Eigen::MatrixXd> gens;
  for (int g = 0; g < acting.generator_count(); ++g) gens.push_back(eval(acting.generator(g)));
  return RealRep(acting, std::move(gens), std::move(eval));
}

}  // namespace exotica
