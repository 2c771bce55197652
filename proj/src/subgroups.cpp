#include "exotica/subgroups.hpp"

#include <algorithm>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// w = u c u^-1 with c cyclically reduced.
std::pair<Word, Word> cyclic_core(const Word& w) {
  auto letters = w.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  Word u = reduce_word(letters.subspan(0, lo), w.rank());
  Word c = reduce_word(letters.subspan(lo, hi - lo), w.rank());
  return {u, c};
}

bool in_free_factor(const Word& s, int rank) {
  return std::all_of(s.letters().begin(), s.letters().end(), [&](Letter l) { return (l < 0 ? -l : l) <= rank; });
}

void require_ambient(const SubgroupSpec& h, const GroupElement& s) {
  std::visit(overloaded{
                 [&](const FreeFactor& f) {
                   if (s.word().rank() < f.rank) {
                     throw Error(ErrorCode::GroupMismatch,
                                 "F_" + std::to_string(f.rank) + " is not a factor of " + to_string(s.group()));
                   }
                 },
                 [&](const CyclicGen& c) {
                   if (s.word().rank() != c.generator.rank()) {
                     throw Error(ErrorCode::GroupMismatch, to_string(h) + " does not live in " + to_string(s.group()));
                   }
                 },
                 [&](const auto&) { (void)s.matrix(); },
             },
             h);
}

// Canonical key of the coset sH when a normal form exists.
std::optional<GroupElement> coset_key(const SubgroupSpec& h, const GroupElement& s) {
  if (auto* f = std::get_if<FreeFactor>(&h)) {
    // drop the longest suffix lying in F_{d'}; the remainder is the shortest
    // element of sH since no cancellation can occur against it
    auto letters = s.word().letters();
    std::size_t n = letters.size();
    while (n > 0 && (letters[n - 1] < 0 ? -letters[n - 1] : letters[n - 1]) <= f->rank) --n;
    return GroupElement(reduce_word(letters.subspan(0, n), s.word().rank()));
  }
  if (auto* c = std::get_if<Congruence>(&h)) return reduce_mod(s, c->level);
  return std::nullopt;
}

std::optional<std::string> infinite_index_certificate(const Group& ambient, const SubgroupSpec& h) {
  return std::visit(
      overloaded{
          [&](const FreeFactor& f) -> std::optional<std::string> {
            int d = ambient.free_rank();
            if (f.rank < d) return "proper free factor F_" + std::to_string(f.rank) + " of F_" + std::to_string(d);
            return std::nullopt;
          },
          [&](const CyclicGen& c) -> std::optional<std::string> {
            int d = ambient.free_rank();
            if (d >= 2) return "cyclic subgroup of the non-abelian free group F_" + std::to_string(d);
            if (c.generator.empty()) return std::string("trivial subgroup of an infinite group");
            return std::nullopt;
          },
          [&](const auto&) -> std::optional<std::string> { return std::nullopt; },
      },
      h);
}

void check_pair(const Group& ambient, const SubgroupSpec& h) {
  bool ok = std::visit(overloaded{
                           [&](const FreeFactor& f) { return ambient.is_free() && f.rank >= 0 && f.rank <= ambient.free_rank(); },
                           [&](const CyclicGen& c) { return ambient.is_free() && c.generator.rank() == ambient.free_rank(); },
                           [&](const auto&) { return ambient == Group::sl2z(); },
                       },
                       h);
  if (!ok) throw Error(ErrorCode::GroupMismatch, to_string(h) + " is not a subgroup of " + to_string(ambient));
}

GroupElement letter_element(const Group& ambient, Letter l) {
  GroupElement g = ambient.generator((l < 0 ? -l : l) - 1);
  return l < 0 ? g.inverse() : g;
}

}  // namespace

std::string to_string(const SubgroupSpec& h) {
  return std::visit(overloaded{
                        [](const FreeFactor& f) { return "FreeFactor(" + std::to_string(f.rank) + ")"; },
                        [](const CyclicGen& c) { return "CyclicGen(" + to_string(c.generator) + ")"; },
                        [](const Sanov&) { return std::string("Sanov"); },
                        [](const Congruence& c) { return "Congruence(" + std::to_string(c.level) + ")"; },
                    },
                    h);
}

std::optional<long> cyclic_exponent(const Word& w, const Word& s) {
  if (w.rank() != s.rank()) throw Error(ErrorCode::GroupMismatch, "cyclic generator and element ranks differ");
  if (s.empty()) return 0;
  if (w.empty()) return std::nullopt;
  auto [u, c] = cyclic_core(w);
  Word t = u.inverse() * s * u;
  if (t.length() % c.length() != 0) return std::nullopt;
  long n = static_cast<long>(t.length() / c.length());
  if (c.pow(n) == t) return n;
  if (c.pow(-n) == t) return -n;
  return std::nullopt;
}

bool contains(const SubgroupSpec& h, const GroupElement& s) {
  require_ambient(h, s);
  return std::visit(overloaded{
                        [&](const FreeFactor& f) { return in_free_factor(s.word(), f.rank); },
                        [&](const CyclicGen& c) { return cyclic_exponent(c.generator, s.word()).has_value(); },
                        [&](const Sanov&) { return sanov_word(s.matrix()).has_value(); },
                        [&](const Congruence& c) { return reduce_mod(s, c.level).is_identity(); },
                    },
                    h);
}

Group intrinsic_group(const SubgroupSpec& h) {
  return std::visit(overloaded{
                        [](const FreeFactor& f) { return Group::free(f.rank); },
                        [](const CyclicGen&) { return Group::free(1); },
                        [](const Sanov&) { return Group::free(2); },
                        [](const Congruence&) { return Group::sl2z(); },
                    },
                    h);
}

std::optional<GroupElement> to_subgroup(const SubgroupSpec& h, const GroupElement& s) {
  require_ambient(h, s);
  return std::visit(overloaded{
                        [&](const FreeFactor& f) -> std::optional<GroupElement> {
                          if (!in_free_factor(s.word(), f.rank)) return std::nullopt;
                          return GroupElement(s.word().with_rank(f.rank));
                        },
                        [&](const CyclicGen& c) -> std::optional<GroupElement> {
                          auto n = cyclic_exponent(c.generator, s.word());
                          if (!n) return std::nullopt;
                          return GroupElement(Word::generator(1, 0).pow(*n));
                        },
                        [&](const Sanov&) -> std::optional<GroupElement> {
                          auto w = sanov_word(s.matrix());
                          if (!w) return std::nullopt;
                          return GroupElement(*w);
                        },
                        [&](const Congruence& c) -> std::optional<GroupElement> {
                          if (!reduce_mod(s, c.level).is_identity()) return std::nullopt;
                          return s;
                        },
                    },
                    h);
}

GroupElement from_subgroup(const SubgroupSpec& h, const Group& ambient, const GroupElement& coords) {
  check_pair(ambient, h);
  return std::visit(overloaded{
                        [&](const FreeFactor&) { return GroupElement(coords.word().with_rank(ambient.free_rank())); },
                        [&](const CyclicGen& c) {
                          const Word& w = coords.word();
                          long n = static_cast<long>(w.length());
                          if (!w.empty() && w.front() < 0) n = -n;
                          return GroupElement(c.generator.pow(n));
                        },
                        [&](const Sanov&) { return GroupElement(sanov_embed(coords.word())); },
                        [&](const Congruence& c) {
                          if (!reduce_mod(coords, c.level).is_identity()) {
                            throw Error(ErrorCode::GroupMismatch, to_string(coords) + " is not in Gamma(" +
                                                                      std::to_string(c.level) + ")");
                          }
                          return coords;
                        },
                    },
                    h);
}

int CosetTable::find(const GroupElement& s) const {
  if (auto key = coset_key(subgroup, s)) {
    auto it = canonical.find(*key);
    return it == canonical.end() ? -1 : it->second;
  }
  for (std::size_t j = 0; j < section.size(); ++j) {
    if (contains(subgroup, section[j].inverse() * s)) return static_cast<int>(j);
  }
  return -1;
}

CosetTable coset_table(const Group& ambient, const SubgroupSpec& h, std::size_t bound) {
  check_pair(ambient, h);
  if (bound < 1) throw Error(ErrorCode::Inconclusive, "coset bound must be positive");

  CosetTable table{h, ambient, {}, {}, std::nullopt, {}, {}, {}};
  const int gens = ambient.generator_count();
  const int word_rank = ambient.is_free() ? ambient.free_rank() : 2;

  auto locate = [&](const GroupElement& s) { return table.find(s); };
  auto add = [&](GroupElement s, Word w) {
    if (auto key = coset_key(h, s)) table.canonical.emplace(*key, static_cast<int>(table.section.size()));
    table.section.push_back(std::move(s));
    table.section_words.push_back(std::move(w));
  };

  add(ambient.identity(), Word(word_rank));
  std::vector<int> layer{0};
  bool closed = false;
  bool overflow = false;
  while (!overflow) {
    struct Candidate {
      Word word;
      GroupElement element;
    };
    std::vector<Candidate> cands;
    for (int i : layer) {
      for (int r = 0; r < 2 * gens; ++r) {
        Letter l = letter_from_rank(r);
        Word w = reduce_word({l}, word_rank) * table.section_words[i];
        if (w.length() != table.section_words[i].length() + 1) continue;
        cands.push_back({std::move(w), letter_element(ambient, l) * table.section[i]});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.word < y.word; });
    std::vector<int> next;
    for (auto& c : cands) {
      if (locate(c.element) >= 0) continue;
      if (table.section.size() >= bound) {
        overflow = true;
        break;
      }
      next.push_back(static_cast<int>(table.section.size()));
      add(std::move(c.element), std::move(c.word));
    }
    if (!overflow && next.empty()) {
      closed = true;
      break;
    }
    layer = std::move(next);
  }

  if (closed) {
    table.index = table.section.size();
  } else if (auto cert = infinite_index_certificate(ambient, h)) {
    table.infinite_certificate = *cert;
  } else {
    throw Error(ErrorCode::Inconclusive, "coset exploration of " + to_string(h) + " in " + to_string(ambient) +
                                             " reached " + std::to_string(bound) + " cosets without closing");
  }

  table.action.assign(static_cast<std::size_t>(gens), std::vector<int>(table.section.size(), -1));
  for (int g = 0; g < gens; ++g) {
    GroupElement gen = ambient.generator(g);
    for (std::size_t i = 0; i < table.section.size(); ++i) table.action[g][i] = locate(gen * table.section[i]);
  }
  return table;
}

}  // namespace exotica
