#include "exotica/seminorms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "exotica/errors.hpp"
#include "exotica/truncated_regular.hpp"

namespace exotica {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

NormInterval clamp_to_l1(NormInterval iv, double l1) {
  iv.upper = std::min(iv.upper, l1);
  iv.lower = std::min(iv.lower, iv.upper);
  return iv;
}

long parse_int(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw Error(ErrorCode::ParseError, "bad integer \"" + std::string(s) + "\"");
  return v;
}

std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

SeminormSpec::SeminormSpec(Variant v) : v_(std::move(v)) {
  std::visit(overloaded{
                 [](const FiniteDimSet& f) {
                   if (!f.labels.empty() && f.labels.size() != f.reps.size()) {
                     throw Error(ErrorCode::InvalidArgument, "one label per representation");
                   }
                   for (const auto& r : f.reps) {
                     if (r.group() != f.reps.front().group()) {
                       throw Error(ErrorCode::GroupMismatch, "representations of different groups in one set");
                     }
                   }
                 },
                 [](const TruncatedRegular& t) {
                   if (t.radius < 1) throw Error(ErrorCode::InvalidArgument, "truncation radius must be >= 1");
                 },
                 [](const CongruenceSet& c) {
                   for (auto n : c.levels) {
                     if (n < 2) throw Error(ErrorCode::InvalidArgument, "congruence levels must be >= 2");
                   }
                 },
                 [](const Join& j) {
                   if (j.children.empty()) throw Error(ErrorCode::EmptyJoin, "join of nothing");
                 },
                 [](const Capped& c) {
                   if (!c.child) throw Error(ErrorCode::InvalidArgument, "capped spec without a child");
                 },
                 [](const L1Cap&) {},
             },
             v_);
}

std::string describe(const SeminormSpec& spec) {
  return std::visit(overloaded{
                        [](const L1Cap&) { return std::string("l1"); },
                        [](const FiniteDimSet& f) {
                          std::string s = "FiniteDimSet{";
                          for (std::size_t i = 0; i < f.reps.size(); ++i) {
                            if (i) s += ",";
                            s += f.labels.empty() ? "dim " + std::to_string(f.reps[i].dim()) : f.labels[i];
                          }
                          return s + "}";
                        },
                        [](const TruncatedRegular& t) { return "TruncatedRegular{" + std::to_string(t.radius) + "}"; },
                        [](const CongruenceSet& c) {
                          std::string s = "CongruenceSet{";
                          for (std::size_t i = 0; i < c.levels.size(); ++i) s += (i ? "," : "") + std::to_string(c.levels[i]);
                          return s + "}";
                        },
                        [](const Join& j) {
                          std::string s = "Join{";
                          for (std::size_t i = 0; i < j.children.size(); ++i) s += (i ? ", " : "") + describe(j.children[i]);
                          return s + "}";
                        },
                        [](const Capped& c) { return "Capped{" + describe(*c.child) + ", " + c.label + "}"; },
                    },
                    spec.variant());
}

std::optional<Group> spec_group(const SeminormSpec& spec) {
  return std::visit(overloaded{
                        [](const FiniteDimSet& f) -> std::optional<Group> {
                          if (f.reps.empty()) return std::nullopt;
                          return f.reps.front().group();
                        },
                        [](const CongruenceSet&) -> std::optional<Group> { return Group::sl2z(); },
                        [](const Join& j) -> std::optional<Group> {
                          for (const auto& c : j.children) {
                            if (auto g = spec_group(c)) return g;
                          }
                          return std::nullopt;
                        },
                        [](const Capped& c) { return spec_group(*c.child); },
                        [](const auto&) -> std::optional<Group> { return std::nullopt; },
                    },
                    spec.variant());
}

NormInterval congruence_seminorm(const GroupRingElement& x, const std::vector<std::int64_t>& levels) {
  if (x.group() != Group::sl2z()) throw Error(ErrorCode::GroupMismatch, "congruence seminorm lives on C[SL2Z]");
  const double l1 = l1_norm(x);
  NormInterval iv{0.0, l1, {}};
  std::int64_t best = 0;
  for (auto n : levels) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "congruence levels must be >= 2");
    const double v = rep_norm(quotient_regular_rep(n, Group::sl2z()), x);
    if (v > iv.lower || best == 0) {
      iv.lower = std::max(iv.lower, v);
      best = n;
    }
  }
  iv.lower = std::min(iv.lower, l1);
  iv.provenance.push_back(best ? "lower: regular rep of SL2Z/" + std::to_string(best) : "lower: no levels");
  iv.provenance.push_back("upper: l1 norm");
  return iv;
}

NormInterval eval_seminorm(const SeminormSpec& spec, const GroupRingElement& x) {
  if (auto g = spec_group(spec); g && *g != x.group()) {
    throw Error(ErrorCode::GroupMismatch, describe(spec) + " cannot evaluate an element of C[" + to_string(x.group()) + "]");
  }
  const double l1 = l1_norm(x);
  NormInterval iv = std::visit(
      overloaded{
          [&](const L1Cap&) {
            std::complex<double> total = 0.0;
            double l2 = 0.0;
            for (const auto& [s, c] : x.terms()) {
              total += c.to_complex();
              l2 += std::norm(c.to_complex());
            }
            const double tv = std::abs(total), rv = std::sqrt(l2);
            return NormInterval{std::max(tv, rv), l1,
                                {tv >= rv ? "lower: trivial representation" : "lower: ||x||_2 via regular representation",
                                 "upper: l1 norm"}};
          },
          [&](const FiniteDimSet& f) {
            double best = 0.0;
            std::string who = "empty set";
            for (std::size_t i = 0; i < f.reps.size(); ++i) {
              const double v = rep_norm(f.reps[i], x);
              if (v > best || i == 0) {
                best = std::max(best, v);
                who = f.labels.empty() ? "rep " + std::to_string(i) : f.labels[i];
              }
            }
            return NormInterval{best, best * (1.0 + 1e-9), {"attained by " + who}};
          },
          [&](const TruncatedRegular& t) {
            auto r = truncated_regular(x, t.radius);
            return NormInterval{r.lower_bound, l1,
                                {"lower: ball radius " + std::to_string(t.radius) + " (" + std::to_string(r.ball_size) +
                                     " words, " + std::to_string(r.iterations) + " iterations)",
                                 "upper: l1 norm"}};
          },
          [&](const CongruenceSet& c) { return congruence_seminorm(x, c.levels); },
          [&](const Join& j) {
            NormInterval out{0.0, 0.0, {}};
            std::size_t arg = 0;
            for (std::size_t i = 0; i < j.children.size(); ++i) {
              auto c = eval_seminorm(j.children[i], x);
              if (i == 0 || c.lower > out.lower) {
                arg = i;
                out.provenance = c.provenance;
              }
              out.lower = std::max(out.lower, c.lower);
              out.upper = std::max(out.upper, c.upper);
            }
            out.provenance.insert(out.provenance.begin(), "join: lower from member " + std::to_string(arg));
            return out;
          },
          [&](const Capped& c) {
            auto out = eval_seminorm(*c.child, x);
            std::optional<double> cap = c.uniform;
            for (const auto& [y, v] : c.caps) {
              if (y == x) cap = cap ? std::min(*cap, v) : v;
            }
            if (cap) {
              if (*cap < out.lower * (1.0 - 1e-12)) {
                throw Error(ErrorCode::InvalidArgument, "cap " + fmt(*cap) + " is below the certified lower bound " +
                                                            fmt(out.lower));
              }
              if (*cap < out.upper) {
                out.upper = std::max(out.lower, *cap);
                out.provenance.push_back("upper: analytic cap " + fmt(*cap) + " (" + c.label + ")");
              }
            }
            return out;
          },
      },
      spec.variant());
  return clamp_to_l1(std::move(iv), l1);
}

SeminormSpec join(const std::vector<SeminormSpec>& specs) {
  if (specs.empty()) throw Error(ErrorCode::EmptyJoin, "join of nothing");
  std::vector<SeminormSpec> flat;
  for (const auto& s : specs) {
    if (const auto* j = std::get_if<Join>(&s.variant())) {
      flat.insert(flat.end(), j->children.begin(), j->children.end());
    } else {
      flat.push_back(s);
    }
  }
  std::optional<Group> g;
  for (const auto& s : flat) {
    auto sg = spec_group(s);
    if (sg && g && *sg != *g) throw Error(ErrorCode::GroupMismatch, "join members live on different groups");
    if (sg) g = sg;
  }
  if (flat.size() == 1) return flat.front();
  return SeminormSpec(Join{std::move(flat)});
}

SeminormSpec capped(const SeminormSpec& child, std::vector<std::pair<GroupRingElement, double>> caps,
                    std::optional<double> uniform, std::string label) {
  return SeminormSpec(Capped{std::make_shared<const SeminormSpec>(child), std::move(caps), uniform, std::move(label)});
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::ADominates: return "A-dominates";
    case Verdict::BDominates: return "B-dominates";
    case Verdict::Overlapping: return "overlapping";
  }
  return "overlapping";
}

DominanceReport compare(const SeminormSpec& a, const SeminormSpec& b, const std::vector<GroupRingElement>& samples) {
  auto ga = spec_group(a), gb = spec_group(b);
  if (ga && gb && *ga != *gb) throw Error(ErrorCode::GroupMismatch, "compared specs live on different groups");
  DominanceReport rep;
  rep.samples = samples;
  for (const auto& x : samples) {
    auto ia = eval_seminorm(a, x);
    auto ib = eval_seminorm(b, x);
    Verdict v = Verdict::Overlapping;
    double gap = 0.0;
    if (ia.lower > ib.upper) {
      v = Verdict::ADominates;
      gap = ia.lower - ib.upper;
    } else if (ib.lower > ia.upper) {
      v = Verdict::BDominates;
      gap = ib.lower - ia.upper;
    }
    rep.a.push_back(std::move(ia));
    rep.b.push_back(std::move(ib));
    rep.verdicts.push_back(v);
    rep.gaps.push_back(gap);
  }
  return rep;
}

SeminormSpec parse_spec(std::string_view text, const Group& group) {
  text = trim(text);
  if (text == "l1") return SeminormSpec(L1Cap{});
  if (text == "trivial") return SeminormSpec(FiniteDimSet{{trivial_rep<std::complex<double>>(group)}, {"trivial"}});
  if (text.starts_with("regular:")) {
    const long n = parse_int(text.substr(8));
    return SeminormSpec(FiniteDimSet{{cast_rep<std::complex<double>>(quotient_regular_rep(n, group))},
                                     {"regular SL2Z/" + std::to_string(n)}});
  }
  if (text.starts_with("trunc:")) return SeminormSpec(TruncatedRegular{static_cast<int>(parse_int(text.substr(6)))});
  if (text.starts_with("cong:")) {
    CongruenceSet c;
    for (auto part : split_top(text.substr(5), ',')) c.levels.push_back(parse_int(trim(part)));
    return SeminormSpec(std::move(c));
  }
  if (text.starts_with("join(") && text.ends_with(")")) {
    std::vector<SeminormSpec> members;
    for (auto part : split_top(text.substr(5, text.size() - 6), ';')) members.push_back(parse_spec(part, group));
    return join(members);
  }
  throw Error(ErrorCode::ParseError, "unknown seminorm spec \"" + std::string(text) + "\"");
}

}  // namespace exotica
