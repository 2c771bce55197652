#include "exotica/group.hpp"

#include <cctype>

#include "exotica/errors.hpp"

namespace exotica {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

[[noreturn]] void mismatch(const std::string& what) { throw Error(ErrorCode::GroupMismatch, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits "A x B" at the top-level 'x' (outside parentheses); returns npos if none.
std::size_t top_level_split(std::string_view s, char sep) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (depth == 0 && s[i] == sep) return i;
  }
  return std::string_view::npos;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    // only strip if the parentheses match each other
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty integer");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(std::string(s), &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad integer \"" + std::string(s) + "\"");
  }
  if (used != s.size()) throw Error(ErrorCode::ParseError, "bad integer \"" + std::string(s) + "\"");
  return v;
}

}  // namespace

bool operator==(const ProductGroup& x, const ProductGroup& y) { return x.factors == y.factors; }

std::strong_ordering operator<=>(const ProductGroup& x, const ProductGroup& y) {
  return std::lexicographical_compare_three_way(x.factors.begin(), x.factors.end(), y.factors.begin(),
                                                y.factors.end());
}

std::strong_ordering operator<=>(const Group& x, const Group& y) {
  if (x.v_.index() != y.v_.index()) return x.v_.index() <=> y.v_.index();
  return std::visit(
      [&](const auto& a) -> std::strong_ordering {
        using T = std::decay_t<decltype(a)>;
        return a <=> std::get<T>(y.v_);
      },
      x.v_);
}

Group Group::product(Group h, Group k) { return ProductGroup{{std::move(h), std::move(k)}}; }

int Group::free_rank() const {
  if (auto* f = std::get_if<FreeGroup>(&v_)) return f->rank;
  mismatch("expected a free group, got " + to_string(*this));
}

int Group::generator_count() const {
  return std::visit(overloaded{
                        [](const FreeGroup& f) { return f.rank; },
                        [](const SL2Z&) { return 2; },
                        [](const SL2ZMod&) { return 2; },
                        [](const ProductGroup& p) {
                          return p.factors[0].generator_count() + p.factors[1].generator_count();
                        },
                    },
                    v_);
}

GroupElement Group::generator(int index) const {
  if (index < 0 || index >= generator_count()) {
    mismatch("generator index " + std::to_string(index) + " out of range for " + to_string(*this));
  }
  return std::visit(overloaded{
                        [&](const FreeGroup& f) { return GroupElement(Word::generator(f.rank, index)); },
                        [&](const SL2Z&) { return GroupElement(index == 0 ? standard_s() : standard_t()); },
                        [&](const SL2ZMod& q) {
                          return GroupElement(ModMatrix2::reduce(index == 0 ? standard_s() : standard_t(),
                                                                 q.modulus));
                        },
                        [&](const ProductGroup& p) {
                          int nh = p.factors[0].generator_count();
                          if (index < nh) return GroupElement::pair(p.factors[0].generator(index),
                                                                    p.factors[1].identity());
                          return GroupElement::pair(p.factors[0].identity(), p.factors[1].generator(index - nh));
                        },
                    },
                    v_);
}

GroupElement Group::identity() const {
  return std::visit(overloaded{
                        [](const FreeGroup& f) { return GroupElement(Word(f.rank)); },
                        [](const SL2Z&) { return GroupElement(IntMatrix2::identity()); },
                        [](const SL2ZMod& q) { return GroupElement(ModMatrix2::identity(q.modulus)); },
                        [](const ProductGroup& p) {
                          return GroupElement::pair(p.factors[0].identity(), p.factors[1].identity());
                        },
                    },
                    v_);
}

std::string to_string(const Group& g) {
  return std::visit(overloaded{
                        [](const FreeGroup& f) { return "F" + std::to_string(f.rank); },
                        [](const SL2Z&) { return std::string("SL2Z"); },
                        [](const SL2ZMod& q) { return "SL2Z/" + std::to_string(q.modulus); },
                        [](const ProductGroup& p) {
                          auto wrap = [](const Group& h) {
                            std::string s = to_string(h);
                            return std::holds_alternative<ProductGroup>(h.variant()) ? "(" + s + ")" : s;
                          };
                          return wrap(p.factors[0]) + "x" + wrap(p.factors[1]);
                        },
                    },
                    g.variant());
}

Group parse_group(std::string_view text) {
  std::string_view s = strip_parens(text);
  if (std::size_t x = top_level_split(s, 'x'); x != std::string_view::npos) {
    return Group::product(parse_group(s.substr(0, x)), parse_group(s.substr(x + 1)));
  }
  if (s == "SL2Z") return Group::sl2z();
  if (s.starts_with("SL2Z/")) {
    std::int64_t n = parse_int(s.substr(5));
    if (n < 2) throw Error(ErrorCode::ParseError, "quotient level must be >= 2");
    return Group::sl2z_mod(n);
  }
  if (s.starts_with("F")) {
    std::int64_t d = parse_int(s.substr(1));
    if (d < 1 || d > 26) throw Error(ErrorCode::ParseError, "free rank must lie in [1, 26]");
    return Group::free(static_cast<int>(d));
  }
  throw Error(ErrorCode::ParseError, "unknown group \"" + std::string(text) + "\"");
}

bool operator==(const ProductElement& x, const ProductElement& y) { return x.parts == y.parts; }

std::strong_ordering operator<=>(const ProductElement& x, const ProductElement& y) {
  return std::lexicographical_compare_three_way(x.parts.begin(), x.parts.end(), y.parts.begin(), y.parts.end());
}

GroupElement::GroupElement(IntMatrix2 m) : v_(std::move(m)) {
  if (std::get<IntMatrix2>(v_).det() != 1) mismatch("integer matrix with determinant != 1");
}

GroupElement::GroupElement(ModMatrix2 m) : v_(m) {
  if (m.modulus < 2) mismatch("quotient level must be >= 2");
  for (auto x : m.e) {
    if (x < 0 || x >= m.modulus) mismatch("residues must lie in [0, N)");
  }
  if (m.det() != 1 % m.modulus) mismatch("residue matrix with determinant != 1 mod N");
}

GroupElement::GroupElement(ProductElement p) : v_(std::move(p)) {
  if (std::get<ProductElement>(v_).parts.size() != 2) mismatch("product elements have exactly two parts");
}

GroupElement GroupElement::pair(GroupElement h, GroupElement k) {
  return GroupElement(ProductElement{{std::move(h), std::move(k)}});
}

const Word& GroupElement::word() const {
  if (auto* w = std::get_if<Word>(&v_)) return *w;
  mismatch("expected a free-group word, got " + to_string(*this));
}

const IntMatrix2& GroupElement::matrix() const {
  if (auto* m = std::get_if<IntMatrix2>(&v_)) return *m;
  mismatch("expected an SL_2(Z) element, got " + to_string(*this));
}

const ModMatrix2& GroupElement::residues() const {
  if (auto* m = std::get_if<ModMatrix2>(&v_)) return *m;
  mismatch("expected an SL_2(Z/NZ) element, got " + to_string(*this));
}

const GroupElement& GroupElement::first() const {
  if (auto* p = std::get_if<ProductElement>(&v_)) return p->parts[0];
  mismatch("expected a product element, got " + to_string(*this));
}

const GroupElement& GroupElement::second() const {
  if (auto* p = std::get_if<ProductElement>(&v_)) return p->parts[1];
  mismatch("expected a product element, got " + to_string(*this));
}

Group GroupElement::group() const {
  return std::visit(overloaded{
                        [](const Word& w) { return Group::free(w.rank()); },
                        [](const IntMatrix2&) { return Group::sl2z(); },
                        [](const ModMatrix2& m) { return Group::sl2z_mod(m.modulus); },
                        [](const ProductElement& p) {
                          return Group::product(p.parts[0].group(), p.parts[1].group());
                        },
                    },
                    v_);
}

bool GroupElement::is_identity() const {
  return std::visit(overloaded{
                        [](const Word& w) { return w.empty(); },
                        [](const IntMatrix2& m) { return m == IntMatrix2::identity(); },
                        [](const ModMatrix2& m) { return m == ModMatrix2::identity(m.modulus); },
                        [](const ProductElement& p) { return p.parts[0].is_identity() && p.parts[1].is_identity(); },
                    },
                    v_);
}

GroupElement GroupElement::inverse() const {
  return std::visit(overloaded{
                        [](const Word& w) { return GroupElement(w.inverse()); },
                        [](const IntMatrix2& m) { return GroupElement(m.inverse()); },
                        [](const ModMatrix2& m) { return GroupElement(m.inverse()); },
                        [](const ProductElement& p) {
                          return GroupElement::pair(p.parts[0].inverse(), p.parts[1].inverse());
                        },
                    },
                    v_);
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  if (x.v_.index() != y.v_.index()) {
    mismatch("multiplying " + to_string(x.group()) + " by " + to_string(y.group()));
  }
  return std::visit(
      [&](const auto& a) -> GroupElement {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(y.v_);
        if constexpr (std::is_same_v<T, ProductElement>) {
          return GroupElement::pair(a.parts[0] * b.parts[0], a.parts[1] * b.parts[1]);
        } else if constexpr (std::is_same_v<T, IntMatrix2>) {
          return GroupElement(a * b);
        } else {
          return GroupElement(a * b);
        }
      },
      x.v_);
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  if (x.v_.index() != y.v_.index()) return x.v_.index() <=> y.v_.index();
  return std::visit(
      [&](const auto& a) -> std::strong_ordering {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(y.v_);
        if constexpr (std::is_same_v<T, ModMatrix2>) {
          if (auto c = a.modulus <=> b.modulus; c != 0) return c;
          return a.e <=> b.e;
        } else {
          return a <=> b;
        }
      },
      x.v_);
}

GroupElement reduce_mod(const GroupElement& g, std::int64_t n) {
  if (auto* m = std::get_if<IntMatrix2>(&g.variant())) return GroupElement(ModMatrix2::reduce(*m, n));
  if (auto* q = std::get_if<ModMatrix2>(&g.variant()); q && q->modulus == n) return g;
  mismatch("cannot reduce " + to_string(g) + " modulo " + std::to_string(n));
}

std::string to_string(const GroupElement& g) {
  return std::visit(overloaded{
                        [](const Word& w) { return to_string(w); },
                        [](const IntMatrix2& m) { return to_string(m); },
                        [](const ModMatrix2& m) { return to_string(m); },
                        [](const ProductElement& p) {
                          return "(" + to_string(p.parts[0]) + "," + to_string(p.parts[1]) + ")";
                        },
                    },
                    g.variant());
}

GroupElement parse_element(std::string_view text, const Group& group) {
  std::string_view s = trim(text);
  return std::visit(
      overloaded{
          [&](const FreeGroup& f) { return GroupElement(parse_word(s, f.rank)); },
          [&](const auto& g) -> GroupElement {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ProductGroup>) {
              if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
                throw Error(ErrorCode::ParseError, "product element must look like (x,y)");
              }
              std::string_view inner = s.substr(1, s.size() - 2);
              std::size_t comma = top_level_split(inner, ',');
              if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing ',' in pair");
              return GroupElement::pair(parse_element(inner.substr(0, comma), g.factors[0]),
                                        parse_element(inner.substr(comma + 1), g.factors[1]));
            } else {
              if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
                throw Error(ErrorCode::ParseError, "matrix must look like [a,b,c,d]");
              }
              std::string_view inner = s.substr(1, s.size() - 2);
              std::vector<std::string_view> parts;
              for (std::size_t pos = 0;;) {
                std::size_t c = inner.find(',', pos);
                parts.push_back(inner.substr(pos, c == std::string_view::npos ? c : c - pos));
                if (c == std::string_view::npos) break;
                pos = c + 1;
              }
              if (parts.size() != 4) throw Error(ErrorCode::ParseError, "matrix needs four entries");
              if constexpr (std::is_same_v<T, SL2Z>) {
                IntMatrix2 m;
                BigInt* dst[4] = {&m.a, &m.b, &m.c, &m.d};
                for (int i = 0; i < 4; ++i) {
                  try {
                    *dst[i] = BigInt(std::string(trim(parts[i])));
                  } catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "bad matrix entry \"" + std::string(parts[i]) + "\"");
                  }
                }
                return GroupElement(m);
              } else {
                ModMatrix2 m{g.modulus, {}};
                for (int i = 0; i < 4; ++i) {
                  std::int64_t v = parse_int(parts[i]) % g.modulus;
                  m.e[i] = v < 0 ? v + g.modulus : v;
                }
                return GroupElement(m);
              }
            }
          },
      },
      group.variant());
}

}  // namespace exotica
