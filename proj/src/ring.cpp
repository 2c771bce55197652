#include "exotica/ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "exotica/errors.hpp"

namespace exotica {

GroupRingElement GroupRingElement::delta(const GroupElement& s, ComplexRational c) {
  GroupRingElement x(s.group());
  x.add(s, c);
  return x;
}

ComplexRational GroupRingElement::coefficient(const GroupElement& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

GroupRingElement& GroupRingElement::add(const GroupElement& s, const ComplexRational& c) {
  if (s.group() != group_) {
    throw Error(ErrorCode::GroupMismatch, to_string(s) + " is not an element of " + to_string(group_));
  }
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(s, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& y) {
  if (y.group_ != group_) throw Error(ErrorCode::GroupMismatch, "adding elements of different group rings");
  for (const auto& [s, c] : y.terms_) add(s, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& y) {
  if (y.group_ != group_) throw Error(ErrorCode::GroupMismatch, "subtracting elements of different group rings");
  for (const auto& [s, c] : y.terms_) add(s, -c);
  return *this;
}

GroupRingElement operator*(const ComplexRational& c, const GroupRingElement& x) {
  GroupRingElement out(x.group_);
  if (c.is_zero()) return out;
  for (const auto& [s, v] : x.terms_) out.terms_.emplace(s, c * v);
  return out;
}

GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.group_ != y.group_) {
    throw Error(ErrorCode::GroupMismatch,
                "convolving elements of C[" + to_string(x.group_) + "] and C[" + to_string(y.group_) + "]");
  }
  GroupRingElement out(x.group_);
  for (const auto& [t, a] : x.terms_) {
    for (const auto& [u, b] : y.terms_) out.add(t * u, a * b);
  }
  return out;
}

GroupRingElement convolve(const GroupRingElement& x, const GroupRingElement& y) { return x * y; }

GroupRingElement involution(const GroupRingElement& x) {
  GroupRingElement out(x.group());
  for (const auto& [s, c] : x.terms()) out.add(s.inverse(), c.conj());
  return out;
}

double l1_norm(const GroupRingElement& x) {
  double total = 0.0;
  for (const auto& [s, c] : x.terms()) total += std::abs(c.to_complex());
  return total;
}

GroupRingElement generator_sum(const Group& group) {
  GroupRingElement h(group);
  for (int i = 0; i < group.generator_count(); ++i) {
    GroupElement g = group.generator(i);
    h.add(g, 1);
    h.add(g.inverse(), 1);
  }
  return h;
}

Rational parse_rational(const std::string& text) {
  try {
    // accept plain decimals too ("0.25" -> 1/4)
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      const bool negative = !digits.empty() && (digits[0] == '-' || digits[0] == '+');
      const std::string sign = negative && digits[0] == '-' ? "-" : "";
      if (negative) digits.erase(0, 1);
      // a leading 0 would make boost read the digits as octal
      digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
      if (digits.empty()) digits = "0";
      if (digits.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
      BigInt den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(text.size() - dot - 1));
      return Rational(BigInt(sign + digits), den);
    }
    // same octal/hex trap for integers and fractions
    std::string plain = text;
    auto strip = [](std::string part) {
      std::string sign;
      if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
        if (part[0] == '-') sign = "-";
        part.erase(0, 1);
      }
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(part);
      part.erase(0, std::min(part.find_first_not_of('0'), part.size() - 1));
      return sign + part;
    };
    if (auto slash = plain.find('/'); slash != std::string::npos) {
      BigInt den(strip(plain.substr(slash + 1)));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(BigInt(strip(plain.substr(0, slash))), den);
    }
    return Rational(BigInt(strip(plain)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational \"" + text + "\"");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace exotica
