#pragma once

#include <complex>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "exotica/group.hpp"

namespace exotica {

using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                                   boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// Complex number with exact rational parts.
struct ComplexRational {
  Rational re = 0;
  Rational im = 0;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r) {}

  static ComplexRational i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend ComplexRational operator+(const ComplexRational& x, const ComplexRational& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend ComplexRational operator-(const ComplexRational& x, const ComplexRational& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend ComplexRational operator-(const ComplexRational& x) { return {-x.re, -x.im}; }
  friend ComplexRational operator*(const ComplexRational& x, const ComplexRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

/// Finitely supported function Gamma -> C, i.e. an element of C[Gamma].
///
/// Zero coefficients are never stored, so equality is structural.
class GroupRingElement {
 public:
  using Terms = std::map<GroupElement, ComplexRational>;

  explicit GroupRingElement(Group group) : group_(std::move(group)) {}

  static GroupRingElement delta(const GroupElement& s, ComplexRational c = 1);

  const Group& group() const noexcept { return group_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  ComplexRational coefficient(const GroupElement& s) const;

  /// Adds c at s (GroupMismatch if s is not in the ambient group).
  GroupRingElement& add(const GroupElement& s, const ComplexRational& c);

  GroupRingElement& operator+=(const GroupRingElement& y);
  GroupRingElement& operator-=(const GroupRingElement& y);
  friend GroupRingElement operator+(GroupRingElement x, const GroupRingElement& y) { return x += y; }
  friend GroupRingElement operator-(GroupRingElement x, const GroupRingElement& y) { return x -= y; }
  friend GroupRingElement operator*(const ComplexRational& c, const GroupRingElement& x);
  /// Convolution.
  friend GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Group group_;
  Terms terms_;
};

/// (x * y)(s) = sum_t x(t) y(t^-1 s).
GroupRingElement convolve(const GroupRingElement& x, const GroupRingElement& y);

/// x*(s) = conj(x(s^-1)).
GroupRingElement involution(const GroupRingElement& x);

/// sum_s |x(s)|.
double l1_norm(const GroupRingElement& x);

/// Sum of generators and their inverses: the "Laplacian-style" element h.
GroupRingElement generator_sum(const Group& group);

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace exotica
