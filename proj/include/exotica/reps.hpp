#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "exotica/errors.hpp"
#include "exotica/group.hpp"
#include "exotica/quotient.hpp"
#include "exotica/ring.hpp"
#include "exotica/subgroups.hpp"

namespace exotica {

/// Word in the designated generators (letter i+1 = generator i) that evaluates
/// to s: letters for F_d, the S/T normal form for SL_2(Z), the BFS-tree word
/// for SL_2(Z/NZ). GroupMismatch for products.
std::function<Word(const GroupElement&)> generator_word_fn(const Group& group);

/// Unitary representation of finite dimension, given on generators and on
/// arbitrary elements through an evaluator.
template <class Scalar>
class FiniteDimRep {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Evaluator = std::function<Matrix(const GroupElement&)>;

  FiniteDimRep(Group group, std::vector<Matrix> generators, Evaluator eval)
      : group_(std::move(group)), generators_(std::move(generators)), eval_(std::move(eval)) {
    if (static_cast<int>(generators_.size()) != group_.generator_count()) {
      throw Error(ErrorCode::InvalidArgument, "one image per generator of " + to_string(group_));
    }
    dim_ = generators_.empty() ? eval_(group_.identity()).rows() : generators_.front().rows();
  }

  const Group& group() const noexcept { return group_; }
  Eigen::Index dim() const noexcept { return dim_; }
  const std::vector<Matrix>& generator_images() const noexcept { return generators_; }

  Matrix operator()(const GroupElement& s) const {
    if (s.group() != group_) {
      throw Error(ErrorCode::GroupMismatch, to_string(s) + " is not in " + to_string(group_));
    }
    return eval_(s);
  }

 private:
  Group group_;
  std::vector<Matrix> generators_;
  Evaluator eval_;
  Eigen::Index dim_ = 0;
};

using RealRep = FiniteDimRep<double>;
using ComplexRep = FiniteDimRep<std::complex<double>>;

/// Representation determined by generator images; other elements are
/// evaluated through generator_word_fn.
template <class Scalar>
FiniteDimRep<Scalar> from_generator_images(const Group& group,
                                           std::vector<typename FiniteDimRep<Scalar>::Matrix> images) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  if (images.empty()) throw Error(ErrorCode::InvalidArgument, "no generator images");
  const Eigen::Index n = images.front().rows();
  std::vector<Matrix> inverses;
  for (const auto& u : images) {
    if (u.rows() != n || u.cols() != n) throw Error(ErrorCode::InvalidArgument, "generator images must be square of equal size");
    inverses.push_back(u.adjoint());
  }
  auto words = generator_word_fn(group);
  auto eval = [images, inverses, words, n](const GroupElement& s) {
    Matrix out = Matrix::Identity(n, n);
    const Word w = words(s);
    for (Letter l : w.letters()) {
      const auto i = static_cast<std::size_t>((l < 0 ? -l : l) - 1);
      out = out * (l > 0 ? images[i] : inverses[i]);
    }
    return out;
  };
  return FiniteDimRep<Scalar>(group, std::move(images), std::move(eval));
}

template <class Scalar>
FiniteDimRep<Scalar> trivial_rep(const Group& group) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  std::vector<Matrix> gens(static_cast<std::size_t>(group.generator_count()), Matrix::Identity(1, 1));
  return FiniteDimRep<Scalar>(group, std::move(gens), [](const GroupElement&) { return Matrix::Identity(1, 1); });
}

/// Same representation over another scalar type (e.g. real to complex).
template <class To, class From>
FiniteDimRep<To> cast_rep(const FiniteDimRep<From>& rep) {
  using Matrix = typename FiniteDimRep<To>::Matrix;
  std::vector<Matrix> gens;
  for (const auto& u : rep.generator_images()) gens.push_back(u.template cast<To>());
  return FiniteDimRep<To>(rep.group(), std::move(gens),
                          [rep](const GroupElement& s) -> Matrix { return rep(s).template cast<To>(); });
}

/// Left regular representation of SL_2(Z/NZ) on its point set, acting either
/// as a representation of the quotient itself (group SL2Z/N) or of SL_2(Z)
/// through reduction mod N (group SL2Z).
RealRep quotient_regular_rep(std::int64_t level, const Group& acting, std::size_t cap = kDefaultEnumerationCap);

/// max over generators of ||U*U - I|| (Frobenius).
template <class Scalar>
double unitarity_defect(const FiniteDimRep<Scalar>& rep) {
  double worst = 0.0;
  for (const auto& u : rep.generator_images()) {
    auto id = FiniteDimRep<Scalar>::Matrix::Identity(u.rows(), u.cols());
    worst = std::max(worst, static_cast<double>((u.adjoint() * u - id).norm()));
  }
  return worst;
}

/// Largest defect of the defining relations of SL_2(Z) (S^4 = 1, (ST)^3 = S^2)
/// and additionally T^N = 1 for SL_2(Z/NZ); 0 for free groups.
template <class Scalar>
double relation_defect(const FiniteDimRep<Scalar>& rep) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  const auto& g = rep.group();
  if (g.is_free() || std::holds_alternative<ProductGroup>(g.variant())) return 0.0;
  const Matrix& s = rep.generator_images()[0];
  const Matrix& t = rep.generator_images()[1];
  const Matrix id = Matrix::Identity(s.rows(), s.cols());
  const Matrix s2 = s * s;
  const Matrix st = s * t;
  double d = std::max(static_cast<double>((s2 * s2 - id).norm()), static_cast<double>((st * st * st - s2).norm()));
  if (const auto* q = std::get_if<SL2ZMod>(&g.variant())) {
    Matrix tn = id;
    for (std::int64_t i = 0; i < q->modulus; ++i) tn = tn * t;
    d = std::max(d, static_cast<double>((tn - id).norm()));
  }
  return d;
}

/// Throws InvalidArgument if either defect exceeds tol.
template <class Scalar>
void validate_rep(const FiniteDimRep<Scalar>& rep, double tol = 1e-10) {
  if (unitarity_defect(rep) > tol) throw Error(ErrorCode::InvalidArgument, "generator image is not unitary");
  if (relation_defect(rep) > tol) throw Error(ErrorCode::InvalidArgument, "defining relations fail");
}

/// pi(x) = sum_s x(s) pi(s) as a complex matrix.
template <class Scalar>
Eigen::MatrixXcd rep_image(const FiniteDimRep<Scalar>& rep, const GroupRingElement& x) {
  if (x.group() != rep.group()) {
    throw Error(ErrorCode::GroupMismatch, "element of C[" + to_string(x.group()) + "] against a representation of " +
                                              to_string(rep.group()));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (const auto& [s, c] : x.terms()) out += c.to_complex() * rep(s).template cast<std::complex<double>>();
  return out;
}

/// ||pi(x)||, the largest singular value.
template <class Scalar>
double rep_norm(const FiniteDimRep<Scalar>& rep, const GroupRingElement& x) {
  if (x.is_zero()) return 0.0;
  Eigen::MatrixXcd m = rep_image(rep, x);
  Eigen::MatrixXcd mm = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mm, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

enum class CombineKind { Tensor, DirectSum };

template <class Scalar>
FiniteDimRep<Scalar> combine_reps(CombineKind kind, const FiniteDimRep<Scalar>& pi, const FiniteDimRep<Scalar>& rho) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  if (pi.group() != rho.group()) throw Error(ErrorCode::GroupMismatch, "combining representations of different groups");
  auto combine = [kind](const Matrix& a, const Matrix& b) -> Matrix {
    if (kind == CombineKind::Tensor) return Eigen::kroneckerProduct(a, b).eval();
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
  };
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < pi.generator_images().size(); ++i) {
    gens.push_back(combine(pi.generator_images()[i], rho.generator_images()[i]));
  }
  return FiniteDimRep<Scalar>(pi.group(), std::move(gens),
                              [pi, rho, combine](const GroupElement& s) { return combine(pi(s), rho(s)); });
}

template <class Scalar>
struct SpectralGapReport {
  std::vector<GroupElement> generators;
  Eigen::Index dim = 0;
  Eigen::Index invariant_dim = 0;
  double gap = 0.0;
  double epsilon = 0.0;  // sqrt(gap / |S|)
  typename FiniteDimRep<Scalar>::Vector witness;
  double witness_displacement = 0.0;  // max_s ||pi(s) x - x|| for the witness
};

/// Smallest eigenvalue of Q = sum_s (I - pi(s))*(I - pi(s)) on the orthogonal
/// complement of its kernel; eigenvalues below 1e-8 ||Q|| count as kernel.
/// The witness is a unit eigenvector for the gap, obtained by shifted inverse
/// iteration. Throws NoComplement when Q vanishes numerically.
template <class Scalar>
SpectralGapReport<Scalar> spectral_gap(const FiniteDimRep<Scalar>& rep, const std::vector<GroupElement>& gens) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  using Vector = typename FiniteDimRep<Scalar>::Vector;
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generating set");
  const Eigen::Index n = rep.dim();
  std::vector<Matrix> images;
  Matrix q = Matrix::Zero(n, n);
  for (const auto& s : gens) {
    images.push_back(rep(s));
    // (I - U)*(I - U) = 2I - U - U* for unitary U
    q -= images.back() + images.back().adjoint();
    q.diagonal().array() += Scalar(2);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(q, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double qnorm = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
  const double threshold = 1e-8 * qnorm;
  Eigen::Index kernel = 0;
  while (kernel < n && ev(kernel) <= threshold) ++kernel;
  if (kernel == n) throw Error(ErrorCode::NoComplement, "every vector is invariant");

  SpectralGapReport<Scalar> rep_out;
  rep_out.generators = gens;
  rep_out.dim = n;
  rep_out.invariant_dim = kernel;
  rep_out.gap = ev(kernel);
  rep_out.epsilon = std::sqrt(rep_out.gap / static_cast<double>(gens.size()));

  const double shift = rep_out.gap * (1.0 - 1e-6);
  Matrix shifted = q;
  shifted.diagonal().array() -= Scalar(shift);
  Eigen::PartialPivLU<Matrix> lu(shifted);
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Scalar(std::sin(1.0 + static_cast<double>(i)));
  x.normalize();
  double rayleigh = 0.0;
  for (int it = 0; it < 100; ++it) {
    x = lu.solve(x);
    x.normalize();
    double next = std::real(x.dot(q * x));
    if (it > 2 && std::abs(next - rayleigh) <= 1e-14 * qnorm) {
      rayleigh = next;
      break;
    }
    rayleigh = next;
  }
  rep_out.witness = x;
  for (const auto& u : images) {
    rep_out.witness_displacement = std::max(rep_out.witness_displacement, static_cast<double>((u * x - x).norm()));
  }
  return rep_out;
}

/// Induction from H of finite index: block (j, i) of Ind(sigma)(s) is
/// sigma(r_j^-1 s r_i) where s r_i H = r_j H. sigma must be a representation
/// of intrinsic_group(H). Throws InfiniteIndex for an infinite table.
template <class Scalar>
FiniteDimRep<Scalar> induce_finite(const CosetTable& table, const FiniteDimRep<Scalar>& sigma) {
  using Matrix = typename FiniteDimRep<Scalar>::Matrix;
  if (!table.index) throw Error(ErrorCode::InfiniteIndex, to_string(table.subgroup) + " has infinite index");
  if (sigma.group() != intrinsic_group(table.subgroup)) {
    throw Error(ErrorCode::GroupMismatch, "inducing data must be a representation of " +
                                              to_string(intrinsic_group(table.subgroup)));
  }
  auto shared = std::make_shared<const CosetTable>(table);
  const Eigen::Index m = sigma.dim();
  const auto blocks = static_cast<Eigen::Index>(*table.index);
  auto eval = [shared, sigma, m, blocks](const GroupElement& s) {
    Matrix out = Matrix::Zero(blocks * m, blocks * m);
    for (Eigen::Index i = 0; i < blocks; ++i) {
      const auto& ri = shared->section[static_cast<std::size_t>(i)];
      const GroupElement sri = s * ri;
      const int j = shared->find(sri);
      const auto h = to_subgroup(shared->subgroup, shared->section[static_cast<std::size_t>(j)].inverse() * sri);
      out.block(j * m, i * m, m, m) = sigma(*h);
    }
    return out;
  };
  std::vector<Matrix> gens;
  for (int g = 0; g < table.ambient.generator_count(); ++g) gens.push_back(eval(table.ambient.generator(g)));
  return FiniteDimRep<Scalar>(table.ambient, std::move(gens), std::move(eval));
}

}  // namespace exotica
