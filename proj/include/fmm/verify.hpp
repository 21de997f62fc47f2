#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fmm/matrix.hpp"
#include "fmm/rational.hpp"
#include "fmm/scheme.hpp"

namespace fmm {

/// One violated correctness equation: the coefficient of A[i,j]*B[j',k] in
/// C[i',k'] came out as `got` instead of `expected`. The third pair prints in
/// (k',i') order, matching the trilinear third factor.
struct BrentFailure {
  int i = 0, j = 0;    // alpha index
  int jp = 0, k = 0;   // beta index
  int kp = 0, ip = 0;  // third-factor index
  int expected = 0;    // 0 or 1
  Rational got;

  std::string str() const;
};

struct BrentReport {
  bool passed = false;
  long long total_equations = 0;
  std::vector<BrentFailure> first_failures;  // at most 10, in index order
};

/// Exact check of all (u*v)*(v*w)*(w*u) correctness equations. Accumulates
/// nonzero coefficient triple products into a sparse 6-index map and compares
/// against the delta pattern, so cost tracks scheme sparsity, not the
/// equation count. Failure is reported, never thrown.
BrentReport brent_check(const BilinearScheme& scheme);

struct EvalMismatch {
  Matrix<Rational> left;
  Matrix<Rational> right;
  int row = 0, col = 0;
  Rational scheme_value;
  Rational oracle_value;
};

struct EvalReport {
  int trials = 0;  // trials actually performed; stops at the first mismatch
  bool all_equal = false;
  std::optional<EvalMismatch> mismatch_example;
};

/// Draws seeded random integer matrices (entries in [-9, 9]) and compares
/// evaluate against the cubic-time oracle exactly. Deterministic per seed.
EvalReport random_eval_check(const BilinearScheme& scheme, int trials, unsigned long long seed);

/// Entries uniform over the integers [-9, 9], derived from raw generator
/// words so results are identical across standard libraries.
Matrix<Rational> random_int_matrix(int rows, int cols, std::mt19937_64& gen);

/// Entries uniform in [-1, 1], 53-bit mantissa construction.
Matrix<double> random_real_matrix(int rows, int cols, std::mt19937_64& gen);

/// Maps exact coefficients into the evaluation ring.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static const Rational& from_rational(const Rational& q) { return q; }
};

template <>
struct RingTraits<double> {
  static double from_rational(const Rational& q) { return q.to_double(); }
};

/// Textbook triple loop, the correctness oracle.
template <class T>
Matrix<T> naive_mult(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("product inner dims disagree: " + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()));
  }
  Matrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const T& aij = a.at(i, j);
      for (int k = 0; k < b.cols(); ++k) {
        c.at(i, k) += aij * b.at(j, k);
      }
    }
  }
  return c;
}

namespace detail {

// acc += coeff * value, skipping the ring multiplication for unit coefficients.
template <class T>
void add_scaled(T& acc, const Rational& coeff, const T& value) {
  if (coeff.is_one()) {
    acc += value;
  } else if (coeff.is_minus_one()) {
    acc -= value;
  } else {
    acc += RingTraits<T>::from_rational(coeff) * value;
  }
}

}  // namespace detail

/// Runs the scheme: forms the linear combinations of operand entries, takes
/// one ring product per term, distributes into the result. When given,
/// *operand_multiplications is incremented once per term, so it ends at
/// rank(scheme).
template <class T>
Matrix<T> evaluate(const BilinearScheme& scheme, const Matrix<T>& a, const Matrix<T>& b,
                   long long* operand_multiplications = nullptr) {
  if (a.rows() != scheme.dims.u || a.cols() != scheme.dims.v) {
    throw DimensionError("left operand is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", scheme wants " +
                         std::to_string(scheme.dims.u) + "x" + std::to_string(scheme.dims.v));
  }
  if (b.rows() != scheme.dims.v || b.cols() != scheme.dims.w) {
    throw DimensionError("right operand is " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ", scheme wants " +
                         std::to_string(scheme.dims.v) + "x" + std::to_string(scheme.dims.w));
  }
  Matrix<T> c(scheme.dims.u, scheme.dims.w);
  for (const MulTerm& term : scheme.terms) {
    T left{};
    for (const auto& e : term.alpha.entries()) {
      detail::add_scaled(left, e.value, a.at(e.row, e.col));
    }
    T right{};
    for (const auto& e : term.beta.entries()) {
      detail::add_scaled(right, e.value, b.at(e.row, e.col));
    }
    T product = left * right;
    if (operand_multiplications) ++*operand_multiplications;
    for (const auto& e : term.gamma.entries()) {
      detail::add_scaled(c.at(e.row, e.col), e.value, product);
    }
  }
  return c;
}

}  // namespace fmm
