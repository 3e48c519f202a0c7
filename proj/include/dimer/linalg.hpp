#pragma once

// Exact Gaussian elimination over a field scalar (Rational in practice).

#include <optional>
#include <vector>

#include "dimer/rational.hpp"

namespace dimer {

// Reduced row echelon form in place; returns pivot columns.
template <typename Scalar>
std::vector<int> rref_inplace(Mat<Scalar>& a) {
  std::vector<int> piv;
  const int rows = int(a.rows()), cols = int(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Scalar inv = Scalar(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Scalar f = a(i, c);
      for (int j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <typename Scalar>
int rank(Mat<Scalar> a) {
  return int(rref_inplace(a).size());
}

// Columns form a basis of {x : a x = 0}.
template <typename Scalar>
Mat<Scalar> nullspace(const Mat<Scalar>& a) {
  Mat<Scalar> r = a;
  auto piv = rref_inplace(r);
  const int n = int(a.cols());
  std::vector<char> is_piv(n, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<int> fr;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) fr.push_back(c);
  Mat<Scalar> k = Mat<Scalar>::Zero(n, Eigen::Index(fr.size()));
  for (size_t j = 0; j < fr.size(); ++j) {
    k(fr[j], j) = 1;
    for (size_t i = 0; i < piv.size(); ++i) k(piv[i], j) = -r(i, fr[j]);
  }
  return k;
}

// Rows form a basis of {y : y a = 0}.
template <typename Scalar>
Mat<Scalar> left_nullspace(const Mat<Scalar>& a) {
  Mat<Scalar> t = a.transpose();
  return nullspace(t).transpose();
}

// Linearly independent subset of the columns of a, spanning its column space.
template <typename Scalar>
Mat<Scalar> column_basis(const Mat<Scalar>& a) {
  Mat<Scalar> r = a;
  auto piv = rref_inplace(r);
  Mat<Scalar> out(a.rows(), Eigen::Index(piv.size()));
  for (size_t j = 0; j < piv.size(); ++j) out.col(j) = a.col(piv[j]);
  return out;
}

// Some x with a x = b, if one exists.
template <typename Scalar>
std::optional<Mat<Scalar>> solve(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  const int n = int(a.cols());
  Mat<Scalar> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  auto piv = rref_inplace(aug);
  for (int c : piv)
    if (c >= n) return std::nullopt;
  Mat<Scalar> x = Mat<Scalar>::Zero(n, b.cols());
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(piv[i], j) = aug(i, n + j);
  return x;
}

template <typename Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const int n = int(a.rows());
  if (n == 0) return Mat<Scalar>(0, 0);
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  auto piv = rref_inplace(aug);
  if (int(piv.size()) < n || piv[n - 1] >= n) return std::nullopt;
  return Mat<Scalar>(aug.rightCols(n));
}

// Standard basis vectors completing the columns of sub to a basis of the
// ambient space. Columns of sub are assumed independent.
template <typename Scalar>
Mat<Scalar> complement_basis(const Mat<Scalar>& sub, int ambient) {
  Mat<Scalar> aug(ambient, sub.cols() + ambient);
  aug << sub, Mat<Scalar>::Identity(ambient, ambient);
  auto piv = rref_inplace(aug);
  std::vector<int> pick;
  for (int c : piv)
    if (c >= sub.cols()) pick.push_back(c - int(sub.cols()));
  Mat<Scalar> out = Mat<Scalar>::Zero(ambient, Eigen::Index(pick.size()));
  for (size_t j = 0; j < pick.size(); ++j) out(pick[j], j) = 1;
  return out;
}

template <typename Scalar>
bool in_column_span(const Mat<Scalar>& a, const Mat<Scalar>& v) {
  return solve(a, v).has_value();
}

template <typename Scalar>
bool is_zero(const Mat<Scalar>& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace dimer
