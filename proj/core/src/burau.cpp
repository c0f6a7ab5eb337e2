#include "qcol/burau.hpp"

#include <cstdlib>
#include <string>

#include "qcol/errors.hpp"
#include "qcol/linalg.hpp"

namespace qcol {

namespace {

void check_index(int i, int n) {
  if (i == 0 || std::abs(i) > n - 1)
    throw IndexOutOfRange("generator " + std::to_string(i) + " not in B_" +
                          std::to_string(n));
}

const Laurent kOne(1);

}  // namespace

Matrix burau_generator(int i, int n) {
  check_index(i, n);
  Matrix m = Matrix::identity(n);
  int k = std::abs(i) - 1;  // 0-based block position
  if (i > 0) {
    m.at(k, k) = Laurent();
    m.at(k, k + 1) = kOne;
    m.at(k + 1, k) = Laurent::t(1);
    m.at(k + 1, k + 1) = Laurent(1) - Laurent::t(1);
  } else {
    m.at(k, k) = Laurent(1) - Laurent::t(-1);
    m.at(k, k + 1) = Laurent::t(-1);
    m.at(k + 1, k) = kOne;
    m.at(k + 1, k + 1) = Laurent();
  }
  return m;
}

Matrix burau_unreduced(const BraidWord& w) {
  Matrix m = Matrix::identity(w.strands);
  for (int l : w.letters) m = m * burau_generator(l, w.strands);
  return m;
}

Matrix burau_reduced_generator(int i, int n) {
  check_index(i, n);
  const int dim = n - 1;
  Matrix m = Matrix::identity(dim);
  int k = std::abs(i);
  if (i > 0) {
    if (k == 1) {
      m.at(0, 0) = -Laurent::t(1);
      if (dim > 1) m.at(1, 0) = kOne;
    } else if (k == n - 1) {
      m.at(dim - 1, dim - 1) = -Laurent::t(1);
      m.at(dim - 2, dim - 1) = Laurent::t(1);
    } else {
      m.at(k - 2, k - 1) = Laurent::t(1);
      m.at(k - 1, k - 1) = -Laurent::t(1);
      m.at(k, k - 1) = kOne;
    }
  } else {
    if (k == 1) {
      m.at(0, 0) = -Laurent::t(-1);
      if (dim > 1) m.at(1, 0) = Laurent::t(-1);
    } else if (k == n - 1) {
      m.at(dim - 1, dim - 1) = -Laurent::t(-1);
      m.at(dim - 2, dim - 1) = kOne;
    } else {
      m.at(k - 2, k - 1) = kOne;
      m.at(k - 1, k - 1) = -Laurent::t(-1);
      m.at(k, k - 1) = Laurent::t(-1);
    }
  }
  return m;
}

Matrix burau_reduced(const BraidWord& w) {
  Matrix m = Matrix::identity(w.strands - 1);
  for (int l : w.letters) m = m * burau_reduced_generator(l, w.strands);
  return m;
}

Laurent reduced_alexander(const BraidWord& w) {
  const int n = w.strands;
  Matrix d = burau_reduced(w) - Matrix::identity(n - 1);
  Laurent det = det_bareiss(d);
  if (det.is_zero()) return Laurent();
  std::vector<Laurent::Term> ones;
  for (int i = 0; i < n; ++i) ones.emplace_back(i, 1);
  Laurent s = Laurent::from_terms(ones);
  auto q = Laurent::divide_exact(det, s);
  if (!q)
    throw InternalError("1+t+...+t^{n-1} does not divide det(reduced(w)-id)");
  return q->unit_normalized();
}

}  // namespace qcol
