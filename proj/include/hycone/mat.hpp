#pragma once

#include <variant>

#include "hycone/base.hpp"

namespace hycone {

// Dense rational matrix, row-major. All operations are exact.
struct Mat {
  int rows = 0;
  int cols = 0;
  QVec a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(int n);
  static Mat from_rows(const std::vector<QVec>& rows);
  static Mat from_int_rows(const std::vector<IVec>& rows);

  QVec row(int r) const;
  Mat transposed() const;
  bool is_symmetric() const;
  QVec apply(const QVec& x) const;  // m * x
};

Mat mat_mul(const Mat& a, const Mat& b);

// Exact determinant by pivoted Gaussian elimination. Pivot rule: among the
// nonzero candidates in the column, largest |numerator| first, ties broken by
// lowest row index.
Rat det(const Mat& m);

int rank(const Mat& m);

// Basis of the right kernel {x : m x = 0}; deterministic (one vector per free
// column of the RREF), each primitive integer with first nonzero entry > 0.
std::vector<QVec> kernel(const Mat& m);

struct SolveUnique { QVec x; };
struct SolveNonUnique { QVec x; std::vector<QVec> kernel; };
// certificate: row combination lambda with lambda^T m = 0, lambda . y != 0.
struct SolveNoSolution { QVec certificate; };
using SolveResult = std::variant<SolveUnique, SolveNonUnique, SolveNoSolution>;

SolveResult solve(const Mat& m, const QVec& y);

struct LdltPosDef {
  Mat l;        // unit lower triangular
  QVec d;       // all > 0
};
struct LdltSemidefinite {
  Mat l;
  QVec d;                    // >= 0, at least one zero
  std::vector<QVec> kernel;  // basis of ker(m)
};
struct LdltIndefinite {
  QVec witness;  // x with x^T m x = value < 0
  Rat value;
};
using LdltResult = std::variant<LdltPosDef, LdltSemidefinite, LdltIndefinite>;

// Symmetric m = L D L^T without pivoting. A zero pivot whose Schur row is not
// identically zero forces an indefinite witness from the corresponding 2x2
// block; a negative pivot gives one directly.
LdltResult ldlt(const Mat& m);

bool is_positive_definite(const Mat& m);

// Integer column reduction: returns unimodular u with a_int * u = [h | 0],
// h of full column rank. The trailing columns of u are a basis of the
// saturated integer kernel {x in Z^m : a_int x = 0}; together all columns of
// u form a basis of Z^m adapted to the kernel.
struct ColumnHnf {
  std::vector<IVec> u_cols;  // m columns, each length m
  int rank = 0;              // kernel basis = columns rank..m-1
};
ColumnHnf integer_column_reduce(const std::vector<IVec>& rows, int m);

}  // namespace hycone
