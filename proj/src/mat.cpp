#include "hycone/mat.hpp"

#include <algorithm>

namespace hycone {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return Mat(0, 0);
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw hy_error("ragged row list");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_int_rows(const std::vector<IVec>& rows) {
  std::vector<QVec> q(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) q[i] = to_qvec(rows[i]);
  return from_rows(q);
}

QVec Mat::row(int r) const {
  return QVec(a.begin() + static_cast<size_t>(r) * cols,
              a.begin() + static_cast<size_t>(r + 1) * cols);
}

Mat Mat::transposed() const {
  Mat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Mat::is_symmetric() const {
  if (rows != cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int c = r + 1; c < cols; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

QVec Mat::apply(const QVec& x) const {
  if (static_cast<int>(x.size()) != cols) throw hy_error("dimension mismatch");
  QVec y(rows);
  for (int r = 0; r < rows; ++r) {
    Rat s = 0;
    for (int c = 0; c < cols; ++c) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw hy_error("dimension mismatch");
  Mat m(a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < b.cols; ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

// Pivot choice shared by det / rank / solve: scan rows >= top in column c,
// pick nonzero with largest |numerator|, lowest index on ties.
static int pick_pivot(const Mat& m, int top, int c) {
  int best = -1;
  Int best_num = 0;
  for (int r = top; r < m.rows; ++r) {
    const Rat& v = m.at(r, c);
    if (v == 0) continue;
    Int an = boost::multiprecision::abs(rat_num(v));
    if (best < 0 || an > best_num) {
      best = r;
      best_num = an;
    }
  }
  return best;
}

Rat det(const Mat& m0) {
  if (m0.rows != m0.cols) throw hy_error("det: non-square matrix");
  Mat m = m0;
  int n = m.rows;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = pick_pivot(m, c, c);
    if (p < 0) return 0;
    if (p != c) {
      for (int k = 0; k < n; ++k) std::swap(m.at(p, k), m.at(c, k));
      d = -d;
    }
    d *= m.at(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m.at(r, c) == 0) continue;
      Rat f = m.at(r, c) / m.at(c, c);
      for (int k = c; k < n; ++k) m.at(r, k) -= f * m.at(c, k);
    }
  }
  return d;
}

// Reduced row echelon form in place; returns pivot columns. If transform is
// non-null it accumulates the row operations (starts as identity).
static std::vector<int> rref(Mat& m, Mat* transform) {
  std::vector<int> pivots;
  int top = 0;
  for (int c = 0; c < m.cols && top < m.rows; ++c) {
    int p = pick_pivot(m, top, c);
    if (p < 0) continue;
    if (p != top) {
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(p, k), m.at(top, k));
      if (transform)
        for (int k = 0; k < transform->cols; ++k)
          std::swap(transform->at(p, k), transform->at(top, k));
    }
    Rat inv = 1 / m.at(top, c);
    for (int k = 0; k < m.cols; ++k) m.at(top, k) *= inv;
    if (transform)
      for (int k = 0; k < transform->cols; ++k) transform->at(top, k) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == top || m.at(r, c) == 0) continue;
      Rat f = m.at(r, c);
      for (int k = 0; k < m.cols; ++k) m.at(r, k) -= f * m.at(top, k);
      if (transform)
        for (int k = 0; k < transform->cols; ++k)
          transform->at(r, k) -= f * transform->at(top, k);
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

int rank(const Mat& m0) {
  Mat m = m0;
  return static_cast<int>(rref(m, nullptr).size());
}

static std::vector<QVec> kernel_from_rref(const Mat& m, const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    QVec v(m.cols, Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), c);
    IVec iv = primitive_signed(integral_multiple(v));
    basis.push_back(to_qvec(iv));
  }
  return basis;
}

std::vector<QVec> kernel(const Mat& m0) {
  Mat m = m0;
  auto pivots = rref(m, nullptr);
  return kernel_from_rref(m, pivots);
}

SolveResult solve(const Mat& m0, const QVec& y) {
  if (static_cast<int>(y.size()) != m0.rows) throw hy_error("solve: dimension mismatch");
  Mat m = m0;
  Mat t = Mat::identity(m.rows);
  auto pivots = rref(m, &t);
  QVec ty = t.apply(y);
  // Inconsistent iff a zero row of the RREF has nonzero transformed rhs.
  for (int r = static_cast<int>(pivots.size()); r < m.rows; ++r) {
    if (ty[r] != 0) return SolveNoSolution{t.row(r)};
  }
  QVec x(m.cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = ty[r];
  if (static_cast<int>(pivots.size()) == m.cols) return SolveUnique{x};
  return SolveNonUnique{x, kernel_from_rref(m, pivots)};
}

LdltResult ldlt(const Mat& m0) {
  if (!m0.is_symmetric()) throw hy_error("ldlt: asymmetric input");
  int n = m0.rows;
  Mat s = m0;               // running Schur complement (indices >= j active)
  Mat l = Mat::identity(n);
  QVec d(n, Rat(0));
  std::vector<QVec> ker;
  bool singular = false;

  // Witness for x^T m x = value: pull a Schur-space vector w (supported on
  // indices >= j) back through the congruence, i.e. solve L^T x = w.
  auto pull_back = [&](const QVec& w) {
    QVec x = w;
    for (int k = n - 1; k >= 0; --k) {
      Rat acc = x[k];
      for (int t2 = k + 1; t2 < n; ++t2) acc -= l.at(t2, k) * x[t2];
      x[k] = acc;
    }
    // Scale to a primitive integer vector; the sign of x^T m x is preserved.
    return to_qvec(primitive_signed(integral_multiple(x)));
  };
  auto quad = [&](const QVec& x) {
    Rat v = 0;
    for (int i = 0; i < n; ++i)
      for (int j2 = 0; j2 < n; ++j2) v += x[i] * m0.at(i, j2) * x[j2];
    return v;
  };

  for (int j = 0; j < n; ++j) {
    Rat piv = s.at(j, j);
    if (piv < 0) {
      QVec w(n, Rat(0));
      w[j] = 1;
      QVec x = pull_back(w);
      return LdltIndefinite{x, quad(x)};
    }
    if (piv == 0) {
      int k = -1;
      for (int c = j + 1; c < n; ++c)
        if (s.at(j, c) != 0) { k = c; break; }
      if (k >= 0) {
        // 2x2 block [[0,a],[a,c]]: value at (t,1) is 2at + c = -1 for
        // t = -(c+1)/(2a).
        Rat aa = s.at(j, k), cc = s.at(k, k);
        QVec w(n, Rat(0));
        w[j] = -(cc + 1) / (2 * aa);
        w[k] = 1;
        QVec x = pull_back(w);
        return LdltIndefinite{x, quad(x)};
      }
      QVec w(n, Rat(0));
      w[j] = 1;
      ker.push_back(pull_back(w));
      singular = true;
      continue;  // d[j] stays 0, l column stays e_j
    }
    d[j] = piv;
    QVec pr(n);
    for (int c = j; c < n; ++c) pr[c] = s.at(j, c);
    for (int r = j + 1; r < n; ++r) {
      Rat f = s.at(r, j) / piv;
      l.at(r, j) = f;
      if (f == 0) continue;
      for (int c = j; c < n; ++c) s.at(r, c) -= f * pr[c];
    }
  }
  if (singular) return LdltSemidefinite{l, d, ker};
  return LdltPosDef{l, d};
}

bool is_positive_definite(const Mat& m) {
  return std::holds_alternative<LdltPosDef>(ldlt(m));
}

ColumnHnf integer_column_reduce(const std::vector<IVec>& rows, int m) {
  ColumnHnf out;
  out.u_cols.assign(m, IVec(m, Int(0)));
  for (int i = 0; i < m; ++i) out.u_cols[i][i] = 1;
  std::vector<IVec> a = rows;  // working copy; columns are reduced in place

  auto col_entry = [&](int r, int c) -> Int& { return a[r][c]; };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (auto& row : a) row[dst] += f * row[src];
    for (int i = 0; i < m; ++i) out.u_cols[dst][i] += f * out.u_cols[src][i];
  };
  auto swap_col = [&](int c1, int c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
    std::swap(out.u_cols[c1], out.u_cols[c2]);
  };

  int col = 0;
  for (size_t r = 0; r < rows.size() && col < m; ++r) {
    // Euclidean reduction across columns col..m-1 on row r.
    while (true) {
      int jmin = -1;
      Int amin = 0;
      for (int j = col; j < m; ++j) {
        Int v = boost::multiprecision::abs(col_entry(static_cast<int>(r), j));
        if (v == 0) continue;
        if (jmin < 0 || v < amin) { jmin = j; amin = v; }
      }
      if (jmin < 0) break;  // row already zero on the active columns
      if (jmin != col) swap_col(col, jmin);
      if (col_entry(static_cast<int>(r), col) < 0) add_col(col, col, Int(-2));
      bool clean = true;
      for (int j = col + 1; j < m; ++j) {
        Int v = col_entry(static_cast<int>(r), j);
        if (v == 0) continue;
        Int q = v / col_entry(static_cast<int>(r), col);
        add_col(j, col, -q);
        if (col_entry(static_cast<int>(r), j) != 0) clean = false;
      }
      if (clean) {
        ++col;
        break;
      }
    }
  }
  out.rank = col;
  return out;
}

}  // namespace hycone
