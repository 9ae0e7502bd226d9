#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gammacalc {

using Int = boost::multiprecision::cpp_int;

inline Int gcd0(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;  // gcd(0, d) = d, gcd(0, 0) = 0
}

// g = gcd(a,b) = x*a + y*b
inline Int extgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t;
    t = old_r - q * r; old_r = r; r = t;
    t = old_x - q * xx; old_x = xx; xx = t;
    t = old_y - q * yy; old_y = yy; yy = t;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  x = old_x;
  y = old_y;
  return old_r;
}

// Dense integer matrix with exact arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  // rows x cols matrix with d on the main diagonal
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            const std::vector<Int>& d) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i)
      m.at(i, i) = d[i];
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged row list");
      std::size_t j = 0;
      for (long long v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<Int> row(std::size_t i) const {
    std::vector<Int> v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  void set_col(std::size_t j, const std::vector<Int>& v) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          p.at(i, j) += v * o.at(k, j);
      }
    return p;
  }

  std::vector<Int> operator*(const std::vector<Int>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Int> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) w[i] += at(i, j) * v[j];
    return w;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }

  IntMatrix operator-() const {
    IntMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
    return s;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (const Int& v : a_) if (v != 0) return false;
    return true;
  }

  // horizontal concatenation [*this | o]
  IntMatrix hstack(const IntMatrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    IntMatrix m(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

// left * original * right = diagonal(d), with left and right unimodular.
struct SmithDecomposition {
  std::vector<Int> diag;  // nonnegative, divisibility chain, zeros trailing
  IntMatrix left, left_inv, right, right_inv;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const Int& v : diag) if (v != 0) ++r;
    return r;
  }
};

namespace detail {

struct SnfState {
  IntMatrix d, l, li, r, ri;

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
    for (std::size_t k = 0; k < l.cols(); ++k) std::swap(l.at(i, k), l.at(j, k));
    for (std::size_t k = 0; k < li.rows(); ++k) std::swap(li.at(k, i), li.at(k, j));
  }
  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
    for (std::size_t k = 0; k < r.rows(); ++k) std::swap(r.at(k, i), r.at(k, j));
    for (std::size_t k = 0; k < ri.cols(); ++k) std::swap(ri.at(i, k), ri.at(j, k));
  }
  // row i += q * row j
  void row_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) += q * d.at(j, k);
    for (std::size_t k = 0; k < l.cols(); ++k) l.at(i, k) += q * l.at(j, k);
    for (std::size_t k = 0; k < li.rows(); ++k) li.at(k, j) -= q * li.at(k, i);
  }
  // col i += q * col j
  void col_add(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < d.rows(); ++k) d.at(k, i) += q * d.at(k, j);
    for (std::size_t k = 0; k < r.rows(); ++k) r.at(k, i) += q * r.at(k, j);
    for (std::size_t k = 0; k < ri.cols(); ++k) ri.at(j, k) -= q * ri.at(i, k);
  }
  void row_negate(std::size_t i) {
    for (std::size_t k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
    for (std::size_t k = 0; k < l.cols(); ++k) l.at(i, k) = -l.at(i, k);
    for (std::size_t k = 0; k < li.rows(); ++k) li.at(k, i) = -li.at(k, i);
  }

  // Diagonalize the submatrix with top-left corner (t, t); the pivot at (t, t)
  // ends up dividing everything below/right of it only after the divisibility
  // pass in smith_normal_form.
  void eliminate_from(std::size_t t) {
    std::size_t n = std::min(d.rows(), d.cols());
    for (; t < n; ++t) {
      // pick the nonzero entry of least absolute value as pivot
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best = 0;
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
          const Int& v = d.at(i, j);
          if (v == 0) continue;
          Int a = abs(v);
          if (!found || a < best) { found = true; best = a; pi = i; pj = j; }
        }
      if (!found) break;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = false;
      while (!clean) {
        clean = true;
        for (std::size_t i = t + 1; i < d.rows(); ++i) {
          if (d.at(i, t) == 0) continue;
          Int q = d.at(i, t) / d.at(t, t);
          row_add(i, t, -q);
          if (d.at(i, t) != 0) {  // remainder smaller than pivot: promote it
            row_swap(t, i);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < d.cols(); ++j) {
          if (d.at(t, j) == 0) continue;
          Int q = d.at(t, j) / d.at(t, t);
          col_add(j, t, -q);
          if (d.at(t, j) != 0) {
            col_swap(t, j);
            clean = false;
          }
        }
      }
      if (d.at(t, t) < 0) row_negate(t);
    }
  }
};

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  detail::SnfState s;
  s.d = m;
  s.l = IntMatrix::identity(m.rows());
  s.li = IntMatrix::identity(m.rows());
  s.r = IntMatrix::identity(m.cols());
  s.ri = IntMatrix::identity(m.cols());
  s.eliminate_from(0);

  std::size_t n = std::min(m.rows(), m.cols());
  // enforce the divisibility chain d[i] | d[i+1]
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Int& a = s.d.at(i, i);
      const Int& b = s.d.at(i + 1, i + 1);
      if (a == 0 && b != 0) {
        s.row_swap(i, i + 1);
        s.col_swap(i, i + 1);
        changed = true;
      } else if (a != 0 && b % a != 0) {
        s.col_add(i, i + 1, 1);  // puts b into position (i+1, i)
        s.eliminate_from(i);
        changed = true;
      }
    }
  }

  SmithDecomposition out;
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diag[i] = s.d.at(i, i);
  out.left = std::move(s.l);
  out.left_inv = std::move(s.li);
  out.right = std::move(s.r);
  out.right_inv = std::move(s.ri);
  return out;
}

// Columns form a basis of the saturated integer lattice { x : m x = 0 }.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = smith_normal_form(m);
  std::size_t rk = s.rank();
  IntMatrix k(m.cols(), m.cols() - rk);
  for (std::size_t j = rk; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i)
      k.at(i, j - rk) = s.right.at(i, j);
  return k;
}

// One integer solution of m x = b, if any.
inline std::optional<std::vector<Int>> solve(const IntMatrix& m,
                                             const std::vector<Int>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  SmithDecomposition s = smith_normal_form(m);
  std::vector<Int> z = s.left * b;
  std::vector<Int> w(m.cols());
  std::size_t n = s.diag.size();
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i < n && s.diag[i] != 0) {
      if (z[i] % s.diag[i] != 0) return std::nullopt;
      w[i] = z[i] / s.diag[i];
    } else if (z[i] != 0) {
      return std::nullopt;
    }
  }
  return s.right * w;
}

// Incremental Hermite-style reduction of a stream of rows to a basis of their
// row lattice (at most `cols` rows). Used to keep the huge relation matrices
// of the Gamma presentation out of the dense SNF.
class HnfAccumulator {
 public:
  explicit HnfAccumulator(std::size_t cols) : cols_(cols) {}

  void add_row(std::vector<Int> v) {
    if (v.size() != cols_) throw std::invalid_argument("HnfAccumulator: row length mismatch");
    std::vector<std::size_t> touched;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        if (v[c] < 0)
          for (Int& x : v) x = -x;
        rows_.emplace(c, std::move(v));
        touched.push_back(c);
        break;
      }
      std::vector<Int>& b = it->second;
      if (v[c] % b[c] == 0) {
        Int q = v[c] / b[c];
        for (std::size_t k = c; k < cols_; ++k) v[k] -= q * b[k];
      } else {
        Int x, y;
        Int g = extgcd(b[c], v[c], x, y);
        Int bc = b[c] / g, vc = v[c] / g;
        for (std::size_t k = c; k < cols_; ++k) {
          Int nb = x * b[k] + y * v[k];
          Int nv = bc * v[k] - vc * b[k];
          b[k] = nb;
          v[k] = nv;
        }
        touched.push_back(c);
      }
    }
    // keep entries small: reduce each changed row against later pivot rows,
    // working from the back so the reducers are already reduced
    for (std::size_t t = touched.size(); t-- > 0;) {
      std::vector<Int>& r = rows_[touched[t]];
      for (auto it = rows_.upper_bound(touched[t]); it != rows_.end(); ++it) {
        const std::size_t p = it->first;
        const std::vector<Int>& b = it->second;
        Int q = r[p] / b[p];
        if (r[p] % b[p] < 0) q -= 1;  // floor division
        if (q == 0) continue;
        for (std::size_t k = p; k < cols_; ++k) r[k] -= q * b[k];
      }
    }
  }

  IntMatrix basis() const {
    IntMatrix m(rows_.size(), cols_);
    std::size_t i = 0;
    for (const auto& [piv, row] : rows_) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = row[j];
      ++i;
    }
    return m;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, std::vector<Int>> rows_;  // pivot column -> row
};

// Basis of the row lattice of m, with at most m.cols() rows.
inline IntMatrix row_lattice_basis(const IntMatrix& m) {
  HnfAccumulator acc(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) acc.add_row(m.row(i));
  return acc.basis();
}

}  // namespace gammacalc
