#include "wittrace/matrix.hpp"

#include "wittrace/kernels.hpp"

namespace wittrace {

Matrix::Matrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  e_.assign(rows_ * cols_, ring_->zero());
}

Matrix Matrix::identity(RingPtr ring, size_t n) {
  Matrix m(ring, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = ring->one();
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in +");
  Matrix r(a.ring_, a.rows_, a.cols_);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix shape mismatch in -");
  Matrix r(a.ring_, a.rows_, a.cols_);
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
  check_same_ring(a.e_.empty() ? a.ring_->zero() : a.e_[0],
                  b.e_.empty() ? b.ring_->zero() : b.e_[0]);
  Matrix r(a.ring_, a.rows_, b.cols_);

  // Fast lane for Z/m with a small modulus; equivalent to the generic loop.
  if (a.ring_->kind() == RingKind::Mod && kernels::small_modulus(a.ring_->modulus())) {
    uint32_t m = static_cast<uint32_t>(to_int64(a.ring_->modulus()));
    size_t n = a.cols_;
    std::vector<uint32_t> row(n), col(n);
    for (size_t i = 0; i < a.rows_; ++i) {
      for (size_t k = 0; k < n; ++k) row[k] = static_cast<uint32_t>(to_int64(a.at(i, k).as_int()));
      for (size_t j = 0; j < b.cols_; ++j) {
        for (size_t k = 0; k < n; ++k) col[k] = static_cast<uint32_t>(to_int64(b.at(k, j).as_int()));
        uint32_t d = kernels::active().dot_mod(row.data(), col.data(), n, m);
        r.at(i, j) = Value(a.ring_, Int(d));
      }
    }
    return r;
  }

  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t j = 0; j < b.cols_; ++j) {
      Value s = a.ring_->zero();
      for (size_t k = 0; k < a.cols_; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Value Matrix::trace() const {
  if (!is_square()) throw Error("trace of a non-square matrix");
  Value s = ring_->zero();
  for (size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

Matrix Matrix::map_entries(const std::function<Value(const Value&)>& f) const {
  Matrix r = *this;
  for (auto& v : r.e_) v = f(v);
  if (!r.e_.empty()) r.ring_ = r.e_[0].ring();
  return r;
}

namespace {

// Row/column operations on a plain Int grid, mirrored into the transforms.
struct SnfWork {
  std::vector<std::vector<Int>> d, u, v;
  size_t rows, cols;

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    std::swap(u[a], u[b]);
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (auto& row : d) std::swap(row[a], row[b]);
    for (auto& row : v) std::swap(row[a], row[b]);
  }
  void add_row(size_t dst, size_t src, const Int& c) {  // row_dst += c*row_src
    for (size_t j = 0; j < cols; ++j) d[dst][j] += c * d[src][j];
    for (size_t j = 0; j < rows; ++j) u[dst][j] += c * u[src][j];
  }
  void add_col(size_t dst, size_t src, const Int& c) {
    for (size_t i = 0; i < rows; ++i) d[i][dst] += c * d[i][src];
    for (size_t i = 0; i < cols; ++i) v[i][dst] += c * v[i][src];
  }
  void negate_row(size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const Matrix& m) {
  if (m.ring()->kind() != RingKind::Integers)
    throw Error("smith_normal_form requires a matrix over Z");
  const size_t R = m.rows(), C = m.cols();
  SnfWork w;
  w.rows = R;
  w.cols = C;
  w.d.assign(R, std::vector<Int>(C, 0));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) w.d[i][j] = m.at(i, j).as_int();
  w.u.assign(R, std::vector<Int>(R, 0));
  w.v.assign(C, std::vector<Int>(C, 0));
  for (size_t i = 0; i < R; ++i) w.u[i][i] = 1;
  for (size_t j = 0; j < C; ++j) w.v[j][j] = 1;

  size_t t = 0;
  const size_t tmax = std::min(R, C);
  while (t < tmax) {
    // locate a pivot of minimal absolute value in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j) {
        if (w.d[i][j] == 0) continue;
        Int a = abs(w.d[i][j]);
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < R; ++i) {
        if (w.d[i][t] == 0) continue;
        Int q = w.d[i][t] / w.d[t][t];
        w.add_row(i, t, -q);
        if (w.d[i][t] != 0) {  // remainder smaller than pivot: swap up and restart
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < C; ++j) {
        if (w.d[t][j] == 0) continue;
        Int q = w.d[t][j] / w.d[t][t];
        w.add_col(j, t, -q);
        if (w.d[t][j] != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // pivot must divide the remaining block; if not, fold the bad row in
    bool redo = false;
    for (size_t i = t + 1; i < R && !redo; ++i)
      for (size_t j = t + 1; j < C && !redo; ++j)
        if (w.d[i][j] % w.d[t][t] != 0) {
          w.add_row(t, i, 1);
          redo = true;
        }
    if (redo) continue;

    if (w.d[t][t] < 0) w.negate_row(t);
    ++t;
  }

  RingPtr Z = Ring::integers();
  SmithResult res{Matrix(Z, R, R), Matrix(Z, R, C), Matrix(Z, C, C)};
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < R; ++j) res.U.at(i, j) = Z->from_int(w.u[i][j]);
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) res.D.at(i, j) = Z->from_int(w.d[i][j]);
  for (size_t i = 0; i < C; ++i)
    for (size_t j = 0; j < C; ++j) res.V.at(i, j) = Z->from_int(w.v[i][j]);
  return res;
}

std::vector<Value> berkowitz_char_poly(const Matrix& f) {
  if (!f.is_square()) throw Error("characteristic polynomial of a non-square matrix");
  const RingPtr& A = f.ring();
  const size_t n = f.rows();

  // p holds the char poly of the leading principal k x k submatrix,
  // ascending by power of lambda.
  std::vector<Value> p{A->one()};
  for (size_t k = 1; k <= n; ++k) {
    const Value& a = f.at(k - 1, k - 1);

    // Krylov values u_j = R * A_{k-1}^j * S for the bordering row/column.
    std::vector<Value> u;
    if (k >= 2) {
      std::vector<Value> vcol(k - 1);
      for (size_t i = 0; i < k - 1; ++i) vcol[i] = f.at(i, k - 1);
      for (size_t j = 0; j + 2 <= k; ++j) {
        Value dot = A->zero();
        for (size_t i = 0; i < k - 1; ++i) dot += f.at(k - 1, i) * vcol[i];
        u.push_back(dot);
        if (j + 3 <= k) {
          std::vector<Value> next(k - 1, A->zero());
          for (size_t r = 0; r < k - 1; ++r)
            for (size_t c = 0; c < k - 1; ++c) next[r] += f.at(r, c) * vcol[c];
          vcol = std::move(next);
        }
      }
    }

    // w_j = sum_{i<=j} c_i * u_{j-i}, where c_i is the coefficient of
    // lambda^{k-1-i} in p (adjugate expansion of lambda*I - A_{k-1}).
    std::vector<Value> q(k + 1, A->zero());
    for (size_t d = 0; d + 1 <= k; ++d) q[d + 1] += p[d];   // lambda * p
    for (size_t d = 0; d < k; ++d) q[d] -= a * p[d];        // -a * p
    for (size_t j = 0; j + 2 <= k; ++j) {
      Value wj = A->zero();
      for (size_t i = 0; i <= j; ++i) wj += p[k - 1 - i] * u[j - i];
      q[k - 2 - j] -= wj;
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace wittrace
