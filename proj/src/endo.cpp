#include "wittrace/endo.hpp"

namespace wittrace {

Value trace(const MatrixEndo& f) {
  if (f.twisted()) throw Error("trace of a twisted endomorphism lives in twisted HH0");
  return f.matrix.trace();
}

Matrix twisted_iterate(const MatrixEndo& f, int n) {
  if (n < 1) throw Error("iterate index must be >= 1");
  if (!f.twisted()) {
    Matrix p = f.matrix;
    for (int i = 1; i < n; ++i) p = p * f.matrix;
    return p;
  }
  // phi^{n-1}(f) * ... * phi(f) * f, built left to right
  const RingEndo& phi = *f.twist;
  Matrix acc = f.matrix;
  Matrix twisted = f.matrix;
  for (int i = 1; i < n; ++i) {
    twisted = twisted.map_entries([&](const Value& v) { return phi.apply(v); });
    acc = twisted * acc;
  }
  return acc;
}

TraceSequence iterate_traces(const MatrixEndo& f, int N) {
  if (N < 1) throw Error("iterate_traces needs N >= 1");
  TraceSequence out{f.matrix.ring(), {}};
  out.values.reserve(static_cast<size_t>(N));
  if (!f.twisted()) {
    Matrix p = f.matrix;
    for (int n = 1; n <= N; ++n) {
      out.values.push_back(p.trace());
      if (n < N) p = p * f.matrix;
    }
    return out;
  }
  const RingEndo& phi = *f.twist;
  Matrix acc = f.matrix;
  Matrix twisted = f.matrix;
  for (int n = 1; n <= N; ++n) {
    out.values.push_back(acc.trace());
    if (n < N) {
      twisted = twisted.map_entries([&](const Value& v) { return phi.apply(v); });
      acc = twisted * acc;
    }
  }
  return out;
}

Series char_series(const MatrixEndo& f, size_t N) {
  if (f.twisted()) throw Error("char_series is defined for untwisted endomorphisms");
  const size_t k = f.dim();
  std::vector<Value> cp = berkowitz_char_poly(f.matrix);  // det(lambda I - f)
  // det(I - t f) = t^k * p(1/t): coefficient of t^j is cp[k - j]
  Series s(f.matrix.ring(), N);
  for (size_t j = 0; j <= std::min(N, k); ++j) s.set_coeff(j, cp[k - j]);
  return s;
}

WittVector tr_trace(const MatrixEndo& f, int N) {
  if (N < 1) throw Error("tr_trace needs N >= 1");
  if (static_cast<size_t>(N) < f.dim())
    throw Error("truncation order must be >= matrix size");
  return series_to_witt(char_series(f, static_cast<size_t>(N)));
}

bool is_zero_endo(const MatrixEndo& f) {
  for (size_t i = 0; i < f.matrix.rows(); ++i)
    for (size_t j = 0; j < f.matrix.cols(); ++j)
      if (!f.matrix.at(i, j).is_zero()) return false;
  return true;
}

MatrixEndo direct_sum(const MatrixEndo& f, const MatrixEndo& g) {
  if (!f.matrix.ring()->same_as(*g.matrix.ring()))
    throw RingMismatchError("direct sum over different rings");
  if (f.twisted() || g.twisted()) throw Error("direct_sum is defined for untwisted endomorphisms");
  size_t n = f.dim(), m = g.dim();
  Matrix s(f.matrix.ring(), n + m, n + m);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) s.at(i, j) = f.matrix.at(i, j);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) s.at(n + i, n + j) = g.matrix.at(i, j);
  return MatrixEndo(std::move(s));
}

}  // namespace wittrace
