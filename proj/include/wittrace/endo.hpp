#ifndef WITTRACE_ENDO_HPP
#define WITTRACE_ENDO_HPP

#include <optional>

#include "wittrace/matrix.hpp"
#include "wittrace/series.hpp"
#include "wittrace/witt.hpp"

namespace wittrace {

// A matrix endomorphism of a free module A^k, optionally twisted by a ring
// endomorphism phi of A (identity when absent).
struct MatrixEndo {
  Matrix matrix;
  std::optional<RingEndo> twist;

  MatrixEndo() = default;
  explicit MatrixEndo(Matrix m) : matrix(std::move(m)) {
    if (!matrix.is_square()) throw Error("endomorphism matrix must be square");
  }
  MatrixEndo(Matrix m, RingEndo phi) : MatrixEndo(std::move(m)) {
    if (!phi.ring()->same_as(*matrix.ring()))
      throw RingMismatchError("twist acts on a different ring than the matrix");
    if (!phi.is_identity()) twist = std::move(phi);
  }

  bool twisted() const { return twist.has_value(); }
  size_t dim() const { return matrix.rows(); }
};

struct TraceSequence {
  RingPtr ring;
  std::vector<Value> values;  // tr(f^(1)) .. tr(f^(N))
};

// Sum of diagonal entries; untwisted only.
Value trace(const MatrixEndo& f);

// tr(f^(n)) for n = 1..N.  For a twist phi the n-th iterate is
// f^(phi,n) = phi^{n-1}(f) * ... * phi(f) * f (phi applied entrywise), and
// the stated value is the sum of its diagonal, i.e. the canonical
// representative of the trace class in the phi^n-twisted quotient.
TraceSequence iterate_traces(const MatrixEndo& f, int N);

// The n-th twisted iterate matrix itself.
Matrix twisted_iterate(const MatrixEndo& f, int n);

// det(I - t*f) as a unit series of order N (a polynomial of degree <= dim).
Series char_series(const MatrixEndo& f, size_t N);

// The class of [f] in Witt coordinates on {1..N}: series_to_witt of the
// characteristic series.  Its ghost vector equals iterate_traces(f, N).
WittVector tr_trace(const MatrixEndo& f, int N);

bool is_zero_endo(const MatrixEndo& f);

// Block diagonal sum: realizes addition of K0 classes.
MatrixEndo direct_sum(const MatrixEndo& f, const MatrixEndo& g);

}  // namespace wittrace

#endif
