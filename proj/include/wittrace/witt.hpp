#ifndef WITTRACE_WITT_HPP
#define WITTRACE_WITT_HPP

#include <map>
#include <vector>

#include "wittrace/mpoly.hpp"
#include "wittrace/ring.hpp"
#include "wittrace/series.hpp"

namespace wittrace {

// Divisor-closed index set for truncated Witt rings.  Two shapes are
// supported: the full interval {1..N} and the divisor set <n>.
class TruncationSet {
 public:
  enum class Kind { Interval, Divisors };

  static TruncationSet interval(int N);
  static TruncationSet divisors(int n);

  Kind kind() const { return kind_; }
  int bound() const { return bound_; }  // N for {1..N}, n for <n>
  const std::vector<int>& elements() const { return elems_; }
  size_t size() const { return elems_.size(); }
  bool contains(int n) const;
  size_t index_of(int n) const;  // position in elements()

  bool operator==(const TruncationSet& o) const {
    return kind_ == o.kind_ && bound_ == o.bound_;
  }

 private:
  TruncationSet(Kind k, int b, std::vector<int> e)
      : kind_(k), bound_(b), elems_(std::move(e)) {}
  Kind kind_;
  int bound_;
  std::vector<int> elems_;
};

// Element of W_S(A): Witt coordinates a_n for n in S.
class WittVector {
 public:
  WittVector(RingPtr ring, TruncationSet trunc);
  WittVector(RingPtr ring, TruncationSet trunc, std::vector<Value> coords);

  const RingPtr& ring() const { return ring_; }
  const TruncationSet& trunc() const { return trunc_; }
  const Value& coord(int n) const { return coords_.at(trunc_.index_of(n)); }
  void set_coord(int n, Value v);
  const std::vector<Value>& coords() const { return coords_; }

  bool operator==(const WittVector& o) const;
  bool operator!=(const WittVector& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  TruncationSet trunc_;
  std::vector<Value> coords_;
};

// Image of a Witt vector under the ghost map: w_n = sum_{d|n} d * a_d^(n/d).
class GhostVector {
 public:
  GhostVector(RingPtr ring, TruncationSet trunc);
  GhostVector(RingPtr ring, TruncationSet trunc, std::vector<Value> values);

  const RingPtr& ring() const { return ring_; }
  const TruncationSet& trunc() const { return trunc_; }
  const Value& value(int n) const { return values_.at(trunc_.index_of(n)); }
  void set_value(int n, Value v);
  const std::vector<Value>& values() const { return values_; }

  bool operator==(const GhostVector& o) const;
  bool operator!=(const GhostVector& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  TruncationSet trunc_;
  std::vector<Value> values_;
};

GhostVector ghost(const WittVector& a);

// Inverse of the ghost map over a torsion-free ring; NotIntegralError with
// the offending index when the vector is not in the image.
WittVector ghost_to_witt(const GhostVector& w);

// Universal addition/multiplication polynomials S_n, P_n over Z in the
// variables x_1..x_n (indices 0..n-1) and y_1..y_n (indices n..2n-1).
struct UniversalWittPolynomials {
  int max_n = 0;
  std::vector<MPoly> sum;   // sum[n-1] = S_n
  std::vector<MPoly> prod;  // prod[n-1] = P_n
};

// Derive the polynomials by solving ghost(S) = ghost(x) + ghost(y) and
// ghost(P) = ghost(x) * ghost(y); every division must be exact over Z
// (a failure throws and indicates an implementation bug, not a user error).
UniversalWittPolynomials derive_universal_polys(int max_n);

// Cached accessors used by the ring operations; thread-safe, derived lazily
// and optionally persisted under $WITT_TRACE_CACHE_DIR.
const MPoly& cached_sum_poly(int n);
const MPoly& cached_prod_poly(int n);
// Universal Frobenius polynomial: the m-th coordinate of F_r in terms of
// x_1..x_{rm} (indices 0..rm-1).
const MPoly& cached_frobenius_poly(int r, int m);

WittVector witt_zero(RingPtr ring, TruncationSet trunc);
WittVector witt_one(RingPtr ring, TruncationSet trunc);
WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
// n-fold sum, i.e. the image of the integer c under Z -> W_S(A).
WittVector witt_int(RingPtr ring, const TruncationSet& trunc, const Int& c);

// a |-> prod_{n in S} (1 - a_n t^n) truncated at t^N; interval sets only.
Series witt_to_series(const WittVector& a);
WittVector series_to_witt(const Series& u);

// Frobenius F_r: {1..N} -> {1..floor(N/r)}, <n> -> <n/r> (r | n).
WittVector frobenius(int r, const WittVector& a);
// Verschiebung V_r: <n> -> <rn>; on {1..N} the target {1..rN} is restricted
// back to {1..N}, i.e. (V_r a)_m = a_{m/r} when r | m and 0 otherwise.
WittVector verschiebung(int r, const WittVector& a);
// Restriction: forget coordinates; <n> -> <d> for d | n, {1..N} -> {1..M}.
WittVector restriction(const WittVector& a, int d);

}  // namespace wittrace

#endif
