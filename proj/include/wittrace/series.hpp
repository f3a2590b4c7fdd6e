#ifndef WITTRACE_SERIES_HPP
#define WITTRACE_SERIES_HPP

#include <vector>

#include "wittrace/ring.hpp"

namespace wittrace {

// Formal power series in t over a coefficient ring, carried modulo t^(N+1).
// "Unit series" below means constant term exactly 1; those form the group
// (1 + t*A[[t]])^x that Witt vectors map into.
class Series {
 public:
  Series() : order_(0) {}
  Series(RingPtr ring, size_t order);                       // zero series
  Series(RingPtr ring, size_t order, std::vector<Value> coeffs);
  static Series one(RingPtr ring, size_t order);

  const RingPtr& ring() const { return ring_; }
  size_t order() const { return order_; }
  const Value& coeff(size_t i) const { return c_.at(i); }
  void set_coeff(size_t i, Value v);
  const std::vector<Value>& coeffs() const { return c_; }

  bool is_unit() const { return c_.at(0).is_one(); }
  bool is_zero() const;

  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);  // Cauchy product mod t^(N+1)
  Series operator-() const;

  // Rendered like "1 - 2t + 6t^2 + O(t^13)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  size_t order_;
  std::vector<Value> c_;  // size order_+1
};

// Truncate or zero-pad to a new order.
Series series_resize(const Series& a, size_t order);

// Two-sided inverse of a unit series (standard recursion, no ring division).
Series series_inverse(const Series& a);

// -t * a'(t) / a(t) for a unit series; constant term 0.  Division-free:
// computed as (-t a') * inverse(a), so it is defined over every ring.
Series neg_log_derivative(const Series& a);

// exp/log over Q only: exp needs constant term 0, log constant term 1.
Series series_exp(const Series& a);
Series series_log(const Series& a);

}  // namespace wittrace

#endif
