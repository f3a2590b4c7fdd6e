#include "wittrace/series.hpp"

#include <sstream>

#include "wittrace/kernels.hpp"

namespace wittrace {

Series::Series(RingPtr ring, size_t order) : ring_(std::move(ring)), order_(order) {
  c_.assign(order_ + 1, ring_->zero());
}

Series::Series(RingPtr ring, size_t order, std::vector<Value> coeffs)
    : ring_(std::move(ring)), order_(order), c_(std::move(coeffs)) {
  if (c_.size() != order_ + 1) throw Error("series needs exactly order+1 coefficients");
  for (auto& v : c_)
    if (!v.ring()->same_as(*ring_)) throw RingMismatchError("series coefficient in wrong ring");
}

Series Series::one(RingPtr ring, size_t order) {
  Series s(ring, order);
  s.c_[0] = s.ring_->one();
  return s;
}

void Series::set_coeff(size_t i, Value v) {
  if (!v.ring()->same_as(*ring_)) throw RingMismatchError("series coefficient in wrong ring");
  c_.at(i) = std::move(v);
}

bool Series::is_zero() const {
  for (auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Series::operator==(const Series& o) const {
  if (order_ != o.order_) return false;
  for (size_t i = 0; i <= order_; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

static void check_compatible(const Series& a, const Series& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw RingMismatchError("series ring mismatch: " + a.ring()->name() + " vs " + b.ring()->name());
  if (a.order() != b.order()) throw Error("series order mismatch");
}

Series operator+(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r(a.ring_, a.order_);
  for (size_t i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r(a.ring_, a.order_);
  for (size_t i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

Series Series::operator-() const {
  Series r(ring_, order_);
  for (size_t i = 0; i <= order_; ++i) r.c_[i] = -c_[i];
  return r;
}

namespace {

// Packed convolution lanes.  Both are exact and equivalence-tested against
// the generic Value loop; eligibility is decided per call.

bool conv_mod_fast(const Series& a, const Series& b, Series& out) {
  const Ring& R = *a.ring();
  if (R.kind() != RingKind::Mod || !kernels::small_modulus(R.modulus())) return false;
  uint32_t m = static_cast<uint32_t>(to_int64(R.modulus()));
  size_t n = a.order() + 1;
  std::vector<uint32_t> xa(n), xb_rev(n);
  for (size_t i = 0; i < n; ++i) {
    xa[i] = static_cast<uint32_t>(to_int64(a.coeff(i).as_int()));
    xb_rev[n - 1 - i] = static_cast<uint32_t>(to_int64(b.coeff(i).as_int()));
  }
  const auto& K = kernels::active();
  for (size_t d = 0; d < n; ++d) {
    // sum_{i<=d} a_i b_{d-i} = dot(a[0..d], reverse(b)[n-1-d..])
    uint32_t v = K.dot_mod(xa.data(), xb_rev.data() + (n - 1 - d), d + 1, m);
    out.set_coeff(d, Value(a.ring(), Int(v)));
  }
  return true;
}

bool conv_int_fast(const Series& a, const Series& b, Series& out) {
  if (a.ring()->kind() != RingKind::Integers) return false;
  size_t n = a.order() + 1;
  int64_t maxa = 0, maxb = 0;
  std::vector<int32_t> xa(n), xb_rev(n);
  for (size_t i = 0; i < n; ++i) {
    const Int& va = a.coeff(i).as_int();
    const Int& vb = b.coeff(i).as_int();
    if (!fits_int32(va) || !fits_int32(vb)) return false;
    xa[i] = static_cast<int32_t>(to_int64(va));
    xb_rev[n - 1 - i] = static_cast<int32_t>(to_int64(vb));
    maxa = std::max<int64_t>(maxa, std::abs(static_cast<int64_t>(xa[i])));
    maxb = std::max<int64_t>(maxb, std::abs(static_cast<int64_t>(xb_rev[n - 1 - i])));
  }
  // worst-case |sum| <= n * maxa * maxb must stay well inside int64
  if (maxa > 0 && maxb > 0 &&
      static_cast<uint64_t>(maxa) * static_cast<uint64_t>(maxb) >
          (uint64_t{1} << 62) / static_cast<uint64_t>(n))
    return false;
  const auto& K = kernels::active();
  for (size_t d = 0; d < n; ++d) {
    int64_t v = K.dot_i32(xa.data(), xb_rev.data() + (n - 1 - d), d + 1);
    out.set_coeff(d, Value(a.ring(), Int(v)));
  }
  return true;
}

}  // namespace

Series operator*(const Series& a, const Series& b) {
  check_compatible(a, b);
  Series r(a.ring_, a.order_);
  if (conv_mod_fast(a, b, r)) return r;
  if (conv_int_fast(a, b, r)) return r;
  for (size_t d = 0; d <= a.order_; ++d) {
    Value s = a.ring_->zero();
    for (size_t i = 0; i <= d; ++i) s += a.c_[i] * b.c_[d - i];
    r.c_[d] = s;
  }
  return r;
}

Series series_resize(const Series& a, size_t order) {
  Series r(a.ring(), order);
  for (size_t i = 0; i <= std::min(order, a.order()); ++i) r.set_coeff(i, a.coeff(i));
  return r;
}

Series series_inverse(const Series& a) {
  if (!a.is_unit()) throw Error("series_inverse needs constant term 1");
  Series b(a.ring(), a.order());
  b.set_coeff(0, a.ring()->one());
  for (size_t n = 1; n <= a.order(); ++n) {
    Value s = a.ring()->zero();
    for (size_t k = 1; k <= n; ++k) s += a.coeff(k) * b.coeff(n - k);
    b.set_coeff(n, -s);
  }
  return b;
}

Series neg_log_derivative(const Series& a) {
  if (!a.is_unit()) throw Error("neg_log_derivative needs constant term 1");
  // -t a' has n-th coefficient -n*a_n
  Series num(a.ring(), a.order());
  for (size_t n = 1; n <= a.order(); ++n) {
    Value nv = a.ring()->from_int(Int(n));
    num.set_coeff(n, -(nv * a.coeff(n)));
  }
  return num * series_inverse(a);
}

Series series_exp(const Series& a) {
  if (!a.ring()->is_rational()) throw Error("series_exp is defined over Q only, got " + a.ring()->name());
  if (!a.coeff(0).is_zero()) throw Error("series_exp needs constant term 0");
  // b' = a' b termwise: n*b_n = sum_{k=1..n} k*a_k*b_{n-k}
  Series b = Series::one(a.ring(), a.order());
  for (size_t n = 1; n <= a.order(); ++n) {
    Value s = a.ring()->zero();
    for (size_t k = 1; k <= n; ++k) s += a.ring()->from_int(Int(k)) * a.coeff(k) * b.coeff(n - k);
    b.set_coeff(n, exact_div(s, Int(n)));
  }
  return b;
}

Series series_log(const Series& a) {
  if (!a.ring()->is_rational()) throw Error("series_log is defined over Q only, got " + a.ring()->name());
  if (!a.is_unit()) throw Error("series_log needs constant term 1");
  // n*c_n = n*a_n - sum_{k=1..n-1} k*c_k*a_{n-k}
  Series c(a.ring(), a.order());
  for (size_t n = 1; n <= a.order(); ++n) {
    Value s = a.ring()->from_int(Int(n)) * a.coeff(n);
    for (size_t k = 1; k < n; ++k) s -= a.ring()->from_int(Int(k)) * c.coeff(k) * a.coeff(n - k);
    c.set_coeff(n, exact_div(s, Int(n)));
  }
  return c;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    std::string cs = c_[i].to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit_coeff = (cs == "1") && i > 0;
    if (!unit_coeff) os << cs;
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  os << " + O(t^" << (order_ + 1) << ")";
  return os.str();
}

}  // namespace wittrace
