#include "wittrace/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wittrace {

RingPtr Ring::integers() {
  static const RingPtr r(new Ring(RingKind::Integers, 0, {}));
  return r;
}

RingPtr Ring::rationals() {
  static const RingPtr r(new Ring(RingKind::Rationals, 0, {}));
  return r;
}

RingPtr Ring::mod(Int modulus) {
  if (modulus < 2) throw Error("modulus must be >= 2, got " + modulus.str());
  return RingPtr(new Ring(RingKind::Mod, std::move(modulus), {}));
}

RingPtr Ring::poly(std::vector<std::string> vars) {
  if (vars.empty()) throw Error("polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (auto& v : vars) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
  }
  if (!std::is_sorted(vars.begin(), vars.end()))
    throw Error("variable names must be lexicographically ordered");
  return RingPtr(new Ring(RingKind::Poly, 0, std::move(vars)));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::Mod: return "Z/" + modulus_.str();
    case RingKind::Poly: {
      std::string s = "Z[";
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
      }
      return s + "]";
    }
  }
  return "?";
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  if (kind_ == RingKind::Mod) return modulus_ == o.modulus_;
  if (kind_ == RingKind::Poly) return vars_ == o.vars_;
  return true;
}

Value Ring::zero() const { return from_int(0); }
Value Ring::one() const { return from_int(1); }

Value Ring::from_int(Int n) const {
  RingPtr self = shared_from_this();
  switch (kind_) {
    case RingKind::Integers: return Value(self, std::move(n));
    case RingKind::Mod: return Value(self, mod_floor(n, modulus_));
    case RingKind::Rationals: return Value(self, Rational(std::move(n)));
    case RingKind::Poly:
      return Value(self, MPoly::constant(static_cast<uint32_t>(vars_.size()), std::move(n)));
  }
  throw Error("bad ring kind");
}

Value Ring::from_rational(Rational q) const {
  if (kind_ != RingKind::Rationals) throw Error("from_rational: ring is " + name());
  return Value(shared_from_this(), std::move(q));
}

Value Ring::from_poly(MPoly p) const {
  if (kind_ != RingKind::Poly) throw Error("from_poly: ring is " + name());
  if (p.nvars() != vars_.size()) throw Error("polynomial has wrong variable count");
  return Value(shared_from_this(), std::move(p));
}

Value Ring::var(uint32_t i) const {
  if (kind_ != RingKind::Poly) throw Error("var: ring is " + name());
  return Value(shared_from_this(), MPoly::variable(static_cast<uint32_t>(vars_.size()), i));
}

Value::Value(RingPtr ring, Int n) : ring_(std::move(ring)), v_(std::move(n)) {}
Value::Value(RingPtr ring, Rational q) : ring_(std::move(ring)), v_(std::move(q)) {}
Value::Value(RingPtr ring, MPoly p) : ring_(std::move(ring)), v_(std::move(p)) {}

void check_same_ring(const Value& a, const Value& b) {
  if (!a.ring_ || !b.ring_) throw RingMismatchError("value has no ring");
  if (!a.ring_->same_as(*b.ring_))
    throw RingMismatchError("ring mismatch: " + a.ring_->name() + " vs " + b.ring_->name());
}

bool Value::is_zero() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::Mod: return as_int() == 0;
    case RingKind::Rationals: return as_rational() == 0;
    case RingKind::Poly: return as_poly().is_zero();
  }
  return false;
}

bool Value::is_one() const { return *this == ring_->one(); }

bool Value::operator==(const Value& o) const {
  check_same_ring(*this, o);
  return v_ == o.v_;
}

Value operator+(const Value& a, const Value& b) {
  check_same_ring(a, b);
  const Ring& R = *a.ring();
  switch (R.kind()) {
    case RingKind::Integers: return Value(a.ring(), Int(a.as_int() + b.as_int()));
    case RingKind::Mod: return Value(a.ring(), mod_floor(a.as_int() + b.as_int(), R.modulus()));
    case RingKind::Rationals: return Value(a.ring(), Rational(a.as_rational() + b.as_rational()));
    case RingKind::Poly: return Value(a.ring(), a.as_poly() + b.as_poly());
  }
  throw Error("bad ring kind");
}

Value operator-(const Value& a, const Value& b) {
  check_same_ring(a, b);
  const Ring& R = *a.ring();
  switch (R.kind()) {
    case RingKind::Integers: return Value(a.ring(), Int(a.as_int() - b.as_int()));
    case RingKind::Mod: return Value(a.ring(), mod_floor(a.as_int() - b.as_int(), R.modulus()));
    case RingKind::Rationals: return Value(a.ring(), Rational(a.as_rational() - b.as_rational()));
    case RingKind::Poly: return Value(a.ring(), a.as_poly() - b.as_poly());
  }
  throw Error("bad ring kind");
}

Value operator*(const Value& a, const Value& b) {
  check_same_ring(a, b);
  const Ring& R = *a.ring();
  switch (R.kind()) {
    case RingKind::Integers: return Value(a.ring(), Int(a.as_int() * b.as_int()));
    case RingKind::Mod: return Value(a.ring(), mod_floor(a.as_int() * b.as_int(), R.modulus()));
    case RingKind::Rationals: return Value(a.ring(), Rational(a.as_rational() * b.as_rational()));
    case RingKind::Poly: return Value(a.ring(), a.as_poly() * b.as_poly());
  }
  throw Error("bad ring kind");
}

Value Value::operator-() const {
  switch (ring_->kind()) {
    case RingKind::Integers: return Value(ring_, Int(-as_int()));
    case RingKind::Mod: return Value(ring_, mod_floor(-as_int(), ring_->modulus()));
    case RingKind::Rationals: return Value(ring_, Rational(-as_rational()));
    case RingKind::Poly: return Value(ring_, -as_poly());
  }
  throw Error("bad ring kind");
}

std::string Value::to_string() const {
  switch (ring_->kind()) {
    case RingKind::Integers:
    case RingKind::Mod: return as_int().str();
    case RingKind::Rationals: {
      const Rational& q = as_rational();
      if (denominator(q) == 1) return numerator(q).str();
      return numerator(q).str() + "/" + denominator(q).str();
    }
    case RingKind::Poly: return as_poly().to_string(ring_->vars());
  }
  return "?";
}

Value exact_div(const Value& a, const Int& n) {
  if (n <= 0) throw Error("exact_div expects a positive integer divisor");
  const Ring& R = *a.ring();
  switch (R.kind()) {
    case RingKind::Integers: {
      const Int& x = a.as_int();
      if (x % n != 0)
        throw NotDivisibleError(x.str() + " is not divisible by " + n.str() + " in Z");
      return Value(a.ring(), Int(x / n));
    }
    case RingKind::Rationals:
      return Value(a.ring(), Rational(a.as_rational() / Rational(n)));
    case RingKind::Mod: {
      Int inv;
      if (!mod_inverse(n, R.modulus(), inv))
        throw NotDivisibleError("division by " + n.str() + " is not unique mod " + R.modulus().str());
      return Value(a.ring(), mod_floor(a.as_int() * inv, R.modulus()));
    }
    case RingKind::Poly:
      return Value(a.ring(), a.as_poly().exact_div_int(n));
  }
  throw Error("bad ring kind");
}

RingEndo RingEndo::identity(RingPtr ring) { return RingEndo(std::move(ring), {}); }

RingEndo RingEndo::substitution(RingPtr ring, std::vector<MPoly> images) {
  if (ring->kind() != RingKind::Poly)
    throw NotAnEndomorphismError(ring->name() + " admits only the identity endomorphism");
  if (images.size() != ring->vars().size())
    throw NotAnEndomorphismError("substitution needs one image per variable");
  for (auto& p : images)
    if (p.nvars() != ring->vars().size())
      throw NotAnEndomorphismError("substitution image has wrong variable count");
  return RingEndo(std::move(ring), std::move(images));
}

Value RingEndo::apply(const Value& v) const {
  if (!v.ring()->same_as(*ring_)) throw RingMismatchError("endomorphism applied to foreign value");
  if (is_identity()) return v;
  return Value(v.ring(), v.as_poly().compose(images_));
}

RingEndo RingEndo::compose_with(const RingEndo& inner) const {
  if (!ring_->same_as(*inner.ring_)) throw RingMismatchError("composing endomorphisms of different rings");
  if (is_identity()) return inner;
  if (inner.is_identity()) return *this;
  std::vector<MPoly> im;
  im.reserve(inner.images_.size());
  for (auto& p : inner.images_) im.push_back(p.compose(images_));
  return RingEndo(ring_, std::move(im));
}

}  // namespace wittrace
