#ifndef WITTRACE_RING_HPP
#define WITTRACE_RING_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wittrace/bigint.hpp"
#include "wittrace/error.hpp"
#include "wittrace/mpoly.hpp"

namespace wittrace {

enum class RingKind { Integers, Rationals, Mod, Poly };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;
class Value;

// One of the supported exact coefficient rings: Z, Q, Z/m, Z[x_1..x_k].
// Instances are immutable and shared; values carry a pointer to their ring.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr mod(Int modulus);                        // modulus >= 2
  static RingPtr poly(std::vector<std::string> vars);     // distinct, sorted

  RingKind kind() const { return kind_; }
  const Int& modulus() const { return modulus_; }
  const std::vector<std::string>& vars() const { return vars_; }
  bool torsion_free() const { return kind_ != RingKind::Mod; }
  bool is_rational() const { return kind_ == RingKind::Rationals; }
  std::string name() const;

  bool same_as(const Ring& other) const;

  Value zero() const;
  Value one() const;
  Value from_int(Int n) const;
  Value from_rational(Rational q) const;   // Rationals only
  Value from_poly(MPoly p) const;          // Poly only
  Value var(uint32_t i) const;             // Poly only

 private:
  Ring(RingKind k, Int m, std::vector<std::string> vs)
      : kind_(k), modulus_(std::move(m)), vars_(std::move(vs)) {}

  RingKind kind_;
  Int modulus_;
  std::vector<std::string> vars_;
};

// An element of a Ring.  Payload invariants: rationals canonical (lowest
// terms, positive denominator, kept by cpp_rational); residues in [0, m);
// polynomial terms sorted graded-lex with no zero coefficients.
class Value {
 public:
  Value() = default;
  Value(RingPtr ring, Int n);
  Value(RingPtr ring, Rational q);
  Value(RingPtr ring, MPoly p);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const Int& as_int() const { return std::get<Int>(v_); }            // Integers / Mod
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const MPoly& as_poly() const { return std::get<MPoly>(v_); }

  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  Value operator-() const;
  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }

  std::string to_string() const;

 private:
  friend class Ring;
  friend Value exact_div(const Value&, const Int&);
  friend void check_same_ring(const Value&, const Value&);

  RingPtr ring_;
  std::variant<Int, Rational, MPoly> v_;
};

void check_same_ring(const Value& a, const Value& b);

// Unique b with n*b = a, or NotDivisibleError.  n is a positive integer.
Value exact_div(const Value& a, const Int& n);

// Ring endomorphism of a supported coefficient ring.  Z, Q and Z/m admit
// only the identity; a polynomial ring carries substitution endomorphisms
// x_i |-> images[i].
class RingEndo {
 public:
  static RingEndo identity(RingPtr ring);
  static RingEndo substitution(RingPtr ring, std::vector<MPoly> images);

  bool is_identity() const { return images_.empty(); }
  const RingPtr& ring() const { return ring_; }
  Value apply(const Value& v) const;
  RingEndo compose_with(const RingEndo& inner) const;  // this o inner

 private:
  RingEndo(RingPtr r, std::vector<MPoly> im) : ring_(std::move(r)), images_(std::move(im)) {}
  RingPtr ring_;
  std::vector<MPoly> images_;  // empty = identity
};

}  // namespace wittrace

#endif
