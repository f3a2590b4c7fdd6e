#ifndef WITTRACE_MPOLY_HPP
#define WITTRACE_MPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "wittrace/bigint.hpp"
#include "wittrace/error.hpp"

namespace wittrace {

using ExpVec = std::vector<uint32_t>;

inline uint32_t exp_total_degree(const ExpVec& e) {
  uint32_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

// Graded lexicographic order: compare total degree first, then exponents of
// x_1, x_2, ... in turn.  Used as the canonical term order everywhere.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    uint32_t da = exp_total_degree(a), db = exp_total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

template <class C>
struct MTerm {
  ExpVec exps;
  C coeff;
  bool operator==(const MTerm&) const = default;
};

// Sparse multivariate polynomial with terms kept in graded-lex descending
// order and no zero coefficients stored.
template <class C>
class MPolyT {
 public:
  explicit MPolyT(uint32_t nvars = 0) : nvars_(nvars) {}

  static MPolyT constant(uint32_t nvars, C c) {
    MPolyT p(nvars);
    if (!(c == C(0))) p.terms_.push_back({ExpVec(nvars, 0), std::move(c)});
    return p;
  }

  // x_{i+1}, i.e. the variable with 0-based index i.
  static MPolyT variable(uint32_t nvars, uint32_t i) {
    MPolyT p(nvars);
    ExpVec e(nvars, 0);
    e.at(i) = 1;
    p.terms_.push_back({std::move(e), C(1)});
    return p;
  }

  uint32_t nvars() const { return nvars_; }
  const std::vector<MTerm<C>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  uint32_t total_degree() const {
    uint32_t d = 0;
    for (auto& t : terms_) d = std::max(d, exp_total_degree(t.exps));
    return d;
  }

  bool operator==(const MPolyT&) const = default;

  MPolyT operator-() const {
    MPolyT r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MPolyT operator+(const MPolyT& a, const MPolyT& b) { return merged(a, b, false); }
  friend MPolyT operator-(const MPolyT& a, const MPolyT& b) { return merged(a, b, true); }

  friend MPolyT operator*(const MPolyT& a, const MPolyT& b) {
    uint32_t nv = std::max(a.nvars_, b.nvars_);
    std::map<ExpVec, C, GradedLexLess> acc;
    for (auto& ta : a.terms_) {
      for (auto& tb : b.terms_) {
        ExpVec e(nv, 0);
        for (uint32_t i = 0; i < ta.exps.size(); ++i) e[i] = ta.exps[i];
        for (uint32_t i = 0; i < tb.exps.size(); ++i) e[i] += tb.exps[i];
        auto it = acc.find(e);
        if (it == acc.end())
          acc.emplace(std::move(e), ta.coeff * tb.coeff);
        else
          it->second += ta.coeff * tb.coeff;
      }
    }
    return from_map(nv, acc);
  }

  MPolyT& operator+=(const MPolyT& o) { return *this = *this + o; }
  MPolyT& operator-=(const MPolyT& o) { return *this = *this - o; }
  MPolyT& operator*=(const MPolyT& o) { return *this = *this * o; }

  MPolyT scaled(const C& c) const {
    if (c == C(0)) return MPolyT(nvars_);
    MPolyT r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  MPolyT pow(uint32_t e) const {
    MPolyT r = constant(nvars_, C(1));
    MPolyT base = *this;
    while (e > 0) {
      if (e & 1u) r *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return r;
  }

  // Exact division of every coefficient by n; throws NotDivisibleError
  // (for C = Int) when some coefficient is not divisible.
  MPolyT exact_div_int(const Int& n) const {
    MPolyT r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) {
      C q = div_coeff(t.coeff, n);
      r.terms_.push_back({t.exps, std::move(q)});
    }
    return r;
  }

  // Substitute images[i] for variable i.
  MPolyT compose(const std::vector<MPolyT>& images) const {
    uint32_t nv = images.empty() ? nvars_ : images.front().nvars();
    MPolyT r(nv);
    for (auto& t : terms_) {
      MPolyT m = constant(nv, t.coeff);
      for (uint32_t i = 0; i < t.exps.size(); ++i)
        if (t.exps[i]) m *= images.at(i).pow(t.exps[i]);
      r += m;
    }
    return r;
  }

  // Evaluate at a point given coefficient-ring values; V needs *, +, and a
  // way to embed C.  `embed` maps a coefficient into V, `one` is 1 in V.
  template <class V, class Embed>
  V eval(const std::vector<V>& point, Embed embed, const V& one) const {
    // power cache per variable
    std::vector<std::vector<V>> pow(point.size());
    V acc = embed(C(0));
    for (auto& t : terms_) {
      V m = embed(t.coeff);
      for (uint32_t i = 0; i < t.exps.size(); ++i) {
        uint32_t e = t.exps[i];
        if (!e) continue;
        auto& pv = pow[i];
        if (pv.empty()) pv.push_back(one);
        while (pv.size() <= e) pv.push_back(pv.back() * point[i]);
        m = m * pv[e];
      }
      acc = acc + m;
    }
    return acc;
  }

  // Plain evaluation over the coefficient type itself.
  C eval_at(const std::vector<C>& point) const {
    return eval<C>(point, [](const C& c) { return c; }, C(1));
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
      C c = t.coeff;
      bool neg = c < C(0);
      if (neg) c = -c;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      bool has_vars = exp_total_degree(t.exps) > 0;
      if (!(c == C(1)) || !has_vars) {
        os << c;
        if (has_vars) os << "*";
      }
      bool star = false;
      for (uint32_t i = 0; i < t.exps.size(); ++i) {
        if (!t.exps[i]) continue;
        if (star) os << "*";
        os << names.at(i);
        if (t.exps[i] > 1) os << "^" << t.exps[i];
        star = true;
      }
    }
    return os.str();
  }

  static MPolyT from_terms(uint32_t nvars, std::vector<MTerm<C>> ts) {
    std::map<ExpVec, C, GradedLexLess> acc;
    for (auto& t : ts) {
      if (t.exps.size() != nvars) t.exps.resize(nvars, 0);
      acc[t.exps] += t.coeff;
    }
    return from_map(nvars, acc);
  }

 private:
  static C div_coeff(const C& c, const Int& n);

  static MPolyT from_map(uint32_t nv, const std::map<ExpVec, C, GradedLexLess>& acc) {
    MPolyT r(nv);
    r.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!(it->second == C(0))) r.terms_.push_back({it->first, it->second});
    return r;
  }

  static MPolyT merged(const MPolyT& a, const MPolyT& b, bool sub) {
    uint32_t nv = std::max(a.nvars_, b.nvars_);
    std::map<ExpVec, C, GradedLexLess> acc;
    auto put = [&](const MTerm<C>& t, bool negate) {
      ExpVec e = t.exps;
      e.resize(nv, 0);
      auto it = acc.find(e);
      C v = negate ? C(-t.coeff) : t.coeff;
      if (it == acc.end())
        acc.emplace(std::move(e), std::move(v));
      else
        it->second += v;
    };
    for (auto& t : a.terms_) put(t, false);
    for (auto& t : b.terms_) put(t, sub);
    return from_map(nv, acc);
  }

  uint32_t nvars_;
  std::vector<MTerm<C>> terms_;
};

template <>
inline Int MPolyT<Int>::div_coeff(const Int& c, const Int& n) {
  if (c % n != 0)
    throw NotDivisibleError("polynomial coefficient " + c.str() + " not divisible by " + n.str());
  return c / n;
}

template <>
inline Rational MPolyT<Rational>::div_coeff(const Rational& c, const Int& n) {
  return c / Rational(n);
}

using MPoly = MPolyT<Int>;       // Z[x_1..x_k]
using QPoly = MPolyT<Rational>;  // internal derivations over Q

inline QPoly to_qpoly(const MPoly& p) {
  std::vector<MTerm<Rational>> ts;
  ts.reserve(p.terms().size());
  for (auto& t : p.terms()) ts.push_back({t.exps, Rational(t.coeff)});
  return QPoly::from_terms(p.nvars(), std::move(ts));
}

// Conversion that insists on integer coefficients.
inline MPoly to_zpoly_exact(const QPoly& p) {
  std::vector<MTerm<Int>> ts;
  ts.reserve(p.terms().size());
  for (auto& t : p.terms()) {
    if (denominator(t.coeff) != 1)
      throw NotDivisibleError("coefficient " + t.coeff.str() + " is not an integer");
    ts.push_back({t.exps, numerator(t.coeff)});
  }
  return MPoly::from_terms(p.nvars(), std::move(ts));
}

}  // namespace wittrace

#endif
