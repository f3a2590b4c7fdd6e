#include "wittrace/witt.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>

#include <json.hpp>

#include "wittrace/kernels.hpp"

namespace wittrace {

namespace {

std::vector<int> divisors_of(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return ds;
}

}  // namespace

TruncationSet TruncationSet::interval(int N) {
  if (N < 1) throw InvalidTruncationSetError("interval truncation set needs N >= 1");
  std::vector<int> e(N);
  for (int i = 0; i < N; ++i) e[i] = i + 1;
  return TruncationSet(Kind::Interval, N, std::move(e));
}

TruncationSet TruncationSet::divisors(int n) {
  if (n < 1) throw InvalidTruncationSetError("divisor truncation set needs n >= 1");
  return TruncationSet(Kind::Divisors, n, divisors_of(n));
}

bool TruncationSet::contains(int n) const {
  if (kind_ == Kind::Interval) return n >= 1 && n <= bound_;
  return n >= 1 && bound_ % n == 0;
}

size_t TruncationSet::index_of(int n) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), n);
  if (it == elems_.end() || *it != n)
    throw InvalidTruncationSetError("index " + std::to_string(n) + " not in truncation set");
  return static_cast<size_t>(it - elems_.begin());
}

WittVector::WittVector(RingPtr ring, TruncationSet trunc)
    : ring_(std::move(ring)), trunc_(std::move(trunc)) {
  coords_.assign(trunc_.size(), ring_->zero());
}

WittVector::WittVector(RingPtr ring, TruncationSet trunc, std::vector<Value> coords)
    : ring_(std::move(ring)), trunc_(std::move(trunc)), coords_(std::move(coords)) {
  if (coords_.size() != trunc_.size())
    throw Error("Witt vector needs one coordinate per truncation-set element");
  for (auto& v : coords_)
    if (!v.ring()->same_as(*ring_)) throw RingMismatchError("Witt coordinate in wrong ring");
}

void WittVector::set_coord(int n, Value v) {
  if (!v.ring()->same_as(*ring_)) throw RingMismatchError("Witt coordinate in wrong ring");
  coords_.at(trunc_.index_of(n)) = std::move(v);
}

bool WittVector::operator==(const WittVector& o) const {
  return trunc_ == o.trunc_ && coords_ == o.coords_;
}

GhostVector::GhostVector(RingPtr ring, TruncationSet trunc)
    : ring_(std::move(ring)), trunc_(std::move(trunc)) {
  values_.assign(trunc_.size(), ring_->zero());
}

GhostVector::GhostVector(RingPtr ring, TruncationSet trunc, std::vector<Value> values)
    : ring_(std::move(ring)), trunc_(std::move(trunc)), values_(std::move(values)) {
  if (values_.size() != trunc_.size())
    throw Error("ghost vector needs one value per truncation-set element");
  for (auto& v : values_)
    if (!v.ring()->same_as(*ring_)) throw RingMismatchError("ghost value in wrong ring");
}

void GhostVector::set_value(int n, Value v) {
  if (!v.ring()->same_as(*ring_)) throw RingMismatchError("ghost value in wrong ring");
  values_.at(trunc_.index_of(n)) = std::move(v);
}

bool GhostVector::operator==(const GhostVector& o) const {
  return trunc_ == o.trunc_ && values_ == o.values_;
}

namespace {

Value value_pow(const Value& v, int e) {
  Value r = v.ring()->one();
  Value base = v;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

}  // namespace

GhostVector ghost(const WittVector& a) {
  GhostVector w(a.ring(), a.trunc());
  for (int n : a.trunc().elements()) {
    Value s = a.ring()->zero();
    for (int d : divisors_of(n)) {
      // divisor-closure guarantees d is in S
      s += a.ring()->from_int(Int(d)) * value_pow(a.coord(d), n / d);
    }
    w.set_value(n, s);
  }
  return w;
}

WittVector ghost_to_witt(const GhostVector& w) {
  if (!w.ring()->torsion_free())
    throw Error("ghost_to_witt needs a torsion-free ring, got " + w.ring()->name());
  WittVector a(w.ring(), w.trunc());
  for (int n : w.trunc().elements()) {
    Value rem = w.value(n);
    for (int d : divisors_of(n)) {
      if (d == n) continue;
      rem -= w.ring()->from_int(Int(d)) * value_pow(a.coord(d), n / d);
    }
    try {
      a.set_coord(n, exact_div(rem, Int(n)));
    } catch (const NotDivisibleError&) {
      throw NotIntegralError(n, "ghost vector is not integral at index " + std::to_string(n));
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Universal polynomials
// ---------------------------------------------------------------------------

namespace {

// Ghost polynomial w_n in the variables z_1..z_n placed at `offset` inside a
// polynomial ring with nvars variables.
MPoly ghost_poly(int n, uint32_t nvars, uint32_t offset) {
  MPoly w(nvars);
  for (int d : divisors_of(n)) {
    MPoly t = MPoly::variable(nvars, offset + static_cast<uint32_t>(d) - 1).pow(n / d);
    w += t.scaled(Int(d));
  }
  return w;
}

// Shared recursion: solve sum_{d|n} d * out_d^(n/d) = rhs_n for out_n.
// Divisions must be exact over Z; a failure is an integrality violation.
std::vector<MPoly> solve_ghost_system(int max_n, const std::vector<MPoly>& rhs) {
  std::vector<MPoly> out;
  out.reserve(max_n);
  for (int n = 1; n <= max_n; ++n) {
    MPoly rem = rhs[n - 1];
    for (int d : divisors_of(n)) {
      if (d == n) continue;
      rem -= out[d - 1].pow(n / d).scaled(Int(d));
    }
    try {
      out.push_back(rem.exact_div_int(Int(n)));
    } catch (const NotDivisibleError& e) {
      throw std::logic_error(std::string("universal Witt polynomial is not integral: ") + e.what());
    }
  }
  return out;
}

UniversalWittPolynomials derive_universal_polys_impl(int max_n) {
  if (max_n < 1) throw Error("derive_universal_polys needs max_n >= 1");
  UniversalWittPolynomials u;
  u.max_n = max_n;
  uint32_t nv = 2 * static_cast<uint32_t>(max_n);
  std::vector<MPoly> rhs_sum, rhs_prod;
  for (int n = 1; n <= max_n; ++n) {
    MPoly gx = ghost_poly(n, nv, 0);
    MPoly gy = ghost_poly(n, nv, static_cast<uint32_t>(max_n));
    rhs_sum.push_back(gx + gy);
    rhs_prod.push_back(gx * gy);
  }
  u.sum = solve_ghost_system(max_n, rhs_sum);
  u.prod = solve_ghost_system(max_n, rhs_prod);
  // S_n and P_n only involve x_d, y_d for d | n; renumber y_d from slot
  // max_n+d-1 down to n+d-1 so each polynomial is independent of max_n.
  for (int n = 1; n <= max_n; ++n) {
    uint32_t nvn = 2 * static_cast<uint32_t>(n);
    std::vector<MPoly> images(nv, MPoly(nvn));
    for (int d = 1; d <= n; ++d) {
      images[d - 1] = MPoly::variable(nvn, static_cast<uint32_t>(d) - 1);
      images[max_n + d - 1] = MPoly::variable(nvn, static_cast<uint32_t>(n + d) - 1);
    }
    u.sum[n - 1] = u.sum[n - 1].compose(images);
    u.prod[n - 1] = u.prod[n - 1].compose(images);
  }
  return u;
}

std::vector<MPoly> derive_frobenius_polys_impl(int r, int max_m) {
  std::vector<MPoly> rhs;
  uint32_t nv = static_cast<uint32_t>(r * max_m);
  for (int m = 1; m <= max_m; ++m) rhs.push_back(ghost_poly(r * m, nv, 0));
  return solve_ghost_system(max_m, rhs);
}

// --- persisted cache -------------------------------------------------------

nlohmann::json mpoly_to_json(const MPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto& t : p.terms()) {
    nlohmann::json jt;
    jt["coeff"] = t.coeff.str();
    jt["exps"] = t.exps;
    terms.push_back(std::move(jt));
  }
  return nlohmann::json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const nlohmann::json& j) {
  uint32_t nv = j.at("nvars").get<uint32_t>();
  std::vector<MTerm<Int>> ts;
  for (auto& jt : j.at("terms")) {
    MTerm<Int> t;
    t.coeff = Int(jt.at("coeff").get<std::string>());
    t.exps = jt.at("exps").get<std::vector<uint32_t>>();
    ts.push_back(std::move(t));
  }
  return MPoly::from_terms(nv, std::move(ts));
}

// Lazily grown cache of universal polynomials.  Reads are concurrent;
// extensions are serialized and readers never observe a partial state.
class UniversalPolyCache {
 public:
  static UniversalPolyCache& instance() {
    static UniversalPolyCache c;
    return c;
  }

  const MPoly& sum(int n) {
    ensure(n);
    std::shared_lock lk(mu_);
    return polys_.sum[n - 1];
  }

  const MPoly& prod(int n) {
    ensure(n);
    std::shared_lock lk(mu_);
    return polys_.prod[n - 1];
  }

  const MPoly& frobenius(int r, int m) {
    {
      std::shared_lock lk(mu_);
      auto it = frob_.find(r);
      if (it != frob_.end() && static_cast<int>(it->second.size()) >= m)
        return it->second[m - 1];
    }
    std::unique_lock lk(mu_);
    auto& vec = frob_[r];
    if (static_cast<int>(vec.size()) < m) vec = derive_frobenius_polys_impl(r, m);
    return vec[m - 1];
  }

 private:
  void ensure(int n) {
    {
      std::shared_lock lk(mu_);
      if (polys_.max_n >= n) return;
    }
    std::unique_lock lk(mu_);
    if (polys_.max_n >= n) return;
    if (load_from_disk(n)) return;
    polys_ = derive_universal_polys_impl(n);
    save_to_disk();
  }

  static std::filesystem::path cache_file() {
    const char* dir = std::getenv("WITT_TRACE_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / "witt_universal_polys.json";
  }

  bool load_from_disk(int need_n) {
    auto f = cache_file();
    if (f.empty()) return false;
    std::ifstream in(f);
    if (!in) return false;
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      int mn = j.at("max_n").get<int>();
      if (mn < need_n) return false;
      UniversalWittPolynomials u;
      u.max_n = mn;
      for (auto& jp : j.at("sum")) u.sum.push_back(mpoly_from_json(jp));
      for (auto& jp : j.at("prod")) u.prod.push_back(mpoly_from_json(jp));
      if (static_cast<int>(u.sum.size()) != mn || static_cast<int>(u.prod.size()) != mn) return false;
      polys_ = std::move(u);
      return true;
    } catch (...) {
      return false;  // stale or corrupt cache: rederive
    }
  }

  void save_to_disk() const {
    auto f = cache_file();
    if (f.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(f.parent_path(), ec);
    nlohmann::json j;
    j["max_n"] = polys_.max_n;
    j["sum"] = nlohmann::json::array();
    j["prod"] = nlohmann::json::array();
    for (auto& p : polys_.sum) j["sum"].push_back(mpoly_to_json(p));
    for (auto& p : polys_.prod) j["prod"].push_back(mpoly_to_json(p));
    std::ofstream out(f);
    if (out) out << j.dump() << "\n";
  }

  std::shared_mutex mu_;
  UniversalWittPolynomials polys_;
  std::map<int, std::vector<MPoly>> frob_;
};

// Evaluate a cached universal polynomial at ring values.  Variables are
// indexed per the conventions in witt.hpp; `point` supplies all of them.
Value eval_univ(const MPoly& p, const std::vector<Value>& point, const RingPtr& ring) {
  // Fast lane for Z/m with small modulus: per-term monomial values, then one
  // kernel dot product against the reduced coefficients.
  if (ring->kind() == RingKind::Mod && kernels::small_modulus(ring->modulus())) {
    uint32_t m = static_cast<uint32_t>(to_int64(ring->modulus()));
    std::vector<std::vector<uint32_t>> pow(point.size());
    std::vector<uint32_t> coeffs, monos;
    coeffs.reserve(p.terms().size());
    monos.reserve(p.terms().size());
    for (auto& t : p.terms()) {
      coeffs.push_back(static_cast<uint32_t>(to_int64(mod_floor(t.coeff, ring->modulus()))));
      uint64_t mv = 1;
      for (uint32_t i = 0; i < t.exps.size(); ++i) {
        uint32_t e = t.exps[i];
        if (!e) continue;
        auto& pv = pow[i];
        if (pv.empty()) pv.push_back(1 % m);
        while (pv.size() <= e) {
          uint64_t nx = static_cast<uint64_t>(pv.back()) *
                        static_cast<uint64_t>(to_int64(point[i].as_int())) % m;
          pv.push_back(static_cast<uint32_t>(nx));
        }
        mv = mv * pv[e] % m;
      }
      monos.push_back(static_cast<uint32_t>(mv));
    }
    uint32_t r = kernels::active().dot_mod(coeffs.data(), monos.data(), coeffs.size(), m);
    return Value(ring, Int(r));
  }
  return p.eval<Value>(
      point, [&](const Int& c) { return ring->from_int(c); }, ring->one());
}

// Assemble the evaluation point (x_1..x_n, y_1..y_n) for coordinate n; slots
// whose index is outside the truncation set never occur in the polynomial.
std::vector<Value> pair_point(int n, const WittVector& a, const WittVector& b) {
  std::vector<Value> pt(2 * static_cast<size_t>(n), a.ring()->zero());
  for (int d : divisors_of(n)) {
    pt[d - 1] = a.coord(d);
    pt[n + d - 1] = b.coord(d);
  }
  return pt;
}

void check_witt_compatible(const WittVector& a, const WittVector& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw RingMismatchError("Witt ring mismatch: " + a.ring()->name() + " vs " + b.ring()->name());
  if (!(a.trunc() == b.trunc())) throw InvalidTruncationSetError("truncation set mismatch");
}

}  // namespace

UniversalWittPolynomials derive_universal_polys(int max_n) {
  return derive_universal_polys_impl(max_n);
}

const MPoly& cached_sum_poly(int n) { return UniversalPolyCache::instance().sum(n); }
const MPoly& cached_prod_poly(int n) { return UniversalPolyCache::instance().prod(n); }
const MPoly& cached_frobenius_poly(int r, int m) {
  return UniversalPolyCache::instance().frobenius(r, m);
}

WittVector witt_zero(RingPtr ring, TruncationSet trunc) {
  return WittVector(std::move(ring), std::move(trunc));
}

WittVector witt_one(RingPtr ring, TruncationSet trunc) {
  WittVector w(ring, std::move(trunc));
  w.set_coord(1, ring->one());
  return w;
}

WittVector witt_add(const WittVector& a, const WittVector& b) {
  check_witt_compatible(a, b);
  WittVector r(a.ring(), a.trunc());
  for (int n : a.trunc().elements())
    r.set_coord(n, eval_univ(cached_sum_poly(n), pair_point(n, a, b), a.ring()));
  return r;
}

WittVector witt_mul(const WittVector& a, const WittVector& b) {
  check_witt_compatible(a, b);
  WittVector r(a.ring(), a.trunc());
  for (int n : a.trunc().elements())
    r.set_coord(n, eval_univ(cached_prod_poly(n), pair_point(n, a, b), a.ring()));
  return r;
}

WittVector witt_neg(const WittVector& a) {
  // S_m(x, y) = x_m + y_m + R(x_{<m}, y_{<m}), so the additive inverse can
  // be solved coordinatewise: z_m = -S_m(a, z) evaluated with z_m = 0.
  WittVector z(a.ring(), a.trunc());
  for (int m : a.trunc().elements()) {
    std::vector<Value> pt(2 * static_cast<size_t>(m), a.ring()->zero());
    for (int d : divisors_of(m)) {
      pt[d - 1] = a.coord(d);
      if (d < m) pt[m + d - 1] = z.coord(d);
    }
    z.set_coord(m, -eval_univ(cached_sum_poly(m), pt, a.ring()));
  }
  return z;
}

WittVector witt_sub(const WittVector& a, const WittVector& b) {
  return witt_add(a, witt_neg(b));
}

WittVector witt_int(RingPtr ring, const TruncationSet& trunc, const Int& c) {
  // double-and-add on the Witt addition
  bool neg = c < 0;
  Int n = neg ? Int(-c) : c;
  WittVector acc = witt_zero(ring, trunc);
  WittVector base = witt_one(ring, trunc);
  while (n > 0) {
    if ((n & 1) != 0) acc = witt_add(acc, base);
    n >>= 1;
    if (n > 0) base = witt_add(base, base);
  }
  return neg ? witt_neg(acc) : acc;
}

Series witt_to_series(const WittVector& a) {
  if (a.trunc().kind() != TruncationSet::Kind::Interval)
    throw InvalidTruncationSetError("witt_to_series needs an interval truncation set");
  size_t N = static_cast<size_t>(a.trunc().bound());
  Series u = Series::one(a.ring(), N);
  for (int n : a.trunc().elements()) {
    // multiply by (1 - a_n t^n)
    Series f = Series::one(a.ring(), N);
    f.set_coeff(static_cast<size_t>(n), -a.coord(n));
    u = u * f;
  }
  return u;
}

WittVector series_to_witt(const Series& u) {
  if (!u.is_unit()) throw Error("series_to_witt needs constant term 1");
  int N = static_cast<int>(u.order());
  WittVector a(u.ring(), TruncationSet::interval(N));
  Series rem = u;
  for (int n = 1; n <= N; ++n) {
    Value an = -rem.coeff(static_cast<size_t>(n));
    a.set_coord(n, an);
    if (an.is_zero()) continue;
    // divide off (1 - a_n t^n), i.e. multiply by sum_k a_n^k t^{nk}
    Series inv(u.ring(), u.order());
    Value p = u.ring()->one();
    for (size_t k = 0; k * n <= u.order(); ++k) {
      inv.set_coeff(k * static_cast<size_t>(n), p);
      p *= an;
    }
    rem = rem * inv;
  }
  return a;
}

WittVector frobenius(int r, const WittVector& a) {
  if (r < 1) throw InvalidTruncationSetError("frobenius needs r >= 1");
  const TruncationSet& S = a.trunc();
  TruncationSet target = S;
  if (S.kind() == TruncationSet::Kind::Interval) {
    int M = S.bound() / r;
    if (M < 1)
      throw InvalidTruncationSetError("frobenius index " + std::to_string(r) +
                                      " empties the truncation set {1.." + std::to_string(S.bound()) + "}");
    target = TruncationSet::interval(M);
  } else {
    if (S.bound() % r != 0)
      throw InvalidTruncationSetError("frobenius index " + std::to_string(r) +
                                      " does not divide " + std::to_string(S.bound()));
    target = TruncationSet::divisors(S.bound() / r);
  }
  WittVector out(a.ring(), target);
  for (int m : target.elements()) {
    const MPoly& f = cached_frobenius_poly(r, m);
    std::vector<Value> pt(static_cast<size_t>(r) * m, a.ring()->zero());
    for (int d : divisors_of(r * m)) pt[d - 1] = a.coord(d);
    out.set_coord(m, eval_univ(f, pt, a.ring()));
  }
  return out;
}

WittVector verschiebung(int r, const WittVector& a) {
  if (r < 1) throw InvalidTruncationSetError("verschiebung needs r >= 1");
  const TruncationSet& S = a.trunc();
  TruncationSet target = S.kind() == TruncationSet::Kind::Interval
                             ? TruncationSet::interval(S.bound())
                             : TruncationSet::divisors(r * S.bound());
  WittVector out(a.ring(), target);
  for (int m : target.elements())
    if (m % r == 0 && S.contains(m / r)) out.set_coord(m, a.coord(m / r));
  return out;
}

WittVector restriction(const WittVector& a, int d) {
  const TruncationSet& S = a.trunc();
  TruncationSet target = S;
  if (S.kind() == TruncationSet::Kind::Divisors) {
    if (d < 1 || S.bound() % d != 0)
      throw InvalidTruncationSetError("restriction target " + std::to_string(d) +
                                      " does not divide " + std::to_string(S.bound()));
    target = TruncationSet::divisors(d);
  } else {
    if (d < 1 || d > S.bound())
      throw InvalidTruncationSetError("restriction target {1.." + std::to_string(d) +
                                      "} is not contained in {1.." + std::to_string(S.bound()) + "}");
    target = TruncationSet::interval(d);
  }
  WittVector out(a.ring(), target);
  for (int n : target.elements()) out.set_coord(n, a.coord(n));
  return out;
}

}  // namespace wittrace
