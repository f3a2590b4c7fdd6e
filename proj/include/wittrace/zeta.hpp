#ifndef WITTRACE_ZETA_HPP
#define WITTRACE_ZETA_HPP

#include "wittrace/endo.hpp"

namespace wittrace {

// Endomorphism of a graded module (homology with a self-map): one square
// untwisted matrix per degree 0..top, over Z or Q.
class GradedEndo {
 public:
  GradedEndo() = default;
  explicit GradedEndo(std::vector<Matrix> components);

  size_t degrees() const { return comps_.size(); }  // 0 allowed (zero module)
  const Matrix& component(size_t i) const { return comps_.at(i); }
  const std::vector<Matrix>& components() const { return comps_; }

 private:
  std::vector<Matrix> comps_;
};

// L(g^n) = sum_i (-1)^i tr(g_i^n), as a value of the component ring
// (Z when empty).
Value lefschetz_number(const GradedEndo& g, int n);

// All of L(g^1)..L(g^N) at once.
std::vector<Value> lefschetz_numbers(const GradedEndo& g, int N);

// zeta(t) = exp(sum_{n>=1} L(g^n) t^n / n) truncated at order N; always
// computed over Q.
Series zeta_exp(const GradedEndo& g, size_t N);

struct ZetaRational {
  Series numerator;    // prod_{i odd} det(1 - t g_i)
  Series denominator;  // prod_{i even} det(1 - t g_i)
};

// The closed rational form; exact polynomials, zero-padded to order N.
ZetaRational zeta_rational(const GradedEndo& g, size_t N);

}  // namespace wittrace

#endif
