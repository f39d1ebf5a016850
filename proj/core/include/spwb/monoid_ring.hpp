#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spwb/ring.hpp"

namespace spwb {

// Element of the reduced monoid ring Z0[R] = Z[(R, *)] / Z<0>: an integer
// combination of basis symbols <a> for nonzero a, with <a><b> = <ab> and
// <0> identified with 0.
class Z0RElem {
 public:
  Z0RElem() = default;

  static Z0RElem basis(Elem a, const Ring& R);
  static Z0RElem constant(std::int64_t n, const Ring& R);

  const std::map<Elem, std::int64_t>& support() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(Elem a) const {
    auto it = c_.find(a);
    return it == c_.end() ? 0 : it->second;
  }
  void add_term(Elem a, std::int64_t n, const Ring& R);

  bool operator==(const Z0RElem& o) const = default;
  std::string to_string() const;

 private:
  // Keys must already be canonical nonzero residues; zero coefficients and
  // the key 0 are dropped.
  explicit Z0RElem(std::map<Elem, std::int64_t> m);

  friend Z0RElem z0_add(const Z0RElem&, const Z0RElem&);
  friend Z0RElem z0_neg(const Z0RElem&);
  friend Z0RElem z0_scale(std::int64_t, const Z0RElem&);

  std::map<Elem, std::int64_t> c_;  // nonzero residue -> nonzero coefficient
};

Z0RElem z0_add(const Z0RElem& x, const Z0RElem& y);
Z0RElem z0_sub(const Z0RElem& x, const Z0RElem& y);
Z0RElem z0_neg(const Z0RElem& x);
Z0RElem z0_scale(std::int64_t n, const Z0RElem& x);
Z0RElem z0_mul(const Z0RElem& x, const Z0RElem& y, const Ring& R);
Z0RElem z0_pow(const Z0RElem& x, std::int64_t e, const Ring& R);

// <u> with u a unit maps to <u^-1>; anything else is NotBasisUnit.
Z0RElem basis_unit_inverse(const Z0RElem& x, const Ring& R);

// {"coeffs": {"a": n, ...}} with decimal residue keys in ascending order.
std::string z0_to_json(const Z0RElem& x);

// Polynomial over R, coefficients lowest degree first, trailing zeros
// trimmed; the zero polynomial has degree 0.
struct PolyR {
  std::vector<Elem> c;

  static PolyR make(std::vector<Elem> coeffs, const Ring& R);
  static PolyR x();  // the monomial X

  int degree() const { return c.size() <= 1 ? 0 : static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Elem eval(Elem t, const Ring& R) const;
  Elem constant_term() const { return c.empty() ? 0 : c.front(); }
  // X^d * p(1/X) for a target degree d >= deg p.
  PolyR reversal(int d, const Ring& R) const;

  bool operator==(const PolyR& o) const = default;
  std::string to_string() const;
};

PolyR poly_add(const PolyR& a, const PolyR& b, const Ring& R);

// s_p(a) = -sum_{nonempty J} (-1)^|J| <p(a_J)>, a_J the sum over J.
// Computed by dynamic programming over signed partial-sum counts.
Z0RElem s_poly(const std::vector<Elem>& a, const PolyR& p, const Ring& R);

// Direct subset-sum expansion of the same element; quadratic-exponential,
// kept as an independent oracle for small m.
Z0RElem s_poly_subsets(const std::vector<Elem>& a, const PolyR& p, const Ring& R);

// phi_t sends sum n_i <a_i> to sum n_i a_i^t in R (the cyclic realization
// of the t-fold tensor power). Requires t >= 1.
Elem phi_t(const Z0RElem& x, std::int64_t t, const Ring& R);

// Multilinearity identity for the canonical map r -> p_1(r) x ... x p_t(r)
// into the cyclic realization: checks
//   -sum_{nonempty J} (-1)^|J| prod_i p_i(x_J) == prod_i p_i(0)  (mod R).
// Throws DegreeBound unless sum deg p_i < m.
bool multlin_verify(const std::vector<Elem>& x, const std::vector<PolyR>& polys,
                    const Ring& R);

}  // namespace spwb
