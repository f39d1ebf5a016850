#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spwb/monoid_ring.hpp"
#include "spwb/ring.hpp"

namespace spwb {

// Integer polynomial in a fixed number of variables, exponent vector to
// coefficient. Combines basis symbols inside Z0[R] when evaluated.
class MultiPoly {
 public:
  static MultiPoly variable(int i, int n_vars);
  static MultiPoly constant(std::int64_t c, int n_vars);

  int n_vars() const { return n_vars_; }
  const std::map<std::vector<int>, std::int64_t>& terms() const { return t_; }

  Z0RElem eval_z0(const std::vector<Z0RElem>& args, const Ring& R) const;

  bool operator==(const MultiPoly& o) const = default;

 private:
  MultiPoly(int n_vars, std::map<std::vector<int>, std::int64_t> t);

  friend MultiPoly mp_add(const MultiPoly&, const MultiPoly&);
  friend MultiPoly mp_neg(const MultiPoly&);
  friend MultiPoly mp_mul(const MultiPoly&, const MultiPoly&);

  int n_vars_ = 0;
  std::map<std::vector<int>, std::int64_t> t_;
};

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_neg(const MultiPoly& a);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_pow(const MultiPoly& a, int e);

// Function of one ring variable presented as an integer polynomial P
// applied to the basis symbols <P_i(t) / Q_i(t)>. Defined at t exactly
// when every Q_i(t) is a unit; the failure locus only depends on the
// residue of t, recorded as the excluded residue-field classes.
struct AdmissibleFn {
  MultiPoly P;
  std::vector<std::pair<PolyR, PolyR>> pairs;
  std::vector<Elem> domain_excluded;  // residue-field classes, ascending

  static AdmissibleFn make(MultiPoly P, std::vector<std::pair<PolyR, PolyR>> pairs,
                           const Ring& R);
  bool defined_at(Elem t, const Ring& R) const;
};

Z0RElem eval_admissible(const AdmissibleFn& f, Elem t, const Ring& R);

struct LimitPoint {
  bool infinite = false;
  Elem a = 0;

  static LimitPoint at(Elem a) { return LimitPoint{false, a}; }
  static LimitPoint infinity() { return LimitPoint{true, 0}; }
  std::string to_string() const;
};

// Limit of f along its presentation: at a finite point this is evaluation
// (LimitUndefined when some denominator degenerates there); at infinity the
// presentation is reversed, P_i and Q_i both against X^{deg Q_i}, and
// evaluated at 0. Requires deg P_i <= deg Q_i with unit leading Q_i
// coefficients.
Z0RElem limit_admissible(const AdmissibleFn& f, const LimitPoint& at, const Ring& R);

// Whether two presentations produce the same limit at a point. Errors from
// either limit propagate.
bool presentations_agree_at(const AdmissibleFn& f, const AdmissibleFn& g,
                            const LimitPoint& at, const Ring& R);

}  // namespace spwb
