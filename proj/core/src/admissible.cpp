#include "spwb/admissible.hpp"

#include <algorithm>

#include "spwb/error.hpp"
#include "spwb/lattice.hpp"

namespace spwb {

MultiPoly::MultiPoly(int n_vars, std::map<std::vector<int>, std::int64_t> t)
    : n_vars_(n_vars), t_(std::move(t)) {
  for (auto it = t_.begin(); it != t_.end();)
    it = it->second == 0 ? t_.erase(it) : std::next(it);
}

MultiPoly MultiPoly::variable(int i, int n_vars) {
  if (i < 0 || i >= n_vars) fail(Err::SizeMismatch, "variable index out of range");
  std::vector<int> e(n_vars, 0);
  e[i] = 1;
  return MultiPoly(n_vars, {{std::move(e), 1}});
}

MultiPoly MultiPoly::constant(std::int64_t c, int n_vars) {
  if (n_vars < 0) fail(Err::SizeMismatch, "negative variable count");
  if (c == 0) return MultiPoly(n_vars, {});
  return MultiPoly(n_vars, {{std::vector<int>(n_vars, 0), c}});
}

Z0RElem MultiPoly::eval_z0(const std::vector<Z0RElem>& args, const Ring& R) const {
  if (static_cast<int>(args.size()) != n_vars_)
    fail(Err::SizeMismatch, "argument count does not match variable count");
  Z0RElem acc;
  for (const auto& [e, c] : t_) {
    Z0RElem prod = Z0RElem::constant(1, R);
    for (int j = 0; j < n_vars_; ++j)
      if (e[j] > 0) prod = z0_mul(prod, z0_pow(args[j], e[j], R), R);
    acc = z0_add(acc, z0_scale(c, prod));
  }
  return acc;
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) fail(Err::SizeMismatch, "variable counts differ");
  std::map<std::vector<int>, std::int64_t> t(a.t_);
  for (const auto& [e, c] : b.t_) {
    auto it = t.find(e);
    if (it == t.end())
      t.emplace(e, c);
    else
      it->second = checked_add(it->second, c);
  }
  return MultiPoly(a.n_vars(), std::move(t));
}

MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b) { return mp_add(a, mp_neg(b)); }

MultiPoly mp_neg(const MultiPoly& a) {
  std::map<std::vector<int>, std::int64_t> t;
  for (const auto& [e, c] : a.t_) t.emplace(e, -c);
  return MultiPoly(a.n_vars(), std::move(t));
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars() != b.n_vars()) fail(Err::SizeMismatch, "variable counts differ");
  std::map<std::vector<int>, std::int64_t> t;
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_) {
      std::vector<int> e(a.n_vars());
      for (int j = 0; j < a.n_vars(); ++j) e[j] = ea[j] + eb[j];
      auto it = t.find(e);
      if (it == t.end())
        t.emplace(std::move(e), checked_mul(ca, cb));
      else
        it->second = checked_add(it->second, checked_mul(ca, cb));
    }
  return MultiPoly(a.n_vars(), std::move(t));
}

MultiPoly mp_pow(const MultiPoly& a, int e) {
  if (e < 0) fail(Err::ConfigError, "negative exponent");
  MultiPoly r = MultiPoly::constant(1, a.n_vars());
  MultiPoly b = a;
  while (e > 0) {
    if (e & 1) r = mp_mul(r, b);
    e >>= 1;
    if (e > 0) b = mp_mul(b, b);
  }
  return r;
}

AdmissibleFn AdmissibleFn::make(MultiPoly P, std::vector<std::pair<PolyR, PolyR>> pairs,
                                const Ring& R) {
  if (P.n_vars() != static_cast<int>(pairs.size()))
    fail(Err::SizeMismatch, "one variable per numerator/denominator pair required");
  // Q_i(t) is a unit iff its residue-field image at the residue of t is
  // nonzero, so the failure locus is a union of residue classes.
  Ring F = R.residue_field();
  std::vector<Elem> excluded;
  for (Elem r = 0; r < F.modulus(); ++r) {
    for (const auto& [pi, qi] : pairs) {
      std::vector<Elem> qbar(qi.c.size());
      for (std::size_t j = 0; j < qi.c.size(); ++j) qbar[j] = R.residue(qi.c[j]);
      if (PolyR::make(qbar, F).eval(r, F) == 0) {
        excluded.push_back(r);
        break;
      }
    }
  }
  return AdmissibleFn{std::move(P), std::move(pairs), std::move(excluded)};
}

bool AdmissibleFn::defined_at(Elem t, const Ring& R) const {
  Elem r = R.residue(t);
  return !std::binary_search(domain_excluded.begin(), domain_excluded.end(), r);
}

Z0RElem eval_admissible(const AdmissibleFn& f, Elem t, const Ring& R) {
  t = R.reduce(t);
  std::vector<Z0RElem> args;
  args.reserve(f.pairs.size());
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    Elem q = f.pairs[i].second.eval(t, R);
    if (!R.is_unit(q))
      fail(Err::NotDefinedAt, "denominator " + std::to_string(i + 1) +
                                  " is not a unit at t = " + std::to_string(t));
    Elem v = R.mul(f.pairs[i].first.eval(t, R), R.unit_inverse(q));
    args.push_back(Z0RElem::basis(v, R));
  }
  return f.P.eval_z0(args, R);
}

std::string LimitPoint::to_string() const {
  return infinite ? "inf" : std::to_string(a);
}

Z0RElem limit_admissible(const AdmissibleFn& f, const LimitPoint& at, const Ring& R) {
  if (!at.infinite) {
    if (!f.defined_at(at.a, R))
      fail(Err::LimitUndefined,
           "denominator is not a unit at t = " + std::to_string(R.reduce(at.a)));
    return eval_admissible(f, at.a, R);
  }
  std::vector<Z0RElem> args;
  args.reserve(f.pairs.size());
  for (std::size_t i = 0; i < f.pairs.size(); ++i) {
    const PolyR& pi = f.pairs[i].first;
    const PolyR& qi = f.pairs[i].second;
    if (qi.is_zero() || !R.is_unit(qi.c.back()))
      fail(Err::LimitUndefined, "denominator " + std::to_string(i + 1) +
                                    " has a non-unit leading coefficient");
    if (!pi.is_zero() && pi.degree() > qi.degree())
      fail(Err::LimitUndefined, "numerator " + std::to_string(i + 1) +
                                    " outgrows its denominator");
    int d = qi.degree();
    Elem pv = pi.reversal(d, R).eval(0, R);
    Elem qv = qi.reversal(d, R).eval(0, R);
    args.push_back(Z0RElem::basis(R.mul(pv, R.unit_inverse(qv)), R));
  }
  return f.P.eval_z0(args, R);
}

bool presentations_agree_at(const AdmissibleFn& f, const AdmissibleFn& g,
                            const LimitPoint& at, const Ring& R) {
  return limit_admissible(f, at, R) == limit_admissible(g, at, R);
}

}  // namespace spwb
