#include "spwb/monoid_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "spwb/error.hpp"
#include "spwb/lattice.hpp"

namespace spwb {

Z0RElem Z0RElem::basis(Elem a, const Ring& R) {
  Z0RElem e;
  e.add_term(a, 1, R);
  return e;
}

Z0RElem Z0RElem::constant(std::int64_t n, const Ring& R) {
  Z0RElem e;
  e.add_term(1, n, R);
  return e;
}

void Z0RElem::add_term(Elem a, std::int64_t n, const Ring& R) {
  a = R.reduce(a);
  if (a == 0 || n == 0) return;  // <0> = 0
  auto it = c_.find(a);
  if (it == c_.end()) {
    c_.emplace(a, n);
    return;
  }
  it->second = checked_add(it->second, n);
  if (it->second == 0) c_.erase(it);
}

std::string Z0RElem::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, n] : c_) {
    if (first) {
      if (n < 0) out << "-";
    } else {
      out << (n < 0 ? " - " : " + ");
    }
    std::int64_t mag = std::llabs(n);
    if (mag != 1) out << mag;
    out << "<" << a << ">";
    first = false;
  }
  return out.str();
}

Z0RElem::Z0RElem(std::map<Elem, std::int64_t> m) : c_(std::move(m)) {
  c_.erase(0);
  for (auto it = c_.begin(); it != c_.end();)
    it = it->second == 0 ? c_.erase(it) : std::next(it);
}

Z0RElem z0_add(const Z0RElem& x, const Z0RElem& y) {
  std::map<Elem, std::int64_t> acc(x.support());
  for (const auto& [a, n] : y.support()) {
    auto it = acc.find(a);
    if (it == acc.end())
      acc.emplace(a, n);
    else
      it->second = checked_add(it->second, n);
  }
  return Z0RElem(std::move(acc));
}

Z0RElem z0_sub(const Z0RElem& x, const Z0RElem& y) { return z0_add(x, z0_neg(y)); }

Z0RElem z0_neg(const Z0RElem& x) {
  std::map<Elem, std::int64_t> acc;
  for (const auto& [a, n] : x.support()) acc.emplace(a, -n);
  return Z0RElem(std::move(acc));
}

Z0RElem z0_scale(std::int64_t n, const Z0RElem& x) {
  std::map<Elem, std::int64_t> acc;
  for (const auto& [a, m] : x.support()) acc.emplace(a, checked_mul(n, m));
  return Z0RElem(std::move(acc));
}

Z0RElem z0_mul(const Z0RElem& x, const Z0RElem& y, const Ring& R) {
  Z0RElem r;
  for (const auto& [a, na] : x.support())
    for (const auto& [b, nb] : y.support())
      r.add_term(R.mul(a, b), checked_mul(na, nb), R);
  return r;
}

Z0RElem z0_pow(const Z0RElem& x, std::int64_t e, const Ring& R) {
  if (e < 0) fail(Err::ConfigError, "negative exponent in Z0[R]");
  Z0RElem r = Z0RElem::constant(1, R);
  Z0RElem b = x;
  while (e > 0) {
    if (e & 1) r = z0_mul(r, b, R);
    e >>= 1;
    if (e > 0) b = z0_mul(b, b, R);
  }
  return r;
}

Z0RElem basis_unit_inverse(const Z0RElem& x, const Ring& R) {
  const auto& s = x.support();
  if (s.size() != 1 || s.begin()->second != 1)
    fail(Err::NotBasisUnit, "not a single basis element: " + x.to_string());
  Elem u = s.begin()->first;
  if (!R.is_unit(u))
    fail(Err::NotBasisUnit, "basis element <" + std::to_string(u) +
                                "> is not a unit in " + R.to_string());
  return Z0RElem::basis(R.unit_inverse(u), R);
}

std::string z0_to_json(const Z0RElem& x) {
  nlohmann::ordered_json j;
  j["coeffs"] = nlohmann::ordered_json::object();
  for (const auto& [a, n] : x.support()) j["coeffs"][std::to_string(a)] = n;
  return j.dump();
}

PolyR PolyR::make(std::vector<Elem> coeffs, const Ring& R) {
  for (Elem& c : coeffs) c = R.reduce(c);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return PolyR{std::move(coeffs)};
}

PolyR PolyR::x() { return PolyR{{0, 1}}; }

Elem PolyR::eval(Elem t, const Ring& R) const {
  t = R.reduce(t);
  Elem v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = R.add(R.mul(v, t), *it);
  return v;
}

PolyR PolyR::reversal(int d, const Ring& R) const {
  if (d < degree() && !is_zero())
    fail(Err::ConfigError, "reversal degree below polynomial degree");
  std::vector<Elem> out(static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) out[d - i] = c[i];
  return make(std::move(out), R);
}

std::string PolyR::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0 && c.size() > 1) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << c[i];
    } else {
      if (c[i] != 1) out << c[i];
      out << "X";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

PolyR poly_add(const PolyR& a, const PolyR& b, const Ring& R) {
  std::vector<Elem> out(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = R.add(out[i], a.c[i]);
  for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = R.add(out[i], b.c[i]);
  return PolyR::make(std::move(out), R);
}

Z0RElem s_poly(const std::vector<Elem>& a, const PolyR& p, const Ring& R) {
  if (a.empty()) fail(Err::ConfigError, "s_p needs at least one argument");
  if (a.size() > 62) fail(Err::CapExceeded, "too many arguments for subset expansion");
  // g[s] = sum over subsets J with partial sum s of (-1)^|J|, built one
  // argument at a time.
  std::map<Elem, std::int64_t> g;
  g[0] = 1;
  for (Elem ai : a) {
    ai = R.reduce(ai);
    std::map<Elem, std::int64_t> next;
    for (const auto& [s, v] : g) {
      next[s] += v;
      next[R.add(s, ai)] -= v;
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    g = std::move(next);
  }
  Z0RElem r;
  for (const auto& [s, v] : g) r.add_term(p.eval(s, R), -v, R);
  r.add_term(p.eval(0, R), 1, R);  // remove the empty-subset contribution
  return r;
}

Z0RElem s_poly_subsets(const std::vector<Elem>& a, const PolyR& p, const Ring& R) {
  if (a.empty()) fail(Err::ConfigError, "s_p needs at least one argument");
  const int m = static_cast<int>(a.size());
  if (m > 20) fail(Err::CapExceeded, "subset oracle limited to 20 arguments");
  std::vector<Elem> sum(std::size_t(1) << m, 0);
  Z0RElem r;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    int i = __builtin_ctz(mask);
    sum[mask] = R.add(sum[mask ^ low], a[i]);
    int sign = (__builtin_popcount(mask) % 2 == 1) ? 1 : -1;  // -(-1)^|J|
    r.add_term(p.eval(sum[mask], R), sign, R);
  }
  return r;
}

Elem phi_t(const Z0RElem& x, std::int64_t t, const Ring& R) {
  if (t < 1) fail(Err::ConfigError, "tensor power must be at least 1");
  Elem acc = 0;
  for (const auto& [a, n] : x.support())
    acc = R.add(acc, R.mul(R.reduce(n % R.modulus()), R.pow(a, t)));
  return acc;
}

bool multlin_verify(const std::vector<Elem>& x, const std::vector<PolyR>& polys,
                    const Ring& R) {
  const int m = static_cast<int>(x.size());
  int degsum = 0;
  for (const auto& p : polys) degsum += p.degree();
  if (degsum >= m)
    fail(Err::DegreeBound, "total denominator-free degree " + std::to_string(degsum) +
                               " must stay below sequence length " + std::to_string(m));
  if (m > 25) fail(Err::CapExceeded, "subset expansion limited to 25 arguments");
  std::vector<Elem> sum(std::size_t(1) << m, 0);
  Elem lhs = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
    std::uint32_t low = mask & (~mask + 1);
    int i = __builtin_ctz(mask);
    sum[mask] = R.add(sum[mask ^ low], x[i]);
    Elem prod = 1;
    for (const auto& p : polys) prod = R.mul(prod, p.eval(sum[mask], R));
    if (__builtin_popcount(mask) % 2 == 1)
      lhs = R.add(lhs, prod);  // -(-1)^|J| = +1
    else
      lhs = R.sub(lhs, prod);
  }
  Elem rhs = 1;
  for (const auto& p : polys) rhs = R.mul(rhs, p.eval(0, R));
  return lhs == rhs;
}

}  // namespace spwb
