#include "spwb/lattice.hpp"

#include <algorithm>

namespace spwb {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Err::Overflow, "int64 add");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Err::Overflow, "int64 mul");
  return r;
}

void SparseCol::normalize() {
  std::sort(nz.begin(), nz.end());
  std::vector<std::pair<int, std::int64_t>> out;
  out.reserve(nz.size());
  for (auto& [r, v] : nz) {
    if (!out.empty() && out.back().first == r) {
      out.back().second = checked_add(out.back().second, v);
      if (out.back().second == 0) out.pop_back();
    } else if (v != 0) {
      out.emplace_back(r, v);
    } else {
      // zero entry dropped
    }
  }
  nz = std::move(out);
}

SparseCol sc_from_dense(const std::vector<std::int64_t>& v) {
  SparseCol c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.nz.emplace_back(static_cast<int>(i), v[i]);
  return c;
}

SparseCol sc_axpy(const SparseCol& a, std::int64_t c, const SparseCol& b) {
  SparseCol out;
  out.nz.reserve(a.nz.size() + b.nz.size());
  std::size_t i = 0, j = 0;
  while (i < a.nz.size() || j < b.nz.size()) {
    if (j >= b.nz.size() || (i < a.nz.size() && a.nz[i].first < b.nz[j].first)) {
      out.nz.push_back(a.nz[i++]);
    } else if (i >= a.nz.size() || b.nz[j].first < a.nz[i].first) {
      std::int64_t v = checked_mul(c, b.nz[j].second);
      if (v != 0) out.nz.emplace_back(b.nz[j].first, v);
      ++j;
    } else {
      std::int64_t v = checked_add(a.nz[i].second, checked_mul(c, b.nz[j].second));
      if (v != 0) out.nz.emplace_back(a.nz[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseCol sc_scale(const SparseCol& a, std::int64_t c) {
  SparseCol out;
  if (c == 0) return out;
  out.nz.reserve(a.nz.size());
  for (auto& [r, v] : a.nz) out.nz.emplace_back(r, checked_mul(v, c));
  return out;
}

namespace {

void xgcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& x,
          std::int64_t& y) {
  std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1, x2 = x0 - q * x1, y2 = y0 - q * y1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
    y0 = y1; y1 = y2;
  }
  if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
  g = r0; x = x0; y = y0;
}

}  // namespace

bool LatticeAccumulator::insert(SparseCol c) {
  c.normalize();
  bool changed = false;
  while (!c.empty()) {
    int r = c.nz.front().first;
    if (r < 0 || r >= dim_) fail(Err::SizeMismatch, "lattice row out of range");
    std::int64_t v = c.nz.front().second;
    auto it = pivots_.find(r);
    if (it == pivots_.end()) {
      if (v < 0) c = sc_scale(c, -1);
      pivots_.emplace(r, std::move(c));
      return true;
    }
    const SparseCol& P = it->second;
    std::int64_t p = P.nz.front().second;
    if (v % p == 0) {
      c = sc_axpy(c, -(v / p), P);
    } else {
      std::int64_t g, x, y;
      xgcd(p, v, g, x, y);
      SparseCol newP = sc_axpy(sc_scale(P, x), y, c);
      SparseCol newC = sc_axpy(sc_scale(c, p / g), -(v / g), P);
      it->second = std::move(newP);
      c = std::move(newC);
      changed = true;
    }
  }
  return changed;
}

SparseCol LatticeAccumulator::reduce(SparseCol c) const {
  c.normalize();
  SparseCol residue;
  while (!c.empty()) {
    int r = c.nz.front().first;
    std::int64_t v = c.nz.front().second;
    auto it = pivots_.find(r);
    if (it == pivots_.end()) {
      residue.nz.emplace_back(r, v);
      c.nz.erase(c.nz.begin());
      continue;
    }
    const SparseCol& P = it->second;
    std::int64_t p = P.nz.front().second;
    std::int64_t q = v / p;
    // Euclidean residue keeps 0 <= v - q*p < p.
    if (v - q * p < 0) q -= 1;
    if (q != 0) c = sc_axpy(c, -q, P);
    if (!c.empty() && c.nz.front().first == r) {
      residue.nz.emplace_back(r, c.nz.front().second);
      c.nz.erase(c.nz.begin());
    }
  }
  return residue;
}

std::vector<SparseCol> LatticeAccumulator::basis() const {
  std::vector<SparseCol> out;
  out.reserve(pivots_.size());
  for (auto& [r, col] : pivots_) out.push_back(col);
  return out;
}

bool lattices_equal(const LatticeAccumulator& a, const LatticeAccumulator& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) return false;
  for (const SparseCol& col : a.basis())
    if (!b.contains(col)) return false;
  for (const SparseCol& col : b.basis())
    if (!a.contains(col)) return false;
  return true;
}

}  // namespace spwb
