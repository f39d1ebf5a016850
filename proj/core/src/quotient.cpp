#include "spwb/quotient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace spwb {

PresentedQuotient::PresentedQuotient(int n, const std::vector<SparseCol>& relations,
                                     std::size_t dense_cap)
    : n_(n) {
  std::vector<std::map<int, std::int64_t>> cols;
  cols.reserve(relations.size());
  for (const SparseCol& rel : relations) {
    SparseCol c = rel;
    c.normalize();
    if (c.empty()) continue;
    std::map<int, std::int64_t> m;
    for (auto& [r, v] : c.nz) {
      if (r < 0 || r >= n_) fail(Err::SizeMismatch, "relation row out of range");
      m[r] = v;
    }
    cols.push_back(std::move(m));
  }

  std::unordered_map<int, std::set<int>> row_cols;
  for (std::size_t id = 0; id < cols.size(); ++id)
    for (auto& [r, v] : cols[id]) row_cols[r].insert(static_cast<int>(id));

  std::vector<char> dead(cols.size(), 0);
  std::unordered_map<int, char> row_gone;

  using HeapItem = std::pair<std::size_t, int>;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;
  for (std::size_t id = 0; id < cols.size(); ++id)
    heap.emplace(cols[id].size(), static_cast<int>(id));

  while (!heap.empty()) {
    auto [sz, id] = heap.top();
    heap.pop();
    if (dead[static_cast<std::size_t>(id)]) continue;
    auto& col = cols[static_cast<std::size_t>(id)];
    if (col.size() != sz) continue;  // stale entry
    // Choose a +-1 entry whose row meets the fewest other columns.
    int prow = -1;
    std::size_t pdeg = 0;
    for (auto& [r, v] : col) {
      if (v != 1 && v != -1) continue;
      std::size_t deg = row_cols[r].size();
      if (prow < 0 || deg < pdeg) { prow = r; pdeg = deg; }
    }
    if (prow < 0) continue;  // parked; re-enters the heap if updated

    std::int64_t s = col[prow];
    Subst sub;
    sub.row = prow;
    for (auto& [r, v] : col)
      if (r != prow) sub.repl.emplace_back(r, checked_mul(-s, v));
    subs_.push_back(std::move(sub));

    std::set<int> touched = row_cols[prow];
    for (int j : touched) {
      if (j == id) continue;
      auto& cj = cols[static_cast<std::size_t>(j)];
      auto itc = cj.find(prow);
      if (itc == cj.end()) continue;
      std::int64_t factor = checked_mul(-itc->second, s);
      for (auto& [rr, vv] : col) {
        auto it2 = cj.find(rr);
        if (it2 == cj.end()) {
          std::int64_t nv = checked_mul(factor, vv);
          if (nv != 0) {
            cj.emplace(rr, nv);
            row_cols[rr].insert(j);
          }
        } else {
          it2->second = checked_add(it2->second, checked_mul(factor, vv));
          if (it2->second == 0) {
            cj.erase(it2);
            row_cols[rr].erase(j);
          }
        }
      }
      if (cj.empty())
        dead[static_cast<std::size_t>(j)] = 1;
      else
        heap.emplace(cj.size(), j);
    }
    for (auto& [r, v] : col) row_cols[r].erase(id);
    col.clear();
    dead[static_cast<std::size_t>(id)] = 1;
    row_gone[prow] = 1;
  }

  // Remaining live columns form the dense core.
  std::set<int> ref;
  std::vector<int> core_ids;
  for (std::size_t id = 0; id < cols.size(); ++id) {
    if (dead[id]) continue;
    core_ids.push_back(static_cast<int>(id));
    for (auto& [r, v] : cols[id]) ref.insert(r);
  }
  ref_rows_.assign(ref.begin(), ref.end());
  for (std::size_t i = 0; i < ref_rows_.size(); ++i)
    ref_index_[ref_rows_[static_cast<std::size_t>(i)]] = static_cast<int>(i);
  if (ref_rows_.size() > dense_cap || core_ids.size() > dense_cap)
    fail(Err::CapExceeded, "quotient core exceeds dense cap");

  IntMat B(static_cast<int>(ref_rows_.size()), static_cast<int>(core_ids.size()));
  for (std::size_t c = 0; c < core_ids.size(); ++c)
    for (auto& [r, v] : cols[static_cast<std::size_t>(core_ids[c])])
      B(ref_index_[r], static_cast<int>(c)) = v;
  core_ = smith_normal_form(B);
  core_rank_ = core_.rank;
  for (int i = 0; i < core_rank_; ++i)
    if (core_.D(i, i) > 1) torsion_core_idx_.push_back(i);

  for (int r = 0; r < n_; ++r) {
    if (row_gone.count(r) || ref_index_.count(r)) continue;
    unref_index_[r] = static_cast<int>(unref_rows_.size());
    unref_rows_.push_back(r);
  }

  structure_.free_rank =
      static_cast<std::int64_t>(n_) - static_cast<std::int64_t>(subs_.size()) - core_rank_;
  for (int i : torsion_core_idx_) structure_.torsion.push_back(core_.D(i, i));
}

std::vector<BigInt> PresentedQuotient::coords(const SparseCol& v) const {
  SparseCol c = v;
  c.normalize();
  std::map<int, BigInt> w;
  for (auto& [r, val] : c.nz) {
    if (r < 0 || r >= n_) fail(Err::SizeMismatch, "coords row out of range");
    w[r] = val;
  }
  for (const Subst& sub : subs_) {
    auto it = w.find(sub.row);
    if (it == w.end() || it->second == 0) {
      if (it != w.end()) w.erase(it);
      continue;
    }
    BigInt alpha = it->second;
    w.erase(it);
    for (auto& [rr, cc] : sub.repl) {
      BigInt& slot = w[rr];
      slot += alpha * cc;
      if (slot == 0) w.erase(rr);
    }
  }

  int n_core = static_cast<int>(ref_rows_.size());
  std::vector<BigInt> dense(static_cast<std::size_t>(n_core));
  int free_core = n_core - core_rank_;
  std::vector<BigInt> out(static_cast<std::size_t>(n_coords()));
  for (auto& [r, val] : w) {
    auto itr = ref_index_.find(r);
    if (itr != ref_index_.end()) {
      dense[static_cast<std::size_t>(itr->second)] = val;
      continue;
    }
    auto itu = unref_index_.find(r);
    if (itu == unref_index_.end()) fail(Err::Internal, "unsubstituted eliminated row");
    out[static_cast<std::size_t>(free_core + itu->second)] = val;
  }
  std::vector<BigInt> wc = im_apply(core_.U, dense);
  for (int i = core_rank_; i < n_core; ++i)
    out[static_cast<std::size_t>(i - core_rank_)] = wc[static_cast<std::size_t>(i)];
  std::size_t tbase = static_cast<std::size_t>(structure_.free_rank);
  for (std::size_t t = 0; t < torsion_core_idx_.size(); ++t) {
    const BigInt& d = core_.D(torsion_core_idx_[t], torsion_core_idx_[t]);
    BigInt r = wc[static_cast<std::size_t>(torsion_core_idx_[t])] % d;
    if (r < 0) r += d;
    out[tbase + t] = r;
  }
  return out;
}

std::vector<std::pair<int, BigInt>> PresentedQuotient::lift(int gen) const {
  int n_core = static_cast<int>(ref_rows_.size());
  int free_core = n_core - core_rank_;
  std::vector<std::pair<int, BigInt>> out;
  auto core_col = [&](int i) {
    for (int t = 0; t < n_core; ++t)
      if (core_.Uinv(t, i) != 0)
        out.emplace_back(ref_rows_[static_cast<std::size_t>(t)], core_.Uinv(t, i));
  };
  if (gen < free_core) {
    core_col(core_rank_ + gen);
  } else if (gen < structure_.free_rank) {
    out.emplace_back(unref_rows_[static_cast<std::size_t>(gen - free_core)], 1);
  } else {
    int t = gen - static_cast<int>(structure_.free_rank);
    core_col(torsion_core_idx_[static_cast<std::size_t>(t)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FGAbelianGroup quotient_structure(const LatticeAccumulator& acc, std::size_t dense_cap) {
  PresentedQuotient q(acc.dim(), acc.basis(), dense_cap);
  return q.structure();
}

}  // namespace spwb
