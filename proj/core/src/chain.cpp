#include "spwb/chain.hpp"

#include <map>

#include "spwb/quotient.hpp"

namespace spwb {

IntMat sim_to_dense(const SparseIntMat& A) {
  IntMat D(A.rows, A.cols);
  for (auto& [r, c, v] : A.entries) {
    if (r < 0 || r >= A.rows || c < 0 || c >= A.cols)
      fail(Err::SizeMismatch, "sparse entry out of range");
    D(r, c) += v;
  }
  return D;
}

std::vector<SparseCol> sim_columns(const SparseIntMat& A) {
  std::vector<SparseCol> cols(static_cast<std::size_t>(A.cols));
  for (auto& [r, c, v] : A.entries) {
    if (r < 0 || r >= A.rows || c < 0 || c >= A.cols)
      fail(Err::SizeMismatch, "sparse entry out of range");
    cols[static_cast<std::size_t>(c)].nz.emplace_back(r, v);
  }
  for (auto& col : cols) col.normalize();
  return cols;
}

void validate_complex(const LabeledComplex& C) {
  std::size_t degs = C.basis.size();
  if (C.d.size() != degs)
    fail(Err::NotAComplex, "expected one differential per degree");
  for (std::size_t k = 0; k < degs; ++k) {
    const SparseIntMat& dk = C.d[k];
    std::int64_t expect_rows = k == 0 ? 0 : C.dim(static_cast<int>(k) - 1);
    if (dk.cols != C.dim(static_cast<int>(k)) || dk.rows != expect_rows)
      fail(Err::NotAComplex, "differential shape mismatch in degree " + std::to_string(k));
    for (auto& [r, c, v] : dk.entries)
      if (r < 0 || r >= dk.rows || c < 0 || c >= dk.cols)
        fail(Err::NotAComplex, "differential entry out of range");
  }
  // d(d(x)) = 0, checked column by column. The k = 1 composite lands in
  // the zero module, so start at 2.
  for (std::size_t k = 2; k < degs; ++k) {
    const SparseIntMat& up = C.d[k];
    const SparseIntMat& down = C.d[k - 1];
    std::vector<SparseCol> up_cols = sim_columns(up);
    std::vector<SparseCol> down_cols = sim_columns(down);
    for (std::size_t j = 0; j < up_cols.size(); ++j) {
      std::map<int, std::int64_t> acc;
      for (auto& [r, v] : up_cols[j].nz)
        for (auto& [rr, vv] : down_cols[static_cast<std::size_t>(r)].nz) {
          acc[rr] = checked_add(acc[rr], checked_mul(v, vv));
        }
      for (auto& [rr, vv] : acc)
        if (vv != 0)
          fail(Err::NotAComplex,
               "d(d(x)) is nonzero in degree " + std::to_string(k) + ", column " +
                   std::to_string(j));
    }
  }
}

std::vector<FGAbelianGroup> complex_homology(const LabeledComplex& C) {
  validate_complex(C);
  int top = C.top_degree();
  std::vector<FGAbelianGroup> H(static_cast<std::size_t>(top + 1));
  std::vector<int> img_rank(static_cast<std::size_t>(top + 2), 0);  // rank of d_{k+1} image
  std::vector<FGAbelianGroup> coker(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    // Image of d_{k+1} inside degree k.
    if (k + 1 <= top) {
      LatticeAccumulator acc(static_cast<int>(C.dim(k)));
      for (auto& col : sim_columns(C.d[static_cast<std::size_t>(k + 1)])) acc.insert(col);
      img_rank[static_cast<std::size_t>(k + 1)] = acc.rank();
      coker[static_cast<std::size_t>(k)] = quotient_structure(acc);
    } else {
      coker[static_cast<std::size_t>(k)] =
          FGAbelianGroup{C.dim(k), {}};
    }
  }
  for (int k = 0; k <= top; ++k) {
    std::int64_t rank_down = k == 0 ? 0 : img_rank[static_cast<std::size_t>(k)];
    H[static_cast<std::size_t>(k)].free_rank =
        C.dim(k) - rank_down - img_rank[static_cast<std::size_t>(k + 1)];
    H[static_cast<std::size_t>(k)].torsion = coker[static_cast<std::size_t>(k)].torsion;
    if (H[static_cast<std::size_t>(k)].free_rank < 0)
      fail(Err::Internal, "negative homology rank");
  }
  return H;
}

}  // namespace spwb
