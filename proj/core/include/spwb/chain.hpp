#pragma once

#include <string>
#include <vector>

#include "spwb/int_matrix.hpp"
#include "spwb/lattice.hpp"

namespace spwb {

// Sparse integer matrix as (row, col, value) entries.
struct SparseIntMat {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, std::int64_t>> entries;
};

IntMat sim_to_dense(const SparseIntMat& A);
std::vector<SparseCol> sim_columns(const SparseIntMat& A);

// Chain complex of free Z-modules with labeled bases, concentrated in
// degrees 0..basis.size()-1. d[k] maps degree k to degree k-1; d[0] is the
// zero map out of degree 0 (rows == 0).
struct LabeledComplex {
  std::vector<std::vector<std::string>> basis;
  std::vector<SparseIntMat> d;

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  std::int64_t dim(int k) const {
    return k >= 0 && k < static_cast<int>(basis.size())
               ? static_cast<std::int64_t>(basis[static_cast<std::size_t>(k)].size())
               : 0;
  }
};

// Shape and d(d(x)) = 0 checks; throws NotAComplex.
void validate_complex(const LabeledComplex& C);

// H_0 .. H_top. Ranks come from echelonized image lattices, torsion from
// the cokernel presentation in each degree.
std::vector<FGAbelianGroup> complex_homology(const LabeledComplex& C);

}  // namespace spwb
