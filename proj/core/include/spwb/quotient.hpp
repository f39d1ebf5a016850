#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "spwb/int_matrix.hpp"
#include "spwb/lattice.hpp"

namespace spwb {

// Quotient Z^n / span(relations), presented for structure, coordinates and
// generator lifts. Rows hit by a +-1 relation entry are eliminated sparsely
// with substitution tracking; the remaining core goes through dense Smith
// normal form.
//
// Coordinate layout: free coordinates first (core free part, then rows no
// relation touches, ascending), then torsion coordinates aligned with
// structure().torsion.
class PresentedQuotient {
 public:
  PresentedQuotient(int n, const std::vector<SparseCol>& relations,
                    std::size_t dense_cap = 6000);

  const FGAbelianGroup& structure() const { return structure_; }
  int n_coords() const {
    return static_cast<int>(structure_.free_rank + structure_.torsion.size());
  }

  std::vector<BigInt> coords(const SparseCol& v) const;

  // Representative in Z^n of the gen-th quotient generator, sparse.
  std::vector<std::pair<int, BigInt>> lift(int gen) const;

 private:
  struct Subst {
    int row;
    std::vector<std::pair<int, std::int64_t>> repl;  // e_row == sum repl
  };

  int n_;
  std::vector<Subst> subs_;
  std::vector<int> ref_rows_;                  // live rows touched by the core
  std::unordered_map<int, int> ref_index_;     // row -> core row position
  std::vector<int> unref_rows_;                // live rows no relation touches
  std::unordered_map<int, int> unref_index_;   // row -> position
  SmithResult core_;
  int core_rank_ = 0;
  std::vector<int> torsion_core_idx_;          // core indices with d > 1
  FGAbelianGroup structure_;
};

FGAbelianGroup quotient_structure(const LatticeAccumulator& acc,
                                  std::size_t dense_cap = 6000);

}  // namespace spwb
