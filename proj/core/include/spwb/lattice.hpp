#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "spwb/error.hpp"

namespace spwb {

// Sparse integer column vector: (row, value) pairs sorted by row, values
// nonzero. Arithmetic is 64-bit with overflow checks.
struct SparseCol {
  std::vector<std::pair<int, std::int64_t>> nz;

  bool empty() const { return nz.empty(); }
  void normalize();  // drop zeros, sort by row
  bool operator==(const SparseCol& o) const = default;
};

SparseCol sc_from_dense(const std::vector<std::int64_t>& v);
// a + c * b with overflow checking.
SparseCol sc_axpy(const SparseCol& a, std::int64_t c, const SparseCol& b);
SparseCol sc_scale(const SparseCol& a, std::int64_t c);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Integer column lattice kept in echelon form: one stored column per pivot
// row (its first nonzero). insert() grows the lattice; reduce() computes
// the residue of a vector against the current basis, so membership is
// "reduce(v) is empty".
class LatticeAccumulator {
 public:
  explicit LatticeAccumulator(int dim) : dim_(dim) {}

  // Returns true when the lattice strictly grew.
  bool insert(SparseCol c);

  SparseCol reduce(SparseCol c) const;
  bool contains(const SparseCol& c) const { return reduce(c).empty(); }

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  std::vector<SparseCol> basis() const;

 private:
  int dim_;
  std::map<int, SparseCol> pivots_;  // first-nonzero row -> column
};

// Same sublattice of Z^dim, tested by mutual basis containment.
bool lattices_equal(const LatticeAccumulator& a, const LatticeAccumulator& b);

}  // namespace spwb
