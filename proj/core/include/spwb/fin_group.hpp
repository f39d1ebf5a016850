#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "spwb/ring.hpp"
#include "spwb/ring_matrix.hpp"

namespace spwb {

// Finite matrix group enumerated by breadth-first closure from its
// generators. Element 0 is the identity; discovery order is deterministic.
// Generator words are kept as a breadth-first tree for provenance.
class FinGroup {
 public:
  // Closure under left multiplication by the generators; every generator
  // must be a dim x dim symplectic matrix. Throws CapExceeded past cap.
  static FinGroup enumerate(const std::vector<RingMatrix>& gens, const Ring& R,
                            int dim, std::size_t cap = 1000000);

  const Ring& ring() const { return ring_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }
  const RingMatrix& element(int i) const { return elems_[i]; }
  // -1 when the matrix is not an element.
  int index_of(const RingMatrix& m) const;
  int product(int i, int j) const;
  int inverse(int i) const { return inverse_[i]; }

  int num_generators() const { return static_cast<int>(gen_elem_.size()); }
  int generator(int g) const { return gen_elem_[g]; }
  // Index of generator g times element i.
  int gen_product(int g, int i) const { return gen_prod_[g][i]; }
  // Generator word for element i, left to right; empty for the identity.
  std::vector<int> word(int i) const;

  void save(const std::string& path) const;
  static FinGroup load(const std::string& path);

 private:
  FinGroup(Ring R, int dim) : ring_(R), dim_(dim) {}
  void finish(std::size_t table_cap);
  std::string key(const RingMatrix& m) const;

  Ring ring_;
  int dim_;
  std::vector<RingMatrix> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> gen_elem_;
  std::vector<std::vector<int>> gen_prod_;
  std::vector<int> parent_, via_gen_;
  std::vector<int> inverse_;
  std::vector<int> mult_;  // full size x size table for small groups
};

}  // namespace spwb
