#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "spwb/error.hpp"

namespace spwb {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  BigInt& operator()(int r, int c) {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const BigInt& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const IntMat& o) const = default;

 private:
  int rows_, cols_;
  std::vector<BigInt> a_;
};

IntMat im_mul(const IntMat& A, const IntMat& B);
IntMat im_sub(const IntMat& A, const IntMat& B);
IntMat im_transpose(const IntMat& A);
bool im_is_zero(const IntMat& A);
std::vector<BigInt> im_apply(const IntMat& A, const std::vector<BigInt>& v);

// Determinant by fraction-free Bareiss elimination.
BigInt im_det(const IntMat& A);

// Smith normal form D = U * A * V with unimodular transforms and their
// inverses. Diagonal entries are nonnegative and each divides the next.
// Transform tracking can be switched off when only D is needed.
struct SmithResult {
  IntMat D, U, V, Uinv, Vinv;
  int rank = 0;
  bool with_transforms = true;
  // Diagonal entries > 1 (the nontrivial invariant factors).
  std::vector<BigInt> torsion() const;
};

SmithResult smith_normal_form(const IntMat& A, bool with_transforms = true);

int im_rank(const IntMat& A);

// Basis of the integer kernel of A, returned as the columns of a
// cols(A) x k matrix produced by unimodular column reduction.
IntMat kernel_basis(const IntMat& A);

// Isomorphism class of a finitely generated abelian group.
struct FGAbelianGroup {
  std::int64_t free_rank = 0;
  std::vector<BigInt> torsion;  // divisibility chain, entries > 1

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  bool operator==(const FGAbelianGroup& o) const = default;
};

// Structure of Z^n / column span of A (n = rows of A).
FGAbelianGroup cokernel_structure(const IntMat& A);

}  // namespace spwb
