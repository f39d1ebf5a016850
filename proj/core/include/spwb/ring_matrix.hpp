#pragma once

#include <optional>
#include <vector>

#include "spwb/ring.hpp"

namespace spwb {

// Dense matrix over a finite local ring; entries are canonical residues.
class RingMatrix {
 public:
  RingMatrix() : rows_(0), cols_(0) {}
  RingMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  static RingMatrix identity(int n) {
    RingMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& operator()(int r, int c) {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }
  Elem operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const RingMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Elem> a_;
};

RingMatrix rm_mul(const Ring& R, const RingMatrix& A, const RingMatrix& B);
RingMatrix rm_add(const Ring& R, const RingMatrix& A, const RingMatrix& B);
RingMatrix rm_neg(const Ring& R, const RingMatrix& A);
RingMatrix rm_transpose(const RingMatrix& A);
RingMatrix rm_reduce(const Ring& R, const RingMatrix& A);
std::vector<Elem> rm_apply(const Ring& R, const RingMatrix& A,
                           const std::vector<Elem>& v);

// Determinant by column-subset dynamic programming; division free, exact
// over rings with zero divisors. Throws NotSquare; CapExceeded above
// 20 columns. det of the empty 0x0 matrix is 1.
Elem det(const Ring& R, const RingMatrix& M);

// Inverse of a matrix with unit determinant (NotAUnit otherwise).
RingMatrix rm_inverse(const Ring& R, const RingMatrix& M);

// Pfaffian by expansion along the first row:
//   Pf(A) = sum_{j>1} (-1)^j a_{1j} Pf(A with rows/cols 1,j removed),
// memoised over column subsets; Pf of the 0x0 matrix is 1.
// Throws NotSkew unless A is skew-symmetric with zero diagonal, OddSize
// for odd dimension.
Elem pfaffian(const Ring& R, const RingMatrix& A);

bool rm_is_skew(const Ring& R, const RingMatrix& A);

// Rank of the image of M over the residue field.
int residue_rank(const Ring& R, const RingMatrix& M);

// Some solution x of A x = b over the local ring, if one exists.
// Eliminates with unit pivots, then divides through by p and recurses
// when only non-unit entries remain.
std::optional<std::vector<Elem>> linear_solve(const Ring& R,
                                              const RingMatrix& A,
                                              const std::vector<Elem>& b);

}  // namespace spwb
