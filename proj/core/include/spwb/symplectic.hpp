#pragma once

#include <vector>

#include "spwb/ring.hpp"
#include "spwb/ring_matrix.hpp"

namespace spwb {

// Block-diagonal hyperbolic form of rank 2n: n copies of [[0,1],[-1,0]]
// down the diagonal.
RingMatrix standard_symplectic_form(int n);

// t(x) * psi * y for x, y in R^{2n}.
Elem symplectic_pairing(const Ring& R, const std::vector<Elem>& x,
                        const std::vector<Elem>& y);

// Exact Gram preservation t(A) psi A = psi. Square input required, even
// size (OddSize otherwise).
bool is_symplectic(const Ring& R, const RingMatrix& A);

// Element of Sp_{2n}(R), validated on construction.
struct SpElement {
  int n = 0;
  RingMatrix mat;

  static SpElement make(RingMatrix mat, const Ring& R);
  static SpElement identity(int n);
  bool operator==(const SpElement& o) const = default;
};

SpElement sp_mul(const Ring& R, const SpElement& a, const SpElement& b);
SpElement sp_inverse(const Ring& R, const SpElement& a);

// Element of the odd group Sp_{2n+1}(R), the stabilizer of e1 inside
// Sp_{2n+2}(R), in structured coordinates: first row (1, c, t(u) psi M),
// second row (0, 1, 0), lower blocks (0, u, M).
struct OddSpElement {
  Elem c = 0;
  std::vector<Elem> u;  // length 2n
  SpElement M;

  static OddSpElement identity(int n);
  bool operator==(const OddSpElement& o) const = default;
};

// Assembled (2n+2)x(2n+2) matrix of an odd element; always symplectic and
// fixes e1 when M is symplectic.
RingMatrix odd_compose(const Ring& R, const OddSpElement& g);

// Inverse of odd_compose. NotOddSymplectic unless the matrix is symplectic
// and fixes e1 (the remaining shape constraints follow automatically).
OddSpElement odd_decompose(const Ring& R, const RingMatrix& A);

OddSpElement odd_mul(const Ring& R, const OddSpElement& a, const OddSpElement& b);

// (c, u, M) -> (a^2 c, a u, M); a group endomorphism for every a, an
// automorphism when a is a unit, and the projection to Sp_{2n} at a = 0.
OddSpElement monoid_act(const Ring& R, Elem a, const OddSpElement& g);

// Element of Sp_rank(R) in ambient matrix form: even rank 2n is a 2n x 2n
// matrix, odd rank 2n+1 the (2n+2)x(2n+2) matrix fixing e1.
struct SpAny {
  int rank = 0;
  RingMatrix mat;

  static SpAny even(const SpElement& g);
  static SpAny odd(const Ring& R, const OddSpElement& g);
  bool operator==(const SpAny& o) const = default;
};

// Ambient matrix size for a given rank.
int sp_matrix_size(int rank);

// Composite of the stepwise inclusions Sp_r c Sp_{r+1}: new hyperbolic
// coordinates are prepended, so the matrix is diag(I, g). RankOrder when
// s < rank(g).
SpAny embed(const Ring& R, const SpAny& g, int s);

// Conjugation by diag(a, a^{-1}, 1, ..., 1) on Sp_rank(R); requires a to
// be a unit. Restricted to odd ranks it coincides with monoid_act(a).
SpAny conj_diag(const Ring& R, Elem a, int rank, const SpAny& g);

// Symplectic transvection x -> x + <x, v> v on R^{2n}.
RingMatrix transvection(const Ring& R, int n, const std::vector<Elem>& v);

// Transvections generating Sp_{2n}(R): one for each standard basis vector
// and each pairwise sum.
std::vector<RingMatrix> even_symplectic_generators(int n, const Ring& R);

// Assembled generators of Sp_{2n+1}(R): the embedded even generators, the
// c-shift, and the u-shifts.
std::vector<RingMatrix> odd_symplectic_generators(int n, const Ring& R);

}  // namespace spwb
