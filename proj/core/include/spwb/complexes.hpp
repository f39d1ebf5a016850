#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spwb/admissible.hpp"
#include "spwb/chain.hpp"
#include "spwb/monoid_ring.hpp"
#include "spwb/ring.hpp"
#include "spwb/unimodular.hpp"
#include "spwb/z0r_module.hpp"

namespace spwb {

// Face maps, 1-based: delete the i-th vector, or the i-th row and column.
UnimodSeq useq_face(const UnimodSeq& v, int i);
SkewMat skew_face(const SkewMat& A, int i, const Ring& R);

// Chain complex with Z[U_q(R^{2n})] in degree q for q = 0..q_max <= 2n and
// differential d = sum_i (-1)^{i+1} d_i. Labels are the JSON forms of the
// sequences. The built complex always satisfies d(d(x)) = 0.
LabeledComplex build_U_complex(const Ring& R, int n, int q_max,
                               std::uint64_t cap = 100000000);

// Same over the bases Skew+_q(R), faces deleting the i-th row and column.
LabeledComplex build_skew_complex(const Ring& R, int q_max,
                                  std::uint64_t cap = 100000000);

// Degree filtration: the subcomplex in degrees 0..q_max.
LabeledComplex truncate_complex(const LabeledComplex& C, int q_max);

// Basis label of the two-term auxiliary complex: a sequence u of 2r+2
// columns in R^{2r} together with a unimodular column w in R^{2n-2r}
// placed in slot i; all other rows below u are zero. For the top level
// r = n the labels are plain sequences in U_{2n+1}(R^{2n}) and slot is 0.
struct AuxTopLabel {
  int slot = 0;
  UnimodSeq u;
  std::vector<Elem> w;

  bool operator==(const AuxTopLabel& o) const = default;
};

// Two-term complex with the top in degree 2r+1 and U_{2r+1}(R^{2r}) in
// degree 2r; the slot-i component of the differential is (-1)^i d_i.
// For r = n the complex is concentrated in degree 2n and bottom is empty.
struct AuxComplex {
  int n = 0, r = 0;
  std::vector<AuxTopLabel> top;
  std::vector<UnimodSeq> bottom;
  SparseIntMat d;
};

AuxComplex build_aux_complex(const Ring& R, int n, int r,
                             std::uint64_t cap = 100000000);

// Chain map into the full complex: the top component sends a slot-i label
// to sum_{j != i} (-1)^{j+1} d_j of the stacked matrix, the bottom
// component is the face sum followed by zero-padding into R^{2n}. For
// r = n the single component is the face sum out of U_{2n+1}(R^{2n}).
struct ChainMapPair {
  SparseIntMat top;
  SparseIntMat bottom;
};

ChainMapPair phi_chain_map(const AuxComplex& aux, const LabeledComplex& full,
                           const Ring& R);

// Exact commutation of d_full * phi_top with phi_bottom * d_aux.
bool chain_square_commutes(const LabeledComplex& full, const AuxComplex& aux,
                           const ChainMapPair& phi);

// (-1)^{i+1} for i < j, 0 for i = j, (-1)^i for i > j; indices 1-based.
int delta_sign(int i, int j);

// Dense matrix over Z0[R].
struct Z0RMatrix {
  int rows = 0, cols = 0;
  std::vector<Z0RElem> a;

  Z0RMatrix() = default;
  Z0RMatrix(int r, int c)
      : rows(r), cols(c),
        a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}

  Z0RElem& operator()(int r, int c) {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  const Z0RElem& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

// Cofactor expansion; the empty determinant is 1.
Z0RElem z0_matrix_det(const Z0RMatrix& M, const Ring& R);

// Universal gamma over the rank-one free module: rows are indexed by
// Skew+_{2r+1}(R), columns by (i, u) with i = 1..2r+2 outer and
// u in U_{2r+2}(R^{2r}) inner. The column (i, u) holds, in the row of
// Gram(d_j u), the sum of (-1)^{j+1} <(delta_ij det(u minus columns
// i,j))^{-1}> over j != i.
Z0RMatrix gamma_matrix(const Ring& R, int r, std::uint64_t cap = 100000000);

// Substitute the <a>-action matrices of H for the basis symbols, block
// by block.
IntMat specialize_z0_matrix(const Z0RMatrix& M, const FinZ0RModule& H);

// M(U, x) for U in U_{2r+1}(R^{2r}) and (U, x) in U_{2r+2}(R^{2r}): the
// (2r+2) x (2r+2) matrix with zero diagonal and
// <(delta_ij det((U,x) minus columns i,j))^{-1}> elsewhere.
Z0RMatrix m_matrix(const Ring& R, const UnimodSeq& U, const std::vector<Elem>& x);
Z0RElem m_det(const Ring& R, const UnimodSeq& U, const std::vector<Elem>& x);

// General-position filter for appending xi to U in U_{2m+1}(R^{2m}):
// every determinant obtained by deleting two of the 2m+2 columns must be
// a unit, and every Gram Pfaffian on an odd subset of U joined with xi
// must be a unit. Agrees with is_nondeg_unimodular on the extension.
bool extension_feasible(const Ring& R, const UnimodSeq& U,
                        const std::vector<Elem>& xi);

// First xi in lexicographic order passing the filter; NotDefinedAt when
// no candidate passes.
std::vector<Elem> first_feasible_extension(const Ring& R, const UnimodSeq& U,
                                           std::uint64_t cap = 100000000);

// In the cokernel of gamma specialized at H, checks that
// det M(U, x) * h * [Gram((U,x) minus column j)] vanishes for every j
// and every generator h of H.
bool adjugate_chain_check(const Ring& R, const UnimodSeq& U,
                          const std::vector<Elem>& x, const FinZ0RModule& H,
                          std::uint64_t cap = 100000000);

// Symbolic determinant of M([[1,0,b],[0,a,c]], (1,t)) as a function of t,
// followed by its limit at infinity; the result is <(ac)^{-2}> for units
// a, b, c.
Z0RElem endgame_limit_check(Elem a, Elem b, Elem c, const Ring& R);

// Truncation trace: U(l) deletes the first 2r-2l rows and columns of the
// normal form of B; each step records the first feasible extension and
// det M(U(l), x), descending l = r..1, then the symbolic endgame limit
// from U(1) = [[1,0,b],[0,a,c]].
struct DetMTraceStep {
  int level = 0;
  UnimodSeq truncation;
  std::vector<Elem> x;
  Z0RElem det_value;
};

struct DetMTrace {
  std::vector<DetMTraceStep> steps;
  Z0RElem endgame_limit;
};

DetMTrace detm_trace(const SkewMat& B, const Ring& R,
                     std::uint64_t cap = 100000000);

// {"degrees": top, "basis": per-degree label arrays, "d": triplet lists}.
std::string complex_to_json(const LabeledComplex& C);
// Array of {"free_rank": n, "torsion": [decimal strings]}.
std::string homology_to_json(const std::vector<FGAbelianGroup>& H);

}  // namespace spwb
