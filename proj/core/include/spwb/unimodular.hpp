#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spwb/ring.hpp"
#include "spwb/ring_matrix.hpp"

namespace spwb {

// Skew-symmetric q x q matrix stored by its strictly upper triangle, so
// zero diagonal and antisymmetry hold by construction.
struct SkewMat {
  int q = 0;
  std::vector<Elem> upper;  // row-major: (0,1),...,(0,q-1),(1,2),...

  static SkewMat zero(int q);
  // Upper triangle in row-major order, reduced into the ring.
  static SkewMat make(int q, std::vector<Elem> upper, const Ring& R);
  // NotSkew unless A is skew-symmetric with zero diagonal.
  static SkewMat from_matrix(const RingMatrix& A, const Ring& R);

  Elem at(int i, int j, const Ring& R) const;
  void set(int i, int j, Elem v, const Ring& R);
  RingMatrix to_matrix(const Ring& R) const;
  bool operator==(const SkewMat& o) const = default;
};

// Sequence of q column vectors in R^{2n}.
struct UnimodSeq {
  int n = 0;
  std::vector<std::vector<Elem>> vecs;

  int q() const { return static_cast<int>(vecs.size()); }
  RingMatrix as_matrix() const;  // 2n x q
  bool operator==(const UnimodSeq& o) const = default;
};

// det A_I is a unit for every nonempty even-cardinality I.
bool is_skew_nondegenerate(const SkewMat& A, const Ring& R);

// Gram matrix (<v_i, v_j>)_{ij} under the standard form; Sp-invariant.
SkewMat gram(const Ring& R, const UnimodSeq& v);

// Unimodularity via residue-field rank of every subsequence of length
// min(q, 2n), plus unit Gram determinants on even subsets of size up to
// min(q, 2n).
bool is_nondeg_unimodular(const UnimodSeq& v, const Ring& R);

// Column-wise action g v = (g v_1, ..., g v_q).
UnimodSeq apply_sp(const Ring& R, const RingMatrix& g, const UnimodSeq& v);

// All non-degenerate unimodular sequences of length q in R^{2n} in
// lexicographic order. CapExceeded when |R|^{2nq} exceeds cap.
std::vector<UnimodSeq> enumerate_U(int q, int n, const Ring& R,
                                   std::uint64_t cap = 100000000);

// All of Skew+_q(R) in lexicographic order of the upper triangle.
// CapExceeded when |R|^{q(q-1)/2} exceeds cap.
std::vector<SkewMat> enumerate_skew_plus(int q, const Ring& R,
                                         std::uint64_t cap = 100000000);

// Non-degenerate unimodular sequence in normal form with Gram matrix A:
// the column matrix is upper triangular, odd columns have diagonal 1,
// even columns vanish just above the diagonal. RankBound unless
// q <= 2n+1, NotNondegenerate unless A is in Skew+.
UnimodSeq normal_form(const SkewMat& A, int n, const Ring& R);

struct OrbitCount {
  std::int64_t orbits = 0;
  std::int64_t skew_plus_count = 0;
  bool operator==(const OrbitCount& o) const = default;
};

// Number of Sp_{2n}(R)-orbits on U_q(R^{2n}) by union-find under the
// generator action, together with |Skew+_q(R)|; the Gram bijection
// predicts equality for q <= 2n+1.
OrbitCount orbit_count(int q, int n, const Ring& R,
                       std::uint64_t cap = 100000000);

// JSON arrays of decimal residues: a sequence is an array of columns, a
// skew matrix a full q x q row-major array.
std::string useq_to_json(const UnimodSeq& v);
std::string skew_to_json(const SkewMat& A, const Ring& R);

// Line-delimited JSON persistence for enumeration results.
void save_useq_list(const std::string& path, const std::vector<UnimodSeq>& list);
std::vector<UnimodSeq> load_useq_list(const std::string& path, int n,
                                      const Ring& R);

}  // namespace spwb
