#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spwb/int_matrix.hpp"
#include "spwb/lattice.hpp"
#include "spwb/monoid_ring.hpp"
#include "spwb/rng.hpp"
#include "spwb/ring.hpp"

namespace spwb {

// Finite module over Z0[R]: the abelian group Z^n / column span of the
// relation matrix, with one endomorphism matrix per ring element giving the
// <a> action. Construction validates that each action preserves the
// relation lattice, <1> acts as the identity, <0> as zero, the action is
// multiplicative on 50 seeded sample pairs, and the group is finite.
class FinZ0RModule {
 public:
  static FinZ0RModule make(int n_gens, const IntMat& relations,
                           std::vector<IntMat> action, const Ring& R,
                           std::uint64_t seed = 1);
  // M(q): Z/modulus with <a> acting as multiplication by a^q, q >= 1.
  static FinZ0RModule cyclic_power(std::int64_t q, const Ring& R);

  const Ring& ring() const { return ring_; }
  int n_gens() const { return n_; }
  const FGAbelianGroup& structure() const { return structure_; }
  bool is_trivial() const { return structure_.trivial(); }
  const IntMat& relations() const { return relations_; }
  const LatticeAccumulator& relation_lattice() const { return lat_; }
  const IntMat& action_of(Elem a) const;

  // Matrix of the sigma action, the coefficient sum over the support.
  IntMat sigma_matrix(const Z0RElem& sigma) const;
  // sigma * v, reduced to the canonical representative.
  std::vector<std::int64_t> act(const Z0RElem& sigma,
                                const std::vector<std::int64_t>& v) const;
  std::vector<std::int64_t> canonical_rep(const std::vector<std::int64_t>& v) const;
  bool element_is_zero(const std::vector<std::int64_t>& v) const;

 private:
  FinZ0RModule(Ring R, int n, IntMat relations, std::vector<IntMat> action,
               LatticeAccumulator lat, FGAbelianGroup structure)
      : ring_(R), n_(n), relations_(std::move(relations)),
        action_(std::move(action)), lat_(std::move(lat)),
        structure_(std::move(structure)) {}

  Ring ring_;
  int n_;
  IntMat relations_;
  std::vector<IntMat> action_;  // indexed by ring element
  LatticeAccumulator lat_;      // relation lattice, full rank
  FGAbelianGroup structure_;
};

// Whether inverting sigma kills M: the image chain M >= sigma M >= ... must
// stabilize at 0. On a nonzero stable image sigma acts bijectively, so
// stabilizing anywhere else means a nonzero localization.
bool localization_vanishes(const FinZ0RModule& M, const Z0RElem& sigma);

// Whether some power of sigma annihilates x; iterates sigma^k x until it
// hits zero or revisits a value.
bool radical_annihilator_member(const FinZ0RModule& M,
                                const std::vector<std::int64_t>& x,
                                const Z0RElem& sigma);

struct ProbeReport {
  int trials = 0;
  int passes = 0;
  std::vector<int> failed_trials;

  bool all_pass() const { return passes == trials; }
  std::string to_string() const;
};

// For `trials` random length-m sequences a, reports whether inverting
// s_p(a) - <p(0)> kills M. Trials are deterministic per index under the
// seed and independent of the thread count (0 picks a default).
ProbeReport quasilinear_probe(const FinZ0RModule& M, const PolyR& p, int m,
                              int trials, const Ring& R, std::uint64_t seed,
                              int threads = 0);

// m ring elements whose nonempty subset sums all avoid the given
// residue-field classes; redraws whole sequences, up to 1000 attempts.
std::vector<Elem> random_sequence_avoiding(Rng& rng, int m, const Ring& R,
                                           const std::vector<Elem>& excluded_residues);

}  // namespace spwb
