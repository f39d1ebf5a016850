#include "spwb/z0r_module.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spwb/error.hpp"
#include "spwb/parallel.hpp"
#include "spwb/quotient.hpp"

namespace spwb {

namespace {

constexpr std::int64_t kEntryCap = std::int64_t(1) << 40;

std::int64_t small_entry(const BigInt& v, const char* what) {
  if (v > kEntryCap || v < -kEntryCap) fail(Err::CapExceeded, what);
  return v.convert_to<std::int64_t>();
}

// Column c of A as a sparse int64 vector.
SparseCol column_of(const IntMat& A, int c, const char* what) {
  std::vector<std::int64_t> v(A.rows());
  for (int r = 0; r < A.rows(); ++r) v[r] = small_entry(A(r, c), what);
  return sc_from_dense(v);
}

std::vector<std::int64_t> dense_of(const SparseCol& c, int n) {
  std::vector<std::int64_t> v(n, 0);
  for (const auto& [r, x] : c.nz) v[r] = x;
  return v;
}

// A * v over int64 with overflow checks.
std::vector<std::int64_t> apply_small(const IntMat& A,
                                      const std::vector<std::int64_t>& v) {
  if (A.cols() != static_cast<int>(v.size()))
    fail(Err::SizeMismatch, "matrix/vector size mismatch");
  std::vector<std::int64_t> w(A.rows(), 0);
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      w[r] = checked_add(
          w[r], checked_mul(small_entry(A(r, c), "module matrix entry too large"),
                            v[c]));
  return w;
}

// Columns of A all lie in the lattice.
bool columns_in(const IntMat& A, const LatticeAccumulator& lat) {
  for (int c = 0; c < A.cols(); ++c)
    if (!lat.contains(column_of(A, c, "module matrix entry too large"))) return false;
  return true;
}

}  // namespace

FinZ0RModule FinZ0RModule::make(int n_gens, const IntMat& relations,
                                std::vector<IntMat> action, const Ring& R,
                                std::uint64_t seed) {
  if (n_gens < 0) fail(Err::SizeMismatch, "negative generator count");
  if (relations.rows() != n_gens)
    fail(Err::SizeMismatch, "relation matrix must have one row per generator");
  if (static_cast<std::int64_t>(action.size()) != R.modulus())
    fail(Err::SizeMismatch, "one action matrix per ring element required");
  for (const IntMat& E : action)
    if (E.rows() != n_gens || E.cols() != n_gens)
      fail(Err::SizeMismatch, "action matrices must be square of generator size");

  LatticeAccumulator lat(n_gens);
  for (int c = 0; c < relations.cols(); ++c)
    lat.insert(column_of(relations, c, "relation entry too large"));
  if (lat.rank() != n_gens) fail(Err::ConfigError, "module must be finite");

  // Well-definedness on the quotient: each action maps relations into the
  // relation lattice.
  for (std::int64_t a = 0; a < R.modulus(); ++a) {
    IntMat image(n_gens, relations.cols());
    const IntMat& E = action[a];
    for (int c = 0; c < relations.cols(); ++c)
      for (int r = 0; r < n_gens; ++r) {
        BigInt s = 0;
        for (int k = 0; k < n_gens; ++k) s += E(r, k) * relations(k, c);
        image(r, c) = s;
      }
    if (!columns_in(image, lat))
      fail(Err::ConfigError,
           "action of <" + std::to_string(a) + "> does not preserve the relations");
  }

  auto congruent = [&](const IntMat& A, const IntMat& B) {
    IntMat D = im_sub(A, B);
    return columns_in(D, lat);
  };

  if (!congruent(action[R.reduce(1)], IntMat::identity(n_gens)))
    fail(Err::ConfigError, "<1> must act as the identity");
  if (!congruent(action[0], IntMat(n_gens, n_gens)))
    fail(Err::ConfigError, "<0> must act as zero");

  Rng rng(seed);
  for (int i = 0; i < 50; ++i) {
    Elem a = static_cast<Elem>(rng.below(R.modulus()));
    Elem b = static_cast<Elem>(rng.below(R.modulus()));
    if (!congruent(im_mul(action[a], action[b]), action[R.mul(a, b)]))
      fail(Err::ConfigError, "action is not multiplicative: <" + std::to_string(a) +
                                 "><" + std::to_string(b) + "> != <" +
                                 std::to_string(R.mul(a, b)) + ">");
  }

  FGAbelianGroup structure = quotient_structure(lat);
  return FinZ0RModule(R, n_gens, relations, std::move(action), std::move(lat),
                      std::move(structure));
}

FinZ0RModule FinZ0RModule::cyclic_power(std::int64_t q, const Ring& R) {
  if (q < 1) fail(Err::ConfigError, "cyclic power needs q >= 1");
  IntMat rel(1, 1);
  rel(0, 0) = R.modulus();
  std::vector<IntMat> action;
  action.reserve(R.modulus());
  for (Elem a = 0; a < R.modulus(); ++a) {
    IntMat E(1, 1);
    E(0, 0) = R.pow(a, q);
    action.push_back(std::move(E));
  }
  return make(1, rel, std::move(action), R);
}

const IntMat& FinZ0RModule::action_of(Elem a) const {
  return action_[ring_.reduce(a)];
}

IntMat FinZ0RModule::sigma_matrix(const Z0RElem& sigma) const {
  IntMat S(n_, n_);
  for (const auto& [a, coef] : sigma.support()) {
    const IntMat& E = action_[a];
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) S(r, c) += coef * E(r, c);
  }
  return S;
}

std::vector<std::int64_t> FinZ0RModule::act(const Z0RElem& sigma,
                                            const std::vector<std::int64_t>& v) const {
  return canonical_rep(apply_small(sigma_matrix(sigma), v));
}

std::vector<std::int64_t> FinZ0RModule::canonical_rep(
    const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != n_)
    fail(Err::SizeMismatch, "element length does not match generator count");
  return dense_of(lat_.reduce(sc_from_dense(v)), n_);
}

bool FinZ0RModule::element_is_zero(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != n_)
    fail(Err::SizeMismatch, "element length does not match generator count");
  return lat_.contains(sc_from_dense(v));
}

bool localization_vanishes(const FinZ0RModule& M, const Z0RElem& sigma) {
  const int n = M.n_gens();
  IntMat S = M.sigma_matrix(sigma);
  const LatticeAccumulator& relations = M.relation_lattice();

  // L_0 = Z^n, L_{j+1} = S L_j + relations. The chain descends because the
  // action preserves the relation lattice; it stabilizes in finitely many
  // steps since Z^n / relations is finite.
  LatticeAccumulator current(n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> e(n, 0);
    e[j] = 1;
    current.insert(sc_from_dense(e));
  }
  while (true) {
    LatticeAccumulator next = relations;
    for (const SparseCol& b : current.basis()) {
      std::vector<std::int64_t> w =
          apply_small(S, dense_of(b, n));
      next.insert(relations.reduce(sc_from_dense(w)));
    }
    if (lattices_equal(next, current)) break;
    current = std::move(next);
  }
  return lattices_equal(current, relations);
}

bool radical_annihilator_member(const FinZ0RModule& M,
                                const std::vector<std::int64_t>& x,
                                const Z0RElem& sigma) {
  std::vector<std::int64_t> y = M.canonical_rep(x);
  auto zero = [&](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t t) { return t == 0; });
  };
  if (zero(y)) return true;
  IntMat S = M.sigma_matrix(sigma);
  std::set<std::vector<std::int64_t>> seen;
  seen.insert(y);
  while (true) {
    y = M.canonical_rep(apply_small(S, y));
    if (zero(y)) return true;
    if (!seen.insert(y).second) return false;
  }
}

std::string ProbeReport::to_string() const {
  std::ostringstream out;
  out << passes << "/" << trials << " trials pass";
  if (!failed_trials.empty()) {
    out << "; failing:";
    for (int i : failed_trials) out << " " << i;
  }
  return out.str();
}

std::vector<Elem> random_sequence_avoiding(Rng& rng, int m, const Ring& R,
                                           const std::vector<Elem>& excluded_residues) {
  if (m < 1) fail(Err::ConfigError, "sequence length must be at least 1");
  if (!excluded_residues.empty() && m > 20)
    fail(Err::CapExceeded, "subset-sum screening limited to 20 elements");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Elem> a(m);
    for (int i = 0; i < m; ++i) a[i] = static_cast<Elem>(rng.below(R.modulus()));
    if (excluded_residues.empty()) return a;
    bool ok = true;
    std::vector<Elem> sum(std::size_t(1) << m, 0);
    for (std::uint32_t mask = 1; ok && mask < (std::uint32_t(1) << m); ++mask) {
      std::uint32_t low = mask & (~mask + 1);
      sum[mask] = R.add(sum[mask ^ low], a[__builtin_ctz(mask)]);
      if (std::binary_search(excluded_residues.begin(), excluded_residues.end(),
                             R.residue(sum[mask])))
        ok = false;
    }
    if (ok) return a;
  }
  fail(Err::ConfigError, "no sequence in general position found after 1000 draws");
}

ProbeReport quasilinear_probe(const FinZ0RModule& M, const PolyR& p, int m,
                              int trials, const Ring& R, std::uint64_t seed,
                              int threads) {
  if (trials < 0) fail(Err::ConfigError, "negative trial count");
  if (threads <= 0) threads = default_thread_count();
  std::vector<char> pass(trials, 0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t i) {
    Rng rng = Rng::for_trial(seed, i);
    std::vector<Elem> a = random_sequence_avoiding(rng, m, R, {});
    Z0RElem sigma =
        z0_sub(s_poly(a, p, R), Z0RElem::basis(p.eval(0, R), R));
    pass[i] = localization_vanishes(M, sigma) ? 1 : 0;
  });
  ProbeReport report;
  report.trials = trials;
  for (int i = 0; i < trials; ++i) {
    if (pass[i])
      ++report.passes;
    else
      report.failed_trials.push_back(i);
  }
  return report;
}

}  // namespace spwb
