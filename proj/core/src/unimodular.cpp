#include "spwb/unimodular.hpp"

#include <fstream>
#include <map>

#include "json.hpp"
#include "spwb/error.hpp"
#include "spwb/parallel.hpp"
#include "spwb/symplectic.hpp"

namespace spwb {

namespace {

int upper_index(int q, int i, int j) {
  return i * q - i * (i + 1) / 2 + (j - i - 1);
}

// m^e capped; anything above cap saturates to cap + 1.
std::uint64_t sat_pow(std::uint64_t m, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / (m == 0 ? 1 : m)) return cap + 1;
    r *= m;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Candidate vector of length len over R, index read as big-endian base-m
// digits so ascending index is lexicographic order.
std::vector<Elem> candidate_vector(std::uint64_t idx, int len,
                                   std::uint64_t m) {
  std::vector<Elem> v(len);
  for (int j = len - 1; j >= 0; --j) {
    v[j] = static_cast<Elem>(idx % m);
    idx /= m;
  }
  return v;
}

// Gram determinants of the nonempty even subsets of {0..q-1} no larger
// than max_size are units.
bool even_subsets_invertible(const SkewMat& A, const Ring& R, int max_size) {
  if (A.q > 20) fail(Err::CapExceeded, "skew test supports at most 20 rows");
  for (std::uint32_t mask = 1; mask < (1u << A.q); ++mask) {
    int size = __builtin_popcount(mask);
    if (size % 2 != 0 || size > max_size) continue;
    std::vector<int> idx;
    for (int i = 0; i < A.q; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    RingMatrix sub(size, size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) sub(r, c) = A.at(idx[r], idx[c], R);
    if (!R.is_unit(det(R, sub))) return false;
  }
  return true;
}

void check_columns(const UnimodSeq& v) {
  for (const auto& col : v.vecs)
    if (static_cast<int>(col.size()) != 2 * v.n)
      fail(Err::SizeMismatch, "sequence vector length must be 2n");
}

std::string pack_seq(const UnimodSeq& v) {
  std::string s;
  s.reserve(static_cast<std::size_t>(v.q()) * 2 * v.n * 4);
  for (const auto& col : v.vecs)
    for (Elem x : col) {
      auto u = static_cast<std::uint32_t>(x);
      for (int i = 0; i < 4; ++i)
        s.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
    }
  return s;
}

}  // namespace

SkewMat SkewMat::zero(int q) {
  if (q < 0) fail(Err::ConfigError, "negative size");
  SkewMat A;
  A.q = q;
  A.upper.assign(static_cast<std::size_t>(q) * (q - 1) / 2, 0);
  return A;
}

SkewMat SkewMat::make(int q, std::vector<Elem> upper, const Ring& R) {
  SkewMat A = zero(q);
  if (upper.size() != A.upper.size())
    fail(Err::SizeMismatch, "upper triangle needs q(q-1)/2 entries");
  for (std::size_t i = 0; i < upper.size(); ++i) A.upper[i] = R.reduce(upper[i]);
  return A;
}

SkewMat SkewMat::from_matrix(const RingMatrix& A, const Ring& R) {
  if (!rm_is_skew(R, A)) fail(Err::NotSkew, "matrix is not skew-symmetric");
  SkewMat S = zero(A.rows());
  for (int i = 0; i < S.q; ++i)
    for (int j = i + 1; j < S.q; ++j)
      S.upper[upper_index(S.q, i, j)] = R.reduce(A(i, j));
  return S;
}

Elem SkewMat::at(int i, int j, const Ring& R) const {
  if (i == j) return 0;
  if (i < j) return upper[upper_index(q, i, j)];
  return R.neg(upper[upper_index(q, j, i)]);
}

void SkewMat::set(int i, int j, Elem v, const Ring& R) {
  if (i == j) fail(Err::ConfigError, "diagonal is fixed at zero");
  if (i < j)
    upper[upper_index(q, i, j)] = R.reduce(v);
  else
    upper[upper_index(q, j, i)] = R.neg(v);
}

RingMatrix SkewMat::to_matrix(const Ring& R) const {
  RingMatrix A(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) A(i, j) = at(i, j, R);
  return A;
}

RingMatrix UnimodSeq::as_matrix() const {
  RingMatrix A(2 * n, q());
  for (int j = 0; j < q(); ++j)
    for (int i = 0; i < 2 * n; ++i) A(i, j) = vecs[j][i];
  return A;
}

bool is_skew_nondegenerate(const SkewMat& A, const Ring& R) {
  return even_subsets_invertible(A, R, A.q);
}

SkewMat gram(const Ring& R, const UnimodSeq& v) {
  check_columns(v);
  SkewMat A = SkewMat::zero(v.q());
  for (int i = 0; i < v.q(); ++i)
    for (int j = i + 1; j < v.q(); ++j)
      A.upper[upper_index(A.q, i, j)] =
          symplectic_pairing(R, v.vecs[i], v.vecs[j]);
  return A;
}

bool is_nondeg_unimodular(const UnimodSeq& v, const Ring& R) {
  check_columns(v);
  const int q = v.q();
  const int bound = q < 2 * v.n ? q : 2 * v.n;
  if (q > 20) fail(Err::CapExceeded, "sequence test supports at most 20 vectors");

  // Full residue rank on every subsequence of the critical length; shorter
  // ones follow.
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    if (__builtin_popcount(mask) != bound) continue;
    RingMatrix sub(2 * v.n, bound);
    int c = 0;
    for (int j = 0; j < q; ++j)
      if (mask & (1u << j)) {
        for (int i = 0; i < 2 * v.n; ++i) sub(i, c) = v.vecs[j][i];
        ++c;
      }
    if (residue_rank(R, sub) != bound) return false;
  }
  return even_subsets_invertible(gram(R, v), R, bound);
}

UnimodSeq apply_sp(const Ring& R, const RingMatrix& g, const UnimodSeq& v) {
  check_columns(v);
  if (g.rows() != 2 * v.n || g.cols() != 2 * v.n)
    fail(Err::SizeMismatch, "acting matrix must be 2n x 2n");
  UnimodSeq w;
  w.n = v.n;
  w.vecs.reserve(v.vecs.size());
  for (const auto& col : v.vecs) w.vecs.push_back(rm_apply(R, g, col));
  return w;
}

std::vector<UnimodSeq> enumerate_U(int q, int n, const Ring& R,
                                   std::uint64_t cap) {
  if (q < 0 || n < 0) fail(Err::ConfigError, "q and n must be nonnegative");
  const auto m = static_cast<std::uint64_t>(R.modulus());
  if (sat_pow(m, static_cast<std::uint64_t>(2 * n) * q, cap) > cap)
    fail(Err::CapExceeded, "candidate space exceeds the enumeration cap");
  if (q == 0 || n == 0)
    return {UnimodSeq{n, std::vector<std::vector<Elem>>(
                             q, std::vector<Elem>())}};

  const std::uint64_t per_level = sat_pow(m, 2 * n, cap);
  // Depth-first extension; every prefix of a valid sequence is valid, so
  // rejected prefixes prune their whole subtree.
  auto extend = [&](auto&& self, UnimodSeq& acc,
                    std::vector<UnimodSeq>& out) -> void {
    if (acc.q() == q) {
      out.push_back(acc);
      return;
    }
    for (std::uint64_t i = 0; i < per_level; ++i) {
      acc.vecs.push_back(candidate_vector(i, 2 * n, m));
      if (is_nondeg_unimodular(acc, R)) self(self, acc, out);
      acc.vecs.pop_back();
    }
  };

  // The leading vector partitions the work; concatenation in index order
  // keeps the overall output lexicographic.
  std::vector<std::vector<UnimodSeq>> parts(per_level);
  parallel_for(per_level, default_thread_count(), [&](std::size_t i) {
    UnimodSeq acc{n, {candidate_vector(i, 2 * n, m)}};
    if (is_nondeg_unimodular(acc, R)) extend(extend, acc, parts[i]);
  });
  std::vector<UnimodSeq> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<SkewMat> enumerate_skew_plus(int q, const Ring& R,
                                         std::uint64_t cap) {
  if (q < 0) fail(Err::ConfigError, "negative size");
  const auto m = static_cast<std::uint64_t>(R.modulus());
  const std::uint64_t entries = static_cast<std::uint64_t>(q) * (q - 1) / 2;
  const std::uint64_t total = sat_pow(m, entries, cap);
  if (total > cap)
    fail(Err::CapExceeded, "candidate space exceeds the enumeration cap");
  std::vector<SkewMat> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    SkewMat A = SkewMat::zero(q);
    std::uint64_t rest = idx;
    for (std::size_t e = A.upper.size(); e-- > 0;) {
      A.upper[e] = static_cast<Elem>(rest % m);
      rest /= m;
    }
    if (is_skew_nondegenerate(A, R)) out.push_back(std::move(A));
  }
  return out;
}

UnimodSeq normal_form(const SkewMat& A, int n, const Ring& R) {
  const int q = A.q;
  if (q > 2 * n + 1)
    fail(Err::RankBound, "normal form needs q <= 2n+1");
  if (!is_skew_nondegenerate(A, R))
    fail(Err::NotNondegenerate, "Gram matrix is not in Skew+");
  UnimodSeq u;
  u.n = n;
  if (q == 0) return u;
  if (n == 0) {
    // R^0: the unique sequence of empty vectors.
    u.vecs.assign(q, {});
    return u;
  }

  std::vector<Elem> e1(2 * n, 0);
  e1[0] = 1;
  u.vecs.push_back(std::move(e1));

  // Pairing of u_i against a solution vector living in R^t, t even: the
  // first t coordinates form complete hyperbolic pairs.
  auto solve_against = [&](int t, int target) {
    // t(U) psi_t x = (A_{i,target})_{i<t} with U the top t x t block.
    RingMatrix U(t, t);
    for (int j = 0; j < t; ++j)
      for (int i = 0; i < t; ++i) U(i, j) = u.vecs[j][i];
    RingMatrix W =
        rm_mul(R, rm_transpose(U), rm_reduce(R, standard_symplectic_form(t / 2)));
    std::vector<Elem> v(t);
    for (int i = 0; i < t; ++i) v[i] = A.at(i, target, R);
    auto x = linear_solve(R, W, v);
    if (!x) fail(Err::Internal, "nondegenerate Gram system must be solvable");
    x->resize(2 * n, 0);
    return std::move(*x);
  };

  for (int t = 1; t < q; ++t) {
    if (t % 2 == 0) {
      std::vector<Elem> x = solve_against(t, t);
      if (t < 2 * n) x[t] = 1;
      u.vecs.push_back(std::move(x));
    } else {
      std::vector<Elem> x = solve_against(t - 1, t);
      // The paper's choice alpha = A_{t-1,t} misses the pairing of the
      // previous column against x; subtract it so the Gram entry is exact.
      Elem alpha =
          R.sub(A.at(t - 1, t, R), symplectic_pairing(R, u.vecs[t - 1], x));
      x[t] = alpha;
      u.vecs.push_back(std::move(x));
    }
  }

  if (!(gram(R, u) == A) || !is_nondeg_unimodular(u, R))
    fail(Err::Internal, "normal form failed validation");
  return u;
}

OrbitCount orbit_count(int q, int n, const Ring& R, std::uint64_t cap) {
  std::vector<UnimodSeq> seqs = enumerate_U(q, n, R, cap);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < seqs.size(); ++i)
    index.emplace(pack_seq(seqs[i]), static_cast<int>(i));

  std::vector<int> parent(seqs.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };

  for (const RingMatrix& g : even_symplectic_generators(n, R))
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      auto it = index.find(pack_seq(apply_sp(R, g, seqs[i])));
      if (it == index.end())
        fail(Err::Internal, "group action must permute the enumeration");
      int a = find(static_cast<int>(i)), b = find(it->second);
      if (a != b) parent[a] = b;
    }

  OrbitCount oc;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++oc.orbits;
  oc.skew_plus_count =
      static_cast<std::int64_t>(enumerate_skew_plus(q, R, cap).size());
  return oc;
}

std::string useq_to_json(const UnimodSeq& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& col : v.vecs) j.push_back(col);
  return j.dump();
}

std::string skew_to_json(const SkewMat& A, const Ring& R) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (int i = 0; i < A.q; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int k = 0; k < A.q; ++k) row.push_back(A.at(i, k, R));
    j.push_back(std::move(row));
  }
  return j.dump();
}

void save_useq_list(const std::string& path,
                    const std::vector<UnimodSeq>& list) {
  std::ofstream os(path);
  if (!os) fail(Err::ConfigError, "cannot open file for writing: " + path);
  for (const auto& v : list) os << useq_to_json(v) << '\n';
  if (!os) fail(Err::ConfigError, "write failed: " + path);
}

std::vector<UnimodSeq> load_useq_list(const std::string& path, int n,
                                      const Ring& R) {
  std::ifstream is(path);
  if (!is) fail(Err::ConfigError, "cannot open file for reading: " + path);
  std::vector<UnimodSeq> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      fail(Err::ConfigError, "line is not a JSON sequence: " + path);
    UnimodSeq v;
    v.n = n;
    for (const auto& col : j) {
      if (!col.is_array())
        fail(Err::ConfigError, "sequence entries must be arrays: " + path);
      std::vector<Elem> c;
      for (const auto& x : col) {
        if (!x.is_number_integer())
          fail(Err::ConfigError, "residues must be integers: " + path);
        Elem e = x.get<Elem>();
        if (e < 0 || e >= R.modulus())
          fail(Err::ConfigError, "residue out of range: " + path);
        c.push_back(e);
      }
      v.vecs.push_back(std::move(c));
    }
    check_columns(v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace spwb
