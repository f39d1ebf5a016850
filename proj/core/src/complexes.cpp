#include "spwb/complexes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "spwb/error.hpp"
#include "spwb/parallel.hpp"
#include "spwb/ring_matrix.hpp"

namespace spwb {

namespace {

using Json = nlohmann::ordered_json;

std::unordered_map<std::string, int> label_index(
    const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> m;
  m.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    m.emplace(labels[i], static_cast<int>(i));
  return m;
}

int lookup(const std::unordered_map<std::string, int>& m,
           const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) fail(Err::Internal, "face leaves the enumerated basis");
  return it->second;
}

// Alternating face sum of one basis element as a sparse column; faces may
// collide, so coefficients accumulate before zeros are dropped.
template <typename Label, typename Face, typename Name>
std::vector<std::pair<int, std::int64_t>> face_column(
    const Label& v, int q, const std::unordered_map<std::string, int>& below,
    const Face& face, const Name& name) {
  std::map<int, std::int64_t> acc;
  for (int i = 1; i <= q; ++i)
    acc[lookup(below, name(face(v, i)))] += (i % 2 == 1) ? 1 : -1;
  std::vector<std::pair<int, std::int64_t>> out;
  for (const auto& [row, c] : acc)
    if (c != 0) out.emplace_back(row, c);
  return out;
}

// Assembles one differential, parallel over columns.
template <typename Label, typename Face, typename Name>
SparseIntMat face_differential(const std::vector<Label>& from,
                               const std::vector<std::string>& below_labels,
                               int q, const Face& face, const Name& name) {
  const auto below = label_index(below_labels);
  std::vector<std::vector<std::pair<int, std::int64_t>>> cols(from.size());
  parallel_for(from.size(), default_thread_count(), [&](std::size_t j) {
    cols[j] = face_column(from[j], q, below, face, name);
  });
  SparseIntMat d;
  d.rows = static_cast<int>(below_labels.size());
  d.cols = static_cast<int>(from.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [row, c] : cols[j])
      d.entries.emplace_back(row, static_cast<int>(j), c);
  return d;
}

std::int64_t to_i64(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) fail(Err::Overflow, "matrix entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

SparseCol intmat_column(const IntMat& A, int c) {
  SparseCol out;
  for (int r = 0; r < A.rows(); ++r)
    if (A(r, c) != 0) out.nz.emplace_back(r, to_i64(A(r, c)));
  return out;
}

// Columns of v with 1-based positions i and j removed, as a dense matrix.
RingMatrix drop_two_columns(const UnimodSeq& v, int i, int j) {
  const int rows = 2 * v.n;
  RingMatrix m(rows, v.q() - 2);
  int out = 0;
  for (int c = 0; c < v.q(); ++c) {
    if (c == i - 1 || c == j - 1) continue;
    for (int r = 0; r < rows; ++r) m(r, out) = v.vecs[c][r];
    ++out;
  }
  return m;
}

// <(delta_ij det)^{-1}> for the pair-deletion determinant of v.
Z0RElem cofactor_symbol(const Ring& R, const UnimodSeq& v, int i, int j) {
  Elem d = det(R, drop_two_columns(v, i, j));
  if (!R.is_unit(d))
    fail(Err::Internal, "pair-deletion determinant is not a unit");
  if (delta_sign(i, j) < 0) d = R.neg(d);
  return Z0RElem::basis(R.unit_inverse(d), R);
}

UnimodSeq append_column(const UnimodSeq& v, const std::vector<Elem>& x) {
  UnimodSeq out = v;
  out.vecs.push_back(x);
  return out;
}

void check_odd_with_extension(const Ring& R, const UnimodSeq& U,
                              const std::vector<Elem>& x) {
  if (U.q() != 2 * U.n + 1)
    fail(Err::ConfigError, "sequence must have 2n+1 vectors");
  if (static_cast<int>(x.size()) != 2 * U.n)
    fail(Err::SizeMismatch, "appended vector length must be 2n");
}

}  // namespace

UnimodSeq useq_face(const UnimodSeq& v, int i) {
  if (i < 1 || i > v.q()) fail(Err::ConfigError, "face index out of range");
  UnimodSeq out;
  out.n = v.n;
  out.vecs = v.vecs;
  out.vecs.erase(out.vecs.begin() + (i - 1));
  return out;
}

SkewMat skew_face(const SkewMat& A, int i, const Ring& R) {
  if (i < 1 || i > A.q) fail(Err::ConfigError, "face index out of range");
  std::vector<Elem> upper;
  for (int r = 0; r < A.q; ++r) {
    if (r == i - 1) continue;
    for (int c = r + 1; c < A.q; ++c) {
      if (c == i - 1) continue;
      upper.push_back(A.at(r, c, R));
    }
  }
  return SkewMat::make(A.q - 1, std::move(upper), R);
}

LabeledComplex build_U_complex(const Ring& R, int n, int q_max,
                               std::uint64_t cap) {
  if (n < 0 || q_max < 0) fail(Err::ConfigError, "sizes must be nonnegative");
  if (q_max > 2 * n)
    fail(Err::ConfigError, "degrees above 2n have empty bases");
  LabeledComplex C;
  std::vector<std::vector<UnimodSeq>> lists;
  for (int q = 0; q <= q_max; ++q) {
    lists.push_back(enumerate_U(q, n, R, cap));
    std::vector<std::string> labels;
    labels.reserve(lists.back().size());
    for (const auto& v : lists.back()) labels.push_back(useq_to_json(v));
    C.basis.push_back(std::move(labels));
  }
  C.d.resize(C.basis.size());
  C.d[0] = SparseIntMat{0, static_cast<int>(C.basis[0].size()), {}};
  for (int q = 1; q <= q_max; ++q)
    C.d[q] = face_differential(
        lists[q], C.basis[q - 1], q,
        [](const UnimodSeq& v, int i) { return useq_face(v, i); },
        [](const UnimodSeq& v) { return useq_to_json(v); });
  validate_complex(C);
  return C;
}

LabeledComplex build_skew_complex(const Ring& R, int q_max,
                                  std::uint64_t cap) {
  if (q_max < 0) fail(Err::ConfigError, "sizes must be nonnegative");
  LabeledComplex C;
  std::vector<std::vector<SkewMat>> lists;
  for (int q = 0; q <= q_max; ++q) {
    lists.push_back(enumerate_skew_plus(q, R, cap));
    std::vector<std::string> labels;
    labels.reserve(lists.back().size());
    for (const auto& A : lists.back()) labels.push_back(skew_to_json(A, R));
    C.basis.push_back(std::move(labels));
  }
  C.d.resize(C.basis.size());
  C.d[0] = SparseIntMat{0, static_cast<int>(C.basis[0].size()), {}};
  for (int q = 1; q <= q_max; ++q)
    C.d[q] = face_differential(
        lists[q], C.basis[q - 1], q,
        [&R](const SkewMat& A, int i) { return skew_face(A, i, R); },
        [&R](const SkewMat& A) { return skew_to_json(A, R); });
  validate_complex(C);
  return C;
}

LabeledComplex truncate_complex(const LabeledComplex& C, int q_max) {
  if (q_max < 0 || q_max > C.top_degree())
    fail(Err::ConfigError, "truncation degree out of range");
  LabeledComplex out;
  out.basis.assign(C.basis.begin(), C.basis.begin() + q_max + 1);
  out.d.assign(C.d.begin(), C.d.begin() + q_max + 1);
  return out;
}

AuxComplex build_aux_complex(const Ring& R, int n, int r, std::uint64_t cap) {
  if (n < 0 || r < 0) fail(Err::ConfigError, "sizes must be nonnegative");
  if (r > n) fail(Err::ConfigError, "level must not exceed n");
  AuxComplex A;
  A.n = n;
  A.r = r;
  if (r == n) {
    for (auto& u : enumerate_U(2 * n + 1, n, R, cap))
      A.top.push_back(AuxTopLabel{0, std::move(u), {}});
    A.d = SparseIntMat{0, static_cast<int>(A.top.size()), {}};
    return A;
  }
  const auto us = enumerate_U(2 * r + 2, r, R, cap);
  const auto ws = enumerate_U(1, n - r, R, cap);
  A.bottom = enumerate_U(2 * r + 1, r, R, cap);
  std::unordered_map<std::string, int> bottom_index;
  for (std::size_t i = 0; i < A.bottom.size(); ++i)
    bottom_index.emplace(useq_to_json(A.bottom[i]), static_cast<int>(i));
  A.d.rows = static_cast<int>(A.bottom.size());
  for (int i = 1; i <= 2 * r + 2; ++i)
    for (const auto& u : us) {
      const int row = lookup(bottom_index, useq_to_json(useq_face(u, i)));
      for (const auto& w : ws) {
        A.d.entries.emplace_back(row, static_cast<int>(A.top.size()),
                                 (i % 2 == 0) ? 1 : -1);
        A.top.push_back(AuxTopLabel{i, u, w.vecs[0]});
      }
    }
  A.d.cols = static_cast<int>(A.top.size());
  return A;
}

ChainMapPair phi_chain_map(const AuxComplex& aux, const LabeledComplex& full,
                           const Ring& R) {
  const int n = aux.n, r = aux.r;
  const int top_deg = (r == n) ? 2 * n : 2 * r + 1;
  if (full.top_degree() < top_deg)
    fail(Err::ConfigError, "target complex is truncated below the image");
  ChainMapPair phi;
  const auto top_index = label_index(full.basis[top_deg]);
  phi.top.rows = static_cast<int>(full.basis[top_deg].size());
  phi.top.cols = static_cast<int>(aux.top.size());
  for (std::size_t col = 0; col < aux.top.size(); ++col) {
    const auto& lab = aux.top[col];
    std::map<int, std::int64_t> acc;
    if (r == n) {
      for (int j = 1; j <= 2 * n + 1; ++j)
        acc[lookup(top_index, useq_to_json(useq_face(lab.u, j)))] +=
            (j % 2 == 1) ? 1 : -1;
    } else {
      // Stack u over the slot-placed column w, then delete column j != slot.
      UnimodSeq stacked;
      stacked.n = n;
      for (int c = 0; c < 2 * r + 2; ++c) {
        std::vector<Elem> v = lab.u.vecs[c];
        v.resize(2 * n, 0);
        if (c == lab.slot - 1)
          std::copy(lab.w.begin(), lab.w.end(), v.begin() + 2 * r);
        stacked.vecs.push_back(std::move(v));
      }
      for (int j = 1; j <= 2 * r + 2; ++j) {
        if (j == lab.slot) continue;
        acc[lookup(top_index, useq_to_json(useq_face(stacked, j)))] +=
            (j % 2 == 1) ? 1 : -1;
      }
    }
    for (const auto& [row, c] : acc)
      if (c != 0) phi.top.entries.emplace_back(row, static_cast<int>(col), c);
  }
  if (r == n) {
    phi.bottom = SparseIntMat{0, 0, {}};
    return phi;
  }
  const auto bottom_index = label_index(full.basis[2 * r]);
  phi.bottom.rows = static_cast<int>(full.basis[2 * r].size());
  phi.bottom.cols = static_cast<int>(aux.bottom.size());
  for (std::size_t col = 0; col < aux.bottom.size(); ++col) {
    std::map<int, std::int64_t> acc;
    for (int j = 1; j <= 2 * r + 1; ++j) {
      UnimodSeq face = useq_face(aux.bottom[col], j);
      face.n = n;
      for (auto& v : face.vecs) v.resize(2 * n, 0);
      acc[lookup(bottom_index, useq_to_json(face))] += (j % 2 == 1) ? 1 : -1;
    }
    for (const auto& [row, c] : acc)
      if (c != 0)
        phi.bottom.entries.emplace_back(row, static_cast<int>(col), c);
  }
  return phi;
}

bool chain_square_commutes(const LabeledComplex& full, const AuxComplex& aux,
                           const ChainMapPair& phi) {
  const int top_deg = (aux.r == aux.n) ? 2 * aux.n : 2 * aux.r + 1;
  if (full.top_degree() < top_deg)
    fail(Err::ConfigError, "target complex is truncated below the image");
  // Column-by-column sparse comparison; the dense products do not fit for
  // the larger enumerations.
  const auto d_full = sim_columns(full.d[top_deg]);
  const auto phi_top = sim_columns(phi.top);
  const auto phi_bottom = sim_columns(phi.bottom);
  const auto d_aux = sim_columns(aux.d);
  for (std::size_t j = 0; j < phi_top.size(); ++j) {
    SparseCol lhs;
    for (const auto& [row, c] : phi_top[j].nz)
      lhs = sc_axpy(lhs, c, d_full[static_cast<std::size_t>(row)]);
    SparseCol rhs;
    if (aux.r < aux.n)
      for (const auto& [row, c] : d_aux[j].nz)
        rhs = sc_axpy(rhs, c, phi_bottom[static_cast<std::size_t>(row)]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

int delta_sign(int i, int j) {
  if (i == j) return 0;
  if (i < j) return (i % 2 == 1) ? 1 : -1;
  return (i % 2 == 0) ? 1 : -1;
}

Z0RElem z0_matrix_det(const Z0RMatrix& M, const Ring& R) {
  if (M.rows != M.cols) fail(Err::NotSquare, "determinant needs a square matrix");
  // Cofactor expansion along the first live row over index subsets.
  std::vector<int> cols(static_cast<std::size_t>(M.cols));
  for (int c = 0; c < M.cols; ++c) cols[c] = c;
  struct Rec {
    const Z0RMatrix& m;
    const Ring& ring;
    Z0RElem run(int row, std::vector<int>& live) {
      if (live.empty()) return Z0RElem::constant(1, ring);
      Z0RElem out;
      for (std::size_t k = 0; k < live.size(); ++k) {
        const Z0RElem& e = m(row, live[k]);
        if (e.is_zero()) continue;
        const int c = live[k];
        live.erase(live.begin() + k);
        Z0RElem minor = run(row + 1, live);
        live.insert(live.begin() + k, c);
        Z0RElem term = z0_mul(e, minor, ring);
        out = (k % 2 == 0) ? z0_add(out, term) : z0_sub(out, term);
      }
      return out;
    }
  } rec{M, R};
  return rec.run(0, cols);
}

Z0RMatrix gamma_matrix(const Ring& R, int r, std::uint64_t cap) {
  if (r < 0) fail(Err::ConfigError, "level must be nonnegative");
  const auto skews = enumerate_skew_plus(2 * r + 1, R, cap);
  std::map<std::vector<Elem>, int> row_index;
  for (std::size_t i = 0; i < skews.size(); ++i)
    row_index.emplace(skews[i].upper, static_cast<int>(i));
  const auto us = enumerate_U(2 * r + 2, r, R, cap);
  const int q = 2 * r + 2;
  Z0RMatrix M(static_cast<int>(skews.size()),
              q * static_cast<int>(us.size()));
  parallel_for(
      static_cast<std::size_t>(M.cols), default_thread_count(),
      [&](std::size_t col) {
        const int i = static_cast<int>(col) / static_cast<int>(us.size()) + 1;
        const UnimodSeq& u = us[col % us.size()];
        for (int j = 1; j <= q; ++j) {
          if (j == i) continue;
          auto it = row_index.find(gram(R, useq_face(u, j)).upper);
          if (it == row_index.end())
            fail(Err::Internal, "face leaves the enumerated basis");
          Z0RElem term = z0_scale((j % 2 == 1) ? 1 : -1,
                                  cofactor_symbol(R, u, i, j));
          Z0RElem& slot = M(it->second, static_cast<int>(col));
          slot = z0_add(slot, term);
        }
      });
  return M;
}

IntMat specialize_z0_matrix(const Z0RMatrix& M, const FinZ0RModule& H) {
  const int h = H.n_gens();
  IntMat out(M.rows * h, M.cols * h);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) {
      const IntMat block = H.sigma_matrix(M(r, c));
      for (int br = 0; br < h; ++br)
        for (int bc = 0; bc < h; ++bc)
          out(r * h + br, c * h + bc) = block(br, bc);
    }
  return out;
}

Z0RMatrix m_matrix(const Ring& R, const UnimodSeq& U,
                   const std::vector<Elem>& x) {
  check_odd_with_extension(R, U, x);
  const UnimodSeq ext = append_column(U, x);
  if (!is_nondeg_unimodular(ext, R))
    fail(Err::InputNotNondegenerate, "extension is degenerate");
  const int q = ext.q();
  Z0RMatrix M(q, q);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j)
      if (i != j) M(i - 1, j - 1) = cofactor_symbol(R, ext, i, j);
  return M;
}

Z0RElem m_det(const Ring& R, const UnimodSeq& U, const std::vector<Elem>& x) {
  return z0_matrix_det(m_matrix(R, U, x), R);
}

bool extension_feasible(const Ring& R, const UnimodSeq& U,
                        const std::vector<Elem>& xi) {
  check_odd_with_extension(R, U, xi);
  if (U.q() > 20) fail(Err::CapExceeded, "filter supports at most 20 vectors");
  if (!is_nondeg_unimodular(U, R))
    fail(Err::InputNotNondegenerate, "base sequence is degenerate");
  const UnimodSeq ext = append_column(U, xi);
  const int q = U.q();
  for (int i = 1; i <= q; ++i)
    for (int j = i + 1; j <= q; ++j)
      if (!R.is_unit(det(R, drop_two_columns(ext, i, j)))) return false;
  // Odd subsets I of the base columns, |I| < 2n, joined with xi.
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size % 2 == 0 || size >= 2 * U.n) continue;
    UnimodSeq sub;
    sub.n = U.n;
    for (int c = 0; c < q; ++c)
      if (mask & (1u << c)) sub.vecs.push_back(U.vecs[c]);
    sub.vecs.push_back(xi);
    if (!R.is_unit(pfaffian(R, gram(R, sub).to_matrix(R)))) return false;
  }
  return true;
}

std::vector<Elem> first_feasible_extension(const Ring& R, const UnimodSeq& U,
                                           std::uint64_t cap) {
  check_odd_with_extension(R, U, std::vector<Elem>(2 * U.n, 0));
  const int len = 2 * U.n;
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) {
    total *= static_cast<std::uint64_t>(R.size());
    if (total > cap)
      fail(Err::CapExceeded, "candidate space exceeds the enumeration cap");
  }
  std::vector<Elem> xi(static_cast<std::size_t>(len), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    if (extension_feasible(R, U, xi)) return xi;
    // Lexicographic successor, last coordinate fastest.
    int pos = len - 1;
    while (pos >= 0 && xi[pos] == R.modulus() - 1) xi[pos--] = 0;
    if (pos >= 0) ++xi[pos];
  }
  fail(Err::NotDefinedAt, "no extension passes the filter");
}

bool adjugate_chain_check(const Ring& R, const UnimodSeq& U,
                          const std::vector<Elem>& x, const FinZ0RModule& H,
                          std::uint64_t cap) {
  const int r = U.n;
  const Z0RElem sigma = m_det(R, U, x);
  const UnimodSeq ext = append_column(U, x);
  const auto skews = enumerate_skew_plus(2 * r + 1, R, cap);
  std::map<std::vector<Elem>, int> block_index;
  for (std::size_t i = 0; i < skews.size(); ++i)
    block_index.emplace(skews[i].upper, static_cast<int>(i));
  const int h = H.n_gens();
  const int dim = static_cast<int>(skews.size()) * h;
  LatticeAccumulator lat(dim);
  const IntMat& rel = H.relations();
  for (std::size_t s = 0; s < skews.size(); ++s)
    for (int c = 0; c < rel.cols(); ++c) {
      SparseCol col;
      for (int g = 0; g < h; ++g)
        if (rel(g, c) != 0)
          col.nz.emplace_back(static_cast<int>(s) * h + g, to_i64(rel(g, c)));
      lat.insert(std::move(col));
    }
  // Specialized gamma columns are streamed into the lattice instead of
  // materializing the universal matrix. Once the lattice is all of Z^dim
  // (full rank and every unit vector contained) the scan can stop.
  const auto full_lattice = [&lat, dim]() {
    if (lat.rank() < dim) return false;
    for (int i = 0; i < dim; ++i) {
      SparseCol e;
      e.nz.emplace_back(i, 1);
      if (!lat.contains(e)) return false;
    }
    return true;
  };
  const auto us = enumerate_U(2 * r + 2, r, R, cap);
  const int q = 2 * r + 2;
  bool saturated = false;
  std::size_t since_check = 0;
  for (int i = 1; i <= q && !saturated; ++i)
    for (const auto& u : us) {
      std::map<int, Z0RElem> col;
      for (int j = 1; j <= q; ++j) {
        if (j == i) continue;
        auto it = block_index.find(gram(R, useq_face(u, j)).upper);
        if (it == block_index.end())
          fail(Err::Internal, "face leaves the enumerated basis");
        Z0RElem term = z0_scale((j % 2 == 1) ? 1 : -1,
                                cofactor_symbol(R, u, i, j));
        col[it->second] = z0_add(col[it->second], term);
      }
      for (int g = 0; g < h; ++g) {
        SparseCol v;
        for (const auto& [block, e] : col) {
          const IntMat S = H.sigma_matrix(e);
          for (int row = 0; row < h; ++row)
            if (S(row, g) != 0)
              v.nz.emplace_back(block * h + row, to_i64(S(row, g)));
        }
        lat.insert(std::move(v));
      }
      if (++since_check >= 512) {
        since_check = 0;
        if (full_lattice()) { saturated = true; break; }
      }
    }
  const IntMat S = H.sigma_matrix(sigma);
  for (int j = 1; j <= q; ++j) {
    auto it = block_index.find(gram(R, useq_face(ext, j)).upper);
    if (it == block_index.end())
      fail(Err::Internal, "face leaves the enumerated basis");
    for (int g = 0; g < h; ++g) {
      SparseCol v;
      for (int row = 0; row < h; ++row)
        if (S(row, g) != 0)
          v.nz.emplace_back(it->second * h + row, to_i64(S(row, g)));
      if (!lat.contains(v)) return false;
    }
  }
  return true;
}

Z0RElem endgame_limit_check(Elem a, Elem b, Elem c, const Ring& R) {
  a = R.reduce(a);
  b = R.reduce(b);
  c = R.reduce(c);
  for (Elem v : {a, b, c})
    if (!R.is_unit(v)) fail(Err::NotAUnit, "parameters must be units");
  // Symbols: <1/(bt-c)>, <-1/t>, then the constant entries.
  std::vector<std::pair<PolyR, PolyR>> pairs;
  pairs.emplace_back(PolyR::make({1}, R), PolyR::make({R.neg(c), b}, R));
  pairs.emplace_back(PolyR::make({R.neg(1)}, R), PolyR::x());
  const PolyR one = PolyR::make({1}, R);
  for (Elem v : {R.unit_inverse(R.neg(a)), R.unit_inverse(R.neg(R.mul(a, b))),
                 R.unit_inverse(R.neg(c)), R.unit_inverse(a),
                 R.unit_inverse(c)})
    pairs.emplace_back(PolyR::make({v}, R), one);
  const int nv = 7;
  const auto var = [nv](int i) { return MultiPoly::variable(i, nv); };
  const MultiPoly zero = MultiPoly::constant(0, nv);
  // M([[1,0,b],[0,a,c]], (1,t)) with symbolic t.
  const std::vector<std::vector<MultiPoly>> m = {
      {zero, var(0), var(2), var(3)},
      {var(0), zero, var(1), var(4)},
      {var(5), var(1), zero, var(5)},
      {var(3), var(6), var(5), zero}};
  // Cofactor expansion along the first live row.
  struct Rec {
    const std::vector<std::vector<MultiPoly>>& mat;
    const MultiPoly& z;
    MultiPoly run(int row, std::vector<int>& live) {
      if (live.empty()) return MultiPoly::constant(1, 7);
      MultiPoly out = z;
      for (std::size_t k = 0; k < live.size(); ++k) {
        const MultiPoly& e = mat[row][static_cast<std::size_t>(live[k])];
        if (e.terms().empty()) continue;
        const int c = live[k];
        live.erase(live.begin() + k);
        MultiPoly term = mp_mul(e, run(row + 1, live));
        live.insert(live.begin() + k, c);
        out = (k % 2 == 0) ? mp_add(out, term) : mp_sub(out, term);
      }
      return out;
    }
  } rec{m, zero};
  std::vector<int> live = {0, 1, 2, 3};
  const AdmissibleFn f =
      AdmissibleFn::make(rec.run(0, live), std::move(pairs), R);
  return limit_admissible(f, LimitPoint::infinity(), R);
}

DetMTrace detm_trace(const SkewMat& B, const Ring& R, std::uint64_t cap) {
  if (B.q < 3 || B.q % 2 == 0)
    fail(Err::ConfigError, "trace needs an odd size of at least 3");
  const int r = (B.q - 1) / 2;
  const UnimodSeq U = normal_form(B, r, R);
  DetMTrace trace;
  for (int level = r; level >= 1; --level) {
    // Drop the first 2r-2l rows and columns of the normal form.
    const int cut = 2 * r - 2 * level;
    UnimodSeq trunc;
    trunc.n = level;
    for (int c = cut; c <= 2 * r; ++c)
      trunc.vecs.emplace_back(U.vecs[c].begin() + cut, U.vecs[c].end());
    if (!is_nondeg_unimodular(trunc, R))
      fail(Err::Internal, "truncation left the nondegenerate locus");
    for (int row = 0; row < 2 * level; ++row)
      if (trunc.vecs[0][row] != (row == 0 ? 1 : 0))
        fail(Err::Internal, "truncation does not start at the first basis vector");
    const std::vector<Elem> x = first_feasible_extension(R, trunc, cap);
    const Z0RElem val = m_det(R, trunc, x);
    trace.steps.push_back(DetMTraceStep{level, std::move(trunc), x, val});
  }
  const UnimodSeq& u1 = trace.steps.back().truncation;
  if (u1.vecs[1][0] != 0)
    fail(Err::Internal, "truncation does not start at the first basis vector");
  trace.endgame_limit =
      endgame_limit_check(u1.vecs[1][1], u1.vecs[2][0], u1.vecs[2][1], R);
  return trace;
}

std::string complex_to_json(const LabeledComplex& C) {
  Json j;
  j["degrees"] = C.top_degree();
  Json basis = Json::array();
  for (const auto& labels : C.basis) {
    Json degree = Json::array();
    for (const auto& label : labels) degree.push_back(Json::parse(label));
    basis.push_back(std::move(degree));
  }
  j["basis"] = std::move(basis);
  Json diffs = Json::array();
  for (const auto& d : C.d) {
    Json m;
    m["rows"] = d.rows;
    m["cols"] = d.cols;
    Json entries = Json::array();
    for (const auto& [row, col, v] : d.entries)
      entries.push_back(Json::array({row, col, v}));
    m["entries"] = std::move(entries);
    diffs.push_back(std::move(m));
  }
  j["d"] = std::move(diffs);
  return j.dump();
}

std::string homology_to_json(const std::vector<FGAbelianGroup>& H) {
  Json j = Json::array();
  for (const auto& g : H) {
    Json e;
    e["free_rank"] = g.free_rank;
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.str());
    e["torsion"] = std::move(torsion);
    j.push_back(std::move(e));
  }
  return j.dump();
}

}  // namespace spwb
