#include "spwb/ring_matrix.hpp"

namespace spwb {

RingMatrix rm_mul(const Ring& R, const RingMatrix& A, const RingMatrix& B) {
  if (A.cols() != B.rows()) fail(Err::SizeMismatch, "rm_mul");
  RingMatrix C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      Elem v = A(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols(); ++j)
        C(i, j) = R.add(C(i, j), R.mul(v, B(k, j)));
    }
  return C;
}

RingMatrix rm_add(const Ring& R, const RingMatrix& A, const RingMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Err::SizeMismatch, "rm_add");
  RingMatrix C(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = R.add(A(i, j), B(i, j));
  return C;
}

RingMatrix rm_neg(const Ring& R, const RingMatrix& A) {
  RingMatrix C(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = R.neg(A(i, j));
  return C;
}

RingMatrix rm_transpose(const RingMatrix& A) {
  RingMatrix C(A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(j, i) = A(i, j);
  return C;
}

RingMatrix rm_reduce(const Ring& R, const RingMatrix& A) {
  RingMatrix C(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = R.reduce(A(i, j));
  return C;
}

std::vector<Elem> rm_apply(const Ring& R, const RingMatrix& A,
                           const std::vector<Elem>& v) {
  if (static_cast<int>(v.size()) != A.cols()) fail(Err::SizeMismatch, "rm_apply");
  std::vector<Elem> out(static_cast<std::size_t>(A.rows()), 0);
  for (int i = 0; i < A.rows(); ++i) {
    Elem s = 0;
    for (int j = 0; j < A.cols(); ++j)
      s = R.add(s, R.mul(A(i, j), v[static_cast<std::size_t>(j)]));
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

Elem det(const Ring& R, const RingMatrix& M) {
  if (M.rows() != M.cols()) fail(Err::NotSquare, "det");
  int n = M.rows();
  if (n == 0) return R.reduce(1);
  if (n > 20) fail(Err::CapExceeded, "det limited to 20 columns");
  // g[mask] = det of the submatrix on rows 0..popcount-1 and columns in
  // mask, built by expansion along the last of those rows.
  std::vector<Elem> g(std::size_t(1) << n, 0);
  g[0] = R.reduce(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    int pc = __builtin_popcount(mask);
    int row = pc - 1;
    Elem acc = 0;
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (std::uint32_t(1) << j))) continue;
      Elem entry = M(row, j);
      if (entry != 0) {
        Elem term = R.mul(entry, g[mask ^ (std::uint32_t(1) << j)]);
        acc = ((row + t) % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
      }
      ++t;
    }
    g[mask] = acc;
  }
  return g[(std::size_t(1) << n) - 1];
}

bool rm_is_skew(const Ring& R, const RingMatrix& A) {
  if (A.rows() != A.cols()) return false;
  for (int i = 0; i < A.rows(); ++i) {
    if (R.reduce(A(i, i)) != 0) return false;
    for (int j = i + 1; j < A.cols(); ++j)
      if (R.reduce(A(j, i)) != R.neg(A(i, j))) return false;
  }
  return true;
}

Elem pfaffian(const Ring& R, const RingMatrix& A) {
  if (A.rows() != A.cols()) fail(Err::NotSquare, "pfaffian");
  if (!rm_is_skew(R, A)) fail(Err::NotSkew, "pfaffian");
  int n = A.rows();
  if (n % 2 != 0) fail(Err::OddSize, "pfaffian of odd size");
  if (n == 0) return R.reduce(1);
  if (n > 20) fail(Err::CapExceeded, "pfaffian limited to 20 columns");
  std::vector<Elem> pf(std::size_t(1) << n, 0);
  pf[0] = R.reduce(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    int i = __builtin_ctz(mask);
    Elem acc = 0;
    int s = 1;
    for (int j = i + 1; j < n; ++j) {
      if (!(mask & (std::uint32_t(1) << j))) continue;
      ++s;
      Elem entry = A(i, j);
      if (entry != 0) {
        Elem term =
            R.mul(entry, pf[mask ^ (std::uint32_t(1) << i) ^ (std::uint32_t(1) << j)]);
        acc = (s % 2 == 0) ? R.add(acc, term) : R.sub(acc, term);
      }
    }
    pf[mask] = acc;
  }
  return pf[(std::size_t(1) << n) - 1];
}

RingMatrix rm_inverse(const Ring& R, const RingMatrix& M) {
  if (M.rows() != M.cols()) fail(Err::NotSquare, "rm_inverse");
  int n = M.rows();
  RingMatrix A = rm_reduce(R, M);
  RingMatrix I = RingMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (R.is_unit(A(r, col))) { pivot = r; break; }
    if (pivot < 0) fail(Err::NotAUnit, "matrix determinant is not a unit");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(A(pivot, j), A(col, j));
        std::swap(I(pivot, j), I(col, j));
      }
    Elem inv = R.unit_inverse(A(col, col));
    for (int j = 0; j < n; ++j) {
      A(col, j) = R.mul(A(col, j), inv);
      I(col, j) = R.mul(I(col, j), inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Elem f = A(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        A(r, j) = R.sub(A(r, j), R.mul(f, A(col, j)));
        I(r, j) = R.sub(I(r, j), R.mul(f, I(col, j)));
      }
    }
  }
  return I;
}

int residue_rank(const Ring& R, const RingMatrix& M) {
  std::int64_t p = R.p();
  int rows = M.rows(), cols = M.cols();
  std::vector<std::vector<Elem>> a(static_cast<std::size_t>(rows),
                                   std::vector<Elem>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = R.reduce(M(i, j)) % p;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rank)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    // Inverse mod p by Fermat.
    Elem inv = 1, base = pr[static_cast<std::size_t>(col)], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = col; j < cols; ++j)
      pr[static_cast<std::size_t>(j)] = pr[static_cast<std::size_t>(j)] * inv % p;
    for (int r = rank + 1; r < rows; ++r) {
      Elem f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j < cols; ++j) {
        auto& cell = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        cell = ((cell - f * pr[static_cast<std::size_t>(j)]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

// Forward elimination with unit pivots; when only non-unit entries remain,
// divides the residual rows by p and solves them at the smaller modulus.
std::optional<std::vector<Elem>> solve_rec(std::int64_t p, std::int64_t modulus,
                                           std::vector<std::vector<Elem>> a,
                                           std::vector<Elem> b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  auto red = [&](std::int64_t x) { return ((x % modulus) + modulus) % modulus; };
  auto inv_unit = [&](Elem u) {
    std::int64_t r0 = u, r1 = modulus, s0 = 1, s1 = 0;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    return red(s0);
  };

  std::vector<int> pivot_row_of_col(cols, -1);
  std::vector<int> pivot_order;  // columns in elimination order
  std::vector<bool> row_used(rows, false);

  for (;;) {
    // Hunt for a unit entry among unused rows.
    int pi = -1, pj = -1;
    for (std::size_t i = 0; i < rows && pi < 0; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (a[i][j] % p != 0) { pi = static_cast<int>(i); pj = static_cast<int>(j); break; }
    }
    if (pi < 0) break;
    Elem inv = inv_unit(a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)]);
    auto& pr = a[static_cast<std::size_t>(pi)];
    for (std::size_t j = 0; j < cols; ++j) pr[j] = red(pr[j] * inv);
    b[static_cast<std::size_t>(pi)] = red(b[static_cast<std::size_t>(pi)] * inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (static_cast<int>(r) == pi || row_used[r]) continue;
      Elem f = a[r][static_cast<std::size_t>(pj)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = red(a[r][j] - f * pr[j]);
      b[r] = red(b[r] - f * b[static_cast<std::size_t>(pi)]);
    }
    row_used[static_cast<std::size_t>(pi)] = true;
    pivot_row_of_col[static_cast<std::size_t>(pj)] = pi;
    pivot_order.push_back(pj);
  }

  std::vector<Elem> x(cols, 0);

  // Residual rows have only multiples of p left; peel one factor of p off
  // and solve the smaller system for the free columns.
  std::vector<std::size_t> residual;
  for (std::size_t i = 0; i < rows; ++i)
    if (!row_used[i]) residual.push_back(i);
  if (!residual.empty()) {
    bool any_nonzero = false;
    for (std::size_t i : residual) {
      for (std::size_t j = 0; j < cols; ++j)
        if (a[i][j] != 0) any_nonzero = true;
      if (b[i] != 0) any_nonzero = true;
    }
    if (any_nonzero) {
      if (modulus == p) {
        for (std::size_t i : residual)
          if (b[i] != 0) return std::nullopt;  // zero row, nonzero target
      } else {
        std::vector<std::vector<Elem>> sub;
        std::vector<Elem> sb;
        for (std::size_t i : residual) {
          if (b[i] % p != 0) return std::nullopt;
          std::vector<Elem> row(cols);
          for (std::size_t j = 0; j < cols; ++j) row[j] = a[i][j] / p;
          sub.push_back(std::move(row));
          sb.push_back(b[i] / p);
        }
        auto sx = solve_rec(p, modulus / p, std::move(sub), std::move(sb));
        if (!sx) return std::nullopt;
        x = *sx;  // valid representatives at the larger modulus too
      }
    }
  }

  // Back-substitute pivot columns against the chosen free values.
  for (auto it = pivot_order.rbegin(); it != pivot_order.rend(); ++it) {
    std::size_t j = static_cast<std::size_t>(*it);
    std::size_t i = static_cast<std::size_t>(pivot_row_of_col[j]);
    std::int64_t s = b[i];
    for (std::size_t c = 0; c < cols; ++c) {
      if (c == j) continue;
      if (a[i][c] != 0 && x[c] != 0) s = red(s - a[i][c] * x[c]);
    }
    x[j] = red(s);
  }
  return x;
}

}  // namespace

std::optional<std::vector<Elem>> linear_solve(const Ring& R, const RingMatrix& A,
                                              const std::vector<Elem>& b) {
  if (static_cast<int>(b.size()) != A.rows()) fail(Err::SizeMismatch, "linear_solve");
  std::vector<std::vector<Elem>> a(static_cast<std::size_t>(A.rows()),
                                   std::vector<Elem>(static_cast<std::size_t>(A.cols())));
  std::vector<Elem> bb(b.size());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = R.reduce(A(i, j));
    bb[static_cast<std::size_t>(i)] = R.reduce(b[static_cast<std::size_t>(i)]);
  }
  return solve_rec(R.p(), R.modulus(), std::move(a), std::move(bb));
}

}  // namespace spwb
