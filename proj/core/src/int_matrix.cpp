#include "spwb/int_matrix.hpp"

#include <cstdlib>

namespace spwb {

IntMat im_mul(const IntMat& A, const IntMat& B) {
  if (A.cols() != B.rows()) fail(Err::SizeMismatch, "im_mul");
  IntMat C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      const BigInt& v = A(i, k);
      if (v == 0) continue;
      for (int j = 0; j < B.cols(); ++j)
        if (B(k, j) != 0) C(i, j) += v * B(k, j);
    }
  return C;
}

IntMat im_sub(const IntMat& A, const IntMat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) fail(Err::SizeMismatch, "im_sub");
  IntMat C(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) - B(i, j);
  return C;
}

IntMat im_transpose(const IntMat& A) {
  IntMat C(A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) C(j, i) = A(i, j);
  return C;
}

bool im_is_zero(const IntMat& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0) return false;
  return true;
}

std::vector<BigInt> im_apply(const IntMat& A, const std::vector<BigInt>& v) {
  if (static_cast<int>(v.size()) != A.cols()) fail(Err::SizeMismatch, "im_apply");
  std::vector<BigInt> out(static_cast<std::size_t>(A.rows()));
  for (int i = 0; i < A.rows(); ++i) {
    BigInt s = 0;
    for (int j = 0; j < A.cols(); ++j)
      if (A(i, j) != 0 && v[static_cast<std::size_t>(j)] != 0)
        s += A(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

BigInt im_det(const IntMat& M) {
  if (M.rows() != M.cols()) fail(Err::NotSquare, "im_det");
  int n = M.rows();
  if (n == 0) return 1;
  IntMat A = M;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (A(i, k) != 0) { sw = i; break; }
      if (sw < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(A(k, j), A(sw, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : -A(n - 1, n - 1);
}

std::vector<BigInt> SmithResult::torsion() const {
  std::vector<BigInt> t;
  int n = std::min(D.rows(), D.cols());
  for (int i = 0; i < n; ++i)
    if (D(i, i) > 1) t.push_back(D(i, i));
  return t;
}

namespace {

// Quotient with minimal-magnitude remainder, |a - q*b| <= |b|/2.
BigInt balanced_quot(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (r != 0) {
    BigInt ab = abs(b);
    if (2 * abs(r) > ab) {
      if ((r > 0) == (b > 0)) q += 1; else q -= 1;
    }
  }
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& A, bool with_transforms) {
  int m = A.rows(), n = A.cols();
  SmithResult S;
  S.D = A;
  S.with_transforms = with_transforms;
  if (with_transforms) {
    S.U = IntMat::identity(m);
    S.Uinv = IntMat::identity(m);
    S.V = IntMat::identity(n);
    S.Vinv = IntMat::identity(n);
  }
  IntMat& D = S.D;
  IntMat& U = S.U;
  IntMat& Ui = S.Uinv;
  IntMat& V = S.V;
  IntMat& Vi = S.Vinv;
  const bool wt = with_transforms;

  auto row_add = [&](int i, int j, const BigInt& c) {
    for (int t = 0; t < n; ++t) if (D(j, t) != 0) D(i, t) += c * D(j, t);
    if (!wt) return;
    for (int t = 0; t < m; ++t) if (U(j, t) != 0) U(i, t) += c * U(j, t);
    for (int t = 0; t < m; ++t) if (Ui(t, i) != 0) Ui(t, j) -= c * Ui(t, i);
  };
  auto col_add = [&](int j, int i, const BigInt& c) {  // col_j += c * col_i
    for (int t = 0; t < m; ++t) if (D(t, i) != 0) D(t, j) += c * D(t, i);
    if (!wt) return;
    for (int t = 0; t < n; ++t) if (V(t, i) != 0) V(t, j) += c * V(t, i);
    for (int t = 0; t < n; ++t) if (Vi(j, t) != 0) Vi(i, t) -= c * Vi(j, t);
  };
  auto row_swap = [&](int i, int j) {
    if (i == j) return;
    for (int t = 0; t < n; ++t) std::swap(D(i, t), D(j, t));
    if (!wt) return;
    for (int t = 0; t < m; ++t) std::swap(U(i, t), U(j, t));
    for (int t = 0; t < m; ++t) std::swap(Ui(t, i), Ui(t, j));
  };
  auto col_swap = [&](int i, int j) {
    if (i == j) return;
    for (int t = 0; t < m; ++t) std::swap(D(t, i), D(t, j));
    if (!wt) return;
    for (int t = 0; t < n; ++t) std::swap(V(t, i), V(t, j));
    for (int t = 0; t < n; ++t) std::swap(Vi(i, t), Vi(j, t));
  };
  auto row_negate = [&](int i) {
    for (int t = 0; t < n; ++t) D(i, t) = -D(i, t);
    if (!wt) return;
    for (int t = 0; t < m; ++t) U(i, t) = -U(i, t);
    for (int t = 0; t < m; ++t) Ui(t, i) = -Ui(t, i);
  };

  // Entry growth is the main hazard: reductions always go against the
  // globally smallest remaining entry, re-selected after every step once
  // the pivot is not a unit.
  auto select_min = [&](int t, int& pi, int& pj) {
    pi = -1; pj = -1;
    BigInt best = 0;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (D(i, j) == 0) continue;
        BigInt v = abs(D(i, j));
        if (pi < 0 || v < best) {
          pi = i; pj = j; best = v;
          if (best == 1) return;
        }
      }
  };

  int bound = std::min(m, n);
  int t = 0;
  for (; t < bound; ++t) {
    bool have_pivot = false;
    for (;;) {
      int pi, pj;
      select_min(t, pi, pj);
      if (pi < 0) break;
      have_pivot = true;
      row_swap(pi, t);
      col_swap(pj, t);
      if (abs(D(t, t)) == 1) {
        // Unit pivot: clear the row first, then the column only touches
        // the pivot coordinate, so large entries propagate just once.
        for (int j = t + 1; j < n; ++j)
          if (D(t, j) != 0) col_add(j, t, -D(t, j) * D(t, t));
        for (int i = t + 1; i < m; ++i)
          if (D(i, t) != 0) row_add(i, t, -D(i, t) * D(t, t));
        break;
      }
      if (D(t, t) < 0) row_negate(t);
      bool acted = false;
      for (int i = t + 1; i < m && !acted; ++i)
        if (D(i, t) != 0) {
          row_add(i, t, -balanced_quot(D(i, t), D(t, t)));
          acted = true;
        }
      for (int j = t + 1; j < n && !acted; ++j)
        if (D(t, j) != 0) {
          col_add(j, t, -balanced_quot(D(t, j), D(t, t)));
          acted = true;
        }
      if (acted) continue;
      // Pivot must divide the whole residual block before we advance.
      for (int i = t + 1; i < m && !acted; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, 1);
            acted = true;
            break;
          }
      if (!acted) break;
    }
    if (!have_pivot) break;
    if (D(t, t) < 0) row_negate(t);
  }
  S.rank = t;
  for (int i = 0; i + 1 < S.rank; ++i)
    if (D(i + 1, i + 1) % D(i, i) != 0) fail(Err::Internal, "smith chain broken");
  return S;
}

int im_rank(const IntMat& A) { return smith_normal_form(A, false).rank; }

IntMat kernel_basis(const IntMat& A) {
  int m = A.rows(), n = A.cols();
  IntMat W = A;
  IntMat V = IntMat::identity(n);
  auto col_sub = [&](int c, int src, const BigInt& q) {
    for (int t = 0; t < m; ++t) if (W(t, src) != 0) W(t, c) -= q * W(t, src);
    for (int t = 0; t < n; ++t) if (V(t, src) != 0) V(t, c) -= q * V(t, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int t = 0; t < m; ++t) std::swap(W(t, a), W(t, b));
    for (int t = 0; t < n; ++t) std::swap(V(t, a), V(t, b));
  };
  int lead = 0;
  for (int row = 0; row < m && lead < n; ++row) {
    for (;;) {
      int cmin = -1;
      BigInt best = 0;
      int live = 0;
      for (int c = lead; c < n; ++c) {
        if (W(row, c) == 0) continue;
        ++live;
        BigInt v = abs(W(row, c));
        if (cmin < 0 || v < best) { cmin = c; best = v; }
      }
      if (cmin < 0) break;
      if (live == 1) {
        col_swap(cmin, lead);
        ++lead;
        break;
      }
      for (int c = lead; c < n; ++c) {
        if (c == cmin || W(row, c) == 0) continue;
        BigInt q = W(row, c) / W(row, cmin);
        if (q != 0) col_sub(c, cmin, q);
      }
    }
  }
  IntMat K(n, n - lead);
  for (int c = lead; c < n; ++c)
    for (int t = 0; t < n; ++t) K(t, c - lead) = V(t, c);
  return K;
}

std::string FGAbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::string s;
  if (free_rank > 0) {
    s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  for (const BigInt& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s;
}

FGAbelianGroup cokernel_structure(const IntMat& A) {
  SmithResult S = smith_normal_form(A, false);
  FGAbelianGroup G;
  G.free_rank = A.rows() - S.rank;
  G.torsion = S.torsion();
  return G;
}

}  // namespace spwb
