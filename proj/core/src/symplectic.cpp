#include "spwb/symplectic.hpp"

#include <string>

#include "spwb/error.hpp"

namespace spwb {

RingMatrix standard_symplectic_form(int n) {
  if (n < 0) fail(Err::ConfigError, "negative rank");
  RingMatrix psi(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    psi(2 * i, 2 * i + 1) = 1;
    psi(2 * i + 1, 2 * i) = -1;
  }
  return psi;
}

Elem symplectic_pairing(const Ring& R, const std::vector<Elem>& x,
                        const std::vector<Elem>& y) {
  if (x.size() != y.size() || x.size() % 2 != 0)
    fail(Err::SizeMismatch, "pairing needs two vectors of equal even length");
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); i += 2) {
    acc = R.add(acc, R.mul(x[i], y[i + 1]));
    acc = R.sub(acc, R.mul(x[i + 1], y[i]));
  }
  return acc;
}

bool is_symplectic(const Ring& R, const RingMatrix& A) {
  if (A.rows() != A.cols()) fail(Err::NotSquare, "symplectic test needs a square matrix");
  if (A.rows() % 2 != 0) fail(Err::OddSize, "symplectic test needs even size");
  int n = A.rows() / 2;
  RingMatrix psi = standard_symplectic_form(n);
  // The form has one nonzero entry per row, so t(A) psi A is assembled
  // directly: (psi A)_{2i} = row 2i+1 of A, (psi A)_{2i+1} = -row 2i.
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) {
      Elem acc = 0;
      for (int i = 0; i < n; ++i) {
        acc = R.add(acc, R.mul(A(2 * i, r), A(2 * i + 1, c)));
        acc = R.sub(acc, R.mul(A(2 * i + 1, r), A(2 * i, c)));
      }
      if (acc != R.reduce(psi(r, c))) return false;
    }
  return true;
}

SpElement SpElement::make(RingMatrix mat, const Ring& R) {
  mat = rm_reduce(R, mat);
  if (!is_symplectic(R, mat))
    fail(Err::NotSymplectic, "matrix does not preserve the symplectic form");
  return SpElement{mat.rows() / 2, std::move(mat)};
}

SpElement SpElement::identity(int n) {
  return SpElement{n, RingMatrix::identity(2 * n)};
}

SpElement sp_mul(const Ring& R, const SpElement& a, const SpElement& b) {
  if (a.n != b.n) fail(Err::SizeMismatch, "rank mismatch");
  return SpElement{a.n, rm_mul(R, a.mat, b.mat)};
}

SpElement sp_inverse(const Ring& R, const SpElement& a) {
  return SpElement{a.n, rm_inverse(R, a.mat)};
}

OddSpElement OddSpElement::identity(int n) {
  return OddSpElement{0, std::vector<Elem>(2 * n, 0), SpElement::identity(n)};
}

RingMatrix odd_compose(const Ring& R, const OddSpElement& g) {
  const int two_n = static_cast<int>(g.u.size());
  if (two_n != 2 * g.M.n) fail(Err::SizeMismatch, "u length must match the rank of M");
  RingMatrix A(two_n + 2, two_n + 2);
  A(0, 0) = 1;
  A(0, 1) = R.reduce(g.c);
  A(1, 1) = 1;
  // Row 0 tail: t(u) psi M; psi pairs rows (2i, 2i+1) of M with signs.
  for (int c = 0; c < two_n; ++c) {
    Elem acc = 0;
    for (int i = 0; i < two_n / 2; ++i) {
      acc = R.add(acc, R.mul(g.u[2 * i], g.M.mat(2 * i + 1, c)));
      acc = R.sub(acc, R.mul(g.u[2 * i + 1], g.M.mat(2 * i, c)));
    }
    A(0, c + 2) = acc;
  }
  for (int r = 0; r < two_n; ++r) {
    A(r + 2, 1) = R.reduce(g.u[r]);
    for (int c = 0; c < two_n; ++c) A(r + 2, c + 2) = g.M.mat(r, c);
  }
  return A;
}

OddSpElement odd_decompose(const Ring& R, const RingMatrix& A) {
  if (A.rows() != A.cols() || A.rows() < 2 || A.rows() % 2 != 0)
    fail(Err::NotOddSymplectic, "odd elements live in even ambient size >= 2");
  if (!is_symplectic(R, A))
    fail(Err::NotOddSymplectic, "matrix does not preserve the symplectic form");
  for (int r = 0; r < A.rows(); ++r)
    if (A(r, 0) != (r == 0 ? 1 : 0))
      fail(Err::NotOddSymplectic, "matrix does not fix e1");
  const int two_n = A.rows() - 2;
  OddSpElement g;
  g.c = A(0, 1);
  g.u.resize(two_n);
  RingMatrix M(two_n, two_n);
  for (int r = 0; r < two_n; ++r) {
    g.u[r] = A(r + 2, 1);
    for (int c = 0; c < two_n; ++c) M(r, c) = A(r + 2, c + 2);
  }
  g.M = SpElement::make(std::move(M), R);
  return g;
}

OddSpElement odd_mul(const Ring& R, const OddSpElement& a, const OddSpElement& b) {
  if (a.u.size() != b.u.size()) fail(Err::SizeMismatch, "rank mismatch");
  std::vector<Elem> Mbu = rm_apply(R, a.M.mat, b.u);
  OddSpElement r;
  r.c = R.add(R.add(a.c, b.c), symplectic_pairing(R, a.u, Mbu));
  r.u.resize(a.u.size());
  for (std::size_t i = 0; i < a.u.size(); ++i) r.u[i] = R.add(a.u[i], Mbu[i]);
  r.M = sp_mul(R, a.M, b.M);
  return r;
}

OddSpElement monoid_act(const Ring& R, Elem a, const OddSpElement& g) {
  OddSpElement r;
  r.c = R.mul(R.mul(a, a), g.c);
  r.u.resize(g.u.size());
  for (std::size_t i = 0; i < g.u.size(); ++i) r.u[i] = R.mul(a, g.u[i]);
  r.M = g.M;
  return r;
}

int sp_matrix_size(int rank) { return rank % 2 == 0 ? rank : rank + 1; }

SpAny SpAny::even(const SpElement& g) { return SpAny{2 * g.n, g.mat}; }

SpAny SpAny::odd(const Ring& R, const OddSpElement& g) {
  return SpAny{2 * g.M.n + 1, odd_compose(R, g)};
}

namespace {

void check_sp_any(const Ring& R, const SpAny& g) {
  if (g.rank < 0) fail(Err::ConfigError, "negative rank");
  if (g.mat.rows() != sp_matrix_size(g.rank) || g.mat.cols() != g.mat.rows())
    fail(Err::SizeMismatch, "matrix size does not match the rank");
  if (!is_symplectic(R, g.mat))
    fail(Err::NotSymplectic, "matrix does not preserve the symplectic form");
  if (g.rank % 2 == 1)
    for (int r = 0; r < g.mat.rows(); ++r)
      if (g.mat(r, 0) != (r == 0 ? 1 : 0))
        fail(Err::NotOddSymplectic, "odd-rank matrix must fix e1");
}

}  // namespace

SpAny embed(const Ring& R, const SpAny& g, int s) {
  if (s < g.rank) fail(Err::RankOrder, "cannot embed into a smaller group");
  check_sp_any(R, g);
  const int from = g.mat.rows();
  const int to = sp_matrix_size(s);
  const int pad = to - from;
  RingMatrix A = RingMatrix::identity(to);
  for (int r = 0; r < from; ++r)
    for (int c = 0; c < from; ++c) A(pad + r, pad + c) = g.mat(r, c);
  return SpAny{s, std::move(A)};
}

SpAny conj_diag(const Ring& R, Elem a, int rank, const SpAny& g) {
  if (!R.is_unit(a)) fail(Err::NotAUnit, "conjugation needs a unit");
  if (rank != g.rank) fail(Err::SizeMismatch, "rank mismatch");
  check_sp_any(R, g);
  Elem ainv = R.unit_inverse(a);
  const int m = g.mat.rows();
  RingMatrix A(m, m);
  auto scale = [&](int i) { return i == 0 ? a : (i == 1 ? ainv : Elem(1)); };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      A(r, c) = R.mul(R.mul(scale(r), g.mat(r, c)),
                      c == 0 ? ainv : (c == 1 ? a : Elem(1)));
  return SpAny{rank, std::move(A)};
}

RingMatrix transvection(const Ring& R, int n, const std::vector<Elem>& v) {
  if (static_cast<int>(v.size()) != 2 * n)
    fail(Err::SizeMismatch, "transvection vector must have length 2n");
  RingMatrix T = RingMatrix::identity(2 * n);
  std::vector<Elem> e(2 * n, 0);
  for (int j = 0; j < 2 * n; ++j) {
    e[j] = 1;
    Elem coef = symplectic_pairing(R, e, v);
    e[j] = 0;
    for (int i = 0; i < 2 * n; ++i) T(i, j) = R.add(T(i, j), R.mul(coef, v[i]));
  }
  return T;
}

std::vector<RingMatrix> even_symplectic_generators(int n, const Ring& R) {
  std::vector<RingMatrix> gens;
  std::vector<Elem> v(2 * n, 0);
  for (int i = 0; i < 2 * n; ++i) {
    v[i] = 1;
    gens.push_back(transvection(R, n, v));
    v[i] = 0;
  }
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      v[i] = 1;
      v[j] = 1;
      gens.push_back(transvection(R, n, v));
      v[i] = 0;
      v[j] = 0;
    }
  return gens;
}

std::vector<RingMatrix> odd_symplectic_generators(int n, const Ring& R) {
  std::vector<RingMatrix> gens;
  for (const RingMatrix& g : even_symplectic_generators(n, R)) {
    OddSpElement e{0, std::vector<Elem>(2 * n, 0), SpElement::make(g, R)};
    gens.push_back(odd_compose(R, e));
  }
  OddSpElement shift = OddSpElement::identity(n);
  shift.c = 1;
  gens.push_back(odd_compose(R, shift));
  for (int i = 0; i < 2 * n; ++i) {
    OddSpElement s = OddSpElement::identity(n);
    s.u[i] = 1;
    gens.push_back(odd_compose(R, s));
  }
  return gens;
}

}  // namespace spwb
