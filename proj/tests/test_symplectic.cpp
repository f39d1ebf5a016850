#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "spwb/fin_group.hpp"
#include "spwb/ring.hpp"
#include "spwb/rng.hpp"
#include "spwb/symplectic.hpp"

using namespace spwb;

namespace {

RingMatrix mat2(Elem a, Elem b, Elem c, Elem d) {
  RingMatrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

std::vector<Elem> random_vec(const Ring& R, Rng& rng, int len) {
  std::vector<Elem> v(len);
  for (Elem& x : v) x = static_cast<Elem>(rng.below(R.modulus()));
  return v;
}

// Random product of the even generators for Sp_{2n}(R).
SpElement random_even(const Ring& R, Rng& rng, int n, int letters = 6) {
  auto gens = even_symplectic_generators(n, R);
  SpElement g = SpElement::identity(n);
  if (gens.empty()) return g;
  for (int i = 0; i < letters; ++i) {
    const RingMatrix& t = gens[rng.below(gens.size())];
    g = sp_mul(R, g, SpElement::make(t, R));
  }
  return g;
}

OddSpElement random_odd(const Ring& R, Rng& rng, int n) {
  OddSpElement g;
  g.c = static_cast<Elem>(rng.below(R.modulus()));
  g.u = random_vec(R, rng, 2 * n);
  g.M = random_even(R, rng, n);
  return g;
}

RingMatrix word_product(const FinGroup& G, int i) {
  RingMatrix m = RingMatrix::identity(G.dim());
  for (int g : G.word(i)) m = rm_mul(G.ring(), m, G.element(G.generator(g)));
  return m;
}

}  // namespace

TEST_CASE("standard form and the symplectic pairing") {
  RingMatrix psi0 = standard_symplectic_form(0);
  CHECK(psi0.rows() == 0);
  CHECK(psi0.cols() == 0);

  RingMatrix psi1 = standard_symplectic_form(1);
  CHECK(psi1 == mat2(0, 1, -1, 0));

  RingMatrix psi2 = standard_symplectic_form(2);
  REQUIRE(psi2.rows() == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Elem want = (r / 2 != c / 2) ? 0 : psi1(r % 2, c % 2);
      CHECK(psi2(r, c) == want);
    }
  CHECK_THROWS_AS(standard_symplectic_form(-1), Error);

  Ring F3 = Ring::prime_field(3);
  CHECK(symplectic_pairing(F3, {1, 0}, {0, 1}) == 1);
  CHECK(symplectic_pairing(F3, {0, 1}, {1, 0}) == 2);
  CHECK_THROWS_AS(symplectic_pairing(F3, {1, 0}, {1}), Error);
  CHECK_THROWS_AS(symplectic_pairing(F3, {1, 0, 0}, {0, 1, 0}), Error);

  Ring Z9 = Ring::make_local_ring(3, 2);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elem> x = random_vec(Z9, rng, 4), y = random_vec(Z9, rng, 4),
                      z = random_vec(Z9, rng, 4);
    CHECK(symplectic_pairing(Z9, x, x) == 0);
    CHECK(symplectic_pairing(Z9, x, y) ==
          Z9.neg(symplectic_pairing(Z9, y, x)));
    std::vector<Elem> xy(4);
    for (int i = 0; i < 4; ++i) xy[i] = Z9.add(x[i], y[i]);
    CHECK(symplectic_pairing(Z9, xy, z) ==
          Z9.add(symplectic_pairing(Z9, x, z), symplectic_pairing(Z9, y, z)));
  }
}

TEST_CASE("is_symplectic is an exact Gram test") {
  Ring F3 = Ring::prime_field(3);
  Ring Z9 = Ring::make_local_ring(3, 2);
  for (int n = 0; n <= 3; ++n) {
    CHECK(is_symplectic(F3, RingMatrix::identity(2 * n)));
    CHECK(is_symplectic(Z9, RingMatrix::identity(2 * n)));
  }
  for (const Ring& R : {F3, Z9, Ring::prime_field(5)})
    CHECK(is_symplectic(R, mat2(1, 1, 0, 1)));

  // diag(2, 1) rescales the form by 2.
  CHECK_FALSE(is_symplectic(F3, mat2(2, 0, 0, 1)));

  RingMatrix rect(2, 3);
  CHECK_THROWS_AS(is_symplectic(F3, rect), Error);
  try {
    is_symplectic(F3, RingMatrix(3, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::OddSize);
  }

  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    SpElement g = random_even(Z9, rng, 2);
    CHECK(is_symplectic(Z9, g.mat));
    CHECK(is_symplectic(Z9, sp_inverse(Z9, g).mat));
    CHECK(sp_mul(Z9, g, sp_inverse(Z9, g)) == SpElement::identity(2));
  }
  try {
    SpElement::make(mat2(2, 0, 0, 1), F3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotSymplectic);
  }
  // Construction canonicalizes residues.
  CHECK(SpElement::make(mat2(1, 3, 0, 1), F3) == SpElement::identity(1));
}

TEST_CASE("transvections and the generator sets") {
  Ring F3 = Ring::prime_field(3);
  CHECK(transvection(F3, 1, {1, 0}) == mat2(1, 2, 0, 1));
  CHECK(transvection(F3, 1, {0, 1}) == mat2(1, 0, 1, 1));
  CHECK_THROWS_AS(transvection(F3, 1, {1, 0, 0}), Error);

  Ring F5 = Ring::prime_field(5);
  Ring Z9 = Ring::make_local_ring(3, 2);
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Ring& R = t % 2 == 0 ? F5 : Z9;
    std::vector<Elem> v = random_vec(R, rng, 4);
    RingMatrix T = transvection(R, 2, v);
    CHECK(is_symplectic(R, T));

    // T_v^m adds m<x,v>v, so T_{lambda v} = T_v^{lambda^2}.
    Elem lam = static_cast<Elem>(rng.below(R.modulus()));
    std::vector<Elem> lv(4);
    for (int i = 0; i < 4; ++i) lv[i] = R.mul(lam, v[i]);
    RingMatrix P = RingMatrix::identity(4);
    Elem sq = R.mul(lam, lam);
    for (Elem i = 0; i < sq; ++i) P = rm_mul(R, P, T);
    CHECK(transvection(R, 2, lv) == P);
  }

  // One transvection per basis vector and per pairwise sum.
  for (int n = 1; n <= 3; ++n) {
    CHECK(even_symplectic_generators(n, F3).size() ==
          static_cast<std::size_t>(n * (2 * n + 1)));
    CHECK(odd_symplectic_generators(n, F3).size() ==
          static_cast<std::size_t>(n * (2 * n + 1) + 1 + 2 * n));
  }
  for (const RingMatrix& g : odd_symplectic_generators(1, F3)) {
    CHECK(is_symplectic(F3, g));
    for (int r = 0; r < 4; ++r) CHECK(g(r, 0) == (r == 0 ? 1 : 0));
  }
}

TEST_CASE("group enumeration freezes the symplectic group orders") {
  Ring F3 = Ring::prime_field(3);
  FinGroup sl2 =
      FinGroup::enumerate({mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)}, F3, 2);
  CHECK(sl2.size() == 24);

  const int orders[] = {3, 24, 648, 51840};
  for (int rank = 1; rank <= 4; ++rank) {
    std::vector<RingMatrix> gens =
        rank % 2 == 0 ? even_symplectic_generators(rank / 2, F3)
                      : odd_symplectic_generators(rank / 2, F3);
    FinGroup G = FinGroup::enumerate(gens, F3, sp_matrix_size(rank));
    // 51840 = 3^4 * (3^2 - 1) * (3^4 - 1).
    CHECK(G.size() == orders[rank - 1]);
  }

  Ring F5 = Ring::prime_field(5);
  CHECK(FinGroup::enumerate(even_symplectic_generators(1, F5), F5, 2).size() ==
        120);
  Ring Z9 = Ring::make_local_ring(3, 2);
  CHECK(FinGroup::enumerate(even_symplectic_generators(1, Z9), Z9, 2).size() ==
        648);
  // |Sp_{2n+1}| = |R|^{2n+1} |Sp_{2n}|.
  CHECK(FinGroup::enumerate(odd_symplectic_generators(1, F5), F5, 4).size() ==
        15000);

  // Trivial group from no generators.
  FinGroup triv = FinGroup::enumerate({}, F3, 0);
  CHECK(triv.size() == 1);
  CHECK(triv.element(0).rows() == 0);
  CHECK(triv.product(0, 0) == 0);
  CHECK(triv.inverse(0) == 0);
  CHECK(triv.word(0).empty());

  // The cap is a hard bound on discovered elements.
  try {
    FinGroup::enumerate(even_symplectic_generators(2, F3), F3, 4, 1000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::CapExceeded);
  }
  CHECK(FinGroup::enumerate(odd_symplectic_generators(0, F3), F3, 2, 3).size() ==
        3);
  CHECK_THROWS_AS(FinGroup::enumerate(odd_symplectic_generators(0, F3), F3, 2, 2),
                  Error);

  try {
    FinGroup::enumerate({mat2(2, 0, 0, 1)}, F3, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotSymplectic);
  }
  CHECK_THROWS_AS(FinGroup::enumerate({mat2(1, 1, 0, 1)}, F3, 4), Error);
}

TEST_CASE("FinGroup products, inverses, and generator words") {
  Ring F3 = Ring::prime_field(3);
  FinGroup sl2 =
      FinGroup::enumerate({mat2(1, 1, 0, 1), mat2(1, 0, 1, 1)}, F3, 2);
  REQUIRE(sl2.size() == 24);
  CHECK(sl2.identity() == 0);
  CHECK(sl2.element(0) == RingMatrix::identity(2));
  for (int i = 0; i < 24; ++i) {
    CHECK(sl2.index_of(sl2.element(i)) == i);
    CHECK(sl2.product(0, i) == i);
    CHECK(sl2.product(i, 0) == i);
    CHECK(sl2.product(i, sl2.inverse(i)) == 0);
    CHECK(sl2.product(sl2.inverse(i), i) == 0);
    CHECK(word_product(sl2, i) == sl2.element(i));
    for (int j = 0; j < 24; ++j)
      CHECK(sl2.element(sl2.product(i, j)) ==
            rm_mul(F3, sl2.element(i), sl2.element(j)));
  }
  CHECK(sl2.index_of(mat2(2, 0, 0, 1)) == -1);
  CHECK(sl2.index_of(RingMatrix::identity(4)) == -1);
  CHECK(sl2.num_generators() == 2);
  CHECK(sl2.element(sl2.generator(0)) == mat2(1, 1, 0, 1));
  CHECK(sl2.element(sl2.generator(1)) == mat2(1, 0, 1, 1));

  // Large groups answer products without a full table.
  FinGroup sp4 =
      FinGroup::enumerate(even_symplectic_generators(2, F3), F3, 4);
  REQUIRE(sp4.size() == 51840);
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    int i = static_cast<int>(rng.below(sp4.size()));
    int j = static_cast<int>(rng.below(sp4.size()));
    CHECK(sp4.element(sp4.product(i, j)) ==
          rm_mul(F3, sp4.element(i), sp4.element(j)));
    CHECK(sp4.product(i, sp4.inverse(i)) == 0);
    int g = static_cast<int>(rng.below(sp4.num_generators()));
    CHECK(sp4.gen_product(g, i) == sp4.product(sp4.generator(g), i));
    CHECK(word_product(sp4, i) == sp4.element(i));
  }
}

TEST_CASE("FinGroup save and load round trip") {
  Ring F3 = Ring::prime_field(3);
  FinGroup G = FinGroup::enumerate(odd_symplectic_generators(1, F3), F3, 4);
  REQUIRE(G.size() == 648);
  const std::string path = "/tmp/spwb_test_group.bin";
  G.save(path);
  FinGroup L = FinGroup::load(path);
  CHECK(L.size() == G.size());
  CHECK(L.dim() == G.dim());
  CHECK(L.ring() == G.ring());
  CHECK(L.num_generators() == G.num_generators());
  for (int i = 0; i < G.size(); ++i) {
    CHECK(L.element(i) == G.element(i));
    CHECK(L.inverse(i) == G.inverse(i));
    CHECK(L.word(i) == G.word(i));
  }
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    int i = static_cast<int>(rng.below(G.size()));
    int j = static_cast<int>(rng.below(G.size()));
    CHECK(L.product(i, j) == G.product(i, j));
  }

  CHECK_THROWS_AS(FinGroup::load("/tmp/spwb_no_such_file.bin"), Error);
  {
    std::ofstream bad("/tmp/spwb_bad_group.bin", std::ios::binary);
    bad << "not a group";
  }
  CHECK_THROWS_AS(FinGroup::load("/tmp/spwb_bad_group.bin"), Error);
  {
    std::ifstream in(path, std::ios::binary);
    char buf[64];
    in.read(buf, 64);
    std::ofstream out("/tmp/spwb_trunc_group.bin", std::ios::binary);
    out.write(buf, 64);
  }
  CHECK_THROWS_AS(FinGroup::load("/tmp/spwb_trunc_group.bin"), Error);
  std::remove(path.c_str());
  std::remove("/tmp/spwb_bad_group.bin");
  std::remove("/tmp/spwb_trunc_group.bin");
}

TEST_CASE("odd compose and decompose are mutually inverse") {
  Ring F3 = Ring::prime_field(3);
  CHECK(odd_compose(F3, OddSpElement::identity(1)) == RingMatrix::identity(4));
  CHECK(odd_compose(F3, OddSpElement::identity(0)) == RingMatrix::identity(2));

  // Sp_1(R) is the group of matrices [[1, c], [0, 1]].
  OddSpElement shift = OddSpElement::identity(0);
  shift.c = 2;
  CHECK(odd_compose(F3, shift) == mat2(1, 2, 0, 1));

  // First row of the assembled matrix is (1, c, t(u) psi M).
  OddSpElement w;
  w.c = 1;
  w.u = {1, 2};
  w.M = SpElement::make(mat2(1, 1, 0, 1), F3);
  RingMatrix A = odd_compose(F3, w);
  CHECK(A(0, 0) == 1);
  CHECK(A(0, 1) == 1);
  CHECK(A(0, 2) == 1);
  CHECK(A(0, 3) == 2);
  for (int c = 0; c < 4; ++c) CHECK(A(1, c) == (c == 1 ? 1 : 0));

  Ring F5 = Ring::prime_field(5);
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    const Ring& R = t % 2 == 0 ? F3 : F5;
    int n = t % 2 == 0 ? 1 : 2;
    OddSpElement g = random_odd(R, rng, n);
    RingMatrix m = odd_compose(R, g);
    CHECK(is_symplectic(R, m));
    for (int r = 0; r < m.rows(); ++r) CHECK(m(r, 0) == (r == 0 ? 1 : 0));
    CHECK(odd_decompose(R, m) == g);
  }

  OddSpElement bad_u = OddSpElement::identity(1);
  bad_u.u.push_back(0);
  CHECK_THROWS_AS(odd_compose(F3, bad_u), Error);

  auto rejects = [&](const RingMatrix& m) {
    try {
      odd_decompose(F3, m);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::NotOddSymplectic);
    }
  };
  rejects(RingMatrix(3, 3));
  rejects(RingMatrix(0, 0));
  // Symplectic but moves e1.
  rejects(mat2(2, 0, 0, 2));
  // Fixes e1 but rescales the form.
  rejects(mat2(1, 0, 0, 2));
}

TEST_CASE("odd multiplication matches matrix multiplication exhaustively") {
  Ring F3 = Ring::prime_field(3);
  FinGroup G = FinGroup::enumerate(odd_symplectic_generators(1, F3), F3, 4);
  REQUIRE(G.size() == 648);
  std::vector<OddSpElement> dec;
  dec.reserve(G.size());
  for (int i = 0; i < G.size(); ++i)
    dec.push_back(odd_decompose(F3, G.element(i)));

  int bad = 0;
  for (int i = 0; i < G.size(); ++i)
    for (int j = 0; j < G.size(); ++j)
      if (!(odd_compose(F3, odd_mul(F3, dec[i], dec[j])) ==
            G.element(G.product(i, j))))
        ++bad;
  CHECK(bad == 0);

  // Inverses through the matrix side land back on the identity triple.
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    int i = static_cast<int>(rng.below(G.size()));
    OddSpElement inv = odd_decompose(F3, G.element(G.inverse(i)));
    CHECK(odd_mul(F3, dec[i], inv) == OddSpElement::identity(1));
    CHECK(odd_mul(F3, inv, dec[i]) == OddSpElement::identity(1));
  }
  CHECK_THROWS_AS(odd_mul(F3, OddSpElement::identity(1),
                          OddSpElement::identity(2)),
                  Error);
}

TEST_CASE("the monoid action is by group endomorphisms") {
  Ring F3 = Ring::prime_field(3);
  Rng rng(37);
  for (int t = 0; t < 30; ++t) {
    OddSpElement g = random_odd(F3, rng, 1);
    CHECK(monoid_act(F3, 1, g) == g);
    OddSpElement zero = monoid_act(F3, 0, g);
    CHECK(zero.c == 0);
    CHECK(zero.u == std::vector<Elem>(2, 0));
    CHECK(zero.M == g.M);
  }

  // Action of the multiplicative monoid: a then b is ab.
  Ring Z9 = Ring::make_local_ring(3, 2);
  for (int t = 0; t < 30; ++t) {
    OddSpElement g = random_odd(Z9, rng, 2);
    for (Elem a = 0; a < 9; ++a)
      for (Elem b = 0; b < 9; ++b)
        CHECK(monoid_act(Z9, a, monoid_act(Z9, b, g)) ==
              monoid_act(Z9, Z9.mul(a, b), g));
  }

  // Endomorphism of the group law, exhaustive for n <= 1 over F3.
  for (Elem a = 0; a < 3; ++a)
    for (Elem c1 = 0; c1 < 3; ++c1)
      for (Elem c2 = 0; c2 < 3; ++c2) {
        OddSpElement g = OddSpElement::identity(0), h = g;
        g.c = c1;
        h.c = c2;
        CHECK(monoid_act(F3, a, odd_mul(F3, g, h)) ==
              odd_mul(F3, monoid_act(F3, a, g), monoid_act(F3, a, h)));
      }
  FinGroup G = FinGroup::enumerate(odd_symplectic_generators(1, F3), F3, 4);
  std::vector<OddSpElement> dec;
  dec.reserve(G.size());
  for (int i = 0; i < G.size(); ++i)
    dec.push_back(odd_decompose(F3, G.element(i)));
  int bad = 0;
  for (Elem a = 0; a < 3; ++a)
    for (int i = 0; i < G.size(); ++i)
      for (int j = 0; j < G.size(); ++j)
        if (!(monoid_act(F3, a, odd_mul(F3, dec[i], dec[j])) ==
              odd_mul(F3, monoid_act(F3, a, dec[i]),
                      monoid_act(F3, a, dec[j]))))
          ++bad;
  CHECK(bad == 0);
}

TEST_CASE("diagonal conjugation restricts to the monoid action") {
  Ring F5 = Ring::prime_field(5);
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    SpAny g = SpAny::even(random_even(F5, rng, 2));
    CHECK(conj_diag(F5, 1, 4, g) == g);

    // Conjugation by the explicit diagonal matrix.
    for (Elem a = 1; a < 5; ++a) {
      RingMatrix D = RingMatrix::identity(4);
      D(0, 0) = a;
      D(1, 1) = F5.unit_inverse(a);
      RingMatrix want = rm_mul(F5, rm_mul(F5, D, g.mat), rm_inverse(F5, D));
      SpAny got = conj_diag(F5, a, 4, g);
      CHECK(got.mat == want);
      CHECK(is_symplectic(F5, got.mat));
    }
  }

  // On odd elements conjugation is the monoid action by the same unit.
  for (int t = 0; t < 100; ++t) {
    OddSpElement g = random_odd(F5, rng, 1);
    for (Elem a = 1; a < 5; ++a)
      CHECK(conj_diag(F5, a, 3, SpAny::odd(F5, g)) ==
            SpAny::odd(F5, monoid_act(F5, a, g)));
  }

  Ring Z9 = Ring::make_local_ring(3, 2);
  for (int t = 0; t < 20; ++t) {
    SpAny g = SpAny::odd(Z9, random_odd(Z9, rng, 1));
    for (Elem a : {1, 2, 4, 5, 7, 8})
      for (Elem b : {1, 2, 4, 5, 7, 8})
        CHECK(conj_diag(Z9, a, 3, conj_diag(Z9, b, 3, g)) ==
              conj_diag(Z9, Z9.mul(a, b), 3, g));
  }

  try {
    conj_diag(Z9, 3, 3, SpAny::odd(Z9, OddSpElement::identity(1)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotAUnit);
  }
  CHECK_THROWS_AS(
      conj_diag(F5, 0, 2, SpAny::even(SpElement::identity(1))), Error);
}

TEST_CASE("embeddings are functorial group homomorphisms") {
  Ring F3 = Ring::prime_field(3);
  CHECK(sp_matrix_size(0) == 0);
  CHECK(sp_matrix_size(1) == 2);
  CHECK(sp_matrix_size(2) == 2);
  CHECK(sp_matrix_size(3) == 4);
  CHECK(sp_matrix_size(4) == 4);
  CHECK(sp_matrix_size(5) == 6);

  // Sp_0 -> Sp_2 sends the unique element to the identity.
  SpAny triv = SpAny::even(SpElement::identity(0));
  CHECK(embed(F3, triv, 2).mat == RingMatrix::identity(2));

  // Sp_2 -> Sp_3 is M -> (c, u, M) = (0, 0, M).
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    SpElement M = random_even(F3, rng, 1);
    SpAny e = embed(F3, SpAny::even(M), 3);
    OddSpElement d = odd_decompose(F3, e.mat);
    CHECK(d.c == 0);
    CHECK(d.u == std::vector<Elem>(2, 0));
    CHECK(d.M == M);
  }

  // Sp_1 -> Sp_2 keeps the matrix [[1, c], [0, 1]].
  OddSpElement c2 = OddSpElement::identity(0);
  c2.c = 2;
  CHECK(embed(F3, SpAny::odd(F3, c2), 2).mat == mat2(1, 2, 0, 1));

  // Sp_3 -> Sp_4 is the identity on matrices.
  for (int t = 0; t < 10; ++t) {
    SpAny g = SpAny::odd(F3, random_odd(F3, rng, 1));
    CHECK(embed(F3, g, 4).mat == g.mat);
  }

  try {
    embed(F3, SpAny::even(SpElement::identity(1)), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::RankOrder);
  }

  // embed(embed(g, s), t) = embed(g, t) for r <= s <= t <= 4.
  auto random_rank = [&](int r) {
    if (r % 2 == 0) return SpAny::even(random_even(F3, rng, r / 2));
    return SpAny::odd(F3, random_odd(F3, rng, r / 2));
  };
  for (int r = 0; r <= 4; ++r)
    for (int rep = 0; rep < 5; ++rep) {
      SpAny g = random_rank(r);
      for (int s = r; s <= 4; ++s) {
        SpAny gs = embed(F3, g, s);
        CHECK(gs.rank == s);
        CHECK(is_symplectic(F3, gs.mat));
        if (s % 2 == 1)
          for (int row = 0; row < gs.mat.rows(); ++row)
            CHECK(gs.mat(row, 0) == (row == 0 ? 1 : 0));
        for (int u = s; u <= 4; ++u)
          CHECK(embed(F3, gs, u) == embed(F3, g, u));
      }
    }

  // Embedding respects products: both factors assemble inside Sp_s.
  for (int r = 0; r <= 4; ++r)
    for (int rep = 0; rep < 5; ++rep) {
      SpAny g = random_rank(r), h = random_rank(r);
      for (int s = r; s <= 4; ++s) {
        RingMatrix lhs = rm_mul(F3, embed(F3, g, s).mat, embed(F3, h, s).mat);
        SpAny prod{r, rm_mul(F3, g.mat, h.mat)};
        CHECK(embed(F3, prod, s).mat == lhs);
      }
    }

  // Projection then inclusion: odd_decompose(embed(M)).M recovers M.
  Ring F5 = Ring::prime_field(5);
  for (int t = 0; t < 30; ++t) {
    SpElement M = random_even(F5, rng, 2);
    CHECK(odd_decompose(F5, embed(F5, SpAny::even(M), 5).mat).M == M);
  }
}
