#include "doctest.h"
#include "spwb/admissible.hpp"
#include "spwb/monoid_ring.hpp"
#include "spwb/ring.hpp"
#include "spwb/rng.hpp"
#include "spwb/z0r_module.hpp"

using namespace spwb;

namespace {

Z0RElem random_z0(const Ring& R, Rng& rng, int max_terms = 4) {
  Z0RElem x;
  int terms = static_cast<int>(rng.below(max_terms + 1));
  for (int i = 0; i < terms; ++i)
    x.add_term(static_cast<Elem>(rng.below(R.modulus())),
               rng.range(-3, 3), R);
  return x;
}

PolyR random_poly(const Ring& R, Rng& rng, int max_deg) {
  int deg = static_cast<int>(rng.below(max_deg + 1));
  std::vector<Elem> c(deg + 1);
  for (Elem& v : c) v = static_cast<Elem>(rng.below(R.modulus()));
  return PolyR::make(std::move(c), R);
}

// The 2-generator module over Z/4 whose <a> action is a on the diagonal
// with the off-diagonal derivation 0,1 -> 0 and 2,3 -> 2; <2> is nilpotent
// of order 2 on it.
FinZ0RModule derivation_module() {
  Ring R = Ring::make_local_ring(2, 2);
  const Elem deriv[4] = {0, 0, 2, 2};
  IntMat rel(2, 2);
  rel(0, 0) = 4;
  rel(1, 1) = 4;
  std::vector<IntMat> action;
  for (Elem a = 0; a < 4; ++a) {
    IntMat E(2, 2);
    E(0, 0) = a;
    E(0, 1) = deriv[a];
    E(1, 1) = a;
    action.push_back(std::move(E));
  }
  return FinZ0RModule::make(2, rel, std::move(action), R, 7);
}

}  // namespace

TEST_CASE("basis symbols collapse at zero and multiply through the ring") {
  Ring R = Ring::make_local_ring(3, 2);
  CHECK(Z0RElem::basis(0, R).is_zero());
  CHECK(Z0RElem::basis(9, R).is_zero());
  CHECK(Z0RElem::basis(10, R) == Z0RElem::basis(1, R));
  CHECK(Z0RElem::constant(0, R).is_zero());

  CHECK(z0_mul(Z0RElem::basis(3, R), Z0RElem::basis(3, R), R).is_zero());
  CHECK(z0_mul(Z0RElem::basis(2, R), Z0RElem::basis(5, R), R) ==
        Z0RElem::basis(1, R));

  Z0RElem s = z0_add(Z0RElem::basis(1, R), Z0RElem::basis(2, R));
  Z0RElem sq = z0_mul(s, s, R);
  Z0RElem expect = Z0RElem::basis(1, R);
  expect = z0_add(expect, z0_scale(2, Z0RElem::basis(2, R)));
  expect = z0_add(expect, Z0RElem::basis(4, R));
  CHECK(sq == expect);
  CHECK(sq == z0_pow(s, 2, R));
  CHECK(z0_pow(s, 0, R) == Z0RElem::constant(1, R));

  CHECK(z0_sub(s, s).is_zero());
  CHECK(sq.coeff(2) == 2);
  CHECK(sq.coeff(5) == 0);
}

TEST_CASE("monoid ring satisfies ring axioms on random triples") {
  for (Ring R : {Ring::make_local_ring(3, 2), Ring::prime_field(5)}) {
    Rng rng(2026);
    for (int i = 0; i < 1000; ++i) {
      Z0RElem x = random_z0(R, rng);
      Z0RElem y = random_z0(R, rng);
      Z0RElem z = random_z0(R, rng);
      CHECK(z0_mul(z0_mul(x, y, R), z, R) == z0_mul(x, z0_mul(y, z, R), R));
      CHECK(z0_mul(x, z0_add(y, z), R) ==
            z0_add(z0_mul(x, y, R), z0_mul(x, z, R)));
      CHECK(z0_mul(x, y, R) == z0_mul(y, x, R));
      CHECK(z0_add(x, y) == z0_add(y, x));
      CHECK(z0_mul(x, Z0RElem::constant(1, R), R) == x);
    }
  }
}

TEST_CASE("unit basis elements invert and everything else is rejected") {
  Ring R = Ring::make_local_ring(3, 2);
  CHECK(basis_unit_inverse(Z0RElem::basis(2, R), R) == Z0RElem::basis(5, R));
  CHECK(basis_unit_inverse(Z0RElem::basis(1, R), R) == Z0RElem::basis(1, R));

  try {
    basis_unit_inverse(Z0RElem::basis(3, R), R);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotBasisUnit);
  }
  CHECK_THROWS_AS(
      basis_unit_inverse(z0_add(Z0RElem::basis(1, R), Z0RElem::basis(2, R)), R),
      Error);
  CHECK_THROWS_AS(basis_unit_inverse(z0_scale(2, Z0RElem::basis(2, R)), R), Error);
  CHECK_THROWS_AS(basis_unit_inverse(Z0RElem(), R), Error);
}

TEST_CASE("alternating partial-sum elements match their defining expansion") {
  Ring Z9 = Ring::make_local_ring(3, 2);
  Ring F5 = Ring::prime_field(5);

  SUBCASE("constant polynomial collapses to 1") {
    PolyR one = PolyR::make({1}, Z9);
    for (int m = 1; m <= 4; ++m) {
      std::vector<Elem> a(m, 0);
      Rng rng(40 + m);
      for (Elem& v : a) v = static_cast<Elem>(rng.below(9));
      CHECK(s_poly(a, one, Z9) == Z0RElem::constant(1, Z9));
    }
  }

  SUBCASE("single argument evaluates the polynomial") {
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
      PolyR p = random_poly(Z9, rng, 3);
      Elem a0 = static_cast<Elem>(rng.below(9));
      CHECK(s_poly({a0}, p, Z9) == Z0RElem::basis(p.eval(a0, Z9), Z9));
    }
  }

  SUBCASE("two arguments over F5 with p = X") {
    Z0RElem got = s_poly({1, 2}, PolyR::x(), F5);
    Z0RElem expect = z0_add(Z0RElem::basis(1, F5), Z0RElem::basis(2, F5));
    expect = z0_sub(expect, Z0RElem::basis(3, F5));
    CHECK(got == expect);
  }

  SUBCASE("dynamic programming agrees with the subset loop, sums included") {
    for (const Ring& R : {Ring::make_local_ring(3, 2), Ring::prime_field(7)}) {
      Rng rng(42);
      for (int i = 0; i < 200; ++i) {
        PolyR p = random_poly(R, rng, 3);
        PolyR q = random_poly(R, rng, 3);
        int m = 1 + static_cast<int>(rng.below(6));
        std::vector<Elem> a(m);
        for (Elem& v : a) v = static_cast<Elem>(rng.below(R.modulus()));
        CHECK(s_poly(a, p, R) == s_poly_subsets(a, p, R));
        PolyR sum = poly_add(p, q, R);
        CHECK(s_poly(a, sum, R) == s_poly_subsets(a, sum, R));
      }
    }
  }

  SUBCASE("empty argument list is rejected") {
    CHECK_THROWS_AS(s_poly({}, PolyR::x(), F5), Error);
  }
}

TEST_CASE("power-sum evaluation maps the expansions to zero below the bound") {
  Ring F5 = Ring::prime_field(5);
  CHECK(phi_t(Z0RElem::basis(3, F5), 2, F5) == 4);
  CHECK_THROWS_AS(phi_t(Z0RElem::basis(3, F5), 0, F5), Error);

  SUBCASE("degree one, single power") {
    Rng rng(43);
    for (int i = 0; i < 50; ++i) {
      Elem a = static_cast<Elem>(rng.below(5));
      Elem b = static_cast<Elem>(rng.below(5));
      CHECK(phi_t(s_poly({a, b}, PolyR::x(), F5), 1, F5) == 0);
    }
  }

  SUBCASE("all powers below the length bound, four rings") {
    for (const Ring& R : {Ring::make_local_ring(2, 2), Ring::make_local_ring(3, 2),
                          Ring::prime_field(5), Ring::prime_field(7)}) {
      Rng rng(44);
      for (int i = 0; i < 500; ++i) {
        PolyR p = random_poly(R, rng, 3);
        int m = 1 + static_cast<int>(rng.below(7));
        std::vector<Elem> a(m);
        for (Elem& v : a) v = static_cast<Elem>(rng.below(R.modulus()));
        Z0RElem centered =
            z0_sub(s_poly(a, p, R), Z0RElem::basis(p.eval(0, R), R));
        for (std::int64_t t = 1; t * p.degree() < m; ++t) {
          if (t * p.degree() < 1) break;
          CHECK(phi_t(centered, t, R) == 0);
        }
      }
    }
  }
}

TEST_CASE("multilinearity identity holds below the degree bound") {
  Ring Z9 = Ring::make_local_ring(3, 2);

  SUBCASE("single linear polynomial telescopes") {
    Rng rng(45);
    for (int i = 0; i < 20; ++i) {
      std::vector<Elem> x(2 + rng.below(4));
      for (Elem& v : x) v = static_cast<Elem>(rng.below(9));
      CHECK(multlin_verify(x, {PolyR::x()}, Z9));
    }
  }

  SUBCASE("constants reduce to the product of constants") {
    CHECK(multlin_verify({4}, {PolyR::make({2}, Z9), PolyR::make({7}, Z9)}, Z9));
    CHECK(multlin_verify({0, 3}, {PolyR::make({5}, Z9)}, Z9));
  }

  SUBCASE("random instances") {
    Rng rng(46);
    int checked = 0;
    while (checked < 1000) {
      int m = 2 + static_cast<int>(rng.below(5));
      int t = 1 + static_cast<int>(rng.below(3));
      std::vector<PolyR> polys;
      int degsum = 0;
      for (int i = 0; i < t; ++i) {
        PolyR p = random_poly(Z9, rng, 2);
        degsum += p.degree();
        polys.push_back(std::move(p));
      }
      if (degsum >= m) continue;
      std::vector<Elem> x(m);
      for (Elem& v : x) v = static_cast<Elem>(rng.below(9));
      CHECK(multlin_verify(x, polys, Z9));
      ++checked;
    }
  }

  SUBCASE("degree at or above the length is rejected") {
    try {
      multlin_verify({1, 2}, {PolyR::x(), PolyR::x()}, Z9);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::DegreeBound);
    }
    CHECK_THROWS_AS(multlin_verify({}, {}, Z9), Error);
  }
}

TEST_CASE("elements serialize as coefficient maps with decimal keys") {
  Ring Z9 = Ring::make_local_ring(3, 2);
  Z0RElem s = z0_add(Z0RElem::basis(1, Z9), Z0RElem::basis(2, Z9));
  Z0RElem sq = z0_mul(s, s, Z9);
  CHECK(z0_to_json(sq) == R"({"coeffs":{"1":1,"2":2,"4":1}})");
  CHECK(z0_to_json(Z0RElem()) == R"({"coeffs":{}})");
  CHECK(z0_to_json(z0_neg(Z0RElem::basis(5, Z9))) == R"({"coeffs":{"5":-1}})");
  CHECK(sq.to_string() == "<1> + 2<2> + <4>");
  CHECK(Z0RElem().to_string() == "0");
}

TEST_CASE("polynomials trim, evaluate and reverse") {
  Ring F5 = Ring::prime_field(5);
  PolyR p = PolyR::make({6, 0, 5}, F5);
  CHECK(p.c == std::vector<Elem>{1});
  CHECK(p.degree() == 0);
  CHECK(PolyR::make({}, F5).is_zero());
  CHECK(PolyR::make({0}, F5).degree() == 0);

  PolyR q = PolyR::make({1, 2, 3}, F5);
  CHECK(q.eval(2, F5) == F5.reduce(1 + 4 + 12));
  CHECK(q.degree() == 2);

  PolyR rev = q.reversal(2, F5);
  CHECK(rev.c == std::vector<Elem>{3, 2, 1});
  PolyR rev3 = q.reversal(3, F5);
  CHECK(rev3.c == std::vector<Elem>{0, 3, 2, 1});
  CHECK_THROWS_AS(q.reversal(1, F5), Error);
  CHECK(PolyR().reversal(4, F5).is_zero());
  CHECK(q.to_string() == "1 + 2X + 3X^2");
}

TEST_CASE("admissible functions know their domain and evaluate by units") {
  Ring F5 = Ring::prime_field(5);
  MultiPoly P = mp_add(mp_neg(MultiPoly::variable(0, 1)), MultiPoly::constant(1, 1));
  PolyR one = PolyR::make({1}, F5);
  AdmissibleFn f = AdmissibleFn::make(P, {{PolyR::x(), one}}, F5);

  CHECK(f.domain_excluded.empty());
  CHECK(eval_admissible(f, 2, F5) ==
        z0_add(z0_neg(Z0RElem::basis(2, F5)), Z0RElem::basis(1, F5)));

  SUBCASE("denominator X excludes the zero class") {
    AdmissibleFn g = AdmissibleFn::make(MultiPoly::variable(0, 1),
                                        {{one, PolyR::x()}}, F5);
    CHECK(g.domain_excluded == std::vector<Elem>{0});
    CHECK(g.defined_at(1, F5));
    CHECK_FALSE(g.defined_at(0, F5));
    try {
      eval_admissible(g, 0, F5);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::NotDefinedAt);
      CHECK(std::string(e.what()).find("1") != std::string::npos);
    }
  }

  SUBCASE("excluded classes live in the residue field") {
    Ring Z9 = Ring::make_local_ring(3, 2);
    PolyR oneZ9 = PolyR::make({1}, Z9);
    AdmissibleFn g = AdmissibleFn::make(MultiPoly::variable(0, 1),
                                        {{oneZ9, PolyR::x()}}, Z9);
    CHECK(g.domain_excluded == std::vector<Elem>{0});
    CHECK_FALSE(g.defined_at(3, Z9));
    CHECK_FALSE(g.defined_at(6, Z9));
    CHECK(g.defined_at(4, Z9));
  }

  SUBCASE("nested polynomial combination") {
    AdmissibleFn h = AdmissibleFn::make(
        mp_pow(MultiPoly::variable(0, 1), 2),
        {{PolyR::make({1, 1}, F5), one}}, F5);
    CHECK(eval_admissible(h, 1, F5) == Z0RElem::basis(4, F5));
  }

  SUBCASE("variable count must match the pair count") {
    CHECK_THROWS_AS(AdmissibleFn::make(MultiPoly::variable(0, 2),
                                       {{PolyR::x(), one}}, F5),
                    Error);
  }
}

TEST_CASE("limits evaluate at finite points and reverse at infinity") {
  Ring F5 = Ring::prime_field(5);
  PolyR one = PolyR::make({1}, F5);

  SUBCASE("limit at zero of 1 - <t> is 1") {
    MultiPoly P =
        mp_add(mp_neg(MultiPoly::variable(0, 1)), MultiPoly::constant(1, 1));
    AdmissibleFn f = AdmissibleFn::make(P, {{PolyR::x(), one}}, F5);
    CHECK(limit_admissible(f, LimitPoint::at(0), F5) == Z0RElem::constant(1, F5));
  }

  SUBCASE("moebius quotient at infinity takes the leading ratio") {
    PolyR num = PolyR::make({1, 2}, F5);  // 2t + 1
    PolyR den = PolyR::make({4, 3}, F5);  // 3t + 4
    AdmissibleFn f =
        AdmissibleFn::make(MultiPoly::variable(0, 1), {{num, den}}, F5);
    CHECK(limit_admissible(f, LimitPoint::infinity(), F5) ==
          Z0RElem::basis(F5.mul(2, F5.unit_inverse(3)), F5));
  }

  SUBCASE("numerator outgrowing the denominator has no limit at infinity") {
    AdmissibleFn f = AdmissibleFn::make(MultiPoly::variable(0, 1),
                                        {{PolyR::x(), one}}, F5);
    try {
      limit_admissible(f, LimitPoint::infinity(), F5);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::LimitUndefined);
    }
  }

  SUBCASE("non-unit leading denominator coefficient has no limit at infinity") {
    Ring Z9 = Ring::make_local_ring(3, 2);
    PolyR oneZ9 = PolyR::make({1}, Z9);
    PolyR den = PolyR::make({1, 3}, Z9);
    AdmissibleFn f =
        AdmissibleFn::make(MultiPoly::variable(0, 1), {{oneZ9, den}}, Z9);
    CHECK_THROWS_AS(limit_admissible(f, LimitPoint::infinity(), Z9), Error);
  }

  SUBCASE("degenerate denominator at the point has no limit") {
    AdmissibleFn f = AdmissibleFn::make(MultiPoly::variable(0, 1),
                                        {{one, PolyR::x()}}, F5);
    try {
      limit_admissible(f, LimitPoint::at(0), F5);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::LimitUndefined);
    }
  }

  SUBCASE("finite limits agree with evaluation on random presentations") {
    Rng rng(47);
    for (const Ring& R : {Ring::make_local_ring(3, 2), Ring::prime_field(7)}) {
      for (int i = 0; i < 100; ++i) {
        int nv = 1 + static_cast<int>(rng.below(2));
        std::vector<std::pair<PolyR, PolyR>> pairs;
        for (int j = 0; j < nv; ++j)
          pairs.emplace_back(random_poly(R, rng, 2), random_poly(R, rng, 2));
        MultiPoly P = MultiPoly::constant(
            static_cast<std::int64_t>(rng.below(5)), nv);
        for (int j = 0; j < nv; ++j)
          P = mp_add(P, mp_pow(MultiPoly::variable(j, nv),
                               static_cast<int>(rng.below(3))));
        AdmissibleFn f = AdmissibleFn::make(P, pairs, R);
        for (Elem t = 0; t < R.modulus(); ++t) {
          if (!f.defined_at(t, R)) continue;
          CHECK(limit_admissible(f, LimitPoint::at(t), R) ==
                eval_admissible(f, t, R));
        }
      }
    }
  }

  SUBCASE("two presentations of the same quotient agree where both settle") {
    PolyR num1 = PolyR::make({1, 2}, F5);
    PolyR den1 = PolyR::make({0, 1}, F5);
    PolyR num2 = PolyR::make({0, 1, 2}, F5);
    PolyR den2 = PolyR::make({0, 0, 1}, F5);
    AdmissibleFn f =
        AdmissibleFn::make(MultiPoly::variable(0, 1), {{num1, den1}}, F5);
    AdmissibleFn g =
        AdmissibleFn::make(MultiPoly::variable(0, 1), {{num2, den2}}, F5);
    for (Elem t = 1; t < 5; ++t)
      CHECK(presentations_agree_at(f, g, LimitPoint::at(t), F5));
    CHECK(presentations_agree_at(f, g, LimitPoint::infinity(), F5));
  }
}

TEST_CASE("finite module construction validates the action") {
  Ring F5 = Ring::prime_field(5);

  SUBCASE("infinite underlying group is rejected") {
    std::vector<IntMat> action;
    for (Elem a = 0; a < 5; ++a) {
      IntMat E(1, 1);
      E(0, 0) = a;
      action.push_back(std::move(E));
    }
    try {
      FinZ0RModule::make(1, IntMat(1, 0), std::move(action), F5);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::ConfigError);
      CHECK(std::string(e.what()).find("finite") != std::string::npos);
    }
  }

  SUBCASE("identity and zero actions are enforced") {
    IntMat rel(1, 1);
    rel(0, 0) = 5;
    auto scalar_action = [&](Elem bad_at, std::int64_t value) {
      std::vector<IntMat> action;
      for (Elem a = 0; a < 5; ++a) {
        IntMat E(1, 1);
        E(0, 0) = (a == bad_at) ? value : a;
        action.push_back(std::move(E));
      }
      return action;
    };
    CHECK_THROWS_AS(FinZ0RModule::make(1, rel, scalar_action(1, 3), F5), Error);
    CHECK_THROWS_AS(FinZ0RModule::make(1, rel, scalar_action(0, 2), F5), Error);
    CHECK_THROWS_AS(FinZ0RModule::make(1, rel, scalar_action(2, 0), F5), Error);
    CHECK_NOTHROW(FinZ0RModule::make(1, rel, scalar_action(0, 0), F5));
  }

  SUBCASE("actions must preserve the relation lattice") {
    Ring Z4 = Ring::make_local_ring(2, 2);
    IntMat rel(2, 2);
    rel(0, 0) = 2;
    rel(1, 1) = 4;
    std::vector<IntMat> action;
    for (Elem a = 0; a < 4; ++a) {
      IntMat E(2, 2);
      if (a == 2) {
        E(0, 1) = 1;
        E(1, 0) = 1;
      } else {
        E(0, 0) = a;
        E(1, 1) = a;
      }
      action.push_back(std::move(E));
    }
    try {
      FinZ0RModule::make(2, rel, std::move(action), Z4);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Err::ConfigError);
      CHECK(std::string(e.what()).find("preserve") != std::string::npos);
    }
  }

  SUBCASE("shape mismatches are rejected") {
    IntMat rel(1, 1);
    rel(0, 0) = 5;
    CHECK_THROWS_AS(FinZ0RModule::make(1, rel, {}, F5), Error);
    CHECK_THROWS_AS(FinZ0RModule::make(2, rel, {}, F5), Error);
  }

  SUBCASE("cyclic powers") {
    CHECK_THROWS_AS(FinZ0RModule::cyclic_power(0, F5), Error);
    FinZ0RModule M1 = FinZ0RModule::cyclic_power(1, F5);
    CHECK(M1.structure().free_rank == 0);
    CHECK(M1.structure().torsion == std::vector<BigInt>{5});
    CHECK(M1.action_of(3)(0, 0) == 3);

    Ring Z9 = Ring::make_local_ring(3, 2);
    FinZ0RModule M2 = FinZ0RModule::cyclic_power(2, Z9);
    CHECK(M2.action_of(2)(0, 0) == 4);
    CHECK(M2.structure().to_string() == "Z/9");
  }

  SUBCASE("derivation module constructs and has square structure") {
    FinZ0RModule M = derivation_module();
    CHECK(M.structure().free_rank == 0);
    CHECK(M.structure().torsion == std::vector<BigInt>({4, 4}));
  }
}

TEST_CASE("inverting a basis-sum element can kill a finite module") {
  Ring F5 = Ring::prime_field(5);
  FinZ0RModule M = FinZ0RModule::cyclic_power(1, F5);

  SUBCASE("the two-argument expansion acts as zero") {
    Z0RElem sigma = s_poly({1, 2}, PolyR::x(), F5);
    IntMat S = M.sigma_matrix(sigma);
    CHECK(S(0, 0) == 0);  // 1 + 2 - 3
    CHECK(localization_vanishes(M, sigma));
  }

  SUBCASE("the identity never kills a nonzero module") {
    CHECK_FALSE(localization_vanishes(M, Z0RElem::constant(1, F5)));
  }

  SUBCASE("zero kills everything immediately") {
    CHECK(localization_vanishes(M, Z0RElem()));
  }

  SUBCASE("units act bijectively, so the chain stabilizes high") {
    CHECK_FALSE(localization_vanishes(M, Z0RElem::basis(2, F5)));
  }

  SUBCASE("nilpotent actions vanish") {
    FinZ0RModule D = derivation_module();
    Ring Z4 = D.ring();
    CHECK(localization_vanishes(D, Z0RElem::basis(2, Z4)));
    CHECK_FALSE(localization_vanishes(D, Z0RElem::basis(3, Z4)));
  }

  SUBCASE("vanishing is monotone under quotients") {
    Ring Z9 = Ring::make_local_ring(3, 2);
    FinZ0RModule M2 = FinZ0RModule::cyclic_power(2, Z9);
    IntMat rel(1, 1);
    rel(0, 0) = 3;
    std::vector<IntMat> action;
    for (Elem a = 0; a < 9; ++a) {
      IntMat E(1, 1);
      E(0, 0) = Z9.pow(a, 2);
      action.push_back(std::move(E));
    }
    FinZ0RModule Q = FinZ0RModule::make(1, rel, std::move(action), Z9);

    FinZ0RModule D = derivation_module();
    Ring Z4 = D.ring();
    IntMat relq(2, 2);
    relq(0, 0) = 2;
    relq(1, 1) = 4;
    std::vector<IntMat> actq;
    for (Elem a = 0; a < 4; ++a) actq.push_back(D.action_of(a));
    FinZ0RModule DQ = FinZ0RModule::make(2, relq, std::move(actq), Z4);

    Rng rng(48);
    for (int i = 0; i < 40; ++i) {
      std::vector<Elem> a3(3), a2(2);
      for (Elem& v : a3) v = static_cast<Elem>(rng.below(9));
      for (Elem& v : a2) v = static_cast<Elem>(rng.below(4));
      Z0RElem s9 = s_poly(a3, PolyR::x(), Z9);
      Z0RElem s4 = s_poly(a2, PolyR::x(), Z4);
      if (localization_vanishes(M2, s9)) CHECK(localization_vanishes(Q, s9));
      if (localization_vanishes(D, s4)) CHECK(localization_vanishes(DQ, s4));
    }
  }
}

TEST_CASE("radical annihilator membership finds nilpotence step by step") {
  Ring F5 = Ring::prime_field(5);
  FinZ0RModule M = FinZ0RModule::cyclic_power(1, F5);

  CHECK(radical_annihilator_member(M, {0}, Z0RElem::constant(1, F5)));
  CHECK(radical_annihilator_member(M, {1}, Z0RElem()));
  CHECK_FALSE(radical_annihilator_member(M, {1}, Z0RElem::constant(1, F5)));
  CHECK_FALSE(radical_annihilator_member(M, {1}, Z0RElem::basis(2, F5)));
  CHECK(radical_annihilator_member(M, {1}, Z0RElem::basis(0, F5)));

  SUBCASE("two-step nilpotence on the derivation module") {
    FinZ0RModule D = derivation_module();
    Ring Z4 = D.ring();
    Z0RElem sigma = Z0RElem::basis(2, Z4);
    std::vector<std::int64_t> x = {0, 1};
    std::vector<std::int64_t> sx = D.act(sigma, x);
    CHECK_FALSE(D.element_is_zero(sx));
    CHECK(sx == std::vector<std::int64_t>({2, 2}));
    CHECK(D.element_is_zero(D.act(sigma, sx)));
    CHECK(radical_annihilator_member(D, x, sigma));
    CHECK_FALSE(radical_annihilator_member(D, x, Z0RElem::basis(3, Z4)));
  }
}

TEST_CASE("random probes confirm the power-sum vanishing on cyclic modules") {
  Ring F5 = Ring::prime_field(5);
  Ring Z9 = Ring::make_local_ring(3, 2);

  SUBCASE("linear polynomial, two arguments, M(1)") {
    FinZ0RModule M = FinZ0RModule::cyclic_power(1, F5);
    ProbeReport r = quasilinear_probe(M, PolyR::x(), 2, 30, F5, 99, 1);
    CHECK(r.trials == 30);
    CHECK(r.all_pass());
    CHECK(r.to_string() == "30/30 trials pass");
  }

  SUBCASE("linear polynomial, three arguments, M(2)") {
    FinZ0RModule M = FinZ0RModule::cyclic_power(2, Z9);
    ProbeReport r = quasilinear_probe(M, PolyR::x(), 3, 30, Z9, 99, 1);
    CHECK(r.all_pass());
  }

  SUBCASE("below the bound the probe reports failures") {
    FinZ0RModule M = FinZ0RModule::cyclic_power(1, F5);
    ProbeReport r = quasilinear_probe(M, PolyR::x(), 1, 30, F5, 99, 1);
    CHECK_FALSE(r.all_pass());
    CHECK(r.passes + static_cast<int>(r.failed_trials.size()) == r.trials);
    CHECK(!r.failed_trials.empty());
  }

  SUBCASE("reports are identical across thread counts") {
    FinZ0RModule M = FinZ0RModule::cyclic_power(2, Z9);
    ProbeReport a = quasilinear_probe(M, PolyR::x(), 1, 40, Z9, 7, 1);
    ProbeReport b = quasilinear_probe(M, PolyR::x(), 1, 40, Z9, 7, 4);
    CHECK(a.passes == b.passes);
    CHECK(a.failed_trials == b.failed_trials);
  }
}

TEST_CASE("sequence sampling avoids excluded residue classes") {
  Ring F5 = Ring::prime_field(5);
  Rng rng(50);
  for (int i = 0; i < 100; ++i) {
    std::vector<Elem> a = random_sequence_avoiding(rng, 3, F5, {0});
    for (std::uint32_t mask = 1; mask < 8; ++mask) {
      Elem s = 0;
      for (int j = 0; j < 3; ++j)
        if (mask & (1u << j)) s = F5.add(s, a[j]);
      CHECK(s != 0);
    }
  }
  CHECK_THROWS_AS(random_sequence_avoiding(rng, 2, F5, {0, 1, 2, 3, 4}), Error);
  CHECK_THROWS_AS(random_sequence_avoiding(rng, 0, F5, {}), Error);
}
