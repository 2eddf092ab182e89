#include "doctest.h"
#include "qbundle/hopf.hpp"

using namespace qb;

TEST_CASE("group tables") {
  Group s3 = Group::symmetric3();
  CHECK(s3.size() == 6);
  CHECK_NOTHROW(s3.validate());
  CHECK(Group::product(s3, s3).size() == 36);
  Group bad = Group::cyclic(3);
  bad.table[1][1] = 1;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("function algebras") {
  FinHopf z2 = function_algebra(Group::cyclic(2));
  CHECK(z2.n == 2);
  CHECK(z2.S.column_dense(1) == unit(2, 1));
  FinHopf z3 = function_algebra(Group::cyclic(3, "s"));
  // Δδ_s = δ_e⊗δ_s + δ_s⊗δ_e + δ_{s²}⊗δ_{s²}
  Vec expect = kron(unit(3, 0), unit(3, 1)) + kron(unit(3, 1), unit(3, 0)) + kron(unit(3, 2), unit(3, 2));
  CHECK(z3.coproduct(unit(3, 1)) == expect);
  CHECK(z3.labels[1] == "d:s");
  for (const Group& g : {Group::cyclic(2), Group::cyclic(3), Group::cyclic(6), Group::symmetric3()}) {
    CHECK(check_hopf_axioms(function_algebra(g)).ok());
    CHECK(check_hopf_axioms(group_algebra(g)).ok());
  }
}

TEST_CASE("group algebras") {
  FinHopf cz2 = group_algebra(Group::cyclic(2));
  CHECK(cz2.S.column_dense(1) == unit(2, 1));
  FinHopf cz3 = group_algebra(Group::cyclic(3));
  Scalar z = Scalar::zeta(3);
  Vec q1 = {Scalar(1), z, z * z};
  CHECK(cz3.counit(q1).is_zero());
  FinHopf cs3 = group_algebra(Group::symmetric3());
  CHECK(cs3.mul(cs3.basis(1), cs3.basis(2)) != cs3.mul(cs3.basis(2), cs3.basis(1)));
}

TEST_CASE("corrupted antipode is caught with a witness") {
  FinHopf cz3 = group_algebra(Group::cyclic(3));
  cz3.S = LinMap::identity(3);
  AxiomReport r = check_hopf_axioms(cz3);
  CHECK_FALSE(r.ok());
  bool found = false;
  for (const auto& c : r.checks)
    if (c.name == "antipode-left") {
      CHECK_FALSE(c.ok);
      CHECK(c.witness == 1);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("adjoint coaction") {
  for (const FinHopf& h : {group_algebra(Group::cyclic(3)), function_algebra(Group::cyclic(4)),
                           function_algebra(Group::symmetric3()), group_algebra(Group::symmetric3())}) {
    LinMap ad = adjoint_coaction(h);
    int n = h.n;
    LinMap id = LinMap::identity(n);
    // right coaction: (Ad⊗id)Ad = (id⊗Δ)Ad and (id⊗ε)Ad = id
    CHECK(kron(ad, id).after(ad) == kron(id, h.delta).after(ad));
    CHECK(kron(id, h.counit_map()).after(ad) == id);
    Subspace ke = counit_kernel(h);
    Subspace keh = tensor(ke, Subspace::full(n));
    for (const auto& r : ke.rows()) CHECK(keh.contains(ad.apply(r)));
  }
  // abelian group algebra: Ad(g) = g⊗1
  FinHopf cz3 = group_algebra(Group::cyclic(3));
  CHECK(adjoint_coaction(cz3).column_dense(1) == kron(unit(3, 1), unit(3, 0)));
}

TEST_CASE("convolution inverse") {
  FinHopf h = function_algebra(Group::symmetric3());
  LinMap inv = convolution_inverse(h, h, LinMap::identity(h.n));
  CHECK(inv == h.S);
  LinMap triv(h.n, h.n);
  for (int i = 0; i < h.n; ++i) triv.set_column(i, scaled(h.unit, h.eps[i]));
  CHECK(convolution_inverse(h, h, triv) == triv);
  // Φ(h) = 1⊗h into M⊗H has inverse Φ∘S
  FinAlgebra m = FinAlgebra::functions({"0", "1"});
  FinHopf cz3 = group_algebra(Group::cyclic(3));
  FinAlgebra p = tensor_algebra(m, cz3);
  LinMap phi(p.n, 3);
  for (int i = 0; i < 3; ++i) phi.set_column(i, kron(m.unit, unit(3, i)));
  LinMap pinv = convolution_inverse(cz3, p, phi);
  CHECK(pinv == phi.after(cz3.S));
  LinMap unitmap(p.n, 3);
  for (int i = 0; i < 3; ++i) unitmap.set_column(i, scaled(p.unit, cz3.eps[i]));
  CHECK(convolution(cz3, p, phi, pinv) == unitmap);
  CHECK(convolution(cz3, p, pinv, phi) == unitmap);
  LinMap zero(p.n, 3);
  CHECK_THROWS(convolution_inverse(cz3, p, zero));
}

TEST_CASE("left integrals") {
  // oracle: solve λ(h1)h2 = λ(h)1 by hand for C(Z2): λ(δ_e) = λ(δ_g) = 1/2
  Vec lz2 = left_integral(function_algebra(Group::cyclic(2)));
  CHECK(lz2 == Vec{Scalar(Rat(1, 2)), Scalar(Rat(1, 2))});
  Vec lc3 = left_integral(group_algebra(Group::cyclic(3)));
  CHECK(lc3 == unit(3, 0));
  FinHopf g = group_algebra(Group::cyclic(1));
  CHECK(left_integral(g) == g.eps);
  FinHopf s3 = function_algebra(Group::symmetric3());
  Vec l = left_integral(s3);
  for (int i = 0; i < s3.n; ++i) {
    Vec lhs(s3.n);
    for (const auto& [k, x] : s3.delta.column(i)) axpy(lhs, x * l[k / s3.n], unit(s3.n, k % s3.n));
    CHECK(lhs == scaled(s3.unit, l[i]));
  }
}

TEST_CASE("comodule algebras and invariants") {
  FinAlgebra m = FinAlgebra::functions({"0", "1"});
  FinHopf h = function_algebra(Group::cyclic(3));
  ComoduleAlgebra p = tensor_bundle(m, h);
  CHECK(p.check().ok());
  Subspace inv = invariant_subalgebra(p);
  Subspace expect(6);
  for (int i = 0; i < 2; ++i) expect.add(kron(unit(2, i), h.unit));
  CHECK(inv == expect);
  ComoduleAlgebra r = regular_comodule(group_algebra(Group::symmetric3()));
  CHECK(r.check().ok());
  CHECK(invariant_subalgebra(r).dim() == 1);
  LinMap j = integral_intertwiner(p);
  // j intertwines: Δ_R j = (j⊗id)Δ
  CHECK(p.coact.after(j) == kron(j, LinMap::identity(3)).after(h.delta));
}
