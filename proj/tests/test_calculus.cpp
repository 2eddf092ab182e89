#include "doctest.h"
#include "qbundle/calculus.hpp"

using namespace qb;

namespace {

Subspace span_units(int n, const std::vector<int>& idx) {
  Subspace s(n);
  for (int i : idx) s.add(unit(n, i));
  return s;
}

}  // namespace

TEST_CASE("universal calculus") {
  UniversalCalculus u = universal_calculus(FinAlgebra::functions({"0", "1", "2"}));
  CHECK(u.omega1.dim() == 6);
  CHECK(is_zero(u.dU.apply(u.A.unit)));
  FinHopf cz2 = group_algebra(Group::cyclic(2));
  UniversalCalculus v = universal_calculus(cz2);
  CHECK(v.omega1.dim() == 2);
  CHECK(v.dU.column_dense(1) == kron(unit(2, 0), unit(2, 1)) - kron(unit(2, 1), unit(2, 0)));
  for (int j = 0; j < 2; ++j) CHECK(v.omega1.contains(v.dU.column_dense(j)));
}

TEST_CASE("theta map") {
  FinHopf cz2 = group_algebra(Group::cyclic(2));
  ThetaMaps t = theta_map(cz2);
  CHECK(t.theta.apply(kron(cz2.unit, cz2.unit)) == kron(cz2.unit, cz2.unit));
  CHECK(t.theta.column_dense(1) == kron(unit(2, 1), unit(2, 1)));
  FinHopf z3 = function_algebra(Group::cyclic(3));
  ThetaMaps u = theta_map(z3);
  CHECK(u.theta.after(u.theta_inv) == LinMap::identity(9));
  CHECK(u.theta_inv.after(u.theta) == LinMap::identity(9));
  CHECK(u.theta.apply(kron(z3.unit, z3.unit)) == kron(z3.unit, z3.unit));
}

TEST_CASE("calculi from right ideals") {
  FinHopf cz2 = group_algebra(Group::cyclic(2));
  LeftCovariantCalculus uni = calculus_from_ideal(cz2, Subspace(2));
  CHECK(uni.calc.N.dim() == 0);
  CHECK(uni.calc.dim() == 2);
  Subspace q = echelonize(2, {unit(2, 1) - unit(2, 0)});
  CHECK(calculus_from_ideal(cz2, q).calc.dim() == 0);

  FinHopf cz3 = group_algebra(Group::cyclic(3));
  Scalar z = Scalar::zeta(3);
  Subspace q3 = echelonize(3, {Vec{Scalar(1).coerce(z.field()), z, z * z}});
  LeftCovariantCalculus c = calculus_from_ideal(cz3, q3);
  CHECK(c.inv.dim() == 1);
  CHECK(c.calc.dim() == 3);
  LinMap w = maurer_cartan(c);
  CHECK(image(w).dim() == 1);

  CHECK_THROWS(calculus_from_ideal(cz2, echelonize(2, {unit(2, 0)})));
  FinHopf s3 = function_algebra(Group::symmetric3());
  // span{δ_a + δ_b} lies in ker ε but is not a right ideal
  CHECK_THROWS(calculus_from_ideal(s3, echelonize(6, {unit(6, 1) + unit(6, 2)})));
}

TEST_CASE("bicovariance") {
  FinHopf s3 = function_algebra(Group::symmetric3());
  CHECK(bicovariance_check(s3, Subspace(6)));
  CHECK(bicovariance_check(s3, counit_kernel(s3)));
  // a single transposition is not a conjugacy class
  CHECK_FALSE(bicovariance_check(s3, span_units(6, {1})));
  Group g = Group::symmetric3();
  std::vector<int> transpositions, threecycles;
  for (int x = 1; x < 6; ++x) (g.mul(x, x) == g.e ? transpositions : threecycles).push_back(x);
  CHECK(bicovariance_check(s3, span_units(6, transpositions)));
  CHECK(bicovariance_check(s3, span_units(6, threecycles)));
}

TEST_CASE("Maurer-Cartan forms") {
  FinHopf s3 = group_algebra(Group::symmetric3());
  LeftCovariantCalculus c = calculus_from_ideal(s3, Subspace(6));
  LinMap w = maurer_cartan(c);
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec h = c.inv.lift(unit(c.inv.dim(), j));
    Vec expect(36);
    SVec dh = sparse(s3.delta.apply(h));
    for (const auto& [k, x] : dh)
      axpy(expect, x, kron(s3.S.column_dense(k / 6), unit(6, k % 6)));
    CHECK(c.calc.same_form(c.calc.q.section.apply(w.column_dense(j)), expect));
  }
  CHECK(is_zero(w.apply(zeros(c.inv.dim()))));
  CHECK_THROWS(maurer_cartan(calculus_from_ideal(function_algebra(Group::symmetric3()),
                                                 span_units(6, {1}))));
}

TEST_CASE("calculus invariants across examples") {
  std::vector<std::pair<FinHopf, Subspace>> cases;
  FinHopf s3 = function_algebra(Group::symmetric3());
  cases.push_back({s3, span_units(6, {1, 3})});
  cases.push_back({s3, Subspace(6)});
  FinHopf z4 = function_algebra(Group::cyclic(4));
  cases.push_back({z4, span_units(4, {2})});
  FinHopf cz3 = group_algebra(Group::cyclic(3));
  cases.push_back({cz3, echelonize(3, {unit(3, 1) - unit(3, 0), unit(3, 2) - unit(3, 0)})});
  for (auto& [h, q] : cases) {
    if (!is_right_ideal(h, q)) continue;
    LeftCovariantCalculus c = calculus_from_ideal(h, q);
    CHECK(leibniz_holds(c.calc));
    CHECK(spans_forms(c.calc));
    CHECK(left_covariant(c));
    CHECK(ideal_from_submodule(h, c.calc.N) == q);
  }
}
