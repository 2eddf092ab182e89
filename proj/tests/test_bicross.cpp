#include "doctest.h"
#include "qbundle/bicross.hpp"

using namespace qb;

namespace {

struct Z2Z3 {
  Bicross b = bicrossproduct(named_matched_pair("z2z3"));
  // P elements: δ_{s^i}, g and the Maurer-Cartan forms of the examples
  Vec delta(int i) const { return b.elem(b.M.basis(((i % 3) + 3) % 3), b.H.unit); }
  Vec g() const { return b.Phi.column_dense(1); }
  Vec d(const Vec& u) const { return d_universal(b, u); }
  Vec form(int s, int h) const { return invariant_form(b, b.P.basis(b.idx(s, h))); }
  Vec omega0() const {
    return invariant_form(b, b.P.basis(b.idx(0, 1))) - invariant_form(b, b.P.basis(b.idx(0, 0)));
  }
  Vec lm(const Vec& p, const Vec& f) const { return left_mul(b, p, f); }
  Vec rm(const Vec& f, const Vec& p) const { return right_mul(b, f, p); }
};

Subspace span_of(int n, const std::vector<Vec>& v) { return echelonize(n, v); }

Subspace fibre_q(const Bicross& b) {
  Subspace q(2);
  q.add(b.H.basis(1) - b.H.basis(0));
  return q;
}

}  // namespace

TEST_CASE("matched pairs from factorizations") {
  MatchedPair m = named_matched_pair("z2z3");
  CHECK(m.G.size() == 2);
  CHECK(m.Sigma.size() == 3);
  for (int s = 0; s < 3; ++s) CHECK(m.tri[s][1] == 1);
  CHECK(m.tle[1][1] == 2);
  CHECK(m.tle[2][1] == 1);

  MatchedPair z = named_matched_pair("z6z6");
  for (int k = 0; k < 6; ++k) {
    CHECK(z.tri[1][k] == z.G.inv(k));
    CHECK(z.tle[k][1] == z.Sigma.inv(k));
  }
  GammaSpace gs = gamma_space_dimension(z);
  CHECK(gs.dimension == 13);
  CHECK(gs.isotropy[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(gs.isotropy[3] == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (int k : {1, 2, 4, 5}) CHECK(gs.isotropy[k] == std::vector<int>{0, 2, 4});
  CHECK(gamma_space_dimension(m).dimension == 2);
  CHECK(gamma_space_dimension(direct_product_pair(Group::cyclic(3), Group::cyclic(4))).dimension == 6);

  Group s3 = Group::symmetric3();
  int a = s3.index_of("a");
  CHECK_THROWS(matched_pair_from_factorization(s3, {s3.e, a}, {s3.e, a}));
  CHECK_THROWS(named_matched_pair("z4z4"));
}

TEST_CASE("bicrossproduct Hopf algebras") {
  Z2Z3 z;
  CHECK(z.b.P.n == 6);
  CHECK(check_hopf_axioms(z.b.P).ok());
  CHECK(coproduct_of_phi_holds(z.b));
  // g δ_s = δ_{s²} g
  CHECK(z.b.P.mul(z.g(), z.delta(1)) == z.b.P.mul(z.delta(2), z.g()));
  CHECK(z.b.P.mul(z.g(), z.delta(0)) == z.b.P.mul(z.delta(0), z.g()));

  Group g = Group::cyclic(2), s = Group::cyclic(3, "s");
  Bicross dp = bicrossproduct(direct_product_pair(g, s));
  FinHopf t = tensor_hopf(function_algebra(s), group_algebra(g));
  CHECK(dp.P.mu == t.mu);
  CHECK(dp.P.delta == t.delta);
  CHECK(dp.P.S == t.S);
  CHECK(dp.P.eps == t.eps);

  Bicross big = bicrossproduct(named_matched_pair("z6z6"), false);
  CHECK(big.P.n == 36);
  CHECK(check_hopf_axioms(big.P).ok());
  CHECK(coproduct_of_phi_holds(big));
}

TEST_CASE("gamma condition and beta") {
  Z2Z3 z;
  const Bicross& b = z.b;
  Scalar g1(2), g2(5);
  GammaData d = gamma_from_parameters(b.mp, {g1, g2});
  LinMap gamma = gamma_map(b, d);
  CHECK(gamma_condition_check(b, gamma));
  GammaData triv = gamma_from_parameters(b.mp, {Scalar(1), Scalar(1)});
  CHECK(gamma_condition_check(b, gamma_map(b, triv)));
  CHECK(beta_from_gamma(b, gamma_map(b, triv)) == LinMap(9, 2));
  CHECK_THROWS(gamma_from_parameters(b.mp, {g1}));

  // β_U(g)_{u,v} = γ(g,u⁻¹v) − 1; the displayed matrix omits the −1 off the diagonal
  LinMap beta = beta_from_gamma(b, gamma);
  CHECK(beta == beta_from_gamma_finite(b, d));
  std::vector<std::vector<Scalar>> shown{{0, g1, g2}, {g2, 0, g1}, {g1, g2, 0}};
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v) {
      Scalar x = beta.at(u * 3 + v, 1);
      CHECK(x == (u == v ? Scalar(0) : shown[u][v] - Scalar(1)));
    }
  CHECK(beta_left_invariant(b, beta));
  CHECK(beta_compatibility_holds(b, beta));
  // with trivial ▷ the compatibility identity carries no information
  LinMap bad = beta;
  bad.add(1, 1, Scalar(1));
  CHECK(beta_compatibility_holds(b, bad));
  CHECK(!beta_left_invariant(b, bad));

  Bicross big = bicrossproduct(named_matched_pair("z6z6"), false);
  std::vector<Scalar> params;
  for (int k = 0; k < 13; ++k) params.push_back(Scalar(k + 2));
  GammaData gd = gamma_from_parameters(big.mp, params);
  LinMap gb = gamma_map(big, gd);
  CHECK(gamma_condition_check(big, gb));
  LinMap bb = beta_from_gamma(big, gb);
  CHECK(bb == beta_from_gamma_finite(big, gd));
  CHECK(beta_left_invariant(big, bb));
  CHECK(beta_compatibility_holds(big, bb));
  CHECK(!beta_compatibility_holds(big, bb, true));
  // perturbing one entry of β(g) with s▷g ≠ g breaks the identity
  LinMap bad2 = bb;
  bad2.add(0 * 6 + 1, 1, Scalar(1));
  CHECK(!beta_compatibility_holds(big, bad2));
  // support outside Y fails
  gd.value[1][1] = Scalar(7);
  CHECK(!gamma_condition_check(big, gamma_map(big, gd)));
}

TEST_CASE("minimal horizontal ideal") {
  Z2Z3 z;
  const Bicross& b = z.b;
  Subspace q = fibre_q(b);
  auto run = [&](Scalar g1, Scalar g2) {
    GammaData d = gamma_from_parameters(b.mp, {g1, g2});
    LinMap gamma = gamma_map(b, d);
    Subspace q0 = q0_bicross(b, gamma, q);
    CHECK(q0 == q0_bicross_finite(b, d, q));
    LinMap i = splitting_from_gamma(b, gamma);
    CHECK(q0 == homogeneous_q0(b.hb, i, q));
    UniversalConnection w = canonical_connection(b.hb, i);
    Subspace n0 = n0_from_connection(b.hb.B, q, w);
    CHECK(image(b.th.theta, tensor(Subspace::full(6), q0)) == n0);
    // displayed generators
    std::vector<Vec> gens;
    for (int h = 0; h < 2; ++h) {
      gens.push_back(scaled(b.P.basis(b.idx(1, 1 - h)), g1) - b.P.basis(b.idx(2, h)));
      gens.push_back(scaled(b.P.basis(b.idx(2, 1 - h)), g2) - b.P.basis(b.idx(1, h)));
    }
    CHECK(q0 == span_of(6, gens));
    return q0.dim();
  };
  CHECK(run(Scalar(2), Scalar(3)) == 4);
  CHECK(run(Scalar(2), Scalar(Rat(1, 2))) == 2);
  CHECK(run(Scalar::q(), Scalar::q(-1)) == 2);
  CHECK(q0_bicross(b, gamma_map(b, gamma_from_parameters(b.mp, {Scalar(2), Scalar(3)})), Subspace(2)).dim() == 0);
}

TEST_CASE("universal fibre calculus with S = {s^2}") {
  Z2Z3 z;
  const Bicross& b = z.b;
  for (auto [g1, g2] : {std::pair{Scalar(2), Scalar(5)}, std::pair{Scalar(1), Scalar(1)}, std::pair{Scalar(-3), Scalar(Rat(1, 4))}}) {
    GammaData d = gamma_from_parameters(b.mp, {g1, g2});
    BicrossCalculus r = bicross_calculus(b, d, Subspace(2), {2});
    CHECK(r.calc.dim() == 3 * 6);
    CHECK(r.calc.report.ok());
    CHECK(r.left_covariant);
    CHECK(r.qp_closed_form);
    CHECK(r.canonical_matches);
    CHECK(r.QP == span_of(6, {b.P.basis(b.idx(2, 0)), b.P.basis(b.idx(2, 1))}));
    const QuotientCalculus& c = r.calc.calc;
    Vec w0 = z.omega0(), w1 = z.form(1, 0), w2 = z.form(1, 1);
    CHECK(c.same_form(z.d(z.delta(0)), z.lm(z.delta(2) - z.delta(0), w1)));
    CHECK(c.same_form(z.d(z.delta(1)), z.lm(z.delta(0) - z.delta(1), w1)));
    CHECK(c.same_form(z.d(z.g()), z.lm(z.g(), w0 - w1 + w2)));
    CHECK(c.same_form(z.rm(w0, z.g()), scaled(z.lm(z.g(), w0), Scalar(-1))));
    CHECK(c.same_form(z.rm(w1, z.g()), z.lm(z.g(), w2)));
    CHECK(c.same_form(z.rm(w2, z.g()), z.lm(z.g(), w1)));
    for (int i = 0; i < 3; ++i) {
      CHECK(c.same_form(z.rm(w0, z.delta(i)), z.lm(z.delta(i), w0)));
      CHECK(c.same_form(z.rm(w1, z.delta(i)), z.lm(z.delta(i - 1), w1)));
      // forced by ω₁g = gω₂ and gδ_s = δ_{s²}g; the printed δ_{s^{i−1}} fails
      CHECK(c.same_form(z.rm(w2, z.delta(i)), z.lm(z.delta(i + 1), w2)));
      CHECK(!c.same_form(z.rm(w2, z.delta(i)), z.lm(z.delta(i - 1), w2)));
    }
  }
}

TEST_CASE("zero fibre calculus with universal base") {
  Z2Z3 z;
  const Bicross& b = z.b;
  Subspace q = fibre_q(b);
  CHECK(bicross_calculus(b, gamma_from_parameters(b.mp, {Scalar(2), Scalar(3)}), q, {}).calc.dim() == 0);
  for (auto [g1, g2] : {std::pair{Scalar(2), Scalar(Rat(1, 2))}, std::pair{Scalar::q(), Scalar::q(-1)}}) {
    BicrossCalculus r = bicross_calculus(b, gamma_from_parameters(b.mp, {g1, g2}), q, {});
    CHECK(r.calc.dim() == 2 * 6);
    CHECK(r.left_covariant);
    CHECK(r.qp_closed_form);
    const QuotientCalculus& c = r.calc.calc;
    Vec w1 = z.form(1, 0), w2 = z.form(1, 1);
    CHECK(c.same_form(z.d(z.delta(0)), z.lm(z.delta(2) - z.delta(0), w1) + scaled(z.lm(z.delta(1) - z.delta(0), w2), g1)));
    CHECK(c.same_form(z.d(z.delta(1)), z.lm(z.delta(0) - z.delta(1), w1) + scaled(z.lm(z.delta(2) - z.delta(1), w2), g1)));
    CHECK(c.same_form(z.d(z.g()), scaled(z.lm(z.g(), w2 - w1), Scalar(1) - g1)));
    CHECK(c.same_form(z.rm(w1, z.g()), z.lm(z.g(), w2)));
    CHECK(c.same_form(z.rm(w2, z.g()), z.lm(z.g(), w1)));
    for (int i = 0; i < 3; ++i) {
      CHECK(c.same_form(z.rm(w1, z.delta(i)), z.lm(z.delta(i - 1), w1)));
      CHECK(c.same_form(z.rm(w2, z.delta(i)), z.lm(z.delta(i + 1), w2)));
      CHECK(!c.same_form(z.rm(w2, z.delta(i)), z.lm(z.delta(i - 1), w2)));
    }
  }
  // the dichotomy is sharp
  std::vector<Scalar> vals{Scalar(1), Scalar(2), Scalar(-1), Scalar(Rat(1, 2)), Scalar(3)};
  for (const auto& g1 : vals)
    for (const auto& g2 : vals) {
      int dim = bicross_calculus(b, gamma_from_parameters(b.mp, {g1, g2}), q, {}).calc.dim();
      CHECK(dim == ((g1 * g2).is_one() ? 12 : 0));
    }
}
