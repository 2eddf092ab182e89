#pragma once

#include "qbundle/hopf.hpp"

namespace qb {

struct UniversalCalculus {
  FinAlgebra A;
  Subspace omega1;           // ker μ inside A⊗A
  LinMap dU;                 // A -> A⊗A, u -> 1⊗u - u⊗1
  std::vector<LinMap> left;  // a·(x⊗y) for basis a
  std::vector<LinMap> right; // (x⊗y)·a for basis a

  std::vector<LinMap> bimodule_ops() const;
};

UniversalCalculus universal_calculus(const FinAlgebra& a);

// Ω¹(A) = Ω¹A / N, realized through the quotient of A⊗A by N.
struct QuotientCalculus {
  UniversalCalculus U;
  Subspace N;
  Quotient q;   // A⊗A -> (A⊗A)/N
  Subspace forms;  // image of Ω¹A in quotient coordinates
  LinMap d;     // A -> quotient coordinates

  int dim() const { return forms.dim(); }
  Vec project(const Vec& x) const { return q.projection.apply(x); }
  // x ≡ y in Ω¹(A) for x, y in A⊗A
  bool same_form(const Vec& x, const Vec& y) const { return N.contains(x - y); }
};

// Fails when N is not a subbimodule of Ω¹A.
QuotientCalculus quotient_calculus(const UniversalCalculus& u, const Subspace& n);
bool is_subbimodule(const UniversalCalculus& u, const Subspace& n);
bool leibniz_holds(const QuotientCalculus& c);
bool spans_forms(const QuotientCalculus& c);  // span{u dv} = Ω¹(A)

struct ThetaMaps {
  LinMap theta, theta_inv;
};
// θ(g⊗h) = g S h(1) ⊗ h(2), θ⁻¹(u⊗v) = u v(1) ⊗ v(2)
ThetaMaps theta_map(const FinHopf& h);

// ker ε with basis b_k = e_k - ε(e_k)/ε(e_k0) e_k0 (k ≠ k0) and the quotient by Q.
struct InvariantForms {
  int k0 = 0;
  std::vector<int> idx;   // basis indices k ≠ k0
  LinMap basis;           // C^{n-1} -> H
  Subspace Q;             // Q in ker-ε coordinates
  Quotient quo;           // ker ε / Q
  int dim() const { return quo.dim; }
  Vec coords(const Vec& h) const;           // ker-ε coordinates of h
  Vec project(const Vec& h) const;          // [h] in ker ε / Q
  Vec lift(const Vec& form) const;          // representative in H
};

InvariantForms invariant_forms(const FinHopf& h, const Subspace& q);

struct LeftCovariantCalculus {
  FinHopf H;
  Subspace Q;
  ThetaMaps th;
  QuotientCalculus calc;
  InvariantForms inv;
};

bool is_right_ideal(const FinAlgebra& a, const Subspace& q);
LeftCovariantCalculus calculus_from_ideal(const FinHopf& h, const Subspace& q);
bool bicovariance_check(const FinHopf& h, const Subspace& q);
// Δ_L on A⊗A for A = H: u⊗v -> u1 v1 ⊗ u2 ⊗ v2
LinMap left_coaction_on_tensor(const FinHopf& h);
bool left_covariant(const LeftCovariantCalculus& c);
// (ε⊗id)(N), which recovers Q
Subspace ideal_from_submodule(const FinHopf& h, const Subspace& n);
// ω([h]) = π_N θ(1⊗h) as a map from ker ε/Q to quotient coordinates
LinMap maurer_cartan(const LeftCovariantCalculus& c);

}  // namespace qb
