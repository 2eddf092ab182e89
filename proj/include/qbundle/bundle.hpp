#pragma once

#include <stdexcept>
#include <string>

#include "qbundle/calculus.hpp"

namespace qb {

// A failed verification, naming the condition and carrying a witness.
struct VerificationError : std::runtime_error {
  std::string check;
  Vec witness;
  VerificationError(const std::string& check, Vec witness = {});
};

// P with the universal calculus over M = P^{coH}.
struct UniversalBundle {
  ComoduleAlgebra P;
  UniversalCalculus U;
  Subspace M;         // invariants in P
  Subspace hor;       // P(Ω¹M)P inside P⊗P
  LinMap chi;         // P⊗P -> P⊗H, u⊗v -> u v(1) ⊗ v(2)
  LinMap coact2;      // P⊗P -> P⊗P⊗H, tensor product coaction
  Subspace ker_eps;   // in H
  bool surjective = false;
  bool kernel_ok = false;

  int nP() const { return P.P.n; }
  int nH() const { return P.H.n; }
};

// Computes the data without deciding whether P is a bundle.
UniversalBundle comodule_setup(const ComoduleAlgebra& p);
// Throws VerificationError naming the failing condition.
UniversalBundle verify_universal_bundle(const ComoduleAlgebra& p);

// ω_U : H -> P⊗P, evaluated on π_ε(h) so that ω_U(1) = 0.
struct UniversalConnection {
  LinMap omega;
  std::string provenance;
};

// ω : ker ε/Q -> Ω¹(P) in quotient coordinates.
struct Connection {
  LinMap omega;
  std::string provenance;
};

AxiomReport check_universal_connection(const UniversalBundle& b, const UniversalConnection& w);

// Span of x with each outer (first-factor) slice in s: x = Σ e_o ⊗ x_o.
bool outer_slices_in(const Vec& x, int inner, const Subspace& s);
// x = Σ x_i ⊗ e_i with each x_i in s.
bool inner_slices_in(const Vec& x, int inner, const Subspace& s);
bool coaction_stable(const UniversalBundle& b, const Subspace& s);

Subspace n0_from_connection(const UniversalBundle& b, const Subspace& q, const UniversalConnection& w);

struct NhorChoice {
  enum Kind { maximal, minimal, given } kind = maximal;
  Subspace space;
  static NhorChoice max() { return {maximal, {}}; }
  static NhorChoice min() { return {minimal, {}}; }
  static NhorChoice of(Subspace s) { return {given, std::move(s)}; }
};

struct BundleCalculus {
  UniversalBundle B;
  Subspace Q;
  InvariantForms inv;
  Subspace N0, Nhor, N;
  QuotientCalculus calc;  // Ω¹(P) = Ω¹P/N
  Subspace hor_forms;     // Ω¹_hor in quotient coordinates
  LinMap chiN;            // quotient coords -> P⊗(ker ε/Q)
  AxiomReport report;

  int dim() const { return calc.dim(); }
  // representative in P⊗P of ω(h) for any h in H
  Vec omega_rep(const Connection& w, const Vec& h) const;
};

// Verifies the calculus invariants; does not throw.
AxiomReport check_bundle_calculus(const BundleCalculus& c);
AxiomReport check_connection(const BundleCalculus& c, const Connection& w);

// Both checks must pass, else VerificationError.
std::pair<BundleCalculus, Connection> build_calculus(const UniversalBundle& b, const Subspace& q,
                                                     const UniversalConnection& w,
                                                     const NhorChoice& nhor);

// P·(ι⊗ι)(N_M)·P for a subbimodule N_M of Ω¹M.
Subspace base_extension(const UniversalBundle& b, const LinMap& iota, const Subspace& nm);

// P = M ⋊ H through a trivialization Φ with ι : M -> P.
struct TrivialBundle {
  FinAlgebra M;
  UniversalBundle B;
  LinMap iota, Phi, PhiInv;

  const FinHopf& H() const { return B.P.H; }
};

// P = M⊗H, Δ_R = id⊗Δ, Φ(h) = 1⊗h
TrivialBundle trivial_bundle(const FinAlgebra& m, const FinHopf& h);
TrivialBundle trivial_bundle(const ComoduleAlgebra& p, const FinAlgebra& m, const LinMap& iota,
                             const LinMap& phi);

// β_U : H -> M⊗M evaluated on π_ε(h), with image in Ω¹M.
UniversalConnection connection_from_beta_universal(const TrivialBundle& t, const LinMap& betaU);
// (ι⊗ι)∘β_U as a map H -> P⊗P
LinMap lift_beta(const TrivialBundle& t, const LinMap& betaU);
bool phi_is_algebra_map(const TrivialBundle& t);
// β : H -> P⊗P representatives of Ω¹_P(M), evaluated on π_ε(h).
bool beta_condition_check(const TrivialBundle& t, const BundleCalculus& c, const LinMap& beta);

// P a Hopf algebra with a Hopf surjection π : P -> H.
struct HomogeneousBundle {
  FinHopf PH;
  LinMap pi;
  UniversalBundle B;
};

HomogeneousBundle homogeneous_bundle(const FinHopf& p, const FinHopf& h, const LinMap& pi);
// i : H -> P evaluated on π_ε(h)
UniversalConnection canonical_connection(const HomogeneousBundle& hb, const LinMap& i);
Subspace homogeneous_q0(const HomogeneousBundle& hb, const LinMap& i, const Subspace& q);
// Ω¹(P) from a right ideal Q_P ⊆ ker ε_P with Q = π(Q_P).
BundleCalculus homogeneous_calculus(const HomogeneousBundle& hb, const Subspace& qp);

// ī : ker ε_H/Q -> ker ε_P/Q_P in InvariantForms coordinates.
struct SplittingData {
  InvariantForms invP;
  LinMap theta_N;  // quotient coords -> P⊗(ker ε_P/Q_P)
};
SplittingData splitting_data(const HomogeneousBundle& hb, const BundleCalculus& c, const Subspace& qp);
bool left_invariant(const HomogeneousBundle& hb, const BundleCalculus& c, const Connection& w);
LinMap connection_to_splitting(const HomogeneousBundle& hb, const BundleCalculus& c,
                               const Subspace& qp, const Connection& w);
Connection splitting_to_connection(const HomogeneousBundle& hb, const BundleCalculus& c,
                                   const Subspace& qp, const LinMap& ibar);
// π̄∘ī = id and Ād∘ī = (ī⊗id)∘Ad
bool splitting_valid(const HomogeneousBundle& hb, const BundleCalculus& c, const Subspace& qp,
                     const LinMap& ibar);

}  // namespace qb
