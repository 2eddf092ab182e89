#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qbundle/bundle.hpp"

namespace qb {

// X = GΣ with sg = (s▷g)(s◁g).
struct MatchedPair {
  Group G, Sigma;
  std::vector<std::vector<int>> tri;  // tri[s][g] = s▷g in G
  std::vector<std::vector<int>> tle;  // tle[s][g] = s◁g in Σ

  void validate() const;  // unit compatibilities
  std::vector<int> isotropy(int g) const;  // I(g) = {s : s▷g = g}
};

// G and Σ given as element lists of X; throws unless X = GΣ uniquely.
MatchedPair matched_pair_from_factorization(const Group& x, const std::vector<int>& g, const std::vector<int>& sigma);
// both actions trivial
MatchedPair direct_product_pair(const Group& g, const Group& sigma);
// z2z3 (S₃ = Z₂Z₃) and z6z6 (S₃×S₃ = Z₆⋈Z₆)
MatchedPair named_matched_pair(const std::string& name);
std::vector<std::string> named_matched_pairs();

// P = C(Σ)⋈CG with basis δ_s⊗g at s*|G|+g.
struct Bicross {
  MatchedPair mp;
  FinHopf P, H, M;  // M = C(Σ) with its group Hopf structure
  LinMap pi;        // P -> H, δ_s⊗g -> δ_{s,e} g
  LinMap Phi;       // H -> P, g -> 1⊗g
  LinMap iota;      // M -> P, δ_s -> δ_s⊗e
  LinMap alpha;     // H -> H⊗M, g -> Σ_s s▷g ⊗ δ_s
  HomogeneousBundle hb;  // empty unless built with the bundle
  ThetaMaps th;          // for P
  bool has_bundle = false;

  int nS() const { return mp.Sigma.size(); }
  int nG() const { return mp.G.size(); }
  int idx(int s, int g) const { return s * nG() + g; }
  Vec elem(const Vec& m, const Vec& h) const { return kron(m, h); }  // ι(m)Φ(h)
  TrivialBundle trivial() const;
};

// Throws VerificationError when the Hopf axioms or the bundle checks fail.
// with_bundle = false skips the homogeneous bundle and θ (large |X|).
Bicross bicrossproduct(const MatchedPair& mp, bool with_bundle = true);
// ΔΦ(h) = Φ(h1^(1)) ⊗ h1^(2) Φ(h2)
bool coproduct_of_phi_holds(const Bicross& b);

// γ on Y ⊆ G×Σ, value[g][s]; zero off Y.
struct GammaData {
  std::vector<std::vector<Scalar>> value;
};
// (g, s) ∈ Y with g ≠ e and s ≠ e, in row-major order
std::vector<std::pair<int, int>> gamma_free_slots(const MatchedPair& mp);
GammaData gamma_from_parameters(const MatchedPair& mp, const std::vector<Scalar>& params);
LinMap gamma_map(const Bicross& b, const GammaData& g);  // H -> M

struct GammaSpace {
  int dimension = 0;
  std::vector<std::vector<int>> isotropy;  // I(g) for each g
};
GammaSpace gamma_space_dimension(const MatchedPair& mp);

// γ(1) = 1, ε∘γ = ε and γ(h1) h2^(2) ⊗ h2^(1) = γ(h2) ⊗ h1
bool gamma_condition_check(const Bicross& b, const LinMap& gamma);
// β_U(h) = Sγ(h)1 d_U γ(h)2 as an H -> M⊗M map (column e is zero)
LinMap beta_from_gamma(const Bicross& b, const LinMap& gamma);
// β_U(g)_{s,t} = γ(g, s⁻¹t) − 1
LinMap beta_from_gamma_finite(const Bicross& b, const GammaData& g);
bool beta_left_invariant(const Bicross& b, const LinMap& beta);
// β(π_ε h1) h2^(2) ⊗ h2^(1) − h1^(2) β(π_ε h2) ⊗ h1^(1) = −d_U h^(2) ⊗ h^(1);
// as_stated uses +d_U instead. Vacuous when ▷ is trivial.
bool beta_compatibility_holds(const Bicross& b, const LinMap& beta, bool as_stated = false);
// i(h) = γ(h1) ⊗ h2
LinMap splitting_from_gamma(const Bicross& b, const LinMap& gamma);

// span{γ(q1)(q2▷m)⊗q3h − ε(m)γ(q1h1)⊗q2h2}
Subspace q0_bicross(const Bicross& b, const LinMap& gamma, const Subspace& q);
// the two-span closed form for C(Σ)⋈CG
Subspace q0_bicross_finite(const Bicross& b, const GammaData& g, const Subspace& q);
// q0_finite + δ_e⊗Q + C(S)⊗CG
Subspace qp_bicross_finite(const Bicross& b, const GammaData& g, const Subspace& q, const std::vector<int>& S);

struct BicrossCalculus {
  BundleCalculus calc;
  Connection omega;
  UniversalConnection omegaU;
  Subspace QP;
  bool left_covariant = false;
  bool qp_closed_form = false;
  bool canonical_matches = false;  // ω_U from β_U equals the canonical connection of i
};

// Base calculus Q_M = C(S), S ⊆ Σ∖{e}; fibre calculus from Q ⊆ ker ε_H.
BicrossCalculus bicross_calculus(const Bicross& b, const GammaData& g, const Subspace& q, const std::vector<int>& S);

// θ(1⊗π_ε x): the left-invariant form of x ∈ P, as an element of P⊗P
Vec invariant_form(const Bicross& b, const Vec& x);
Vec d_universal(const Bicross& b, const Vec& u);
Vec left_mul(const Bicross& b, const Vec& p, const Vec& form);
Vec right_mul(const Bicross& b, const Vec& form, const Vec& p);

}  // namespace qb
