#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/bundle.hpp"

namespace qb {

using Edge = std::pair<int, int>;
using Face = std::array<int, 3>;

// Vertices Σ = {0..n-1}, edges E, and the local Ω² data F₀, F.
struct DiscreteComplex {
  std::vector<std::string> labels;
  std::vector<Edge> E;   // sorted, no loops
  std::vector<Edge> F0;  // sorted, both orientations in E
  std::vector<Face> F;   // sorted, all three edges in E

  int n() const { return int(labels.size()); }
  bool edge(int i, int j) const;
  int edge_index(int i, int j) const;  // -1 when absent
  void validate() const;               // throws on illegal F₀/F
  static DiscreteComplex make(int n, std::vector<Edge> e, std::vector<Edge> f0, std::vector<Face> f);
};

// Ω^n C(Σ) as tensors vanishing on adjacent diagonals.
std::vector<std::vector<int>> form_tuples(int points, int degree);
// d_U : Ω^{n-1} -> Ω^n, (d f)_{i0..in} = Σ_j (-1)^j f_{..î_j..}
LinMap universal_d(int points, int degree);
// (f·g)_{i0..i(n+m)} = f_{i0..in} g_{in..i(n+m)}
Vec form_product(int points, const Vec& f, int nf, const Vec& g, int ng);

// N_M = span{δ_i⊗δ_j : i ≠ j, (i,j) ∉ E}
Subspace edges_to_submodule(int points, const std::vector<Edge>& e);
// Inverse of the above; throws when N is not spanned by δ_i⊗δ_j.
std::vector<Edge> edges_from_submodule(int points, const Subspace& n);
QuotientCalculus omega1_from_edges(int points, const std::vector<Edge>& e);

// C(Σ) -d0-> C(E) -d1-> C(F₀)⊕C(F)
struct LocalComplex {
  DiscreteComplex K;
  LinMap d0, d1;
};
LocalComplex omega2_local(const DiscreteComplex& k);

struct H1Result {
  int dim = 0;
  std::vector<Vec> reps;  // closed 1-cochains spanning a complement of exact ones
};
H1Result h1(const DiscreteComplex& k);

struct CoverDescription {
  int sets = 0;
  std::vector<Edge> pairs;    // unordered, i < j
  std::vector<Face> triples;  // unordered, i < j < k
};
DiscreteComplex nerve_from_cover(const CoverDescription& c);
// circle-3, disk-3, tetrahedron, point
CoverDescription named_cover(const std::string& name);
std::vector<std::string> named_covers();

// A-valued cochains: one element of A per edge (degree 1) or per F₀ then F entry (degree 2).
using Cochain = std::vector<Vec>;
std::optional<Vec> algebra_inverse(const FinAlgebra& a, const Vec& x);
Cochain curvature(const DiscreteComplex& k, const FinAlgebra& a, const Cochain& beta);
Cochain gauge_transform(const DiscreteComplex& k, const FinAlgebra& a, const Cochain& beta,
                        const Cochain& gamma);

struct ModuliResult {
  long candidates = 0;
  long cocycles = 0;
  int classes = 0;
  std::vector<std::vector<int>> reps;  // exponents of ζ_k per edge
  bool biconditional = true;           // F(β)=0 iff g=1+β is a cocycle, on every candidate
};
// Brute force over g : E -> μ_k; throws when k^|E| exceeds the budget.
ModuliResult moduli_zero_curvature(const DiscreteComplex& k, int order, long budget = 1L << 22);

struct EdgeReport {
  bool ok = true;
  std::vector<std::pair<int, int>> pipeline, expected;  // edges of C(Σ×Z₃) as (i*3+a, j*3+b)
  std::string mismatch;
  bool literal_ok = false;       // displayed ω(δ_g) as printed passes the connection axioms
  bool connection_ok = false;    // sign-corrected display with the π_ε(δ_e) terms restored passes
  bool matches_pipeline = false; // and equals π_N∘ω_U on [δ_g]
  int calculus_dim = 0;
};
using Matrix = std::vector<std::vector<Scalar>>;
// Builds Ω¹(C(Σ×Z₃)) from the edge calculus on Σ, the standard calculus on C(Z₃) and β_U = (β¹, β²).
EdgeReport induced_bundle_edges_check(int points, const std::vector<Edge>& e, const Matrix& beta1,
                                      const Matrix& beta2);

}  // namespace qb
