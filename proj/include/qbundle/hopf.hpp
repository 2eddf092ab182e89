#pragma once

#include <string>
#include <vector>

#include "qbundle/linalg.hpp"

namespace qb {

// Finite group by Cayley table.
struct Group {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  int e = 0;

  int size() const { return int(names.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;
  int pow(int a, int k) const;
  int index_of(const std::string& name) const;
  void validate() const;  // throws on a non-group table

  static Group cyclic(int n, const std::string& gen = "g");
  static Group symmetric3();
  static Group product(const Group& a, const Group& b);
  // closure of the given permutations of {0..m-1}
  static Group from_permutations(const std::vector<std::vector<int>>& gens,
                                 const std::vector<std::string>& gen_names);
};

struct FinAlgebra {
  int n = 0;
  std::vector<std::string> labels;
  LinMap mu;  // n x n^2, column i*n+j is e_i e_j
  Vec unit;

  Vec basis(int i) const { return qb::unit(n, i); }
  Vec one() const { return unit; }
  Vec mul(const Vec& a, const Vec& b) const;
  LinMap left(const Vec& a) const;   // x -> a x
  LinMap right(const Vec& a) const;  // x -> x a
  // left/right multiplication by every basis element
  std::vector<LinMap> left_ops() const;
  std::vector<LinMap> right_ops() const;
  std::vector<LinMap> bimodule_ops_on_tensor() const;  // on A⊗A: a·(x⊗y), (x⊗y)·a

  static FinAlgebra from_table(int n, std::vector<std::string> labels,
                               const std::vector<std::vector<Vec>>& prod, Vec unit);
  static FinAlgebra functions(const std::vector<std::string>& points);  // C(Σ)
  static FinAlgebra ground();                                           // C
};

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b);

struct FinHopf : FinAlgebra {
  LinMap delta;  // n^2 x n
  Vec eps;       // counit as covector
  LinMap S;

  Vec coproduct(const Vec& h) const { return delta.apply(h); }
  Scalar counit(const Vec& h) const;
  LinMap counit_map() const;  // 1 x n
};

struct AxiomCheck {
  std::string name;
  bool ok = true;
  int witness = -1;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::string str() const;
};

FinHopf function_algebra(const Group& g);
FinHopf group_algebra(const Group& g);
FinHopf tensor_hopf(const FinHopf& a, const FinHopf& b);
AxiomReport check_algebra_axioms(const FinAlgebra& a);
AxiomReport check_hopf_axioms(const FinHopf& h);

// Product of tensors x, y in A⊗B (row-major coordinates).
Vec tensor_mul(const FinAlgebra& a, const FinAlgebra& b, const Vec& x, const Vec& y);
// Ad(h) = h(2) ⊗ S(h(1)) h(3)
LinMap adjoint_coaction(const FinHopf& h);
// (Δ⊗id)∘Δ as an n^3 x n map
LinMap double_coproduct(const FinHopf& h);
// f: C -> A with C a Hopf algebra used as coalgebra; throws when singular
LinMap convolution_inverse(const FinHopf& c, const FinAlgebra& a, const LinMap& f);
LinMap convolution(const FinHopf& c, const FinAlgebra& a, const LinMap& f, const LinMap& g);
Vec left_integral(const FinHopf& h);
Subspace counit_kernel(const FinHopf& h);

struct ComoduleAlgebra {
  FinAlgebra P;
  FinHopf H;
  LinMap coact;  // nP*nH x nP

  AxiomReport check() const;
};

Subspace invariant_subalgebra(const ComoduleAlgebra& p);
// P = H with Δ_R = Δ
ComoduleAlgebra regular_comodule(const FinHopf& h);
// P = M⊗H with Δ_R = id⊗Δ
ComoduleAlgebra tensor_bundle(const FinAlgebra& m, const FinHopf& h);
// j = η_P∘λ for a left integral λ on H
LinMap integral_intertwiner(const ComoduleAlgebra& p);

}  // namespace qb
