#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/bicross.hpp"
#include "qbundle/discrete.hpp"
#include "qbundle/qpoly.hpp"

namespace qb {

// Worked examples and property suites shared by the CLI, the acceptance
// runner and the Python module.
struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<Check> checks;

  void fact(const std::string& name, const std::string& value) { facts.emplace_back(name, value); }
  void fact(const std::string& name, long value) { facts.emplace_back(name, std::to_string(value)); }
  void check(const std::string& name, bool ok, const std::string& detail = "") { checks.push_back({name, ok, detail}); }
  void absorb(const AxiomReport& r, const std::string& prefix = "");
  bool ok() const;
  std::vector<std::string> failures() const;
};

// Builtin catalog: groups z1…z12, s3, s3xs3; Hopf algebras C(G) as "C:<group>"
// and CG as "CG:<group>"; matched pairs; covers; SO_q(3) ideal families.
struct Catalog {
  std::vector<std::string> groups, hopf, matched_pairs, covers, ideal_families;
};
Catalog builtins();
Group builtin_group(const std::string& name);
FinHopf builtin_hopf(const std::string& name);  // "C:z3", "CG:s3", or a matched pair name
// SO_q(3) ideal family by catalog name, e.g. suq2-QP-1-1, suq2-Q-1-2, suq2-QP-1-1-0-0
struct IdealFamily {
  Ambient ambient = Ambient::ker_pi;
  int k = 1, l = 1, r = 1, s = 1;
  bool fibre_ideal = false;  // Q_P adds i(Q)SO_q(3)
  int expected = -1;         // the stated quotient dimension
};
IdealFamily builtin_ideal_family(const std::string& name);

Report hopf_report(const std::string& name, const FinHopf& h);

// C(Z3)⋈CZ2 with the universal fibre calculus and S = {s²}.
Report example_universal_fibre(const Scalar& g1, const Scalar& g2);
// C(Z3)⋈CZ2 with the zero fibre calculus and universal base.
Report example_zero_fibre(const Scalar& g1, const Scalar& g2);
// C(Z6)⋈CZ6: dimension, axioms, γ-space and isotropy.
Report example_z6z6();
Report gamma_space_report(const std::string& pair);

// Σ×Z3 over the symmetric triangle with β¹, β² (an entry value of 0 means absent).
Report edges_example(const Matrix& beta1, const Matrix& beta2);

// Random trivial bundles M⊗H with random Ad-stable Q and β_U through the
// calculus pipeline; each bundle contributes its checks.
Report trivial_bundle_suite(std::uint64_t seed, int count);

Report qmonopole_identities(int degree, int slack);
Report qmonopole_relations(int degree, int slack);
Report qmonopole_dims(const IdealFamily& f, int degree, int slack);

// "2", "1/2", "q", "q^-1", "-3q/(q^2+1)": rational unless q appears
Scalar parse_scalar(const std::string& text);

}  // namespace qb
