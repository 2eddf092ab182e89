#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "qbundle/io.hpp"

using namespace qb;

namespace {

// ---- independent oracle for H¹ of a nerve: oriented simplicial cohomology over Q via mpq ranks

int mpq_rank(std::vector<std::vector<mpq_class>> m) {
  int rank = 0, cols = m.empty() ? 0 : int(m[0].size());
  for (int c = 0; c < cols && rank < int(m.size()); ++c) {
    int p = rank;
    while (p < int(m.size()) && m[p][c] == 0) ++p;
    if (p == int(m.size())) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < int(m.size()); ++r)
      if (r != rank && m[r][c] != 0) {
        mpq_class f = m[r][c] / m[rank][c];
        for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

int simplicial_h1(const CoverDescription& c) {
  std::vector<Edge> e(c.pairs.begin(), c.pairs.end());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  std::map<Edge, int> ei;
  for (int k = 0; k < int(e.size()); ++k) ei[e[k]] = k;
  std::vector<std::vector<mpq_class>> d0(e.size(), std::vector<mpq_class>(c.sets));
  for (int k = 0; k < int(e.size()); ++k) {
    d0[k][e[k].second] += 1;
    d0[k][e[k].first] -= 1;
  }
  std::vector<std::vector<mpq_class>> d1;
  for (Face t : c.triples) {
    std::sort(t.begin(), t.end());
    std::vector<mpq_class> row(e.size());
    row[ei[{t[0], t[1]}]] += 1;
    row[ei[{t[1], t[2]}]] += 1;
    row[ei[{t[0], t[2]}]] -= 1;
    d1.push_back(row);
  }
  int r1 = d1.empty() || e.empty() ? 0 : mpq_rank(d1);
  int r0 = e.empty() ? 0 : mpq_rank(d0);
  return int(e.size()) - r1 - r0;
}

CoverDescription random_cover(std::mt19937_64& rng, int n) {
  CoverDescription c{n, {}, {}};
  std::set<Edge> p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) {
        c.pairs.push_back({i, j});
        p.insert({i, j});
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p.count({i, j}) && p.count({j, k}) && p.count({i, k}) && rng() % 2) c.triples.push_back({i, j, k});
  return c;
}

std::string cover_str(const CoverDescription& c) {
  std::ostringstream os;
  os << c.sets << " sets, " << c.pairs.size() << " pairs, " << c.triples.size() << " triples";
  return os.str();
}

// ---- criteria

struct Outcome {
  std::vector<Report> reports;
  std::string summary;
  std::string note;  // known printed-form defect, shown on failure
};

Outcome crit1(std::uint64_t) {
  Outcome o;
  for (const char* g : {"z2", "z3", "z6", "s3"}) {
    o.reports.push_back(hopf_report(std::string("C:") + g, builtin_hopf(std::string("C:") + g)));
    o.reports.push_back(hopf_report(std::string("CG:") + g, builtin_hopf(std::string("CG:") + g)));
  }
  o.reports.push_back(hopf_report("C(Z3)⋈CZ2", builtin_hopf("z2z3")));
  FinHopf big = builtin_hopf("z6z6");
  Report r = hopf_report("C(Z6)⋈CZ6", big);
  r.check("dimension 36", big.n == 36);
  o.reports.push_back(r);
  o.summary = "10 Hopf algebras, C(Z6)⋈CZ6 dimension " + std::to_string(big.n);
  return o;
}

Outcome crit2(std::uint64_t) {
  Outcome o;
  for (auto [a, b] : {std::pair{Scalar(2), Scalar(5)}, std::pair{Scalar(1), Scalar(1)}, std::pair{Scalar::q(), Scalar(3)}})
    o.reports.push_back(example_universal_fibre(a, b));
  o.summary = "QP = span{δ_s²}⊗CZ2, dimension 3, displayed relations";
  o.note = "printed ω2δ_{s^i} = δ_{s^{i−1}}ω2 fails; the calculus has δ_{s^{i+1}}, as forced by ω1g = gω2 and gδ_s = δ_{s²}g";
  return o;
}

Outcome crit3(std::uint64_t) {
  Outcome o;
  o.reports.push_back(example_zero_fibre(Scalar(2), Scalar(3)));
  o.reports.push_back(example_zero_fibre(Scalar(2), Scalar(Rat(1, 2))));
  o.reports.push_back(example_zero_fibre(Scalar::q(), Scalar::q(-1)));
  o.summary = "dimension 0 at (2,3), 2 at (2,1/2) and (q,q⁻¹), displayed relations";
  o.note = "printed ω2δ_{s^i} = δ_{s^{i−1}}ω2 fails; the calculus has δ_{s^{i+1}}";
  return o;
}

Outcome crit4(std::uint64_t) {
  Outcome o;
  Report a = gamma_space_report("z2z3");
  a.check("dimension 2", a.facts[0].second == "2");
  Report b = gamma_space_report("z6z6");
  b.check("dimension 13", b.facts[0].second == "13");
  std::map<std::string, std::string> iso(b.facts.begin() + 1, b.facts.end());
  std::string all = "{e,s,s^2,s^3,s^4,s^5}", half = "{e,s^2,s^4}";
  b.check("I(e) = I(g³) = Σ", iso["I(e)"] == all && iso["I(g^3)"] == all);
  b.check("I(g^{1,2,4,5}) = {e,s²,s⁴}",
          iso["I(g)"] == half && iso["I(g^2)"] == half && iso["I(g^4)"] == half && iso["I(g^5)"] == half);
  o.reports = {a, b};
  o.summary = "γ-space dims " + a.facts[0].second + " and " + b.facts[0].second + ", isotropy";
  return o;
}

Outcome crit5(std::uint64_t seed) {
  Outcome o;
  Report r;
  r.title = "Čech H¹ against simplicial cohomology";
  std::mt19937_64 rng(seed);
  int trials = 24;
  for (int t = 0; t < trials; ++t) {
    int n = 2 + int(rng() % 6);
    CoverDescription c = random_cover(rng, n);
    int got = h1(nerve_from_cover(c)).dim, want = simplicial_h1(c);
    r.check("random " + std::to_string(t + 1) + " (" + cover_str(c) + ")", got == want,
            "h1 " + std::to_string(got) + ", oracle " + std::to_string(want));
  }
  for (auto [name, want] : {std::pair{"circle-3", 1}, std::pair{"disk-3", 0}, std::pair{"tetrahedron", 0}}) {
    CoverDescription c = named_cover(name);
    int got = h1(nerve_from_cover(c)).dim;
    r.check(name, got == want && got == simplicial_h1(c), "h1 " + std::to_string(got));
  }
  o.reports = {r};
  o.summary = std::to_string(trials) + " random nerves (|Σ| ≤ 7) and 3 named covers";
  return o;
}

Outcome crit6(std::uint64_t) {
  Outcome o;
  Report r;
  r.title = "flat μ_k connections";
  DiscreteComplex circle = nerve_from_cover(named_cover("circle-3"));
  DiscreteComplex disk = nerve_from_cover(named_cover("disk-3"));
  for (int k : {2, 3, 4}) {
    ModuliResult m = moduli_zero_curvature(circle, k), d = moduli_zero_curvature(disk, k);
    r.check("circle-3 μ_" + std::to_string(k) + " classes = " + std::to_string(k), m.classes == k,
            std::to_string(m.classes));
    r.check("disk-3 μ_" + std::to_string(k) + " classes = 1", d.classes == 1, std::to_string(d.classes));
    r.check("biconditional μ_" + std::to_string(k), m.biconditional && d.biconditional);
  }
  o.reports = {r};
  o.summary = "circle-3 counts k for k = 2,3,4, disk-3 count 1, biconditional";
  return o;
}

Outcome crit7(std::uint64_t) {
  Outcome o;
  Matrix zero(3, std::vector<Scalar>(3)), one = zero;
  one[0][1] = Scalar(2);
  for (const Matrix* b1 : {&zero, &one})
    for (const Matrix* b2 : {&zero, &one}) {
      Report r = edges_example(*b1, *b2);
      r.fact("β¹", b1 == &zero ? "0" : "β¹_01 = 2");
      r.fact("β²", b2 == &zero ? "0" : "β²_01 = 2");
      o.reports.push_back(r);
    }
  o.summary = "edge rules over 4 β sweeps, displayed ω(δ_g)";
  o.note = "printed ω(δ_g) fails the vertical axiom (sign of its Maurer-Cartan terms, missing π_ε(δ_e) terms); the corrected form passes";
  return o;
}

Outcome crit8(std::uint64_t seed) {
  Outcome o;
  o.reports = {trivial_bundle_suite(seed, 12)};
  o.summary = "12 random trivial bundles";
  return o;
}

Outcome crit9(std::uint64_t) {
  Outcome o;
  const int D = 6, S = 2, Dmax = 8;
  Report ids = qmonopole_identities(D, S);
  Report parts;
  parts.title = "truncated SO_q(3) verification";
  auto all_ok = [&](std::initializer_list<std::string> prefixes) {
    bool ok = true;
    for (const auto& c : ids.checks)
      for (const auto& p : prefixes)
        if (c.name.rfind(p, 0) == 0) ok = ok && c.ok;
    return ok;
  };
  parts.check("(a) decomposition of δ³β + q⁴αβ − (1+q⁴)δβ", all_ok({"q0-decomposition", "q0-member"}));
  parts.check("(b) both Q_P decompositions", all_ok({"qp-decomposition"}));
  bool c_ok = true;
  for (const auto& c : ids.checks)
    if (c.name.find("-in-QP11") != std::string::npos) c_ok = c_ok && c.ok;
  parts.check("(c) Q0 generators in ⟨Q_P^{(1,1)}⟩", c_ok);
  std::vector<Report> dims;
  bool d_ok = true;
  for (const char* f : {"suq2-Q-1-1", "suq2-Q-1-2", "suq2-Q-2-2", "suq2-QP-1-1", "suq2-QP-1-1-0-0"}) {
    dims.push_back(qmonopole_dims(builtin_ideal_family(f), Dmax, S));
    d_ok = d_ok && dims.back().ok();
  }
  parts.check("(d) quotient dims 4, 8, 12, 5, 3 stabilized by D=8", d_ok);
  Report rel = qmonopole_relations(D, S);
  bool e_ok = rel.ok();
  std::string bad;
  for (const auto& f : rel.failures()) bad += (bad.empty() ? "" : ", ") + f;
  parts.check("(e) relations, exact forms and ω_D([Z−1])", e_ok, bad);
  o.reports = {parts, ids};
  for (auto& d : dims) o.reports.push_back(d);
  o.reports.push_back(rel);
  o.summary = "(a)-(d) at D=6, slack 2, dims to D=8; (e) relations";
  o.note = "printed ω1β = q²βω1 + αω4 and dα = αω1 − qβ(ω2 − q/(1−q²)ω4) do not hold in any calculus on SU_q(2) restricting "
           "to Q_P^{(1,1)}; ω1β = q²βω1 + αω3 and dα = αω1 + qβ(ω2 + q/(1−q²)ω4) do, with every other relation";
  return o;
}

std::string serialize(const std::vector<Report>& rs) {
  std::string s;
  for (const auto& r : rs) s += report_to_json(r);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::uint64_t seed = 20240601;
  std::string known, out;
  bool verbose = false;
  app.add_option("--seed", seed, "seed for randomized criteria");
  app.add_option("--known-fail", known, "comma-separated criteria expected to fail");
  app.add_option("--out", out, "write all reports as JSON");
  app.add_flag("--verbose", verbose, "print every report");
  CLI11_PARSE(app, argc, argv);

  std::set<int> expected;
  {
    std::stringstream ss(known);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) expected.insert(std::stoi(item));
  }

  struct Criterion {
    int id;
    std::function<Outcome(std::uint64_t)> run;
    double budget;  // seconds
  };
  std::vector<Criterion> cs{{1, crit1, 10},  {2, crit2, 5},   {3, crit3, 5},   {4, crit4, 5},  {5, crit5, 30},
                            {6, crit6, 60},  {7, crit7, 30},  {8, crit8, 60},  {9, crit9, 600}};

  std::set<int> failed;
  std::map<int, std::string> first_run;
  std::vector<Report> everything;
  std::vector<std::string> details;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run(seed);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = secs < c.budget;
    std::string bad;
    for (const auto& r : o.reports) {
      ok = ok && r.ok();
      for (const auto& f : r.failures()) bad += (bad.empty() ? "" : "; ") + r.title + ": " + f;
      everything.push_back(r);
    }
    first_run[c.id] = serialize(o.reports);
    if (!ok) failed.insert(c.id);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " | " << o.summary << " | " << std::fixed
              << std::setprecision(1) << secs << " s (budget " << c.budget << " s)";
    if (!ok && !o.note.empty()) std::cout << " | " << o.note;
    if (secs >= c.budget) std::cout << " | over time budget";
    std::cout << "\n" << std::flush;
    if (!bad.empty()) details.push_back("criterion " + std::to_string(c.id) + " failing checks: " + bad);
    if (verbose)
      for (const auto& r : o.reports) std::cout << report_to_text(r);
  }

  // 10: rerun everything with the same seed and compare the serialized reports
  {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> differ;
    for (const auto& c : cs)
      if (serialize(c.run(seed).reports) != first_run[c.id]) differ.push_back(c.id);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = differ.empty();
    if (!ok) failed.insert(10);
    std::string which;
    for (int d : differ) which += (which.empty() ? "" : ",") + std::to_string(d);
    std::cout << "criterion 10: " << (ok ? "PASS" : "FAIL") << " | criteria 1-9 rerun with seed " << seed
              << (ok ? " are byte-identical" : " differ in " + which) << " | " << std::fixed << std::setprecision(1)
              << secs << " s\n";
  }

  for (const auto& d : details) std::cout << d << "\n";
  if (!out.empty()) write_file_atomic(out, reports_to_json("acceptance", everything) + "\n");

  if (!app.count("--known-fail")) return failed.empty() ? 0 : 1;
  if (failed == expected) {
    std::cout << "failures match the documented known-failure list\n";
    return 0;
  }
  std::cout << "failures differ from the documented known-failure list\n";
  return 1;
}
