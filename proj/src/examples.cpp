#include "qbundle/examples.hpp"

#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qb {

void Report::absorb(const AxiomReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    check(prefix + c.name, c.ok, c.ok ? "" : "witness " + std::to_string(c.witness));
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.ok) out.push_back(c.name);
  return out;
}

Catalog builtins() {
  Catalog c;
  for (int n = 1; n <= 12; ++n) c.groups.push_back("z" + std::to_string(n));
  c.groups.push_back("s3");
  c.groups.push_back("s3xs3");
  for (const auto& g : c.groups) {
    c.hopf.push_back("C:" + g);
    c.hopf.push_back("CG:" + g);
  }
  c.matched_pairs = named_matched_pairs();
  for (const auto& m : c.matched_pairs) c.hopf.push_back(m);
  c.covers = named_covers();
  c.ideal_families = {"suq2-Q-1-1", "suq2-Q-1-2", "suq2-Q-2-2", "suq2-QP-1-1", "suq2-QP-1-1-0-0"};
  return c;
}

Group builtin_group(const std::string& name) {
  if (name == "s3") return Group::symmetric3();
  if (name == "s3xs3") return Group::product(Group::symmetric3(), Group::symmetric3());
  static const std::regex cyc("z([0-9]+)");
  std::smatch m;
  if (std::regex_match(name, m, cyc)) {
    int n = std::stoi(m[1]);
    if (n >= 1 && n <= 12) return Group::cyclic(n);
  }
  throw std::invalid_argument("unknown builtin group '" + name + "'");
}

FinHopf builtin_hopf(const std::string& name) {
  if (name.rfind("C:", 0) == 0) return function_algebra(builtin_group(name.substr(2)));
  if (name.rfind("CG:", 0) == 0) return group_algebra(builtin_group(name.substr(3)));
  for (const auto& m : named_matched_pairs())
    if (m == name) return bicrossproduct(named_matched_pair(m), false).P;
  throw std::invalid_argument("unknown builtin Hopf algebra '" + name + "'");
}

IdealFamily builtin_ideal_family(const std::string& name) {
  static const std::regex re("suq2-(Q|QP)-([0-9]+)-([0-9]+)(?:-([0-9]+)-([0-9]+))?");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw std::invalid_argument("unknown ideal family '" + name + "'");
  IdealFamily f;
  f.k = std::stoi(m[2]);
  f.l = std::stoi(m[3]);
  f.r = m[4].matched ? std::stoi(m[4]) : f.k;
  f.s = m[5].matched ? std::stoi(m[5]) : f.l;
  f.fibre_ideal = m[1] == "QP";
  f.ambient = f.fibre_ideal ? Ambient::ker_eps : Ambient::ker_pi;
  f.expected = 4 * (f.k + f.l - 1) - (f.k - f.r) - (f.l - f.s) + (f.fibre_ideal ? 1 : 0);
  return f;
}

Report hopf_report(const std::string& name, const FinHopf& h) {
  Report r;
  r.title = "hopf " + name;
  r.fact("dimension", h.n);
  r.absorb(check_hopf_axioms(h));
  return r;
}

namespace {

// C(Z3)⋈CZ2 elements and forms
struct Z3Z2 {
  Bicross b = bicrossproduct(named_matched_pair("z2z3"));
  Vec delta(int i) const { return b.elem(b.M.basis(((i % 3) + 3) % 3), b.H.unit); }
  Vec g() const { return b.Phi.column_dense(1); }
  Vec d(const Vec& u) const { return d_universal(b, u); }
  Vec form(int s, int h) const { return invariant_form(b, b.P.basis(b.idx(s, h))); }
  Vec omega0() const { return form(0, 1) - form(0, 0); }
  Vec lm(const Vec& p, const Vec& f) const { return left_mul(b, p, f); }
  Vec rm(const Vec& f, const Vec& p) const { return right_mul(b, f, p); }
  Subspace zero_fibre() const {
    Subspace q(2);
    q.add(b.H.basis(1) - b.H.basis(0));
    return q;
  }
};

std::string gamma_fact(const Scalar& g1, const Scalar& g2) { return "(" + g1.str() + ", " + g2.str() + ")"; }

// ω_iδ_{s^j} = δ_{s^{j+shift}}ω_i for all j
bool delta_rule(const Z3Z2& z, const QuotientCalculus& c, const Vec& w, int shift) {
  for (int i = 0; i < 3; ++i)
    if (!c.same_form(z.rm(w, z.delta(i)), z.lm(z.delta(i + shift), w))) return false;
  return true;
}

}  // namespace

Report example_universal_fibre(const Scalar& g1, const Scalar& g2) {
  Report r;
  r.title = "C(Z3)⋈CZ2, universal fibre calculus, S = {s²}";
  r.fact("gamma", gamma_fact(g1, g2));
  Z3Z2 z;
  const Bicross& b = z.b;
  BicrossCalculus bc = bicross_calculus(b, gamma_from_parameters(b.mp, {g1, g2}), Subspace(2), {2});
  int n = b.P.n;
  r.fact("calculus-dimension", bc.calc.dim() / n);
  r.check("dimension-3", bc.calc.dim() == 3 * n);
  Subspace qp(n);
  qp.add(b.P.basis(b.idx(2, 0)));
  qp.add(b.P.basis(b.idx(2, 1)));
  r.check("QP = span{δ_s²}⊗CZ2", bc.QP == qp);
  r.absorb(bc.calc.report, "calculus ");
  r.check("left-covariant", bc.left_covariant);
  r.check("QP closed form", bc.qp_closed_form);
  const QuotientCalculus& c = bc.calc.calc;
  Vec w0 = z.omega0(), w1 = z.form(1, 0), w2 = z.form(1, 1);
  r.check("dδ_e = (δ_s² − δ_e)ω1", c.same_form(z.d(z.delta(0)), z.lm(z.delta(2) - z.delta(0), w1)));
  r.check("dδ_s = (δ_e − δ_s)ω1", c.same_form(z.d(z.delta(1)), z.lm(z.delta(0) - z.delta(1), w1)));
  r.check("dg = g(ω0 − ω1 + ω2)", c.same_form(z.d(z.g()), z.lm(z.g(), w0 - w1 + w2)));
  r.check("ω0g = −gω0", c.same_form(z.rm(w0, z.g()), scaled(z.lm(z.g(), w0), Scalar(-1))));
  r.check("ω1g = gω2", c.same_form(z.rm(w1, z.g()), z.lm(z.g(), w2)));
  r.check("ω2g = gω1", c.same_form(z.rm(w2, z.g()), z.lm(z.g(), w1)));
  r.check("ω0δ_{s^i} = δ_{s^i}ω0", delta_rule(z, c, w0, 0));
  r.check("ω1δ_{s^i} = δ_{s^{i−1}}ω1", delta_rule(z, c, w1, -1));
  bool derived = delta_rule(z, c, w2, 1);
  r.check("ω2δ_{s^i} = δ_{s^{i−1}}ω2", delta_rule(z, c, w2, -1),
          derived ? "the calculus has ω2δ_{s^i} = δ_{s^{i+1}}ω2, forced by ω1g = gω2 and gδ_s = δ_{s²}g" : "");
  r.fact("ω2δ_{s^i}", derived ? "δ_{s^{i+1}}ω2" : "neither displayed nor derived form");
  LinMap beta = beta_from_gamma(b, gamma_map(b, gamma_from_parameters(b.mp, {g1, g2})));
  std::ostringstream os;
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) os << (t ? " " : "") << beta.column_dense(1)[s * 3 + t].str();
    os << (s < 2 ? "; " : "");
  }
  r.fact("β_U(g)", os.str());
  return r;
}

Report example_zero_fibre(const Scalar& g1, const Scalar& g2) {
  Report r;
  r.title = "C(Z3)⋈CZ2, zero fibre calculus, universal base";
  r.fact("gamma", gamma_fact(g1, g2));
  Z3Z2 z;
  const Bicross& b = z.b;
  BicrossCalculus bc = bicross_calculus(b, gamma_from_parameters(b.mp, {g1, g2}), z.zero_fibre(), {});
  int n = b.P.n, dim = bc.calc.dim() / n;
  bool special = (g1 * g2).is_one();
  r.fact("calculus-dimension", dim);
  r.check(special ? "dimension-2 (γ1γ2 = 1)" : "dimension-0 (γ1γ2 ≠ 1)", dim == (special ? 2 : 0));
  r.check("left-covariant", bc.left_covariant);
  r.check("QP closed form", bc.qp_closed_form);
  if (!special) return r;
  const QuotientCalculus& c = bc.calc.calc;
  Vec w1 = z.form(1, 0), w2 = z.form(1, 1);
  r.check("dδ_e = (δ_s² − δ_e)ω1 + γ1(δ_s − δ_e)ω2",
          c.same_form(z.d(z.delta(0)), z.lm(z.delta(2) - z.delta(0), w1) + scaled(z.lm(z.delta(1) - z.delta(0), w2), g1)));
  r.check("dδ_s = (δ_e − δ_s)ω1 + γ1(δ_s² − δ_s)ω2",
          c.same_form(z.d(z.delta(1)), z.lm(z.delta(0) - z.delta(1), w1) + scaled(z.lm(z.delta(2) - z.delta(1), w2), g1)));
  r.check("dg = (1 − γ1)g(ω2 − ω1)", c.same_form(z.d(z.g()), scaled(z.lm(z.g(), w2 - w1), Scalar(1) - g1)));
  r.check("ω1g = gω2", c.same_form(z.rm(w1, z.g()), z.lm(z.g(), w2)));
  r.check("ω2g = gω1", c.same_form(z.rm(w2, z.g()), z.lm(z.g(), w1)));
  r.check("ω1δ_{s^i} = δ_{s^{i−1}}ω1", delta_rule(z, c, w1, -1));
  bool derived = delta_rule(z, c, w2, 1);
  r.check("ω2δ_{s^i} = δ_{s^{i−1}}ω2", delta_rule(z, c, w2, -1),
          derived ? "the calculus has ω2δ_{s^i} = δ_{s^{i+1}}ω2, forced by ω1g = gω2 and gδ_s = δ_{s²}g" : "");
  r.fact("ω2δ_{s^i}", derived ? "δ_{s^{i+1}}ω2" : "neither displayed nor derived form");
  return r;
}

Report gamma_space_report(const std::string& pair) {
  MatchedPair mp = named_matched_pair(pair);
  GammaSpace g = gamma_space_dimension(mp);
  Report r;
  r.title = "γ-space of " + pair;
  r.fact("dimension", g.dimension);
  for (int x = 0; x < mp.G.size(); ++x) {
    std::string s = "{";
    for (size_t k = 0; k < g.isotropy[x].size(); ++k) s += (k ? "," : "") + mp.Sigma.names[g.isotropy[x][k]];
    r.fact("I(" + mp.G.names[x] + ")", s + "}");
  }
  return r;
}

Report example_z6z6() {
  MatchedPair mp = named_matched_pair("z6z6");
  Bicross b = bicrossproduct(mp, false);
  Report r = hopf_report("z6z6", b.P);
  r.title = "C(Z6)⋈CZ6";
  r.check("dimension-36", b.P.n == 36);
  Report g = gamma_space_report("z6z6");
  for (auto& f : g.facts) r.facts.push_back({"gamma " + f.first, f.second});
  r.check("gamma-space-13", g.facts.front().second == "13");
  return r;
}

Report edges_example(const Matrix& beta1, const Matrix& beta2) {
  std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  EdgeReport e = induced_bundle_edges_check(3, tri, beta1, beta2);
  Report r;
  r.title = "Σ×Z3 over the symmetric triangle";
  r.fact("calculus-dimension", e.calculus_dim);
  r.fact("edges", long(e.pipeline.size()));
  r.check("edge rules", e.ok, e.mismatch);
  r.check("displayed ω(δ_g) is a connection", e.literal_ok,
          e.literal_ok ? "" : "fails the vertical axiom as printed");
  r.check("corrected ω(δ_g) is a connection equal to π_N∘ω_U", e.connection_ok && e.matches_pipeline);
  return r;
}

namespace {

LinMap random_beta(std::mt19937_64& rng, const FinAlgebra& m, int nh) {
  Subspace om = kernel(m.mu);
  std::uniform_int_distribution<int> d(-2, 2);
  LinMap b(m.n * m.n, nh);
  for (int j = 0; j < nh; ++j) {
    Vec col(m.n * m.n);
    for (const auto& r : om.rows()) axpy(col, Scalar(d(rng)), r);
    b.set_column(j, col);
  }
  return b;
}

}  // namespace

Report trivial_bundle_suite(std::uint64_t seed, int count) {
  Report r;
  r.title = "calculus pipeline on random trivial bundles";
  r.fact("seed", std::to_string(seed));
  std::mt19937_64 rng(seed);
  const char* fibres[] = {"C:z2", "C:z3", "CG:z3"};
  for (int t = 0; t < count; ++t) {
    int pts = 1 + int(rng() % 4);
    std::string hname = fibres[rng() % 3];
    FinHopf h = builtin_hopf(hname);
    std::vector<std::string> labels;
    for (int i = 0; i < pts; ++i) labels.push_back(std::to_string(i));
    FinAlgebra m = FinAlgebra::functions(labels);
    // Ad-stable right ideals: spans of δ_g, g ≠ e, in C(Z_n); {0} or ker ε in QZ3
    Subspace q(h.n);
    if (hname[0] == 'C' && hname[1] == ':') {
      for (int g = 1; g < h.n; ++g)
        if (rng() % 2) q.add(unit(h.n, g));
    } else if (rng() % 2) {
      q = counit_kernel(h);
    }
    bool maximal = rng() % 2;
    LinMap beta = random_beta(rng, m, h.n);
    std::string tag = "bundle " + std::to_string(t + 1);
    r.fact(tag, "|Σ| = " + std::to_string(pts) + ", H = " + hname + ", dim Q " + std::to_string(q.dim()) + ", N_hor " +
                    (maximal ? "maximal" : "minimal"));
    try {
      TrivialBundle tb = trivial_bundle(m, h);
      UniversalConnection w = connection_from_beta_universal(tb, beta);
      auto [c, omega] = build_calculus(tb.B, q, w, maximal ? NhorChoice::max() : NhorChoice::min());
      Report sub;
      sub.absorb(c.report);
      sub.check("N0-in-N", c.N.contains(c.N0));
      sub.absorb(check_connection(c, omega));
      std::string bad;
      for (const auto& f : sub.failures()) bad += (bad.empty() ? "" : ", ") + f;
      r.check(tag, sub.ok(), bad);
    } catch (const VerificationError& e) {
      r.check(tag, false, e.check);
    }
  }
  return r;
}

Report qmonopole_identities(int degree, int slack) {
  Report r;
  r.title = "SO_q(3) ideal identities";
  r.fact("degree", degree);
  r.fact("slack", slack);
  for (const auto& x : verify_identities(degree, slack)) r.check(x.name, x.ok, x.ok ? "" : x.detail);
  return r;
}

Report qmonopole_relations(int degree, int slack) {
  Report r;
  r.title = "relations of ω0…ω4 in a calculus on SU_q(2) restricting to Q_P^{(1,1)}";
  r.fact("degree", degree);
  r.fact("slack", slack);
  auto printed = relation_checks(degree, slack, false);
  auto corrected = relation_checks(degree, slack, true);
  for (const auto& x : printed) r.check(x.name, x.ok, x.detail);
  for (const auto& x : corrected)
    if (x.name == "omega1-beta" || x.name == "d-alpha" || x.name == "jointly")
      r.fact("corrected " + x.name, std::string(x.ok ? "holds" : "fails") + ", " + x.detail);
  r.fact("corrected forms", "ω1β = q²βω1 + αω3; dα = αω1 + qβ(ω2 + q/(1−q²)ω4)");
  return r;
}

Report qmonopole_dims(const IdealFamily& f, int degree, int slack) {
  Report r;
  std::string fam = std::to_string(f.k) + "," + std::to_string(f.l) + ";" + std::to_string(f.r) + "," + std::to_string(f.s);
  r.title = (f.fibre_ideal ? "ker ε / Q_P^{(" : "ker π / Q^{(") + fam + ")}";
  auto gens = q_family_generators(f.k, f.l, f.r, f.s);
  StabilizedDim s = truncated_quotient_dims(f.ambient, gens, degree, slack, f.fibre_ideal);
  for (const auto& p : s.points)
    r.fact("D=" + std::to_string(p.degree),
           std::to_string(p.ambient) + " − " + std::to_string(p.ideal) + " = " + std::to_string(p.quotient));
  r.fact("stabilized", s.stabilized ? std::to_string(s.value) + " at D=" + std::to_string(s.at_degree) : "no");
  r.check("stabilized by D=" + std::to_string(degree), s.stabilized);
  if (f.expected >= 0) r.check("equals " + std::to_string(f.expected), s.stabilized && s.value == f.expected);
  return r;
}

Scalar parse_scalar(const std::string& text) {
  static const std::regex cyc("z([0-9]+)");
  std::smatch m;
  if (std::regex_search(text, m, cyc)) return Scalar::parse(text, Field::cyclo(std::stoi(m[1])));
  if (text.find('q') != std::string::npos) return Scalar::parse(text, Field::Qq());
  return Scalar::parse(text, Field::Q());
}

}  // namespace qb
