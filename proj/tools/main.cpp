#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbundle/io.hpp"

using namespace qb;
using json = nlohmann::json;

namespace {

struct Options {
  int degree = 6;
  int slack = 2;
  std::string nhor = "maximal";
  std::uint64_t seed = 20240601;
  std::string out;
  bool json_stdout = false;
};

// reports go to stdout as text (or JSON) and, with --out, to a JSON file
int emit(const Options& o, const std::string& command, const std::vector<Report>& rs) {
  std::string doc = reports_to_json(command, rs);
  if (o.json_stdout) {
    std::cout << doc << "\n";
  } else {
    for (const auto& r : rs) std::cout << report_to_text(r);
  }
  if (!o.out.empty()) {
    std::filesystem::path p(o.out);
    const char* scratch = std::getenv("QBUNDLE_SCRATCH");
    if (p.is_relative() && scratch && *scratch) p = std::filesystem::path(scratch) / p;
    write_file_atomic(p.string(), doc + "\n");
  }
  for (const auto& r : rs)
    if (!r.ok()) return 1;
  return 0;
}

bool is_file(const std::string& s) { return std::filesystem::is_regular_file(s); }

FinHopf load_hopf(const std::string& arg, const std::string& algebra) {
  if (is_file(arg)) {
    Group g = group_from_json(read_file(arg));
    return algebra == "group" ? group_algebra(g) : function_algebra(g);
  }
  if (arg.find(':') != std::string::npos) return builtin_hopf(arg);
  for (const auto& m : named_matched_pairs())
    if (arg == m) return builtin_hopf(arg);
  return builtin_hopf((algebra == "group" ? "CG:" : "C:") + arg);
}

CoverDescription load_cover(const std::string& arg) {
  return is_file(arg) ? cover_from_json(read_file(arg)) : named_cover(arg);
}

Vec parse_vector(const json& v, int n, const std::string& where) {
  if (!v.is_array() || int(v.size()) != n)
    throw std::invalid_argument(where + ": expected " + std::to_string(n) + " entries");
  Vec out;
  for (const auto& x : v) out.push_back(parse_scalar(x.is_string() ? x.get<std::string>() : x.dump()));
  return out;
}

// { "generators": [[...], ...] } over the basis of an n-dimensional space
Subspace load_span(const std::string& path, int n) {
  json j = json::parse(read_file(path));
  if (j.contains("schema") && j["schema"] != kSchema) throw std::invalid_argument(path + ": unsupported schema");
  if (!j.contains("generators")) throw std::invalid_argument(path + ": missing field \"generators\"");
  Subspace s(n);
  for (size_t k = 0; k < j["generators"].size(); ++k)
    s.add(parse_vector(j["generators"][k], n, path + ": generators[" + std::to_string(k) + "]"));
  return s;
}

// "i,j,v;i,j,v" into an n×n matrix
Matrix parse_matrix(const std::string& text, int n) {
  Matrix m(n, std::vector<Scalar>(n));
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    std::stringstream is(item);
    std::string a, b, v;
    if (!std::getline(is, a, ',') || !std::getline(is, b, ',') || !std::getline(is, v))
      throw std::invalid_argument("matrix entry '" + item + "' is not i,j,value");
    int i = std::stoi(a), j = std::stoi(b);
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("matrix entry '" + item + "' out of range");
    m[i][j] = parse_scalar(v);
  }
  return m;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string pair_name(const std::string& s) { return s == "z3z2" ? "z2z3" : s; }

Report calculus_report(const std::string& name, const FinHopf& h, const Subspace& q) {
  Report r;
  r.title = "left-covariant calculus on " + name;
  Subspace ke = counit_kernel(h);
  r.fact("dim ker ε", ke.dim());
  r.fact("dim Q", q.dim());
  r.check("Q ⊆ ker ε", ke.contains(q));
  r.check("Q right ideal", is_right_ideal(h, q));
  if (!r.ok()) return r;
  LeftCovariantCalculus c = calculus_from_ideal(h, q);
  r.fact("dim invariant forms", c.inv.dim());
  r.fact("dim N", c.calc.N.dim());
  r.fact("bicovariant", bicovariance_check(h, q) ? "yes" : "no");
  r.check("left-covariant", left_covariant(c));
  r.check("Leibniz", leibniz_holds(c.calc));
  r.check("forms spanned by u dv", spans_forms(c.calc));
  r.check("Q recovered from N", ideal_from_submodule(h, c.calc.N) == q);
  return r;
}

Report trivial_bundle_report(int points, const std::string& fibre, const FinHopf& h, const Subspace& q,
                             const Options& o) {
  Report r;
  r.title = "trivial bundle C(" + std::to_string(points) + ")⊗" + fibre;
  std::vector<std::string> labels;
  for (int i = 0; i < points; ++i) labels.push_back(std::to_string(i));
  FinAlgebra m = FinAlgebra::functions(labels);
  TrivialBundle t = trivial_bundle(m, h);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> d(-2, 2);
  Subspace om = kernel(m.mu);
  LinMap beta(m.n * m.n, h.n);
  for (int j = 0; j < h.n; ++j) {
    Vec col(m.n * m.n);
    for (const auto& row : om.rows()) axpy(col, Scalar(d(rng)), row);
    beta.set_column(j, col);
  }
  NhorChoice choice = o.nhor == "maximal"   ? NhorChoice::max()
                      : o.nhor == "minimal" ? NhorChoice::min()
                                            : NhorChoice::of(load_span(o.nhor, t.B.nP() * t.B.nP()));
  r.fact("seed", std::to_string(o.seed));
  r.fact("N_hor", o.nhor);
  UniversalConnection w = connection_from_beta_universal(t, beta);
  try {
    auto [c, omega] = build_calculus(t.B, q, w, choice);
    r.fact("dim Ω¹(P)", c.dim());
    r.fact("dim horizontal forms", c.hor_forms.dim());
    r.fact("dim ker ε/Q", c.inv.dim());
    r.fact("dim N0", c.N0.dim());
    r.fact("dim N", c.N.dim());
    r.absorb(c.report);
    r.check("N0 ⊆ N", c.N.contains(c.N0));
    r.absorb(check_connection(c, omega));
  } catch (const VerificationError& e) {
    r.check(e.check, false, "verification failed");
  }
  return r;
}

Report nerve_report(const std::string& name, const CoverDescription& c) {
  DiscreteComplex k = nerve_from_cover(c);
  H1Result h = h1(k);
  LocalComplex lc = omega2_local(k);
  Report r;
  r.title = "Čech H¹ of " + name;
  r.fact("sets", c.sets);
  r.fact("edges", long(k.E.size()));
  r.fact("F0", long(k.F0.size()));
  r.fact("F", long(k.F.size()));
  r.fact("H1", h.dim);
  for (size_t i = 0; i < h.reps.size(); ++i) {
    std::string s;
    for (size_t e = 0; e < k.E.size(); ++e)
      s += (e ? " " : "") + std::to_string(k.E[e].first) + std::to_string(k.E[e].second) + ":" + h.reps[i][e].str();
    r.fact("representative " + std::to_string(i + 1), s);
  }
  r.check("d1∘d0 = 0", lc.d1.after(lc.d0) == LinMap(lc.d1.rows(), k.n()));
  return r;
}

Report moduli_report(const std::string& name, const CoverDescription& c, int order) {
  DiscreteComplex k = nerve_from_cover(c);
  ModuliResult m = moduli_zero_curvature(k, order);
  Report r;
  r.title = "flat μ_" + std::to_string(order) + " connections on " + name;
  r.fact("candidates", m.candidates);
  r.fact("cocycles", m.cocycles);
  r.fact("gauge classes", m.classes);
  for (size_t i = 0; i < m.reps.size(); ++i) {
    std::string s;
    for (size_t e = 0; e < m.reps[i].size(); ++e) s += (e ? " " : "") + std::to_string(m.reps[i][e]);
    r.fact("class " + std::to_string(i + 1) + " exponents", s);
  }
  r.check("F(β) = 0 iff 1+β is a cocycle", m.biconditional);
  return r;
}

Report bicross_build_report(const std::string& pair) {
  MatchedPair mp = named_matched_pair(pair);
  bool small = mp.G.size() * mp.Sigma.size() <= 12;
  Bicross b = bicrossproduct(mp, small);
  Report r = hopf_report(pair, b.P);
  r.title = "bicrossproduct " + pair;
  r.fact("|G|", mp.G.size());
  r.fact("|Σ|", mp.Sigma.size());
  if (small) r.check("ΔΦ(h) = Φ(h1^(1))⊗h1^(2)Φ(h2)", coproduct_of_phi_holds(b));
  return r;
}

Report bicross_calculus_report(const std::string& pair, const std::vector<Scalar>& params, const std::string& fibre,
                               const std::vector<int>& S) {
  Bicross b = bicrossproduct(named_matched_pair(pair));
  GammaData g = gamma_from_parameters(b.mp, params);
  Subspace q(b.H.n);
  if (fibre == "zero") q = counit_kernel(b.H);
  else if (fibre != "universal") q = load_span(fibre, b.H.n);
  Report r;
  r.title = "bicrossproduct calculus on " + pair;
  r.check("γ condition", gamma_condition_check(b, gamma_map(b, g)));
  BicrossCalculus c = bicross_calculus(b, g, q, S);
  r.fact("calculus-dimension", c.calc.dim() / b.P.n);
  r.fact("dim Q_P", c.QP.dim());
  r.absorb(c.calc.report, "calculus ");
  r.check("left-covariant", c.left_covariant);
  r.check("Q_P closed form", c.qp_closed_form);
  r.check("ω_U from β_U is the canonical connection", c.canonical_matches);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential calculi on finite quantum principal bundles"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--degree", o.degree, "truncation degree");
    c->add_option("--slack", o.slack, "extra degree used when spanning ideals");
    c->add_option("--nhor", o.nhor, "N_hor: maximal, minimal or a JSON file of generators");
    c->add_option("--seed", o.seed, "seed for randomized data");
    c->add_option("--out", o.out, "write the JSON report here");
    c->add_flag("--json", o.json_stdout, "print JSON instead of text");
  };
  int code = 0;
  std::function<int()> run;

  auto* cat = app.add_subcommand("builtins", "list builtin groups, Hopf algebras, covers and ideal families");
  common(cat);
  cat->callback([&] {
    run = [&] {
      Catalog c = builtins();
      Report r;
      r.title = "builtins";
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
        return s;
      };
      r.fact("groups", join(c.groups));
      r.fact("hopf", join(c.hopf));
      r.fact("matched-pairs", join(c.matched_pairs));
      r.fact("covers", join(c.covers));
      r.fact("ideal-families", join(c.ideal_families));
      return emit(o, "builtins", {r});
    };
  });

  // hopf
  auto* hopf = app.add_subcommand("hopf", "finite Hopf algebras");
  hopf->require_subcommand(1);
  std::string hopf_arg, algebra = "functions";
  for (const char* name : {"check", "dump"}) {
    auto* s = hopf->add_subcommand(name, std::string(name) == "check" ? "run the axiom suite" : "print structure constants");
    common(s);
    s->add_option("hopf", hopf_arg, "group JSON file, builtin group, C:<group>, CG:<group> or matched pair")->required();
    s->add_option("--algebra", algebra, "functions or group, for group input")->check(CLI::IsMember({"functions", "group"}));
    std::string sub = name;
    s->callback([&, sub] {
      run = [&, sub] {
        FinHopf h = load_hopf(hopf_arg, algebra);
        if (sub == "dump") {
          std::string doc = hopf_to_json(h);
          std::cout << doc << "\n";
          if (!o.out.empty()) write_file_atomic(o.out, doc + "\n");
          return 0;
        }
        return emit(o, "hopf check", {hopf_report(hopf_arg, h)});
      };
    });
  }

  // calculus
  auto* calc = app.add_subcommand("calculus", "left-covariant calculus from a right ideal Q ⊆ ker ε");
  common(calc);
  std::string calc_hopf, ideal_file;
  calc->add_option("hopf", calc_hopf, "Hopf algebra as for hopf check")->required();
  calc->add_option("--algebra", algebra, "functions or group")->check(CLI::IsMember({"functions", "group"}));
  calc->add_option("--ideal", ideal_file, "JSON generators of Q; universal calculus when absent, zero calculus with 'zero'");
  calc->callback([&] {
    run = [&] {
      FinHopf h = load_hopf(calc_hopf, algebra);
      Subspace q(h.n);
      if (ideal_file == "zero") q = counit_kernel(h);
      else if (!ideal_file.empty()) q = load_span(ideal_file, h.n);
      return emit(o, "calculus", {calculus_report(calc_hopf, h, q)});
    };
  });

  // bundle
  auto* bundle = app.add_subcommand("bundle", "quantum principal bundles");
  bundle->require_subcommand(1);
  auto* triv = bundle->add_subcommand("trivial", "C(Σ)⊗H with a random gauge field β_U");
  common(triv);
  int points = 2;
  std::string fibre = "C:z2", fibre_ideal;
  triv->add_option("--points", points, "|Σ|")->check(CLI::Range(1, 6));
  triv->add_option("--fibre", fibre, "Hopf algebra H");
  triv->add_option("--ideal", fibre_ideal, "JSON generators of Q; universal when absent, 'zero' for Q = ker ε");
  triv->callback([&] {
    run = [&] {
      FinHopf h = load_hopf(fibre, "functions");
      Subspace q(h.n);
      if (fibre_ideal == "zero") q = counit_kernel(h);
      else if (!fibre_ideal.empty()) q = load_span(fibre_ideal, h.n);
      return emit(o, "bundle trivial", {trivial_bundle_report(points, fibre, h, q, o)});
    };
  });
  auto* suite = bundle->add_subcommand("suite", "calculus pipeline on random trivial bundles");
  common(suite);
  int count = 10;
  suite->add_option("--count", count, "number of bundles");
  suite->callback([&] { run = [&] { return emit(o, "bundle suite", {trivial_bundle_suite(o.seed, count)}); }; });
  auto* edges = bundle->add_subcommand("edges", "Σ×Z3 over the symmetric triangle");
  common(edges);
  std::string beta1, beta2;
  edges->add_option("--beta1", beta1, "entries i,j,value;… of β¹");
  edges->add_option("--beta2", beta2, "entries i,j,value;… of β²");
  edges->callback([&] {
    run = [&] { return emit(o, "bundle edges", {edges_example(parse_matrix(beta1, 3), parse_matrix(beta2, 3))}); };
  });

  // cohomology
  auto* coh = app.add_subcommand("cohomology", "discrete cohomology and flat connections");
  coh->require_subcommand(1);
  std::string cover;
  int order = 2;
  auto* nerve = coh->add_subcommand("nerve", "H¹ of the nerve of a cover");
  common(nerve);
  nerve->add_option("cover", cover, "cover JSON or builtin cover")->required();
  nerve->callback([&] { run = [&] { return emit(o, "cohomology nerve", {nerve_report(cover, load_cover(cover))}); }; });
  auto* mod = coh->add_subcommand("moduli", "gauge classes of flat μ_k connections");
  common(mod);
  mod->add_option("cover", cover, "cover JSON or builtin cover")->required();
  mod->add_option("--order", order, "k")->check(CLI::Range(1, 12));
  mod->callback([&] {
    run = [&] { return emit(o, "cohomology moduli", {moduli_report(cover, load_cover(cover), order)}); };
  });

  // bicross
  auto* bic = app.add_subcommand("bicross", "bicrossproduct bundles C(Σ)⋈CG");
  bic->require_subcommand(1);
  std::string pair;
  std::string g1 = "2", g2 = "1/2", bfibre = "universal", base;
  std::vector<std::string> params;
  auto* build = bic->add_subcommand("build", "Hopf structure and trivialization");
  common(build);
  build->add_option("pair", pair, "matched pair")->required();
  build->callback([&] { run = [&] { return emit(o, "bicross build", {bicross_build_report(pair_name(pair))}); }; });
  auto* gdim = bic->add_subcommand("gamma-dim", "dimension of the γ-space and isotropy");
  common(gdim);
  gdim->add_option("pair", pair, "matched pair")->required();
  gdim->callback([&] { run = [&] { return emit(o, "bicross gamma-dim", {gamma_space_report(pair_name(pair))}); }; });
  auto* bcalc = bic->add_subcommand("calculus", "calculus from γ, a fibre calculus and a base subset S");
  common(bcalc);
  bcalc->add_option("pair", pair, "matched pair")->required();
  bcalc->add_option("--gamma", params, "free γ parameters, in slot order");
  bcalc->add_option("--fibre", bfibre, "universal, zero or a JSON file of Q generators");
  bcalc->add_option("--base", base, "S as comma-separated Σ indices; empty for the universal base");
  bcalc->callback([&] {
    run = [&] {
      std::vector<Scalar> ps;
      for (const auto& p : params) ps.push_back(parse_scalar(p));
      std::vector<int> S = base.empty() ? std::vector<int>{} : parse_ints(base);
      return emit(o, "bicross calculus", {bicross_calculus_report(pair_name(pair), ps, bfibre, S)});
    };
  });
  auto* ex = bic->add_subcommand("example", "the worked examples: z3z2 or z6z6");
  common(ex);
  ex->add_option("name", pair, "z3z2 or z6z6")->required()->check(CLI::IsMember({"z3z2", "z2z3", "z6z6"}));
  ex->add_option("--gamma1", g1, "γ1");
  ex->add_option("--gamma2", g2, "γ2");
  ex->callback([&] {
    run = [&] {
      if (pair_name(pair) == "z6z6") return emit(o, "bicross example z6z6", {example_z6z6()});
      Scalar a = parse_scalar(g1), b = parse_scalar(g2);
      return emit(o, "bicross example z3z2", {example_universal_fibre(a, b), example_zero_fibre(a, b)});
    };
  });

  // qmonopole
  auto* qm = app.add_subcommand("qmonopole", "SU_q(2) over SO_q(3) at truncated degree");
  qm->require_subcommand(1);
  auto* ids = qm->add_subcommand("verify-identities", "ideal decompositions and memberships");
  common(ids);
  ids->callback([&] { run = [&] { return emit(o, "qmonopole verify-identities", {qmonopole_identities(o.degree, o.slack)}); }; });
  auto* dims = qm->add_subcommand("dims", "truncated quotient dimensions");
  common(dims);
  std::string family = "1,1,1,1";
  bool with_fibre = false;
  dims->add_option("--family", family, "k,l,r,s or a catalog name such as suq2-QP-1-1");
  dims->add_flag("--qp", with_fibre, "use Q_P (ker ε) instead of Q (ker π)");
  dims->callback([&] {
    run = [&] {
      IdealFamily f;
      if (family.rfind("suq2-", 0) == 0) {
        f = builtin_ideal_family(family);
      } else {
        auto v = parse_ints(family);
        if (v.size() != 4 && v.size() != 2) throw std::invalid_argument("--family expects k,l or k,l,r,s");
        std::string name = std::string(with_fibre ? "suq2-QP-" : "suq2-Q-") + std::to_string(v[0]) + "-" + std::to_string(v[1]);
        if (v.size() == 4) name += "-" + std::to_string(v[2]) + "-" + std::to_string(v[3]);
        f = builtin_ideal_family(name);
      }
      return emit(o, "qmonopole dims", {qmonopole_dims(f, o.degree, o.slack)});
    };
  });
  auto* rel = qm->add_subcommand("relations", "commutation relations and exact forms of ω0…ω4");
  common(rel);
  rel->callback([&] { run = [&] { return emit(o, "qmonopole relations", {qmonopole_relations(o.degree, o.slack)}); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    code = run ? run() : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}
