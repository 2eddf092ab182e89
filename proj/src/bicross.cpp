#include "qbundle/bicross.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qb {

namespace {

void require(bool ok, const std::string& name, Vec witness = {}) {
  if (!ok) throw VerificationError(name, std::move(witness));
}

Group subgroup(const Group& x, const std::vector<int>& elems) {
  std::map<int, int> at;
  for (int i = 0; i < int(elems.size()); ++i) at[elems[i]] = i;
  if (!at.count(x.e)) throw std::invalid_argument("subgroup without the identity");
  Group g;
  for (int v : elems) g.names.push_back(x.names[v]);
  g.table.assign(elems.size(), std::vector<int>(elems.size()));
  for (int i = 0; i < int(elems.size()); ++i)
    for (int j = 0; j < int(elems.size()); ++j) {
      auto it = at.find(x.mul(elems[i], elems[j]));
      if (it == at.end()) throw std::invalid_argument("subset is not closed under multiplication");
      g.table[i][j] = it->second;
    }
  g.e = at[x.e];
  g.validate();
  return g;
}

std::vector<int> powers(const Group& x, int gen) {
  std::vector<int> out{x.e};
  for (int y = gen; y != x.e; y = x.mul(y, gen)) out.push_back(y);
  return out;
}

void rename_cyclic(Group& g, const std::string& gen) {
  for (int k = 0; k < g.size(); ++k) g.names[k] = k == 0 ? "e" : k == 1 ? gen : gen + "^" + std::to_string(k);
}

Vec pi_eps(const FinHopf& h, const Vec& x) {
  Vec y = x;
  axpy(y, -h.counit(x), h.unit);
  return y;
}

}  // namespace

void MatchedPair::validate() const {
  G.validate();
  Sigma.validate();
  for (int s = 0; s < Sigma.size(); ++s)
    if (tri[s][G.e] != G.e || tle[s][G.e] != s) throw std::invalid_argument("matched pair: action of e_G is not trivial");
  for (int g = 0; g < G.size(); ++g)
    if (tri[Sigma.e][g] != g || tle[Sigma.e][g] != Sigma.e)
      throw std::invalid_argument("matched pair: action of e_Σ is not trivial");
}

std::vector<int> MatchedPair::isotropy(int g) const {
  std::vector<int> out;
  for (int s = 0; s < Sigma.size(); ++s)
    if (tri[s][g] == g) out.push_back(s);
  return out;
}

MatchedPair matched_pair_from_factorization(const Group& x, const std::vector<int>& g, const std::vector<int>& sigma) {
  MatchedPair mp{subgroup(x, g), subgroup(x, sigma), {}, {}};
  std::vector<std::pair<int, int>> factor(x.size(), {-1, -1});
  for (int a = 0; a < int(g.size()); ++a)
    for (int b = 0; b < int(sigma.size()); ++b) {
      int y = x.mul(g[a], sigma[b]);
      if (factor[y].first >= 0) throw std::invalid_argument("factorization is not unique");
      factor[y] = {a, b};
    }
  for (const auto& f : factor)
    if (f.first < 0) throw std::invalid_argument("factorization does not cover the group");
  mp.tri.assign(sigma.size(), std::vector<int>(g.size()));
  mp.tle.assign(sigma.size(), std::vector<int>(g.size()));
  for (int s = 0; s < int(sigma.size()); ++s)
    for (int a = 0; a < int(g.size()); ++a) {
      auto [ga, sb] = factor[x.mul(sigma[s], g[a])];
      mp.tri[s][a] = ga;
      mp.tle[s][a] = sb;
    }
  mp.validate();
  return mp;
}

MatchedPair direct_product_pair(const Group& g, const Group& sigma) {
  MatchedPair mp{g, sigma, {}, {}};
  mp.tri.assign(sigma.size(), std::vector<int>(g.size()));
  mp.tle.assign(sigma.size(), std::vector<int>(g.size()));
  for (int s = 0; s < sigma.size(); ++s)
    for (int a = 0; a < g.size(); ++a) {
      mp.tri[s][a] = a;
      mp.tle[s][a] = s;
    }
  mp.validate();
  return mp;
}

MatchedPair named_matched_pair(const std::string& name) {
  Group s3 = Group::symmetric3();
  int a = s3.index_of("a"), b = s3.index_of("b");
  MatchedPair mp;
  if (name == "z2z3") {
    // g = α, s = αβ
    mp = matched_pair_from_factorization(s3, powers(s3, a), powers(s3, s3.mul(a, b)));
  } else if (name == "z6z6") {
    // g = (α, αβ), s = (αβ, β) in S₃×S₃
    Group x = Group::product(s3, s3);
    int c = s3.mul(a, b), n = s3.size();
    mp = matched_pair_from_factorization(x, powers(x, a * n + c), powers(x, c * n + b));
  } else {
    throw std::invalid_argument("unknown matched pair: " + name);
  }
  rename_cyclic(mp.G, "g");
  rename_cyclic(mp.Sigma, "s");
  return mp;
}

std::vector<std::string> named_matched_pairs() { return {"z2z3", "z6z6"}; }

Bicross bicrossproduct(const MatchedPair& mp, bool with_bundle) {
  mp.validate();
  Bicross b;
  b.mp = mp;
  const Group& G = mp.G;
  const Group& Sg = mp.Sigma;
  int ns = Sg.size(), ng = G.size(), n = ns * ng;
  FinHopf& P = b.P;
  P.n = n;
  for (int s = 0; s < ns; ++s)
    for (int g = 0; g < ng; ++g) P.labels.push_back("δ_" + Sg.names[s] + "⊗" + G.names[g]);
  P.mu = LinMap(n, n * n);
  for (int s = 0; s < ns; ++s)
    for (int g = 0; g < ng; ++g)
      for (int h = 0; h < ng; ++h) {
        int t = mp.tle[s][g];
        P.mu.add(b.idx(s, G.mul(g, h)), b.idx(s, g) * n + b.idx(t, h), Scalar(1));
      }
  P.unit = Vec(n);
  for (int s = 0; s < ns; ++s) P.unit[b.idx(s, G.e)] = Scalar(1);
  P.delta = LinMap(n * n, n);
  P.eps = Vec(n);
  P.S = LinMap(n, n);
  for (int s = 0; s < ns; ++s)
    for (int g = 0; g < ng; ++g) {
      int col = b.idx(s, g);
      for (int a = 0; a < ns; ++a) {
        int c = Sg.mul(Sg.inv(a), s);  // a c = s
        P.delta.add(b.idx(a, mp.tri[c][g]) * n + b.idx(c, g), col, Scalar(1));
      }
      if (s == Sg.e) P.eps[col] = Scalar(1);
      P.S.add(b.idx(Sg.inv(mp.tle[s][g]), G.inv(mp.tri[s][g])), col, Scalar(1));
    }
  AxiomReport r = check_hopf_axioms(P);
  for (const auto& c : r.checks) require(c.ok, "hopf: " + c.name);

  b.H = group_algebra(G);
  b.M = function_algebra(Sg);
  b.pi = LinMap(ng, n);
  b.Phi = LinMap(n, ng);
  b.iota = LinMap(n, ns);
  b.alpha = LinMap(ng * ns, ng);
  for (int g = 0; g < ng; ++g) {
    b.pi.add(g, b.idx(Sg.e, g), Scalar(1));
    for (int s = 0; s < ns; ++s) {
      b.Phi.add(b.idx(s, g), g, Scalar(1));
      b.alpha.add(mp.tri[s][g] * ns + s, g, Scalar(1));
    }
  }
  for (int s = 0; s < ns; ++s) b.iota.add(b.idx(s, G.e), s, Scalar(1));
  if (!with_bundle) return b;
  b.hb = homogeneous_bundle(P, b.H, b.pi);
  b.th = theta_map(P);
  b.has_bundle = true;
  return b;
}

TrivialBundle Bicross::trivial() const { return trivial_bundle(hb.B.P, M, iota, Phi); }

bool coproduct_of_phi_holds(const Bicross& b) {
  const FinHopf& H = b.H;
  int ns = b.nS();
  for (int h = 0; h < H.n; ++h) {
    Vec rhs(b.P.n * b.P.n);
    for (const auto& [k, c] : H.delta.column(h)) {
      int h1 = k / H.n, h2 = k % H.n;
      for (const auto& [j, c2] : b.alpha.column(h1)) {
        Vec right = b.P.mul(b.iota.column_dense(j % ns), b.Phi.column_dense(h2));
        axpy(rhs, c * c2, kron(b.Phi.column_dense(j / ns), right));
      }
    }
    if (b.P.delta.apply(b.Phi.column_dense(h)) != rhs) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> gamma_free_slots(const MatchedPair& mp) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g < mp.G.size(); ++g) {
    if (g == mp.G.e) continue;
    for (int s : mp.isotropy(g))
      if (s != mp.Sigma.e) out.push_back({g, s});
  }
  return out;
}

GammaData gamma_from_parameters(const MatchedPair& mp, const std::vector<Scalar>& params) {
  auto slots = gamma_free_slots(mp);
  if (params.size() != slots.size())
    throw std::invalid_argument("expected " + std::to_string(slots.size()) + " γ parameters");
  GammaData d;
  d.value.assign(mp.G.size(), std::vector<Scalar>(mp.Sigma.size()));
  for (int s = 0; s < mp.Sigma.size(); ++s) d.value[mp.G.e][s] = Scalar(1);
  for (int g = 0; g < mp.G.size(); ++g) d.value[g][mp.Sigma.e] = Scalar(1);
  for (size_t k = 0; k < slots.size(); ++k) d.value[slots[k].first][slots[k].second] = params[k];
  return d;
}

LinMap gamma_map(const Bicross& b, const GammaData& d) {
  LinMap gm(b.nS(), b.nG());
  for (int g = 0; g < b.nG(); ++g)
    for (int s = 0; s < b.nS(); ++s)
      if (!d.value[g][s].is_zero()) gm.add(s, g, d.value[g][s]);
  return gm;
}

GammaSpace gamma_space_dimension(const MatchedPair& mp) {
  GammaSpace r;
  for (int g = 0; g < mp.G.size(); ++g) r.isotropy.push_back(mp.isotropy(g));
  r.dimension = int(gamma_free_slots(mp).size());
  return r;
}

bool gamma_condition_check(const Bicross& b, const LinMap& gamma) {
  const FinHopf& H = b.H;
  const FinHopf& M = b.M;
  int ns = b.nS(), ng = b.nG();
  if (gamma.apply(H.unit) != M.unit) return false;
  for (int h = 0; h < ng; ++h)
    if (M.counit(gamma.column_dense(h)) != H.eps[h]) return false;
  for (int h = 0; h < ng; ++h) {
    Vec lhs(ns * ng), rhs(ns * ng);
    for (const auto& [k, c] : H.delta.column(h)) {
      int h1 = k / ng, h2 = k % ng;
      Vec g1 = gamma.column_dense(h1);
      for (const auto& [j, c2] : b.alpha.column(h2))
        axpy(lhs, c * c2, kron(M.mul(g1, M.basis(j % ns)), H.basis(j / ns)));
      axpy(rhs, c, kron(gamma.column_dense(h2), H.basis(h1)));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

LinMap beta_from_gamma(const Bicross& b, const LinMap& gamma) {
  const FinHopf& M = b.M;
  LinMap sd = kron(M.S, LinMap::identity(M.n)).after(M.delta);
  Vec one = kron(M.unit, M.unit);
  LinMap beta(M.n * M.n, b.nG());
  for (int g = 0; g < b.nG(); ++g) {
    Vec m = gamma.column_dense(g);
    Vec col = sd.apply(m);
    axpy(col, -M.counit(m), one);
    beta.set_column(g, col);
  }
  return beta;
}

LinMap beta_from_gamma_finite(const Bicross& b, const GammaData& d) {
  const Group& Sg = b.mp.Sigma;
  int ns = b.nS();
  LinMap beta(ns * ns, b.nG());
  for (int g = 0; g < b.nG(); ++g)
    for (int u = 0; u < ns; ++u)
      for (int v = 0; v < ns; ++v) {
        Scalar x = d.value[g][Sg.mul(Sg.inv(u), v)] - Scalar(1);
        if (!x.is_zero()) beta.add(u * ns + v, g, x);
      }
  return beta;
}

bool beta_left_invariant(const Bicross& b, const LinMap& beta) {
  LinMap dl = left_coaction_on_tensor(b.M);
  for (int g = 0; g < b.nG(); ++g) {
    Vec x = beta.apply(pi_eps(b.H, b.H.basis(g)));
    if (dl.apply(x) != kron(b.M.unit, x)) return false;
  }
  return true;
}

bool beta_compatibility_holds(const Bicross& b, const LinMap& beta, bool as_stated) {
  const FinHopf& H = b.H;
  const FinHopf& M = b.M;
  int ns = b.nS(), ng = b.nG();
  auto be = [&](int h) { return beta.apply(pi_eps(H, H.basis(h))); };
  for (int h = 0; h < ng; ++h) {
    Vec lhs(ns * ns * ng), rhs(ns * ns * ng);
    for (const auto& [k, c] : H.delta.column(h)) {
      int h1 = k / ng, h2 = k % ng;
      Vec b1 = be(h1), b2 = be(h2);
      for (const auto& [j, c2] : b.alpha.column(h2)) {
        Vec x = tensor_mul(M, M, b1, kron(M.unit, M.basis(j % ns)));
        axpy(lhs, c * c2, kron(x, H.basis(j / ns)));
      }
      for (const auto& [j, c2] : b.alpha.column(h1)) {
        Vec x = tensor_mul(M, M, kron(M.basis(j % ns), M.unit), b2);
        axpy(lhs, -(c * c2), kron(x, H.basis(j / ns)));
      }
    }
    Scalar sign = as_stated ? Scalar(1) : Scalar(-1);
    for (const auto& [j, c] : b.alpha.column(h)) {
      Vec m = M.basis(j % ns);
      axpy(rhs, sign * c, kron(kron(M.unit, m) - kron(m, M.unit), H.basis(j / ns)));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

LinMap splitting_from_gamma(const Bicross& b, const LinMap& gamma) {
  const FinHopf& H = b.H;
  LinMap i(b.P.n, H.n);
  for (int h = 0; h < H.n; ++h) {
    Vec col(b.P.n);
    for (const auto& [k, c] : H.delta.column(h)) axpy(col, c, b.elem(gamma.column_dense(k / H.n), H.basis(k % H.n)));
    i.set_column(h, col);
  }
  return i;
}

namespace {

// h▷m = Φ(h1) ι(m) Φ(Sh2), read back in M
Vec act(const Bicross& b, const Vec& h, const Vec& m) {
  const FinHopf& H = b.H;
  Vec im = b.iota.apply(m);
  Vec r(b.P.n);
  for (const auto& [k, c] : sparse(H.delta.apply(h))) {
    Vec left = b.P.mul(b.Phi.column_dense(k / H.n), im);
    axpy(r, c, b.P.mul(left, b.Phi.apply(H.S.column_dense(k % H.n))));
  }
  Vec out(b.nS());
  for (int s = 0; s < b.nS(); ++s) out[s] = r[b.idx(s, b.mp.G.e)];
  require(b.iota.apply(out) == r, "action-in-M", r);
  return out;
}

}  // namespace

Subspace q0_bicross(const Bicross& b, const LinMap& gamma, const Subspace& q) {
  const FinHopf& H = b.H;
  const FinHopf& M = b.M;
  int ng = H.n;
  LinMap d3 = double_coproduct(H);
  LinMap gd = kron(gamma, LinMap::identity(ng)).after(H.delta);
  std::vector<Vec> gens;
  for (const auto& qq : q.rows()) {
    Vec tri = d3.apply(qq);
    for (int m = 0; m < M.n; ++m)
      for (int h = 0; h < ng; ++h) {
        Vec x(b.P.n);
        for (const auto& [k, c] : sparse(tri)) {
          int q1 = k / (ng * ng), q2 = (k / ng) % ng, q3 = k % ng;
          Vec left = M.mul(gamma.column_dense(q1), act(b, H.basis(q2), M.basis(m)));
          axpy(x, c, b.elem(left, H.mul(H.basis(q3), H.basis(h))));
        }
        axpy(x, -M.eps[m], gd.apply(H.mul(qq, H.basis(h))));
        gens.push_back(x);
      }
  }
  return echelonize(b.P.n, gens);
}

namespace {

std::vector<Vec> q0_first_span(const Bicross& b, const GammaData& d, const Subspace& q) {
  const Group& G = b.mp.G;
  const Group& Sg = b.mp.Sigma;
  std::vector<Vec> gens;
  for (const auto& qq : q.rows())
    for (int h = 0; h < G.size(); ++h)
      for (int s = 0; s < Sg.size(); ++s) {
        if (s == Sg.e) continue;
        Vec x(b.P.n);
        for (int g = 0; g < G.size(); ++g) {
          int t = b.mp.tle[s][G.inv(g)];
          x[b.idx(t, G.mul(g, h))] += qq[g] * d.value[g][t];
        }
        gens.push_back(x);
      }
  return gens;
}

}  // namespace

Subspace q0_bicross_finite(const Bicross& b, const GammaData& d, const Subspace& q) {
  const Group& G = b.mp.G;
  const Group& Sg = b.mp.Sigma;
  std::vector<Vec> gens = q0_first_span(b, d, q);
  for (const auto& qq : q.rows()) {
    Vec x(b.P.n);
    for (int g = 0; g < G.size(); ++g) {
      x[b.idx(Sg.e, g)] += qq[g];
      for (int s = 0; s < Sg.size(); ++s) x[b.idx(s, g)] -= qq[g] * d.value[g][s];
    }
    gens.push_back(x);
  }
  return echelonize(b.P.n, gens);
}

Subspace qp_bicross_finite(const Bicross& b, const GammaData& d, const Subspace& q, const std::vector<int>& S) {
  std::vector<Vec> gens = q0_first_span(b, d, q);
  for (const auto& qq : q.rows()) gens.push_back(b.elem(b.M.basis(b.mp.Sigma.e), qq));
  for (int s : S)
    for (int g = 0; g < b.nG(); ++g) gens.push_back(b.P.basis(b.idx(s, g)));
  return echelonize(b.P.n, gens);
}

BicrossCalculus bicross_calculus(const Bicross& b, const GammaData& d, const Subspace& q, const std::vector<int>& S) {
  const Group& Sg = b.mp.Sigma;
  require(b.has_bundle, "bundle-built");
  for (int s : S) require(s >= 0 && s < Sg.size() && s != Sg.e, "S-subset");
  LinMap gamma = gamma_map(b, d);
  require(gamma_condition_check(b, gamma), "gamma-condition");
  LinMap beta = beta_from_gamma(b, gamma);
  require(beta == beta_from_gamma_finite(b, d), "beta-finite-form");
  require(beta_left_invariant(b, beta), "beta-left-invariant");
  require(beta_compatibility_holds(b, beta), "beta-compatibility");

  TrivialBundle t = b.trivial();
  BicrossCalculus r;
  r.omegaU = connection_from_beta_universal(t, beta);
  UniversalConnection wc = canonical_connection(b.hb, splitting_from_gamma(b, gamma));
  r.canonical_matches = wc.omega == r.omegaU.omega;

  int ns = b.nS();
  Subspace nm(ns * ns);
  for (int u = 0; u < ns; ++u)
    for (int v = 0; v < ns; ++v)
      if (std::count(S.begin(), S.end(), Sg.mul(Sg.inv(u), v))) nm.add(unit(ns * ns, u * ns + v));
  Subspace nhor = sum(n0_from_connection(t.B, q, r.omegaU), base_extension(t.B, t.iota, nm));
  auto [c, w] = build_calculus(t.B, q, r.omegaU, NhorChoice::of(nhor));
  r.calc = std::move(c);
  r.omega = std::move(w);

  int n = b.P.n;
  LinMap dl = left_coaction_on_tensor(b.P);
  r.left_covariant = true;
  for (const auto& x : r.calc.N.rows())
    if (!outer_slices_in(dl.apply(x), n * n, r.calc.N)) r.left_covariant = false;
  r.QP = ideal_from_submodule(b.P, r.calc.N);
  r.qp_closed_form = r.QP == qp_bicross_finite(b, d, q, S);
  return r;
}

Vec invariant_form(const Bicross& b, const Vec& x) {
  require(b.has_bundle, "bundle-built");
  return b.th.theta.apply(kron(b.P.unit, pi_eps(b.P, x)));
}

Vec d_universal(const Bicross& b, const Vec& u) { return kron(b.P.unit, u) - kron(u, b.P.unit); }

Vec left_mul(const Bicross& b, const Vec& p, const Vec& form) {
  return tensor_mul(b.P, b.P, kron(p, b.P.unit), form);
}

Vec right_mul(const Bicross& b, const Vec& form, const Vec& p) {
  return tensor_mul(b.P, b.P, form, kron(b.P.unit, p));
}

}  // namespace qb
