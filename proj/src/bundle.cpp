#include "qbundle/bundle.hpp"

#include <functional>
#include <optional>

namespace qb {

VerificationError::VerificationError(const std::string& c, Vec w)
    : std::runtime_error("verification failed: " + c), check(c), witness(std::move(w)) {}

namespace {

void record(AxiomReport& r, const std::string& name, bool ok, int witness = 0) {
  r.checks.push_back({name, ok, ok ? -1 : witness});
}

void require(bool ok, const std::string& name, Vec witness = {}) {
  if (!ok) throw VerificationError(name, std::move(witness));
}

// a·x and x·a on P⊗P
Vec lmul(const FinAlgebra& p, const Vec& a, const Vec& x) { return tensor_mul(p, p, kron(a, p.unit), x); }
Vec rmul(const FinAlgebra& p, const Vec& x, const Vec& a) { return tensor_mul(p, p, x, kron(p.unit, a)); }

// h - ε(h)1
Vec pi_eps(const FinHopf& h, const Vec& x) {
  Vec r = x;
  axpy(r, -h.counit(x), h.unit);
  return r;
}

LinMap pi_eps_map(const FinHopf& h) {
  LinMap m(h.n, h.n);
  for (int b = 0; b < h.n; ++b) m.set_column(b, pi_eps(h, h.basis(b)));
  return m;
}

// Σ c (x_a ⊗ e_b) for Ad(h) = Σ c e_a ⊗ e_b with x_a = f(e_a)
Vec through_ad(const FinHopf& h, const Vec& v, const std::function<Vec(int)>& f, int out) {
  LinMap ad = adjoint_coaction(h);
  Vec r(out * h.n);
  for (const auto& [k, c] : sparse(ad.apply(v))) axpy(r, c, kron(f(k / h.n), h.basis(k % h.n)));
  return r;
}

std::optional<Vec> first_missing(const Subspace& big, const Subspace& small) {
  for (const auto& r : small.rows())
    if (!big.contains(r)) return r;
  return std::nullopt;
}

}  // namespace

bool outer_slices_in(const Vec& x, int inner, const Subspace& s) {
  int outer = int(x.size()) / inner;
  for (int o = 0; o < outer; ++o) {
    Vec sl(x.begin() + o * inner, x.begin() + (o + 1) * inner);
    if (!s.contains(sl)) return false;
  }
  return true;
}

bool inner_slices_in(const Vec& x, int inner, const Subspace& s) {
  int outer = int(x.size()) / inner;
  for (int i = 0; i < inner; ++i) {
    Vec sl(outer);
    for (int o = 0; o < outer; ++o) sl[o] = x[o * inner + i];
    if (!s.contains(sl)) return false;
  }
  return true;
}

bool coaction_stable(const UniversalBundle& b, const Subspace& s) {
  for (const auto& r : s.rows())
    if (!inner_slices_in(b.coact2.apply(r), b.nH(), s)) return false;
  return true;
}

UniversalBundle comodule_setup(const ComoduleAlgebra& p) {
  UniversalBundle b;
  b.P = p;
  const FinAlgebra& a = p.P;
  const FinHopf& h = p.H;
  int n = a.n, nh = h.n;
  b.U = universal_calculus(a);
  b.M = invariant_subalgebra(p);
  std::vector<Vec> seeds;
  for (const auto& m : b.M.rows()) seeds.push_back(kron(a.unit, m) - kron(m, a.unit));

  b.chi = LinMap(n * nh, n * n);
  b.coact2 = LinMap(n * n * nh, n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      for (const auto& [k, x] : p.coact.column(v))
        for (const auto& [i, y] : sparse(a.mul(a.basis(u), a.basis(k / nh))))
          b.chi.add(i * nh + k % nh, u * n + v, x * y);
      for (const auto& [k, x] : p.coact.column(u))
        for (const auto& [l, y] : p.coact.column(v))
          for (const auto& [t, z] : sparse(h.mul(h.basis(k % nh), h.basis(l % nh))))
            b.coact2.add(((k / nh) * n + l / nh) * nh + t, u * n + v, x * y * z);
    }
  b.ker_eps = counit_kernel(h);
  b.surjective = image(b.chi, b.U.omega1) == tensor(Subspace::full(n), b.ker_eps);
  // hor ⊆ ker χ ∩ Ω¹, so saturation can stop at that dimension
  Subspace kc = intersect(kernel(b.chi), b.U.omega1);
  b.hor = saturate(seeds, b.U.bimodule_ops(), n * n, kc.dim());
  b.kernel_ok = kc == b.hor;
  return b;
}

UniversalBundle verify_universal_bundle(const ComoduleAlgebra& p) {
  AxiomReport r = p.check();
  for (const auto& c : r.checks) require(c.ok, "comodule-algebra: " + c.name);
  UniversalBundle b = comodule_setup(p);
  if (!b.surjective) {
    auto w = first_missing(image(b.chi, b.U.omega1), tensor(Subspace::full(b.nP()), b.ker_eps));
    require(false, "chi-surjective", w.value_or(Vec{}));
  }
  if (!b.kernel_ok) {
    auto w = first_missing(b.hor, intersect(kernel(b.chi), b.U.omega1));
    require(false, "chi-kernel", w.value_or(Vec{}));
  }
  return b;
}

AxiomReport check_universal_connection(const UniversalBundle& b, const UniversalConnection& w) {
  AxiomReport r;
  const FinHopf& h = b.P.H;
  const FinAlgebra& p = b.P.P;
  int n = p.n, nh = h.n;
  int bad_forms = -1, bad_vert = -1, bad_eq = -1;
  for (int j = 0; j < nh; ++j) {
    Vec x = w.omega.column_dense(j);
    if (bad_forms < 0 && !b.U.omega1.contains(x)) bad_forms = j;
    if (bad_vert < 0 && b.chi.apply(x) != kron(p.unit, pi_eps(h, h.basis(j)))) bad_vert = j;
    Vec rhs = through_ad(h, h.basis(j), [&](int a) { return w.omega.column_dense(a); }, n * n);
    if (bad_eq < 0 && b.coact2.apply(x) != rhs) bad_eq = j;
  }
  record(r, "universal-forms", bad_forms < 0, bad_forms);
  record(r, "vertical", bad_vert < 0, bad_vert);
  record(r, "equivariant", bad_eq < 0, bad_eq);
  record(r, "vanishes-on-unit", is_zero(w.omega.apply(h.unit)));
  return r;
}

Subspace n0_from_connection(const UniversalBundle& b, const Subspace& q, const UniversalConnection& w) {
  const FinAlgebra& p = b.P.P;
  const FinHopf& h = b.P.H;
  int n = p.n, nh = h.n;
  std::vector<Vec> seeds;
  for (const auto& qq : q.rows()) {
    Vec wq = w.omega.apply(qq);
    for (int v = 0; v < n; ++v) {
      Vec x = scaled(rmul(p, wq, p.basis(v)), Scalar(-1));
      for (const auto& [k, c] : b.P.coact.column(v))
        axpy(x, c, lmul(p, p.basis(k / nh), w.omega.apply(h.mul(qq, h.basis(k % nh)))));
      if (!is_zero(x)) seeds.push_back(x);
    }
  }
  Subspace n0 = saturate(seeds, b.U.left, n * n);
  require(is_subbimodule(b.U, n0), "N0-subbimodule");
  require(b.hor.contains(n0), "N0-horizontal");
  require(coaction_stable(b, n0), "N0-coaction-stable");
  return n0;
}

Vec BundleCalculus::omega_rep(const Connection& w, const Vec& h) const {
  Vec form = inv.project(pi_eps(B.P.H, h));
  return calc.q.section.apply(w.omega.apply(form));
}

namespace {

void finish(BundleCalculus& c) {
  const UniversalBundle& b = c.B;
  int n = b.nP(), nh = b.nH(), k = c.inv.dim();
  c.calc = quotient_calculus(b.U, c.N);
  c.hor_forms = image(c.calc.q.projection, b.hor);
  c.chiN = LinMap(n * k, c.calc.q.dim);
  for (int j = 0; j < c.calc.q.dim; ++j) {
    Vec y = b.chi.apply(c.calc.q.section.column_dense(j));
    Vec out(n * k);
    for (int p = 0; p < n; ++p) {
      Vec sl(y.begin() + p * nh, y.begin() + (p + 1) * nh);
      if (is_zero(sl)) continue;
      Vec f = c.inv.project(pi_eps(b.P.H, sl));
      for (int t = 0; t < k; ++t) out[p * k + t] = f[t];
    }
    c.chiN.set_column(j, out);
  }
}

}  // namespace

AxiomReport check_bundle_calculus(const BundleCalculus& c) {
  AxiomReport r;
  const UniversalBundle& b = c.B;
  int n = b.nP();
  record(r, "N-subbimodule", is_subbimodule(b.U, c.N));
  record(r, "N-coaction-stable", coaction_stable(b, c.N));
  record(r, "chi-N", image(b.chi, c.N) == tensor(Subspace::full(n), c.Q));
  record(r, "Nhor-range", c.Nhor.contains(c.N0) && b.hor.contains(c.Nhor));
  record(r, "horizontal-part", intersect(c.N, b.hor) == c.Nhor);
  record(r, "exact-surjective", image(c.chiN, c.calc.forms).dim() == n * c.inv.dim());
  record(r, "exact-kernel", intersect(kernel(c.chiN), c.calc.forms) == c.hor_forms);
  record(r, "dimension", c.dim() == c.hor_forms.dim() + n * c.inv.dim());
  return r;
}

AxiomReport check_connection(const BundleCalculus& c, const Connection& w) {
  AxiomReport r;
  const UniversalBundle& b = c.B;
  const FinHopf& h = b.P.H;
  int n = b.nP();
  int bad_forms = -1, bad_vert = -1, bad_eq = -1;
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec form = w.omega.column_dense(j);
    Vec x = c.calc.q.section.apply(form);
    Vec lift = c.inv.lift(unit(c.inv.dim(), j));
    if (bad_forms < 0 && !c.calc.forms.contains(form)) bad_forms = j;
    if (bad_vert < 0 && !outer_slices_in(b.chi.apply(x) - kron(b.P.P.unit, lift), h.n, c.Q)) bad_vert = j;
    Vec rhs = through_ad(h, lift, [&](int a) { return c.omega_rep(w, h.basis(a)); }, n * n);
    if (bad_eq < 0 && !inner_slices_in(b.coact2.apply(x) - rhs, h.n, c.N)) bad_eq = j;
  }
  record(r, "connection-forms", bad_forms < 0, bad_forms);
  record(r, "connection-vertical", bad_vert < 0, bad_vert);
  record(r, "connection-equivariant", bad_eq < 0, bad_eq);
  return r;
}

std::pair<BundleCalculus, Connection> build_calculus(const UniversalBundle& b, const Subspace& q,
                                                     const UniversalConnection& w,
                                                     const NhorChoice& nhor) {
  const FinHopf& h = b.P.H;
  int n = b.nP();
  require(b.ker_eps.contains(q), "Q-in-ker-eps");
  require(is_right_ideal(h, q), "Q-right-ideal");
  require(bicovariance_check(h, q), "Q-Ad-stable");
  BundleCalculus c;
  c.B = b;
  c.Q = q;
  c.inv = invariant_forms(h, q);
  c.N0 = n0_from_connection(b, q, w);
  switch (nhor.kind) {
    case NhorChoice::maximal: c.Nhor = c.N0; break;
    case NhorChoice::minimal: c.Nhor = b.hor; break;
    case NhorChoice::given: c.Nhor = nhor.space; break;
  }
  require(c.Nhor.ambient() == n * n, "Nhor-ambient");
  if (auto x = first_missing(b.hor, c.Nhor)) require(false, "Nhor-in-horizontal", *x);
  if (auto x = first_missing(c.Nhor, c.N0)) require(false, "N0-in-Nhor", *x);
  require(is_subbimodule(b.U, c.Nhor), "Nhor-subbimodule");
  require(coaction_stable(b, c.Nhor), "Nhor-coaction-stable");

  std::vector<Vec> seeds = c.Nhor.rows();
  for (const auto& qq : q.rows()) seeds.push_back(w.omega.apply(qq));
  c.N = saturate(seeds, b.U.bimodule_ops(), n * n);
  finish(c);

  Connection omega{LinMap(c.calc.q.dim, c.inv.dim()), "projected " + w.provenance};
  for (int j = 0; j < c.inv.dim(); ++j)
    omega.omega.set_column(j, c.calc.project(w.omega.apply(c.inv.lift(unit(c.inv.dim(), j)))));

  c.report = check_bundle_calculus(c);
  AxiomReport cr = check_connection(c, omega);
  c.report.checks.insert(c.report.checks.end(), cr.checks.begin(), cr.checks.end());
  for (const auto& chk : c.report.checks) require(chk.ok, chk.name);
  return {std::move(c), std::move(omega)};
}

Subspace base_extension(const UniversalBundle& b, const LinMap& iota, const Subspace& nm) {
  LinMap ii = kron(iota, iota);
  std::vector<Vec> seeds;
  for (const auto& r : nm.rows()) seeds.push_back(ii.apply(r));
  return saturate(seeds, b.U.bimodule_ops(), b.nP() * b.nP());
}

TrivialBundle trivial_bundle(const FinAlgebra& m, const FinHopf& h) {
  ComoduleAlgebra p = tensor_bundle(m, h);
  LinMap iota(p.P.n, m.n), phi(p.P.n, h.n);
  for (int a = 0; a < m.n; ++a) iota.set_column(a, kron(m.basis(a), h.unit));
  for (int b = 0; b < h.n; ++b) phi.set_column(b, kron(m.unit, h.basis(b)));
  return trivial_bundle(p, m, iota, phi);
}

TrivialBundle trivial_bundle(const ComoduleAlgebra& p, const FinAlgebra& m, const LinMap& iota,
                             const LinMap& phi) {
  TrivialBundle t;
  t.M = m;
  t.B = verify_universal_bundle(p);
  t.iota = iota;
  t.Phi = phi;
  const FinHopf& h = p.H;
  require(phi.apply(h.unit) == p.P.unit, "Phi-unital");
  require(p.coact.after(phi) == kron(phi, LinMap::identity(h.n)).after(h.delta), "Phi-intertwiner");
  t.PhiInv = convolution_inverse(h, p.P, phi);
  require(iota.apply(m.unit) == p.P.unit, "iota-unital");
  for (int a = 0; a < m.n; ++a)
    for (int c = 0; c < m.n; ++c)
      require(iota.apply(m.mul(m.basis(a), m.basis(c))) == p.P.mul(iota.column_dense(a), iota.column_dense(c)),
              "iota-multiplicative");
  require(image(iota) == t.B.M && image(iota).dim() == m.n, "M-mismatch");
  return t;
}

namespace {

// Σ c Φ⁻¹(a)·mid(e_b)·Φ(d) over the triple coproduct tri = Σ c e_a⊗e_b⊗e_d
Vec sandwich(const TrivialBundle& t, const Vec& tri, const LinMap& mid) {
  const FinAlgebra& p = t.B.P.P;
  int nh = t.H().n;
  Vec out(p.n * p.n);
  for (const auto& [k, c] : sparse(tri)) {
    int a = k / (nh * nh), b = (k / nh) % nh, d = k % nh;
    Vec m = mid.column_dense(b);
    if (is_zero(m)) continue;
    axpy(out, c, rmul(p, lmul(p, t.PhiInv.column_dense(a), m), t.Phi.column_dense(d)));
  }
  return out;
}

// Σ Φ⁻¹(h1) d Φ(h2)
Vec phi_d_phi(const TrivialBundle& t, const Vec& hv) {
  const FinAlgebra& p = t.B.P.P;
  int nh = t.H().n;
  Vec out(p.n * p.n);
  for (const auto& [k, c] : sparse(t.H().delta.apply(hv))) {
    Vec a = t.PhiInv.column_dense(k / nh), b = t.Phi.column_dense(k % nh);
    axpy(out, c, kron(a, b) - kron(p.mul(a, b), p.unit));
  }
  return out;
}

}  // namespace

LinMap lift_beta(const TrivialBundle& t, const LinMap& betaU) { return kron(t.iota, t.iota).after(betaU); }

UniversalConnection connection_from_beta_universal(const TrivialBundle& t, const LinMap& betaU) {
  const FinHopf& h = t.H();
  require(betaU.rows() == t.M.n * t.M.n && betaU.cols() == h.n, "beta-shape");
  Subspace om = kernel(t.M.mu);
  for (int j = 0; j < h.n; ++j)
    require(om.contains(betaU.column_dense(j)), "beta-in-Omega1M", betaU.column_dense(j));
  LinMap mid = lift_beta(t, betaU).after(pi_eps_map(h));
  LinMap tri = double_coproduct(h);
  int n = t.B.nP();
  bool zero = betaU == LinMap(betaU.rows(), h.n);
  UniversalConnection w{LinMap(n * n, h.n), zero ? "trivial connection" : "beta"};
  for (int j = 0; j < h.n; ++j)
    w.omega.set_column(j, sandwich(t, tri.column_dense(j), mid) + phi_d_phi(t, h.basis(j)));
  AxiomReport r = check_universal_connection(t.B, w);
  for (const auto& c : r.checks) require(c.ok, c.name);
  return w;
}

bool phi_is_algebra_map(const TrivialBundle& t) {
  const FinHopf& h = t.H();
  const FinAlgebra& p = t.B.P.P;
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (t.Phi.apply(h.mul(h.basis(a), h.basis(b))) != p.mul(t.Phi.column_dense(a), t.Phi.column_dense(b)))
        return false;
  return true;
}

bool beta_condition_check(const TrivialBundle& t, const BundleCalculus& c, const LinMap& beta) {
  const FinHopf& h = t.H();
  LinMap mid = beta.after(pi_eps_map(h));
  LinMap tri = double_coproduct(h);
  for (const auto& q : c.Q.rows()) {
    Vec lhs = sandwich(t, tri.apply(q), mid) + phi_d_phi(t, q);
    if (!c.N.contains(lhs)) return false;
  }
  if (!phi_is_algebra_map(t)) return true;
  for (const auto& q : c.Q.rows()) {
    Vec tq = tri.apply(q);
    Vec base = sandwich(t, tq, mid);
    for (int j = 0; j < h.n; ++j) {
      Vec x = sandwich(t, tq, mid.after(h.right(h.basis(j)))) - scaled(base, h.eps[j]);
      if (!c.N.contains(x)) return false;
    }
  }
  return true;
}

HomogeneousBundle homogeneous_bundle(const FinHopf& p, const FinHopf& h, const LinMap& pi) {
  require(pi.rows() == h.n && pi.cols() == p.n, "pi-shape");
  require(image(pi).dim() == h.n, "pi-surjective");
  require(pi.apply(p.unit) == h.unit, "pi-unital");
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      require(pi.apply(p.mul(p.basis(a), p.basis(b))) == h.mul(pi.column_dense(a), pi.column_dense(b)),
              "pi-multiplicative");
  require(h.delta.after(pi) == kron(pi, pi).after(p.delta), "pi-comultiplicative");
  require(h.counit_map().after(pi) == p.counit_map(), "pi-counital");
  require(h.S.after(pi) == pi.after(p.S), "pi-antipode");
  HomogeneousBundle hb;
  hb.PH = p;
  hb.pi = pi;
  ComoduleAlgebra c{p, h, kron(LinMap::identity(p.n), pi).after(p.delta)};
  hb.B = verify_universal_bundle(c);
  return hb;
}

UniversalConnection canonical_connection(const HomogeneousBundle& hb, const LinMap& i) {
  const FinHopf& p = hb.PH;
  const FinHopf& h = hb.B.P.H;
  LinMap ie = i.after(pi_eps_map(h));
  LinMap adp = kron(LinMap::identity(p.n), hb.pi).after(adjoint_coaction(p));
  LinMap adh = adjoint_coaction(h);
  for (const auto& k : hb.B.ker_eps.rows()) {
    Vec ik = ie.apply(k);
    require(hb.pi.apply(ik) == k, "splitting", k);
    require(p.counit(ik).is_zero(), "splitting-counit", k);
    require(adp.apply(ik) == kron(ie, LinMap::identity(h.n)).apply(adh.apply(k)), "splitting-Ad", k);
  }
  ThetaMaps th = theta_map(p);
  int n = p.n;
  UniversalConnection w{LinMap(n * n, h.n), "canonical"};
  for (int j = 0; j < h.n; ++j) w.omega.set_column(j, th.theta.apply(kron(p.unit, ie.column_dense(j))));
  LinMap dl = left_coaction_on_tensor(p);
  for (int j = 0; j < h.n; ++j) {
    Vec x = w.omega.column_dense(j);
    require(dl.apply(x) == kron(p.unit, x), "left-invariant", h.basis(j));
  }
  AxiomReport r = check_universal_connection(hb.B, w);
  for (const auto& c : r.checks) require(c.ok, c.name);
  return w;
}

Subspace homogeneous_q0(const HomogeneousBundle& hb, const LinMap& i, const Subspace& q) {
  const FinHopf& p = hb.PH;
  const FinHopf& h = hb.B.P.H;
  LinMap ie = i.after(pi_eps_map(h));
  std::vector<Vec> gens;
  for (const auto& qq : q.rows()) {
    Vec iq = ie.apply(qq);
    for (int u = 0; u < p.n; ++u)
      gens.push_back(p.mul(iq, p.basis(u)) - ie.apply(h.mul(qq, hb.pi.column_dense(u))));
  }
  Subspace q0 = echelonize(p.n, gens);
  require(is_right_ideal(p, q0), "Q0-right-ideal");
  return q0;
}

BundleCalculus homogeneous_calculus(const HomogeneousBundle& hb, const Subspace& qp) {
  const FinHopf& p = hb.PH;
  const FinHopf& h = hb.B.P.H;
  require(counit_kernel(p).contains(qp), "QP-in-ker-eps");
  require(is_right_ideal(p, qp), "QP-right-ideal");
  LinMap adp = kron(LinMap::identity(p.n), hb.pi).after(adjoint_coaction(p));
  for (const auto& r : qp.rows()) require(inner_slices_in(adp.apply(r), h.n, qp), "QP-Ad-stable", r);
  BundleCalculus c;
  c.B = hb.B;
  c.Q = image(hb.pi, qp);
  c.inv = invariant_forms(h, c.Q);
  c.N = image(theta_map(p).theta, tensor(Subspace::full(p.n), qp));
  c.Nhor = intersect(c.N, hb.B.hor);
  c.N0 = Subspace(p.n * p.n);
  finish(c);
  c.report = check_bundle_calculus(c);
  for (const auto& chk : c.report.checks) require(chk.ok, chk.name);
  return c;
}

SplittingData splitting_data(const HomogeneousBundle& hb, const BundleCalculus& c, const Subspace& qp) {
  const FinHopf& p = hb.PH;
  int n = p.n;
  SplittingData s{invariant_forms(p, qp), {}};
  int k = s.invP.dim();
  ThetaMaps th = theta_map(p);
  s.theta_N = LinMap(n * k, c.calc.q.dim);
  for (int j = 0; j < c.calc.q.dim; ++j) {
    Vec y = th.theta_inv.apply(c.calc.q.section.column_dense(j));
    Vec out(n * k);
    for (int u = 0; u < n; ++u) {
      Vec sl(y.begin() + u * n, y.begin() + (u + 1) * n);
      if (is_zero(sl)) continue;
      Vec f = s.invP.project(pi_eps(p, sl));
      for (int t = 0; t < k; ++t) out[u * k + t] = f[t];
    }
    s.theta_N.set_column(j, out);
  }
  Subspace im = image(s.theta_N, c.calc.forms);
  require(im.dim() == c.calc.forms.dim() && im.dim() == n * k, "theta_N-bijective");
  return s;
}

bool left_invariant(const HomogeneousBundle& hb, const BundleCalculus& c, const Connection& w) {
  const FinHopf& p = hb.PH;
  LinMap dl = left_coaction_on_tensor(p);
  for (int j = 0; j < w.omega.cols(); ++j) {
    Vec x = c.calc.q.section.apply(w.omega.column_dense(j));
    if (!outer_slices_in(dl.apply(x) - kron(p.unit, x), p.n * p.n, c.N)) return false;
  }
  return true;
}

LinMap connection_to_splitting(const HomogeneousBundle& hb, const BundleCalculus& c,
                               const Subspace& qp, const Connection& w) {
  require(left_invariant(hb, c, w), "left-invariant");
  const FinHopf& p = hb.PH;
  int n = p.n;
  SplittingData s = splitting_data(hb, c, qp);
  LinMap ibar(s.invP.dim(), c.inv.dim());
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec x = c.calc.q.section.apply(w.omega.column_dense(j));
    Vec e(n);
    for (int u = 0; u < n; ++u)
      if (!p.eps[u].is_zero())
        for (int v = 0; v < n; ++v) e[v] += p.eps[u] * x[u * n + v];
    ibar.set_column(j, s.invP.project(e));
  }
  return ibar;
}

Connection splitting_to_connection(const HomogeneousBundle& hb, const BundleCalculus& c,
                                   const Subspace& qp, const LinMap& ibar) {
  const FinHopf& p = hb.PH;
  SplittingData s = splitting_data(hb, c, qp);
  ThetaMaps th = theta_map(p);
  Connection w{LinMap(c.calc.q.dim, c.inv.dim()), "splitting"};
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec v = s.invP.lift(ibar.column_dense(j));
    w.omega.set_column(j, c.calc.project(th.theta.apply(kron(p.unit, v))));
  }
  AxiomReport r = check_connection(c, w);
  for (const auto& chk : r.checks) require(chk.ok, chk.name);
  return w;
}

bool splitting_valid(const HomogeneousBundle& hb, const BundleCalculus& c, const Subspace& qp,
                     const LinMap& ibar) {
  const FinHopf& p = hb.PH;
  const FinHopf& h = hb.B.P.H;
  InvariantForms invP = invariant_forms(p, qp);
  LinMap adp = kron(LinMap::identity(p.n), hb.pi).after(adjoint_coaction(p));
  LinMap adh = adjoint_coaction(h);
  int k = invP.dim();
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec v = invP.lift(ibar.column_dense(j));
    if (c.inv.project(pi_eps(h, hb.pi.apply(v))) != unit(c.inv.dim(), j)) return false;
    Vec lhs(k * h.n), rhs(k * h.n);
    for (const auto& [t, x] : sparse(adp.apply(v)))
      axpy(lhs, x, kron(invP.project(pi_eps(p, p.basis(t / h.n))), h.basis(t % h.n)));
    Vec lift = c.inv.lift(unit(c.inv.dim(), j));
    for (const auto& [t, x] : sparse(adh.apply(lift))) {
      Vec f = ibar.apply(c.inv.project(pi_eps(h, h.basis(t / h.n))));
      axpy(rhs, x, kron(f, h.basis(t % h.n)));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace qb
