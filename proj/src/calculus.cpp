#include "qbundle/calculus.hpp"

#include <stdexcept>

namespace qb {

std::vector<LinMap> UniversalCalculus::bimodule_ops() const {
  std::vector<LinMap> ops = left;
  ops.insert(ops.end(), right.begin(), right.end());
  return ops;
}

UniversalCalculus universal_calculus(const FinAlgebra& a) {
  UniversalCalculus u;
  u.A = a;
  int n = a.n;
  u.omega1 = kernel(a.mu);
  u.dU = LinMap(n * n, n);
  for (int i = 0; i < n; ++i) u.dU.set_column(i, kron(a.unit, a.basis(i)) - kron(a.basis(i), a.unit));
  LinMap id = LinMap::identity(n);
  for (int i = 0; i < n; ++i) {
    u.left.push_back(kron(a.left(a.basis(i)), id));
    u.right.push_back(kron(id, a.right(a.basis(i))));
  }
  return u;
}

bool is_subbimodule(const UniversalCalculus& u, const Subspace& n) {
  if (!u.omega1.contains(n)) return false;
  for (const auto& r : n.rows())
    for (const auto& op : u.bimodule_ops())
      if (!n.contains(op.apply(r))) return false;
  return true;
}

QuotientCalculus quotient_calculus(const UniversalCalculus& u, const Subspace& n) {
  if (!is_subbimodule(u, n)) throw std::invalid_argument("N is not a subbimodule of Ω¹A");
  QuotientCalculus c;
  c.U = u;
  c.N = n;
  c.q = quotient(n);
  c.forms = image(c.q.projection, u.omega1);
  c.d = c.q.projection.after(u.dU);
  return c;
}

bool leibniz_holds(const QuotientCalculus& c) {
  const FinAlgebra& a = c.U.A;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Vec lhs = c.U.dU.apply(a.mul(a.basis(i), a.basis(j)));
      Vec rhs = c.U.right[j].apply(c.U.dU.apply(a.basis(i))) + c.U.left[i].apply(c.U.dU.apply(a.basis(j)));
      if (!c.same_form(lhs, rhs)) return false;
    }
  return true;
}

bool spans_forms(const QuotientCalculus& c) {
  const FinAlgebra& a = c.U.A;
  Subspace s(c.q.dim);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) s.add(c.project(c.U.left[i].apply(c.U.dU.apply(a.basis(j)))));
  return s == c.forms;
}

ThetaMaps theta_map(const FinHopf& h) {
  int n = h.n;
  ThetaMaps t{LinMap(n * n, n * n), LinMap(n * n, n * n)};
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      Vec fwd(n * n), bwd(n * n);
      for (const auto& [k, c] : h.delta.column(x)) {
        int a = k / n, b = k % n;
        axpy(fwd, c, kron(h.mul(h.basis(g), h.S.column_dense(a)), h.basis(b)));
        axpy(bwd, c, kron(h.mul(h.basis(g), h.basis(a)), h.basis(b)));
      }
      t.theta.set_column(g * n + x, fwd);
      t.theta_inv.set_column(g * n + x, bwd);
    }
  return t;
}

Vec InvariantForms::coords(const Vec& h) const {
  Vec c(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) c[i] = h[idx[i]];
  return c;
}

Vec InvariantForms::project(const Vec& h) const { return quo.projection.apply(coords(h)); }

Vec InvariantForms::lift(const Vec& form) const { return basis.apply(quo.section.apply(form)); }

InvariantForms invariant_forms(const FinHopf& h, const Subspace& q) {
  InvariantForms f;
  int n = h.n;
  f.k0 = 0;
  while (h.eps[f.k0].is_zero()) ++f.k0;
  f.basis = LinMap(n, n - 1);
  for (int k = 0, c = 0; k < n; ++k) {
    if (k == f.k0) continue;
    f.idx.push_back(k);
    Vec b = h.basis(k);
    b[f.k0] -= h.eps[k] / h.eps[f.k0];
    f.basis.set_column(c++, b);
  }
  f.Q = Subspace(n - 1);
  for (const auto& r : q.rows()) f.Q.add(f.coords(r));
  f.quo = quotient(f.Q);
  return f;
}

bool is_right_ideal(const FinAlgebra& a, const Subspace& q) {
  for (const auto& r : q.rows())
    for (int i = 0; i < a.n; ++i)
      if (!q.contains(a.mul(r, a.basis(i)))) return false;
  return true;
}

LeftCovariantCalculus calculus_from_ideal(const FinHopf& h, const Subspace& q) {
  if (!counit_kernel(h).contains(q)) throw std::invalid_argument("Q is not inside ker ε");
  if (!is_right_ideal(h, q)) throw std::invalid_argument("Q is not a right ideal");
  LeftCovariantCalculus c;
  c.H = h;
  c.Q = q;
  c.th = theta_map(h);
  Subspace n = image(c.th.theta, tensor(Subspace::full(h.n), q));
  c.calc = quotient_calculus(universal_calculus(h), n);
  c.inv = invariant_forms(h, q);
  if (c.calc.dim() != h.n * c.inv.dim())
    throw std::logic_error("Ω¹(H) is not free of rank dim(ker ε/Q)");
  return c;
}

bool bicovariance_check(const FinHopf& h, const Subspace& q) {
  LinMap ad = adjoint_coaction(h);
  Subspace qh = tensor(q, Subspace::full(h.n));
  for (const auto& r : q.rows())
    if (!qh.contains(ad.apply(r))) return false;
  return true;
}

LinMap left_coaction_on_tensor(const FinHopf& h) {
  int n = h.n;
  LinMap m(n * n * n, n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (const auto& [k, x] : h.delta.column(u))
        for (const auto& [l, y] : h.delta.column(v)) {
          Vec prod = h.mul(h.basis(k / n), h.basis(l / n));
          for (const auto& [p, z] : sparse(prod)) m.add(p * n * n + (k % n) * n + l % n, u * n + v, x * y * z);
        }
  return m;
}

bool left_covariant(const LeftCovariantCalculus& c) {
  LinMap dl = left_coaction_on_tensor(c.H);
  Subspace hn = tensor(Subspace::full(c.H.n), c.calc.N);
  for (const auto& r : c.calc.N.rows())
    if (!hn.contains(dl.apply(r))) return false;
  return true;
}

Subspace ideal_from_submodule(const FinHopf& h, const Subspace& n) {
  LinMap proj = kron(h.counit_map(), LinMap::identity(h.n));
  return image(proj, n);
}

LinMap maurer_cartan(const LeftCovariantCalculus& c) {
  if (!bicovariance_check(c.H, c.Q)) throw std::invalid_argument("Q is not Ad-stable");
  const FinHopf& h = c.H;
  for (const auto& r : c.Q.rows())
    if (!c.calc.N.contains(c.th.theta.apply(kron(h.unit, r))))
      throw std::logic_error("Maurer-Cartan form does not vanish on Q");
  LinMap w(c.calc.q.dim, c.inv.dim());
  for (int j = 0; j < c.inv.dim(); ++j) {
    Vec lift = c.inv.lift(unit(c.inv.dim(), j));
    w.set_column(j, c.calc.project(c.th.theta.apply(kron(h.unit, lift))));
  }
  return w;
}

}  // namespace qb
