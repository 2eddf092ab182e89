#include "qbundle/hopf.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qb {

// ---------------------------------------------------------------- Group

int Group::inv(int a) const {
  for (int b = 0; b < size(); ++b)
    if (table[a][b] == e) return b;
  throw std::logic_error("element without inverse");
}

int Group::pow(int a, int k) const {
  if (k < 0) return pow(inv(a), -k);
  int r = e;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int Group::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  throw std::invalid_argument("unknown group element " + name);
}

void Group::validate() const {
  int n = size();
  if (n == 0) throw std::invalid_argument("empty group");
  if (int(table.size()) != n) throw std::invalid_argument("table has wrong number of rows");
  for (const auto& row : table) {
    if (int(row.size()) != n) throw std::invalid_argument("table row has wrong length");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("table entry out of range");
  }
  if (e < 0 || e >= n) throw std::invalid_argument("identity index out of range");
  for (int a = 0; a < n; ++a)
    if (table[e][a] != a || table[a][e] != a) throw std::invalid_argument("identity law fails");
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) seen[table[a][b]] = 1;
    for (char s : seen)
      if (!s) throw std::invalid_argument("row is not a permutation (no inverses)");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("table is not associative");
}

Group Group::cyclic(int n, const std::string& gen) {
  Group g;
  for (int i = 0; i < n; ++i)
    g.names.push_back(i == 0 ? "e" : i == 1 ? gen : gen + "^" + std::to_string(i));
  g.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

Group Group::from_permutations(const std::vector<std::vector<int>>& gens,
                               const std::vector<std::string>& gen_names) {
  int m = gens.empty() ? 0 : int(gens[0].size());
  std::vector<int> id(m);
  for (int i = 0; i < m; ++i) id[i] = i;
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(m);
    for (int i = 0; i < m; ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::vector<std::string> names{"e"};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (size_t k = 0; k < elems.size(); ++k)
    for (size_t g = 0; g < gens.size(); ++g) {
      auto p = compose(elems[k], gens[g]);
      if (index.count(p)) continue;
      index[p] = int(elems.size());
      elems.push_back(p);
      names.push_back(k == 0 ? gen_names[g] : names[k] + gen_names[g]);
    }
  Group G;
  G.names = names;
  int n = int(elems.size());
  G.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) G.table[a][b] = index.at(compose(elems[a], elems[b]));
  return G;
}

Group Group::symmetric3() { return from_permutations({{1, 0, 2}, {0, 2, 1}}, {"a", "b"}); }

Group Group::product(const Group& a, const Group& b) {
  Group g;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      g.names.push_back(i == a.e && j == b.e ? "e" : "(" + a.names[i] + "," + b.names[j] + ")");
  int n = a.size() * b.size();
  g.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      g.table[x][y] = a.mul(x / b.size(), y / b.size()) * b.size() +
                      b.mul(x % b.size(), y % b.size());
  g.e = a.e * b.size() + b.e;
  return g;
}

// ---------------------------------------------------------------- FinAlgebra

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r(n);
  for (int i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const auto& col = mu.column(i * n + j);
      if (col.empty()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, x] : col) r[k] += c * x;
    }
  }
  return r;
}

LinMap FinAlgebra::left(const Vec& a) const {
  LinMap m(n, n);
  for (int j = 0; j < n; ++j) m.set_column(j, mul(a, basis(j)));
  return m;
}

LinMap FinAlgebra::right(const Vec& a) const {
  LinMap m(n, n);
  for (int j = 0; j < n; ++j) m.set_column(j, mul(basis(j), a));
  return m;
}

std::vector<LinMap> FinAlgebra::left_ops() const {
  std::vector<LinMap> r;
  for (int i = 0; i < n; ++i) r.push_back(left(basis(i)));
  return r;
}

std::vector<LinMap> FinAlgebra::right_ops() const {
  std::vector<LinMap> r;
  for (int i = 0; i < n; ++i) r.push_back(right(basis(i)));
  return r;
}

std::vector<LinMap> FinAlgebra::bimodule_ops_on_tensor() const {
  std::vector<LinMap> r;
  LinMap id = LinMap::identity(n);
  for (int i = 0; i < n; ++i) r.push_back(kron(left(basis(i)), id));
  for (int i = 0; i < n; ++i) r.push_back(kron(id, right(basis(i))));
  return r;
}

FinAlgebra FinAlgebra::from_table(int n, std::vector<std::string> labels,
                                  const std::vector<std::vector<Vec>>& prod, Vec unit) {
  FinAlgebra a;
  a.n = n;
  a.labels = std::move(labels);
  a.mu = LinMap(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.mu.set_column(i * n + j, prod[i][j]);
  a.unit = std::move(unit);
  return a;
}

FinAlgebra FinAlgebra::functions(const std::vector<std::string>& points) {
  FinAlgebra a;
  a.n = int(points.size());
  for (const auto& p : points) a.labels.push_back("d:" + p);
  a.mu = LinMap(a.n, a.n * a.n);
  a.unit = Vec(a.n);
  for (int i = 0; i < a.n; ++i) {
    a.mu.add(i, i * a.n + i, Scalar(1));
    a.unit[i] = Scalar(1);
  }
  return a;
}

FinAlgebra FinAlgebra::ground() {
  FinAlgebra a;
  a.n = 1;
  a.labels = {"1"};
  a.mu = LinMap(1, 1);
  a.mu.add(0, 0, Scalar(1));
  a.unit = {Scalar(1)};
  return a;
}

FinAlgebra tensor_algebra(const FinAlgebra& a, const FinAlgebra& b) {
  FinAlgebra t;
  t.n = a.n * b.n;
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) t.labels.push_back(x + "⊗" + y);
  t.mu = LinMap(t.n, t.n * t.n);
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      Vec r = tensor_mul(a, b, unit(t.n, x), unit(t.n, y));
      t.mu.set_column(x * t.n + y, r);
    }
  t.unit = kron(a.unit, b.unit);
  return t;
}

Vec tensor_mul(const FinAlgebra& a, const FinAlgebra& b, const Vec& x, const Vec& y) {
  int nb = b.n;
  Vec r(a.n * nb);
  for (int p = 0; p < int(x.size()); ++p) {
    if (x[p].is_zero()) continue;
    for (int s = 0; s < int(y.size()); ++s) {
      if (y[s].is_zero()) continue;
      const auto& ca = a.mu.column((p / nb) * a.n + s / nb);
      const auto& cb = b.mu.column((p % nb) * nb + s % nb);
      if (ca.empty() || cb.empty()) continue;
      Scalar c = x[p] * y[s];
      for (const auto& [i, u] : ca)
        for (const auto& [j, v] : cb) r[i * nb + j] += c * u * v;
    }
  }
  return r;
}

// ---------------------------------------------------------------- FinHopf

Scalar FinHopf::counit(const Vec& h) const {
  Scalar s;
  for (int i = 0; i < n; ++i)
    if (!h[i].is_zero() && !eps[i].is_zero()) s += h[i] * eps[i];
  return s;
}

LinMap FinHopf::counit_map() const {
  LinMap m(1, n);
  for (int i = 0; i < n; ++i) m.add(0, i, eps[i]);
  return m;
}

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

std::string AxiomReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.ok ? "pass" : "FAIL");
    if (!c.ok) os << " (witness " << c.witness << ")";
    os << "\n";
  }
  return os.str();
}

FinHopf function_algebra(const Group& g) {
  g.validate();
  FinHopf h;
  static_cast<FinAlgebra&>(h) = FinAlgebra::functions(g.names);
  int n = g.size();
  h.delta = LinMap(n * n, n);
  h.eps = Vec(n);
  h.S = LinMap(n, n);
  for (int x = 0; x < n; ++x) {
    for (int a = 0; a < n; ++a) h.delta.add(a * n + g.mul(g.inv(a), x), x, Scalar(1));
    h.S.add(g.inv(x), x, Scalar(1));
  }
  h.eps[g.e] = Scalar(1);
  return h;
}

FinHopf group_algebra(const Group& g) {
  g.validate();
  FinHopf h;
  int n = g.size();
  h.n = n;
  h.labels = g.names;
  h.mu = LinMap(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h.mu.add(g.mul(a, b), a * n + b, Scalar(1));
  h.unit = qb::unit(n, g.e);
  h.delta = LinMap(n * n, n);
  h.eps = Vec(n, Scalar(1));
  h.S = LinMap(n, n);
  for (int a = 0; a < n; ++a) {
    h.delta.add(a * n + a, a, Scalar(1));
    h.S.add(g.inv(a), a, Scalar(1));
  }
  return h;
}

FinHopf tensor_hopf(const FinHopf& a, const FinHopf& b) {
  FinHopf t;
  static_cast<FinAlgebra&>(t) = tensor_algebra(a, b);
  int n = t.n, nb = b.n;
  t.delta = LinMap(n * n, n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < nb; ++y)
      for (const auto& [i, u] : a.delta.column(x))
        for (const auto& [j, v] : b.delta.column(y)) {
          int a1 = i / a.n, a2 = i % a.n, b1 = j / nb, b2 = j % nb;
          t.delta.add((a1 * nb + b1) * n + a2 * nb + b2, x * nb + y, u * v);
        }
  t.eps = kron(a.eps, b.eps);
  t.S = kron(a.S, b.S);
  return t;
}

namespace {

void record(AxiomReport& r, const std::string& name, int witness) {
  r.checks.push_back({name, witness < 0, witness});
}

}  // namespace

AxiomReport check_algebra_axioms(const FinAlgebra& a) {
  AxiomReport r;
  int n = a.n, w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    for (int j = 0; j < n && w < 0; ++j) {
      Vec ij = a.mu.column_dense(i * n + j);
      for (int k = 0; k < n && w < 0; ++k) {
        Vec lhs = a.mul(ij, a.basis(k));
        Vec rhs = a.mul(a.basis(i), a.mu.column_dense(j * n + k));
        if (lhs != rhs) w = (i * n + j) * n + k;
      }
    }
  record(r, "associativity", w);
  w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    if (a.mul(a.unit, a.basis(i)) != a.basis(i) || a.mul(a.basis(i), a.unit) != a.basis(i)) w = i;
  record(r, "unit", w);
  return r;
}

LinMap double_coproduct(const FinHopf& h) {
  return kron(h.delta, LinMap::identity(h.n)).after(h.delta);
}

AxiomReport check_hopf_axioms(const FinHopf& h) {
  AxiomReport r = check_algebra_axioms(h);
  int n = h.n, w;
  LinMap id = LinMap::identity(n);
  LinMap l3 = double_coproduct(h);
  LinMap r3 = kron(id, h.delta).after(h.delta);
  w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    if (l3.column(i) != r3.column(i)) w = i;
  record(r, "coassociativity", w);

  LinMap eps = h.counit_map();
  LinMap left_counit = kron(eps, id).after(h.delta);
  LinMap right_counit = kron(id, eps).after(h.delta);
  w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    if (left_counit.column_dense(i) != h.basis(i) || right_counit.column_dense(i) != h.basis(i)) w = i;
  record(r, "counit", w);

  w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    for (int j = 0; j < n && w < 0; ++j) {
      Vec lhs = h.delta.apply(h.mu.column_dense(i * n + j));
      Vec rhs = tensor_mul(h, h, h.delta.column_dense(i), h.delta.column_dense(j));
      if (lhs != rhs) w = i * n + j;
    }
  record(r, "coproduct-multiplicative", w);
  record(r, "coproduct-unital", h.delta.apply(h.unit) == kron(h.unit, h.unit) ? -1 : 0);

  w = -1;
  for (int i = 0; i < n && w < 0; ++i)
    for (int j = 0; j < n && w < 0; ++j)
      if (h.counit(h.mu.column_dense(i * n + j)) != h.eps[i] * h.eps[j]) w = i * n + j;
  record(r, "counit-multiplicative", w);
  record(r, "counit-unital", h.counit(h.unit) == Scalar(1) ? -1 : 0);

  int wl = -1, wr = -1;
  for (int i = 0; i < n; ++i) {
    Vec sl(n), sr(n);
    for (const auto& [k, c] : h.delta.column(i)) {
      Vec a = h.basis(k / n), b = h.basis(k % n);
      axpy(sl, c, h.mul(h.S.apply(a), b));
      axpy(sr, c, h.mul(a, h.S.apply(b)));
    }
    Vec expect = scaled(h.unit, h.eps[i]);
    if (wl < 0 && sl != expect) wl = i;
    if (wr < 0 && sr != expect) wr = i;
  }
  record(r, "antipode-left", wl);
  record(r, "antipode-right", wr);
  return r;
}

LinMap adjoint_coaction(const FinHopf& h) {
  int n = h.n;
  LinMap trip = double_coproduct(h);
  LinMap ad(n * n, n);
  for (int i = 0; i < n; ++i) {
    Vec out(n * n);
    for (const auto& [k, c] : trip.column(i)) {
      int a = k / (n * n), b = (k / n) % n, d = k % n;
      Vec right = h.mul(h.S.column_dense(a), h.basis(d));
      for (int t = 0; t < n; ++t)
        if (!right[t].is_zero()) out[b * n + t] += c * right[t];
    }
    ad.set_column(i, out);
  }
  return ad;
}

LinMap convolution(const FinHopf& c, const FinAlgebra& a, const LinMap& f, const LinMap& g) {
  LinMap m(a.n, c.n);
  for (int i = 0; i < c.n; ++i) {
    Vec out(a.n);
    for (const auto& [k, x] : c.delta.column(i))
      axpy(out, x, a.mul(f.column_dense(k / c.n), g.column_dense(k % c.n)));
    m.set_column(i, out);
  }
  return m;
}

LinMap convolution_inverse(const FinHopf& c, const FinAlgebra& a, const LinMap& f) {
  int na = a.n, nc = c.n;
  // unknown x[r*nc + b] is coordinate r of g(e_b)
  LinMap sys(2 * na * nc, na * nc);
  Vec rhs(2 * na * nc);
  for (int i = 0; i < nc; ++i) {
    for (int t = 0; t < na; ++t) rhs[i * na + t] = rhs[na * nc + i * na + t] = c.eps[i] * a.unit[t];
    for (const auto& [k, x] : c.delta.column(i)) {
      int p = k / nc, q = k % nc;
      Vec fp = f.column_dense(p), fq = f.column_dense(q);
      for (int r = 0; r < na; ++r) {
        Vec left = a.mul(fp, a.basis(r));   // f(p) e_r, unknown g(q)_r
        Vec right = a.mul(a.basis(r), fq);  // e_r f(q), unknown g(p)_r
        for (int t = 0; t < na; ++t) {
          if (!left[t].is_zero()) sys.add(i * na + t, r * nc + q, x * left[t]);
          if (!right[t].is_zero()) sys.add(na * nc + i * na + t, r * nc + p, x * right[t]);
        }
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) throw std::domain_error("map is not convolution-invertible");
  LinMap g(na, nc);
  for (int r = 0; r < na; ++r)
    for (int b = 0; b < nc; ++b) g.add(r, b, (*sol)[r * nc + b]);
  return g;
}

Vec left_integral(const FinHopf& h) {
  int n = h.n;
  LinMap sys(n * n + 1, n);
  Vec rhs(n * n + 1);
  for (int i = 0; i < n; ++i) {
    for (const auto& [k, x] : h.delta.column(i)) sys.add(i * n + k % n, k / n, x);
    for (int t = 0; t < n; ++t) sys.add(i * n + t, i, -h.unit[t]);
  }
  for (int i = 0; i < n; ++i) sys.add(n * n, i, h.unit[i]);
  rhs[n * n] = Scalar(1);
  auto sol = solve(sys, rhs);
  if (!sol) throw std::domain_error("no normalized integral");
  return *sol;
}

Subspace counit_kernel(const FinHopf& h) { return kernel(h.counit_map()); }

// ---------------------------------------------------------------- comodules

AxiomReport ComoduleAlgebra::check() const {
  AxiomReport r = check_algebra_axioms(P);
  int np = P.n, nh = H.n, w = -1;
  LinMap idp = LinMap::identity(np);
  LinMap counit = kron(idp, H.counit_map()).after(coact);
  for (int i = 0; i < np && w < 0; ++i)
    if (counit.column_dense(i) != P.basis(i)) w = i;
  record(r, "coaction-counit", w);
  LinMap lhs = kron(coact, LinMap::identity(nh)).after(coact);
  LinMap rhs = kron(idp, H.delta).after(coact);
  w = -1;
  for (int i = 0; i < np && w < 0; ++i)
    if (lhs.column(i) != rhs.column(i)) w = i;
  record(r, "coaction-coassociativity", w);
  w = -1;
  for (int i = 0; i < np && w < 0; ++i)
    for (int j = 0; j < np && w < 0; ++j) {
      Vec a = coact.apply(P.mu.column_dense(i * np + j));
      Vec b = tensor_mul(P, H, coact.column_dense(i), coact.column_dense(j));
      if (a != b) w = i * np + j;
    }
  record(r, "coaction-multiplicative", w);
  record(r, "coaction-unital", coact.apply(P.unit) == kron(P.unit, H.unit) ? -1 : 0);
  return r;
}

Subspace invariant_subalgebra(const ComoduleAlgebra& p) {
  int np = p.P.n, nh = p.H.n;
  LinMap triv(np * nh, np);
  for (int i = 0; i < np; ++i) triv.set_column(i, kron(p.P.basis(i), p.H.unit));
  Subspace m = kernel(p.coact - triv);
  for (const auto& x : m.rows())
    for (const auto& y : m.rows())
      if (!m.contains(p.P.mul(x, y))) throw std::logic_error("invariants not closed under product");
  return m;
}

ComoduleAlgebra regular_comodule(const FinHopf& h) { return {h, h, h.delta}; }

ComoduleAlgebra tensor_bundle(const FinAlgebra& m, const FinHopf& h) {
  ComoduleAlgebra c;
  c.P = tensor_algebra(m, h);
  c.H = h;
  int nh = h.n, np = c.P.n;
  c.coact = LinMap(np * nh, np);
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < nh; ++b)
      for (const auto& [k, x] : h.delta.column(b))
        c.coact.add((a * nh + k / nh) * nh + k % nh, a * nh + b, x);
  return c;
}

LinMap integral_intertwiner(const ComoduleAlgebra& p) {
  Vec lam = left_integral(p.H);
  LinMap j(p.P.n, p.H.n);
  for (int i = 0; i < p.H.n; ++i) j.set_column(i, scaled(p.P.unit, lam[i]));
  return j;
}

}  // namespace qb
