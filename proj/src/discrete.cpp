#include "qbundle/discrete.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qb {

bool DiscreteComplex::edge(int i, int j) const { return edge_index(i, j) >= 0; }

int DiscreteComplex::edge_index(int i, int j) const {
  auto it = std::lower_bound(E.begin(), E.end(), Edge{i, j});
  return it != E.end() && *it == Edge{i, j} ? int(it - E.begin()) : -1;
}

void DiscreteComplex::validate() const {
  for (const auto& [i, j] : E)
    if (i == j || i < 0 || j < 0 || i >= n() || j >= n()) throw std::invalid_argument("illegal edge");
  for (const auto& [i, j] : F0)
    if (!edge(i, j) || !edge(j, i)) throw std::invalid_argument("F0 entry without both orientations");
  for (const auto& [i, j, k] : F)
    if (!edge(i, j) || !edge(j, k) || !edge(i, k)) throw std::invalid_argument("F entry with a missing edge");
}

DiscreteComplex DiscreteComplex::make(int n, std::vector<Edge> e, std::vector<Edge> f0, std::vector<Face> f) {
  DiscreteComplex k;
  for (int i = 0; i < n; ++i) k.labels.push_back(std::to_string(i));
  auto tidy = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  tidy(e);
  tidy(f0);
  tidy(f);
  k.E = std::move(e);
  k.F0 = std::move(f0);
  k.F = std::move(f);
  k.validate();
  return k;
}

std::vector<std::vector<int>> form_tuples(int points, int degree) {
  std::vector<std::vector<int>> out{{}};
  for (int pos = 0; pos <= degree; ++pos) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int i = 0; i < points; ++i)
        if (t.empty() || t.back() != i) {
          next.push_back(t);
          next.back().push_back(i);
        }
    out = std::move(next);
  }
  return out;
}

namespace {

std::map<std::vector<int>, int> tuple_index(int points, int degree) {
  std::map<std::vector<int>, int> idx;
  auto ts = form_tuples(points, degree);
  for (int i = 0; i < int(ts.size()); ++i) idx[ts[i]] = i;
  return idx;
}

}  // namespace

LinMap universal_d(int points, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  auto rows = form_tuples(points, degree);
  auto cols = tuple_index(points, degree - 1);
  LinMap d(int(rows.size()), int(cols.size()));
  for (int r = 0; r < int(rows.size()); ++r)
    for (int j = 0; j <= degree; ++j) {
      std::vector<int> s = rows[r];
      s.erase(s.begin() + j);
      auto it = cols.find(s);
      if (it != cols.end()) d.add(r, it->second, Scalar(j % 2 ? -1 : 1));
    }
  return d;
}

Vec form_product(int points, const Vec& f, int nf, const Vec& g, int ng) {
  auto rows = form_tuples(points, nf + ng);
  auto fi = tuple_index(points, nf), gi = tuple_index(points, ng);
  Vec out(rows.size());
  for (int r = 0; r < int(rows.size()); ++r) {
    std::vector<int> a(rows[r].begin(), rows[r].begin() + nf + 1), b(rows[r].begin() + nf, rows[r].end());
    out[r] = f[fi.at(a)] * g[gi.at(b)];
  }
  return out;
}

Subspace edges_to_submodule(int points, const std::vector<Edge>& e) {
  std::set<Edge> keep(e.begin(), e.end());
  Subspace n(points * points);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j)
      if (i != j && !keep.count({i, j})) n.add(unit(points * points, i * points + j));
  return n;
}

std::vector<Edge> edges_from_submodule(int points, const Subspace& n) {
  std::vector<Edge> e;
  int killed = 0;
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) {
      if (i == j) continue;
      if (n.contains(unit(points * points, i * points + j)))
        ++killed;
      else
        e.push_back({i, j});
    }
  if (killed != n.dim()) throw std::invalid_argument("submodule is not spanned by δ_i⊗δ_j");
  return e;
}

QuotientCalculus omega1_from_edges(int points, const std::vector<Edge>& e) {
  std::vector<std::string> names;
  for (int i = 0; i < points; ++i) names.push_back(std::to_string(i));
  return quotient_calculus(universal_calculus(FinAlgebra::functions(names)), edges_to_submodule(points, e));
}

LocalComplex omega2_local(const DiscreteComplex& k) {
  k.validate();
  LocalComplex lc{k, LinMap(int(k.E.size()), k.n()), LinMap(int(k.F0.size() + k.F.size()), int(k.E.size()))};
  for (int r = 0; r < int(k.E.size()); ++r) {
    lc.d0.add(r, k.E[r].second, Scalar(1));
    lc.d0.add(r, k.E[r].first, Scalar(-1));
  }
  int r = 0;
  for (const auto& [i, j] : k.F0) {
    lc.d1.add(r, k.edge_index(i, j), Scalar(1));
    lc.d1.add(r, k.edge_index(j, i), Scalar(1));
    ++r;
  }
  for (const auto& [i, j, l] : k.F) {
    lc.d1.add(r, k.edge_index(i, j), Scalar(1));
    lc.d1.add(r, k.edge_index(i, l), Scalar(-1));
    lc.d1.add(r, k.edge_index(j, l), Scalar(1));
    ++r;
  }
  return lc;
}

H1Result h1(const DiscreteComplex& k) {
  LocalComplex lc = omega2_local(k);
  Subspace closed = kernel(lc.d1);
  Subspace acc = image(lc.d0);
  H1Result r;
  for (const auto& v : closed.rows())
    if (acc.add(v)) r.reps.push_back(v);
  r.dim = int(r.reps.size());
  return r;
}

DiscreteComplex nerve_from_cover(const CoverDescription& c) {
  std::set<Edge> pairs;
  for (auto [i, j] : c.pairs) {
    if (i == j || i < 0 || j < 0 || i >= c.sets || j >= c.sets) throw std::invalid_argument("bad cover pair");
    pairs.insert({std::min(i, j), std::max(i, j)});
  }
  std::vector<Edge> e;
  for (auto [i, j] : pairs) {
    e.push_back({i, j});
    e.push_back({j, i});
  }
  std::vector<Face> f;
  for (Face t : c.triples) {
    std::sort(t.begin(), t.end());
    if (!pairs.count({t[0], t[1]}) || !pairs.count({t[0], t[2]}) || !pairs.count({t[1], t[2]}))
      throw std::invalid_argument("triple intersection without its pairwise intersections");
    do f.push_back(t);
    while (std::next_permutation(t.begin(), t.end()));
  }
  std::vector<Edge> f0 = e;
  return DiscreteComplex::make(c.sets, std::move(e), std::move(f0), std::move(f));
}

CoverDescription named_cover(const std::string& name) {
  if (name == "circle-3") return {3, {{0, 1}, {0, 2}, {1, 2}}, {}};
  if (name == "disk-3") return {3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
  if (name == "tetrahedron")
    return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  if (name == "point") return {1, {}, {}};
  throw std::invalid_argument("unknown cover: " + name);
}

std::vector<std::string> named_covers() { return {"circle-3", "disk-3", "tetrahedron", "point"}; }

std::optional<Vec> algebra_inverse(const FinAlgebra& a, const Vec& x) {
  auto y = solve(a.left(x), a.unit);
  if (!y || a.mul(*y, x) != a.unit) return std::nullopt;
  return y;
}

Cochain curvature(const DiscreteComplex& k, const FinAlgebra& a, const Cochain& beta) {
  Cochain f;
  auto b = [&](int i, int j) -> const Vec& { return beta[k.edge_index(i, j)]; };
  for (const auto& [i, j] : k.F0) f.push_back(b(i, j) + b(j, i) + a.mul(b(i, j), b(j, i)));
  for (const auto& [i, j, l] : k.F) f.push_back(b(i, j) + b(j, l) - b(i, l) + a.mul(b(i, j), b(j, l)));
  return f;
}

Cochain gauge_transform(const DiscreteComplex& k, const FinAlgebra& a, const Cochain& beta, const Cochain& gamma) {
  Cochain inv;
  for (const auto& g : gamma) {
    auto gi = algebra_inverse(a, g);
    if (!gi) throw std::domain_error("gauge transformation with a non-invertible value");
    inv.push_back(*gi);
  }
  Cochain out;
  for (int e = 0; e < int(k.E.size()); ++e) {
    auto [i, j] = k.E[e];
    out.push_back(a.mul(a.mul(inv[i], beta[e]), gamma[j]) + a.mul(inv[i], gamma[j]) - a.unit);
  }
  return out;
}

ModuliResult moduli_zero_curvature(const DiscreteComplex& k, int order, long budget) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  int ne = int(k.E.size()), n = k.n();
  long total = 1;
  for (int e = 0; e < ne; ++e) {
    total *= order;
    if (total > budget) throw std::length_error("enumeration budget exceeded");
  }
  FinAlgebra c = FinAlgebra::ground();
  std::vector<Scalar> beta_of(order);
  for (int t = 0; t < order; ++t) beta_of[t] = Scalar::zeta(order, t) - Scalar(1);

  ModuliResult r;
  std::set<std::vector<int>> classes;
  std::vector<int> x(ne, 0);
  for (long it = 0; it < total; ++it) {
    ++r.candidates;
    auto ex = [&](int i, int j) { return x[k.edge_index(i, j)]; };
    bool cocycle = true;
    for (const auto& [i, j] : k.F0) cocycle = cocycle && (ex(i, j) + ex(j, i)) % order == 0;
    for (const auto& [i, j, l] : k.F) cocycle = cocycle && (ex(i, j) + ex(j, l) - ex(i, l)) % order == 0;

    Cochain beta;
    for (int e = 0; e < ne; ++e) beta.push_back({beta_of[x[e]]});
    bool flat = true;
    for (const auto& v : curvature(k, c, beta)) flat = flat && is_zero(v);
    if (flat != cocycle) r.biconditional = false;

    if (cocycle) {
      ++r.cocycles;
      // canonical representative: least gauge transform with γ_0 fixed
      std::vector<int> best;
      std::vector<int> g(n, 0);
      long gauges = 1;
      for (int i = 1; i < n; ++i) gauges *= order;
      for (long gi = 0; gi < gauges; ++gi) {
        std::vector<int> y(ne);
        for (int e = 0; e < ne; ++e) {
          auto [i, j] = k.E[e];
          y[e] = ((x[e] - g[i] + g[j]) % order + order) % order;
        }
        if (best.empty() || y < best) best = y;
        for (int i = 1; i < n; ++i) {
          if (++g[i] < order) break;
          g[i] = 0;
        }
      }
      if (classes.insert(best).second) r.reps.push_back(best);
    }
    for (int e = 0; e < ne; ++e) {
      if (++x[e] < order) break;
      x[e] = 0;
    }
  }
  r.classes = int(classes.size());
  std::sort(r.reps.begin(), r.reps.end());
  return r;
}

EdgeReport induced_bundle_edges_check(int points, const std::vector<Edge>& e, const Matrix& beta1,
                                      const Matrix& beta2) {
  std::vector<std::string> names;
  for (int i = 0; i < points; ++i) names.push_back(std::to_string(i));
  FinAlgebra m = FinAlgebra::functions(names);
  FinHopf h = function_algebra(Group::cyclic(3));
  TrivialBundle t = trivial_bundle(m, h);
  int m2 = points * points;
  LinMap betaU(m2, 3);
  for (int i = 0; i < points; ++i)
    for (int j = 0; j < points; ++j) {
      if (i == j) {
        if (!beta1[i][j].is_zero() || !beta2[i][j].is_zero()) throw std::invalid_argument("β has a diagonal entry");
        continue;
      }
      betaU.add(i * points + j, 1, beta1[i][j]);
      betaU.add(i * points + j, 2, beta2[i][j]);
    }
  UniversalConnection wu = connection_from_beta_universal(t, betaU);
  Subspace q(3);
  q.add(unit(3, 2));
  Subspace nhor = sum(base_extension(t.B, t.iota, edges_to_submodule(points, e)),
                      n0_from_connection(t.B, q, wu));
  auto [c, omega] = build_calculus(t.B, q, wu, NhorChoice::of(nhor));

  EdgeReport r;
  r.calculus_dim = c.dim();
  int np = 3 * points;
  for (auto [x, y] : edges_from_submodule(np, c.N)) r.pipeline.push_back({x, y});
  std::set<Edge> base(e.begin(), e.end());
  auto nb = [&](int i, int j) { return base.count({i, j}) > 0; };
  for (int x = 0; x < np; ++x)
    for (int y = 0; y < np; ++y) {
      if (x == y) continue;
      int i = x / 3, a = x % 3, j = y / 3, b = y % 3;
      bool allowed = (a == b && nb(i, j) && beta2[i][j].is_zero()) || (i == j && (a + 1) % 3 == b) ||
                     ((a + 1) % 3 == b && nb(i, j) && beta1[i][j].is_zero());
      if (allowed) r.expected.push_back({x, y});
    }
  if (r.pipeline != r.expected) {
    r.ok = false;
    std::vector<Edge> diff;
    std::set_symmetric_difference(r.pipeline.begin(), r.pipeline.end(), r.expected.begin(), r.expected.end(),
                                  std::back_inserter(diff));
    r.mismatch = "(" + std::to_string(diff[0].first) + "," + std::to_string(diff[0].second) + ")";
  }

  // literal: Maurer-Cartan part with sign -1 and no π_ε(δ_e) terms
  // corrected: sign +1 and coefficient 1 - β²_ij on the (i,a-1)-(j,a) sector
  auto displayed = [&](bool corrected) {
    Vec disp(np * np);
    auto at = [&](int i, int a, int j, int b) -> Scalar& {
      return disp[(i * 3 + (a + 3) % 3) * np + j * 3 + (b + 3) % 3];
    };
    Scalar mc(corrected ? 1 : -1);
    for (int i = 0; i < points; ++i)
      for (int a = 0; a < 3; ++a) {
        at(i, a - 1, i, a) += mc;
        for (int j = 0; j < points; ++j) {
          if (!nb(i, j)) continue;
          if (beta2[i][j].is_zero()) at(i, a, j, a) += beta1[i][j];
          if (beta1[i][j].is_zero()) at(i, a - 1, j, a) += corrected ? Scalar(1) - beta2[i][j] : mc;
        }
      }
    Connection w{LinMap(c.calc.q.dim, 1), corrected ? "displayed, corrected" : "displayed"};
    w.omega.set_column(0, c.calc.project(disp));
    return w;
  };
  Connection literal = displayed(false), fixed = displayed(true);
  r.literal_ok = check_connection(c, literal).ok();
  r.connection_ok = check_connection(c, fixed).ok();
  r.matches_pipeline = fixed.omega == omega.omega;
  return r;
}

}  // namespace qb
