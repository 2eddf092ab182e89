#include "qbundle/linalg.hpp"

#include <algorithm>
#include <iterator>
#include <deque>
#include <stdexcept>

namespace qb {

Vec zeros(int n) { return Vec(n); }

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec scaled(const Vec& x, const Scalar& a) {
  Vec r(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r[i] = x[i] * a;
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Scalar(1), b);
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Scalar(-1), b);
  return r;
}

SVec sparse(const Vec& v) {
  SVec s;
  for (int i = 0; i < int(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec dense(const SVec& v, int n) {
  Vec d(n);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

Vec kron(const Vec& u, const Vec& v) {
  Vec r(u.size() * v.size());
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r[i * v.size() + j] = u[i] * v[j];
  }
  return r;
}

// ---------------------------------------------------------------- LinMap

LinMap LinMap::identity(int n) {
  LinMap m(n, n);
  for (int i = 0; i < n; ++i) m.col_[i] = {{i, Scalar(1)}};
  return m;
}

LinMap LinMap::from_columns(int rows, const std::vector<Vec>& cols) {
  LinMap m(rows, int(cols.size()));
  for (int c = 0; c < int(cols.size()); ++c) m.set_column(c, cols[c]);
  return m;
}

void LinMap::set_column(int c, const Vec& v) {
  if (int(v.size()) != rows_) throw std::invalid_argument("column length mismatch");
  col_[c] = sparse(v);
}

void LinMap::add(int r, int c, const Scalar& v) {
  if (v.is_zero()) return;
  auto& col = col_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, int k) { return e.first < k; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second.is_zero()) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

Scalar LinMap::at(int r, int c) const {
  for (const auto& [i, x] : col_[c])
    if (i == r) return x;
  return Scalar();
}

Vec LinMap::apply(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
  Vec r(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [i, x] : col_[c]) r[i] += x * v[c];
  }
  return r;
}

LinMap LinMap::after(const LinMap& g) const {
  if (g.rows_ != cols_) throw std::invalid_argument("dimension mismatch in compose");
  LinMap m(rows_, g.cols_);
  for (int c = 0; c < g.cols_; ++c) {
    Vec r(rows_);
    for (const auto& [k, y] : g.col_[c])
      for (const auto& [i, x] : col_[k]) r[i] += x * y;
    m.col_[c] = sparse(r);
  }
  return m;
}

LinMap LinMap::operator+(const LinMap& o) const {
  LinMap m = *this;
  for (int c = 0; c < cols_; ++c)
    for (const auto& [i, x] : o.col_[c]) m.add(i, c, x);
  return m;
}

LinMap LinMap::operator-(const LinMap& o) const { return *this + o.scaled(Scalar(-1)); }

LinMap LinMap::scaled(const Scalar& a) const {
  LinMap m(rows_, cols_);
  if (a.is_zero()) return m;
  for (int c = 0; c < cols_; ++c)
    for (const auto& [i, x] : col_[c]) m.col_[c].emplace_back(i, x * a);
  return m;
}

bool LinMap::operator==(const LinMap& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && col_ == o.col_;
}

std::vector<Vec> LinMap::dense_rows() const {
  std::vector<Vec> r(rows_, Vec(cols_));
  for (int c = 0; c < cols_; ++c)
    for (const auto& [i, x] : col_[c]) r[i][c] = x;
  return r;
}

LinMap kron(const LinMap& f, const LinMap& g) {
  LinMap m(f.rows() * g.rows(), f.cols() * g.cols());
  for (int a = 0; a < f.cols(); ++a)
    for (int b = 0; b < g.cols(); ++b) {
      SVec col;
      for (const auto& [i, x] : f.column(a))
        for (const auto& [j, y] : g.column(b)) col.emplace_back(i * g.rows() + j, x * y);
      std::sort(col.begin(), col.end(),
                [](const Entry& l, const Entry& r) { return l.first < r.first; });
      m.set_column(a * g.cols() + b, std::move(col));
    }
  return m;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::full(int n) {
  Subspace s(n);
  for (int i = 0; i < n; ++i) s.add(unit(n, i));
  return s;
}

void Subspace::reduce_in_place(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[piv_[r]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int k : nz_[r]) v[k] -= f * rows_[r][k];
  }
}

Vec Subspace::reduce(Vec v) const {
  if (int(v.size()) != n_) throw std::invalid_argument("ambient dimension mismatch");
  reduce_in_place(v);
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (const auto& r : o.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::add(Vec v) {
  if (int(v.size()) != n_) throw std::invalid_argument("ambient dimension mismatch");
  if (int(rows_.size()) == n_) return false;
  reduce_in_place(v);
  int p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar inv = v[p].inv();
  std::vector<int> nz;
  for (int k = p; k < n_; ++k)
    if (!v[k].is_zero()) {
      v[k] *= inv;
      nz.push_back(k);
    }
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][p].is_zero()) continue;
    Scalar f = rows_[r][p];
    for (int k : nz) rows_[r][k] -= f * v[k];
    std::vector<int> z;
    z.reserve(nz_[r].size() + nz.size());
    std::set_union(nz_[r].begin(), nz_[r].end(), nz.begin(), nz.end(), std::back_inserter(z));
    std::erase_if(z, [&](int k) { return rows_[r][k].is_zero(); });
    nz_[r] = std::move(z);
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  piv_.insert(piv_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  nz_.insert(nz_.begin() + pos, std::move(nz));
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return n_ == o.n_ && piv_ == o.piv_ && rows_ == o.rows_;
}

Subspace echelonize(int ambient, const std::vector<Vec>& rows) {
  Subspace s(ambient);
  for (const auto& r : rows) s.add(r);
  return s;
}

Subspace kernel(const LinMap& f) {
  Subspace rowspace = echelonize(f.cols(), f.dense_rows());
  const auto& piv = rowspace.pivots();
  std::vector<char> is_piv(f.cols(), 0);
  for (int p : piv) is_piv[p] = 1;
  Subspace k(f.cols());
  for (int j = 0; j < f.cols(); ++j) {
    if (is_piv[j]) continue;
    Vec v(f.cols());
    v[j] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rowspace.rows()[r][j];
    k.add(std::move(v));
  }
  return k;
}

Subspace image(const LinMap& f) {
  Subspace s(f.rows());
  for (int c = 0; c < f.cols(); ++c) s.add(f.column_dense(c));
  return s;
}

Subspace image(const LinMap& f, const Subspace& s) {
  Subspace r(f.rows());
  for (const auto& v : s.rows()) r.add(f.apply(v));
  return r;
}

Subspace preimage(const LinMap& f, const Subspace& s) {
  Quotient q = quotient(s);
  return kernel(q.projection.after(f));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  int n = a.ambient();
  // Zassenhaus: rows (x, x) for x in a and (y, 0) for y in b
  Subspace z(2 * n);
  for (const auto& x : a.rows()) {
    Vec v(2 * n);
    for (int i = 0; i < n; ++i) v[i] = v[n + i] = x[i];
    z.add(std::move(v));
  }
  for (const auto& y : b.rows()) {
    Vec v(2 * n);
    for (int i = 0; i < n; ++i) v[i] = y[i];
    z.add(std::move(v));
  }
  Subspace r(n);
  for (size_t k = 0; k < z.rows().size(); ++k) {
    if (z.pivots()[k] < n) continue;
    r.add(Vec(z.rows()[k].begin() + n, z.rows()[k].end()));
  }
  return r;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
  Subspace r = a;
  for (const auto& v : b.rows()) r.add(v);
  return r;
}

Subspace saturate(const std::vector<Vec>& seed, const std::vector<LinMap>& ops, int ambient, int cap) {
  Subspace s(ambient);
  int limit = cap < 0 ? ambient : cap;
  std::deque<Vec> work;
  for (const auto& v : seed)
    if (s.add(v)) work.push_back(v);
  while (!work.empty() && s.dim() < limit) {
    Vec v = std::move(work.front());
    work.pop_front();
    for (const auto& op : ops) {
      Vec w = op.apply(v);
      if (s.add(w)) work.push_back(std::move(w));
    }
  }
  return s;
}

Subspace saturate(const Subspace& seed, const std::vector<LinMap>& ops) {
  return saturate(seed.rows(), ops, seed.ambient());
}

Subspace tensor(const Subspace& v, const Subspace& w) {
  Subspace r(v.ambient() * w.ambient());
  for (const auto& a : v.rows())
    for (const auto& b : w.rows()) r.add(kron(a, b));
  return r;
}

Quotient quotient(const Subspace& n) {
  int amb = n.ambient();
  std::vector<char> is_piv(amb, 0);
  for (int p : n.pivots()) is_piv[p] = 1;
  Quotient q;
  for (int j = 0; j < amb; ++j)
    if (!is_piv[j]) q.reps.push_back(j);
  q.dim = int(q.reps.size());
  std::vector<int> pos(amb, -1);
  for (int k = 0; k < q.dim; ++k) pos[q.reps[k]] = k;
  q.projection = LinMap(q.dim, amb);
  q.section = LinMap(amb, q.dim);
  for (int k = 0; k < q.dim; ++k) q.section.add(q.reps[k], k, Scalar(1));
  for (int j = 0; j < amb; ++j) {
    if (!is_piv[j]) {
      q.projection.add(pos[j], j, Scalar(1));
      continue;
    }
    Vec v = n.reduce(unit(amb, j));
    for (int k = 0; k < q.dim; ++k)
      if (!v[q.reps[k]].is_zero()) q.projection.add(k, j, v[q.reps[k]]);
  }
  return q;
}

std::optional<Vec> solve(const LinMap& f, const Vec& b) {
  // echelonize the augmented rows [A | b]
  auto rows = f.dense_rows();
  int n = f.cols();
  Subspace s(n + 1);
  for (int i = 0; i < f.rows(); ++i) {
    Vec r = rows[i];
    r.push_back(b[i]);
    s.add(std::move(r));
  }
  Vec x(n);
  for (size_t k = 0; k < s.rows().size(); ++k) {
    int p = s.pivots()[k];
    if (p == n) return std::nullopt;
    x[p] = s.rows()[k][n];
  }
  return x;
}

}  // namespace qb
