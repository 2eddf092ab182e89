#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qbundle/scalar.hpp"

namespace qb {

using Vec = std::vector<Scalar>;
using Entry = std::pair<int, Scalar>;
using SVec = std::vector<Entry>;  // sorted by index, no zeros

Vec zeros(int n);
Vec unit(int n, int i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
Vec scaled(const Vec& x, const Scalar& a);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
SVec sparse(const Vec& v);
Vec dense(const SVec& v, int n);
// (u ⊗ v) in row-major tensor coordinates
Vec kron(const Vec& u, const Vec& v);

// Linear map stored as sparse column images.
class LinMap {
 public:
  LinMap() = default;
  LinMap(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}
  static LinMap identity(int n);
  static LinMap from_columns(int rows, const std::vector<Vec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  void set_column(int c, const Vec& v);
  void set_column(int c, SVec v) { col_[c] = std::move(v); }
  void add(int r, int c, const Scalar& v);
  const SVec& column(int c) const { return col_[c]; }
  Vec column_dense(int c) const { return dense(col_[c], rows_); }
  Scalar at(int r, int c) const;

  Vec apply(const Vec& v) const;
  LinMap after(const LinMap& g) const;  // this ∘ g
  LinMap operator+(const LinMap& o) const;
  LinMap operator-(const LinMap& o) const;
  LinMap scaled(const Scalar& a) const;
  bool operator==(const LinMap& o) const;
  std::vector<Vec> dense_rows() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<SVec> col_;
};

LinMap kron(const LinMap& f, const LinMap& g);

// Subspace in reduced row echelon form with leftmost pivots.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient) {}
  static Subspace full(int n);

  int ambient() const { return n_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<Vec>& rows() const& { return rows_; }
  std::vector<Vec> rows() && { return std::move(rows_); }
  const std::vector<int>& pivots() const& { return piv_; }
  std::vector<int> pivots() && { return std::move(piv_); }

  // Reduce v against the basis; zero iff v lies in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Insert v; returns true when the dimension grew.
  bool add(Vec v);
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  void reduce_in_place(Vec& v) const;
  int n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::vector<int>> nz_;  // nonzero positions per row
  std::vector<int> piv_;
};

Subspace echelonize(int ambient, const std::vector<Vec>& rows);
Subspace kernel(const LinMap& f);
Subspace image(const LinMap& f);
Subspace image(const LinMap& f, const Subspace& s);
Subspace preimage(const LinMap& f, const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
// stops early once the span reaches cap (a known upper bound on its dimension)
Subspace saturate(const std::vector<Vec>& seed, const std::vector<LinMap>& ops, int ambient, int cap = -1);
Subspace saturate(const Subspace& seed, const std::vector<LinMap>& ops);
// V ⊗ W inside the tensor of the two ambients
Subspace tensor(const Subspace& v, const Subspace& w);

struct Quotient {
  LinMap projection;
  LinMap section;
  int dim = 0;
  std::vector<int> reps;  // non-pivot coordinates used as coset representatives
};
Quotient quotient(const Subspace& n);

// One solution of f x = b, if any.
std::optional<Vec> solve(const LinMap& f, const Vec& b);

}  // namespace qb
