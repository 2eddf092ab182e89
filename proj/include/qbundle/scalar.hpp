#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qb {

using Rat = mpq_class;

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(const Rat& a) { if (a != 0) c.push_back(a); }
  static Poly monomial(const Rat& a, int k);

  int deg() const { return int(c.size()) - 1; }
  bool zero() const { return c.empty(); }
  const Rat& lead() const { return c.back(); }
  Rat coef(int k) const { return k < int(c.size()) ? c[k] : Rat(0); }
  void trim();
  bool operator==(const Poly& o) const { return c == o.c; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& a);
  Rat eval(const Rat& x) const;
  Poly monic() const;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rat& b);
void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
// s with s*a = g (mod m), g = gcd(a, m) monic
Poly inverse_mod(const Poly& a, const Poly& m);
Poly cyclotomic_poly(int n);
std::string poly_string(const Poly& p, const std::string& var);

enum class Kind { rational, cyclotomic, ratfunc };

struct Field {
  Kind kind = Kind::rational;
  int n = 0;  // cyclotomic order

  static Field Q() { return {}; }
  static Field cyclo(int n);
  static Field Qq() { return {Kind::ratfunc, 0}; }
  bool operator==(const Field& o) const { return kind == o.kind && n == o.n; }
  std::string name() const;
  // Q embeds into every context; other pairs must agree exactly.
  static Field join(const Field& a, const Field& b);
};

// Element of Q, Q(zeta_N) or Q(q). Rational values keep r; the others use
// a (numerator or cyclotomic residue) and b (monic denominator).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : r_(v) {}
  Scalar(const Rat& v) : r_(v) { r_.canonicalize(); }
  static Scalar rational(const Rat& v) { return Scalar(v); }
  static Scalar zeta(int n, int k = 1);
  static Scalar q(int k = 1);
  static Scalar from_poly(const Poly& num, const Poly& den);
  static Scalar from_cyclo(int n, const Poly& residue);
  static Scalar constant(const Rat& v, const Field& f);
  static Scalar parse(const std::string& text, const Field& f);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // value lies in Q, whatever the context
  Rat to_rational() const;
  const Poly& num() const { return a_; }
  const Poly& den() const { return b_; }
  Scalar coerce(const Field& target) const;
  Scalar inv() const;
  Scalar pow(long k) const;
  Scalar eval_q(const Rat& x) const;  // explicit specialization of q
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  void normalize();
  Field f_;
  Rat r_;
  Poly a_, b_;
};

std::string to_string(const Scalar& s);

}  // namespace qb
