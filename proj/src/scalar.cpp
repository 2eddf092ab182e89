#include "qbundle/scalar.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qb {

// ---------------------------------------------------------------- Poly

Poly Poly::monomial(const Rat& a, int k) {
  Poly p;
  if (a == 0) return p;
  p.c.assign(k + 1, Rat(0));
  p.c[k] = a;
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), Rat(0));
  for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& a) {
  if (a == 0) {
    c.clear();
    return *this;
  }
  for (auto& x : c) x *= a;
  return *this;
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (int i = deg(); i >= 0; --i) r = r * x + c[i];
  return r;
}

Poly Poly::monic() const {
  if (zero()) return *this;
  Poly r = *this;
  Rat l = lead();
  for (auto& x : r.c) x /= l;
  return r;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Rat& b) { return a *= b; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.zero() || b.zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.zero()) throw std::domain_error("polynomial division by zero");
  rem = a;
  quo = Poly();
  int db = b.deg();
  if (rem.deg() < db) return;
  quo.c.assign(rem.deg() - db + 1, Rat(0));
  Rat lb = b.lead();
  while (!rem.zero() && rem.deg() >= db) {
    int k = rem.deg() - db;
    Rat f = rem.lead() / lb;
    quo.c[k] = f;
    for (int i = 0; i <= db; ++i) rem.c[i + k] -= f * b.c[i];
    rem.trim();
  }
  quo.trim();
}

Poly gcd(Poly a, Poly b) {
  while (!b.zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  // extended Euclid tracking the coefficient of a
  Poly r0 = m, r1 = a, s0, s1(Rat(1));
  while (!r1.zero()) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.deg() != 0) throw std::domain_error("element not invertible");
  Poly q, r;
  divmod(s0 * (Rat(1) / r0.lead()), m, q, r);
  return r;
}

Poly cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  Poly p = Poly::monomial(1, n) - Poly(Rat(1));
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly q, r;
    divmod(p, cyclotomic_poly(d), q, r);
    p = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = p;
  return p;
}

static std::string rat_string(const Rat& r) { return r.get_str(); }

std::string poly_string(const Poly& p, const std::string& var) {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.deg(); k >= 0; --k) {
    Rat a = p.c[k];
    if (a == 0) continue;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << rat_string(a);
      continue;
    }
    if (a != 1) os << rat_string(a) << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------- Field

Field Field::cyclo(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  return {Kind::cyclotomic, n};
}

std::string Field::name() const {
  switch (kind) {
    case Kind::rational: return "Q";
    case Kind::cyclotomic: return "Q(z" + std::to_string(n) + ")";
    case Kind::ratfunc: return "Q(q)";
  }
  return "?";
}

Field Field::join(const Field& a, const Field& b) {
  if (a == b) return a;
  if (a.kind == Kind::rational) return b;
  if (b.kind == Kind::rational) return a;
  throw std::invalid_argument("mixed scalar contexts " + a.name() + " and " + b.name());
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zeta(int n, int k) {
  Field f = Field::cyclo(n);
  k = ((k % n) + n) % n;
  return from_cyclo(n, Poly::monomial(1, k));
}

Scalar Scalar::q(int k) {
  if (k >= 0) return from_poly(Poly::monomial(1, k), Poly(Rat(1)));
  return from_poly(Poly(Rat(1)), Poly::monomial(1, -k));
}

Scalar Scalar::from_poly(const Poly& num, const Poly& den) {
  Scalar s;
  s.f_ = Field::Qq();
  s.a_ = num;
  s.b_ = den;
  if (den.zero()) throw std::domain_error("division by zero");
  s.normalize();
  return s;
}

Scalar Scalar::from_cyclo(int n, const Poly& residue) {
  Scalar s;
  s.f_ = Field::cyclo(n);
  s.a_ = residue;
  s.normalize();
  return s;
}

Scalar Scalar::constant(const Rat& v, const Field& f) { return Scalar(v).coerce(f); }

void Scalar::normalize() {
  switch (f_.kind) {
    case Kind::rational:
      r_.canonicalize();
      break;
    case Kind::cyclotomic: {
      a_.trim();
      Poly phi = cyclotomic_poly(f_.n);
      if (a_.deg() >= phi.deg()) {
        Poly q, r;
        divmod(a_, phi, q, r);
        a_ = std::move(r);
      }
      break;
    }
    case Kind::ratfunc: {
      a_.trim();
      b_.trim();
      if (a_.zero()) {
        b_ = Poly(Rat(1));
        break;
      }
      if (b_.deg() > 0) {
        Poly g = gcd(a_, b_);
        if (g.deg() > 0) {
          Poly q, r;
          divmod(a_, g, q, r);
          a_ = std::move(q);
          divmod(b_, g, q, r);
          b_ = std::move(q);
        }
      }
      Rat l = b_.lead();
      if (l != 1) {
        a_ *= Rat(1) / l;
        b_ *= Rat(1) / l;
      }
      break;
    }
  }
}

bool Scalar::is_zero() const {
  return f_.kind == Kind::rational ? r_ == 0 : a_.zero();
}

bool Scalar::is_rational() const {
  switch (f_.kind) {
    case Kind::rational: return true;
    case Kind::cyclotomic: return a_.deg() <= 0;
    case Kind::ratfunc: return a_.deg() <= 0 && b_.deg() == 0;
  }
  return false;
}

Rat Scalar::to_rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
  if (f_.kind == Kind::rational) return r_;
  return a_.coef(0);
}

bool Scalar::is_one() const { return is_rational() && to_rational() == 1; }

Scalar Scalar::coerce(const Field& target) const {
  if (f_ == target) return *this;
  if (f_.kind != Kind::rational) {
    if (target.kind == Kind::rational && is_rational()) return Scalar(to_rational());
    throw std::invalid_argument("no embedding " + f_.name() + " -> " + target.name());
  }
  switch (target.kind) {
    case Kind::rational: return *this;
    case Kind::cyclotomic: return from_cyclo(target.n, Poly(r_));
    case Kind::ratfunc: return from_poly(Poly(r_), Poly(Rat(1)));
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.kind == Kind::rational)
    s.r_ = -r_;
  else
    s.a_ = -a_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (f_.kind == Kind::rational && o.f_.kind == Kind::rational) {
    r_ += o.r_;
    return *this;
  }
  Field f = Field::join(f_, o.f_);
  if (!(f_ == f)) *this = coerce(f);
  if (!(o.f_ == f)) return *this += o.coerce(f);
  if (f.kind == Kind::cyclotomic) {
    a_ += o.a_;
  } else if (b_ == o.b_) {
    a_ += o.a_;
    normalize();
  } else {
    a_ = a_ * o.b_ + o.a_ * b_;
    b_ = b_ * o.b_;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (f_.kind == Kind::rational && o.f_.kind == Kind::rational) {
    r_ *= o.r_;
    return *this;
  }
  if (o.f_.kind == Kind::rational) {
    if (o.r_ == 0) return *this = Scalar().coerce(f_);
    a_ *= o.r_;
    return *this;
  }
  if (f_.kind == Kind::rational) {
    Rat v = r_;
    *this = o;
    if (v == 0) return *this = Scalar().coerce(o.f_);
    a_ *= v;
    return *this;
  }
  Field::join(f_, o.f_);
  if (f_.kind == Kind::cyclotomic) {
    a_ = a_ * o.a_;
  } else {
    a_ = a_ * o.a_;
    b_ = b_ * o.b_;
  }
  normalize();
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  switch (f_.kind) {
    case Kind::rational: return Scalar(Rat(1) / r_);
    case Kind::cyclotomic: return from_cyclo(f_.n, inverse_mod(a_, cyclotomic_poly(f_.n)));
    case Kind::ratfunc: return from_poly(b_, a_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::pow(long k) const {
  Scalar base = k < 0 ? inv() : *this;
  unsigned long e = k < 0 ? -k : k;
  Scalar r = Scalar(1).coerce(f_);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::eval_q(const Rat& x) const {
  if (f_.kind != Kind::ratfunc) return *this;
  Rat d = b_.eval(x);
  if (d == 0) throw std::domain_error("pole at specialization");
  return Scalar(a_.eval(x) / d);
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_.kind == Kind::rational && o.f_.kind == Kind::rational) return r_ == o.r_;
  if (f_ == o.f_) return a_ == o.a_ && b_ == o.b_;
  if (is_rational() && o.is_rational()) return to_rational() == o.to_rational();
  return false;
}

std::string Scalar::str() const {
  switch (f_.kind) {
    case Kind::rational: return rat_string(r_);
    case Kind::cyclotomic: return poly_string(a_, "z" + std::to_string(f_.n));
    case Kind::ratfunc:
      if (b_.deg() == 0) return poly_string(a_, "q");
      return "(" + poly_string(a_, "q") + ")/(" + poly_string(b_, "q") + ")";
  }
  return "";
}

std::string to_string(const Scalar& s) { return s.str(); }

// ---------------------------------------------------------------- parser

namespace {

struct Parser {
  const std::string& s;
  Field f;
  size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("scalar syntax error at " + std::to_string(i) + ": " + msg +
                                " in '" + s + "'");
  }
  bool peek(char c) {
    ws();
    return i < s.size() && s[i] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i;
    return true;
  }
  bool starts_primary() {
    ws();
    if (i >= s.size()) return false;
    char c = s[i];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'q' || c == 'z';
  }
  std::string digits() {
    ws();
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected digits");
    return s.substr(st, i - st);
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }
  Scalar term() {
    Scalar v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else if (starts_primary())
        v *= power();
      else
        return v;
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar b = primary();
    if (eat('^')) {
      bool neg = eat('-');
      long e = std::stol(digits());
      return b.pow(neg ? -e : e);
    }
    return b;
  }
  Scalar primary() {
    ws();
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rat(digits())).coerce(f);
    if (c == 'q') {
      ++i;
      if (f.kind != Kind::ratfunc) fail("atom q outside Q(q)");
      return Scalar::q();
    }
    if (c == 'z') {
      ++i;
      int n = std::stoi(digits());
      if (f.kind != Kind::cyclotomic || f.n != n) fail("atom z" + std::to_string(n) + " outside its context");
      return Scalar::zeta(n);
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text, const Field& f) {
  Parser p{text, f};
  Scalar v = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return v.coerce(f);
}

}  // namespace qb
