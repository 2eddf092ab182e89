#include "qbundle/qpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace qb {

namespace {

Scalar qp(int k) { return Scalar::q(k); }

}  // namespace

Mono Mono::make(bool delta, int e, int b, int c) {
  if (e < 0 || b < 0 || c < 0) throw std::invalid_argument("negative exponent");
  if (delta && e == 0) delta = false;
  return Mono{delta, e, b, c};
}

std::string Mono::str() const {
  std::string s;
  auto put = [&](const char* x, int k) {
    if (k == 0) return;
    s += x;
    if (k > 1) s += "^" + std::to_string(k);
  };
  put(delta ? "δ" : "α", e);
  put("β", b);
  put("γ", c);
  return s.empty() ? "1" : s;
}

NCPoly::NCPoly(const Scalar& s) {
  if (!s.is_zero()) terms[Mono{}] = s;
}

NCPoly NCPoly::mono(const Mono& m, const Scalar& c) {
  NCPoly p;
  p.add(m, c);
  return p;
}

NCPoly NCPoly::alpha() { return mono(Mono::make(false, 1, 0, 0)); }
NCPoly NCPoly::beta() { return mono(Mono::make(false, 0, 1, 0)); }
NCPoly NCPoly::gamma() { return mono(Mono::make(false, 0, 0, 1)); }
NCPoly NCPoly::delta() { return mono(Mono::make(true, 1, 0, 0)); }

int NCPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

bool NCPoly::even() const {
  for (const auto& [m, c] : terms)
    if (!m.even()) return false;
  return true;
}

Scalar NCPoly::coeff(const Mono& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Scalar(0) : it->second;
}

void NCPoly::add(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string NCPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  // highest degree first
  std::vector<std::pair<Mono, Scalar>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first.degree() > y.first.degree(); });
  for (const auto& [m, c] : v) {
    if (!s.empty()) s += " + ";
    std::string cs = c.str();
    if (m == Mono{}) s += cs;
    else if (c.is_one()) s += m.str();
    else s += "(" + cs + ")" + m.str();
  }
  return s;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms) add(m, -c);
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r;
  for (const auto& [m, c] : terms) r.terms[m] = -c;
  return r;
}

NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

NCPoly operator*(const Scalar& s, NCPoly a) {
  if (s.is_zero()) return {};
  for (auto& [m, c] : a.terms) c *= s;
  return a;
}

// (x^a β^b γ^c)(y^d β^e γ^f): move β^bγ^c past y^d, then resolve x^a y^d
// through αδ = 1 + qβγ and δα = 1 + q^{-1}βγ.
NCPoly mul_mono(const Mono& A, const Mono& B) {
  int d = B.e;
  int bc = A.b + A.c;
  Scalar coef = d == 0 || bc == 0 ? Scalar(1) : qp(B.delta ? bc * d : -bc * d);
  int b = A.b + B.b, c = A.c + B.c;
  if (d == 0) return NCPoly::mono(Mono::make(A.delta, A.e, b, c), coef);
  if (A.e == 0) return NCPoly::mono(Mono::make(B.delta, d, b, c), coef);
  if (A.delta == B.delta) return NCPoly::mono(Mono::make(A.delta, A.e + d, b, c), coef);
  int a = A.e, m = std::min(a, d);
  // x^a y^d = x^{a−m} y^{d−m} Π_k (1 + q^{±(2(d−k)−1)} βγ)
  std::vector<Scalar> poly{Scalar(1)};  // coefficients in βγ
  for (int k = 0; k < m; ++k) {
    int ex = 2 * (d - k) - 1;
    Scalar f = qp(A.delta ? -ex : ex);
    std::vector<Scalar> next(poly.size() + 1, Scalar(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] += poly[j] * f;
    }
    poly = std::move(next);
  }
  bool rd = a > m ? A.delta : B.delta;
  int re = a > m ? a - m : d - m;
  NCPoly r;
  for (size_t j = 0; j < poly.size(); ++j)
    r.add(Mono::make(rd, re, b + int(j), c + int(j)), coef * poly[j]);
  return r;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
  NCPoly r;
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      Scalar c = ca * cb;
      for (const auto& [m, cm] : mul_mono(a, b).terms) r.add(m, c * cm);
    }
  return r;
}

NCPoly pow(const NCPoly& a, int k) {
  NCPoly r(Scalar(1));
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

Word parse_word(const std::string& text) {
  Word w;
  for (char ch : text) {
    if (ch < 'a' || ch > 'd') throw std::invalid_argument("word letters are a, b, c, d");
    w.push_back(std::uint8_t(ch - 'a'));
  }
  return w;
}

namespace {

NCPoly letter(std::uint8_t l) {
  switch (l) {
    case 0: return NCPoly::alpha();
    case 1: return NCPoly::beta();
    case 2: return NCPoly::gamma();
    default: return NCPoly::delta();
  }
}

// right-hand side of the rule for the pair (x, y), or empty when irreducible
std::vector<std::pair<Scalar, Word>> rule(std::uint8_t x, std::uint8_t y) {
  enum { a, b, c, d };
  if (x == b && y == a) return {{qp(-1), {a, b}}};
  if (x == c && y == a) return {{qp(-1), {a, c}}};
  if (x == c && y == b) return {{Scalar(1), {b, c}}};
  if (x == b && y == d) return {{qp(1), {d, b}}};
  if (x == c && y == d) return {{qp(1), {d, c}}};
  if (x == a && y == d) return {{Scalar(1), {}}, {qp(1), {b, c}}};
  if (x == d && y == a) return {{Scalar(1), {}}, {qp(-1), {b, c}}};
  return {};
}

Mono word_mono(const Word& w) {
  int na = 0, nd = 0, nb = 0, nc = 0;
  for (auto l : w) (l == 0 ? na : l == 1 ? nb : l == 2 ? nc : nd)++;
  return Mono::make(nd > 0, na + nd, nb, nc);
}

}  // namespace

NCPoly normal_form(const Word& w) {
  NCPoly r(Scalar(1));
  for (auto l : w) r = r * letter(l);
  return r;
}

NCPoly rewrite(const Word& w, std::mt19937_64* rng) {
  std::map<Word, Scalar> live{{w, Scalar(1)}};
  NCPoly done;
  while (!live.empty()) {
    auto it = live.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<size_t>(0, live.size() - 1)(*rng));
    Word cur = it->first;
    Scalar c = it->second;
    live.erase(it);
    std::vector<size_t> redexes;
    for (size_t i = 0; i + 1 < cur.size(); ++i)
      if (!rule(cur[i], cur[i + 1]).empty()) redexes.push_back(i);
    if (redexes.empty()) {
      done.add(word_mono(cur), c);
      continue;
    }
    size_t i = rng ? redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(*rng)] : redexes.front();
    for (const auto& [k, rhs] : rule(cur[i], cur[i + 1])) {
      Word nw(cur.begin(), cur.begin() + i);
      nw.insert(nw.end(), rhs.begin(), rhs.end());
      nw.insert(nw.end(), cur.begin() + i + 2, cur.end());
      auto [jt, fresh] = live.emplace(nw, c * k);
      if (!fresh) {
        jt->second += c * k;
        if (jt->second.is_zero()) live.erase(jt);
      }
    }
  }
  return done;
}

void NCTensor::add(const Mono& a, const Mono& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(std::pair{a, b}, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

int NCTensor::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms) d = std::max(d, std::max(k.first.degree(), k.second.degree()));
  return d;
}

NCTensor& NCTensor::operator+=(const NCTensor& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
  return *this;
}

NCTensor& NCTensor::operator-=(const NCTensor& o) {
  for (const auto& [k, c] : o.terms) add(k.first, k.second, -c);
  return *this;
}

std::map<Mono, NCPoly> NCTensor::by_left() const {
  std::map<Mono, NCPoly> r;
  for (const auto& [k, c] : terms) r[k.first].add(k.second, c);
  return r;
}

std::map<Mono, NCPoly> NCTensor::by_right() const {
  std::map<Mono, NCPoly> r;
  for (const auto& [k, c] : terms) r[k.second].add(k.first, c);
  return r;
}

NCTensor operator+(NCTensor a, const NCTensor& b) { return a += b; }
NCTensor operator-(NCTensor a, const NCTensor& b) { return a -= b; }

NCTensor operator*(const Scalar& s, NCTensor a) {
  if (s.is_zero()) return {};
  for (auto& [k, c] : a.terms) c *= s;
  return a;
}

NCTensor tensor(const NCPoly& a, const NCPoly& b) {
  NCTensor r;
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms) r.add(x, y, cx * cy);
  return r;
}

NCTensor tensor_mul(const NCTensor& x, const NCTensor& y) {
  NCTensor r;
  for (const auto& [k1, c1] : x.terms)
    for (const auto& [k2, c2] : y.terms) {
      NCPoly l = mul_mono(k1.first, k2.first), rr = mul_mono(k1.second, k2.second);
      Scalar c = c1 * c2;
      for (const auto& [a, ca] : l.terms)
        for (const auto& [b, cb] : rr.terms) r.add(a, b, c * ca * cb);
    }
  return r;
}

NCTensor left_mul(const NCPoly& p, const NCTensor& x) { return tensor_mul(tensor(p, NCPoly(Scalar(1))), x); }
NCTensor right_mul(const NCTensor& x, const NCPoly& p) { return tensor_mul(x, tensor(NCPoly(Scalar(1)), p)); }

NCPoly multiply_legs(const NCTensor& x) {
  NCPoly r;
  for (const auto& [k, c] : x.terms) r += c * mul_mono(k.first, k.second);
  return r;
}

namespace {

// Δ of the generators: Δt_ij = Σ_k t_ik ⊗ t_kj
NCTensor delta_letter(int l) {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  switch (l) {
    case 0: return tensor(a, a) + tensor(b, c);
    case 1: return tensor(a, b) + tensor(b, d);
    case 2: return tensor(c, a) + tensor(d, c);
    default: return tensor(c, b) + tensor(d, d);
  }
}

NCTensor delta_power(int l, int k, std::map<std::pair<int, int>, NCTensor>& cache) {
  auto key = std::pair{l, k};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  NCTensor r;
  if (k == 0) r.add(Mono{}, Mono{}, Scalar(1));
  else r = tensor_mul(delta_power(l, k - 1, cache), delta_letter(l));
  cache[key] = r;
  return r;
}

}  // namespace

NCTensor coproduct(const NCPoly& p, int max_degree) {
  if (p.degree() > max_degree) throw std::length_error("coproduct degree budget exceeded");
  std::map<std::pair<int, int>, NCTensor> cache;
  NCTensor r;
  for (const auto& [m, c] : p.terms) {
    NCTensor t = delta_power(m.delta ? 3 : 0, m.e, cache);
    t = tensor_mul(t, delta_power(1, m.b, cache));
    t = tensor_mul(t, delta_power(2, m.c, cache));
    r += c * t;
  }
  return r;
}

Scalar counit(const NCPoly& p) {
  Scalar s(0);
  for (const auto& [m, c] : p.terms)
    if (m.b == 0 && m.c == 0) s += c;
  return s;
}

// S is an anti-homomorphism with Sα = δ, Sβ = −q^{-1}β, Sγ = −qγ, Sδ = α.
NCPoly antipode(const NCPoly& p) {
  NCPoly sa = NCPoly::delta(), sd = NCPoly::alpha();
  NCPoly sb = -qp(-1) * NCPoly::beta(), sc = -qp(1) * NCPoly::gamma();
  NCPoly r;
  for (const auto& [m, c] : p.terms) {
    NCPoly t = pow(sc, m.c) * pow(sb, m.b) * pow(m.delta ? sd : sa, m.e);
    r += c * t;
  }
  return r;
}

NCTensor theta(const NCTensor& x) {
  NCTensor r;
  for (const auto& [k, c] : x.terms) {
    NCPoly g = NCPoly::mono(k.first, c);
    for (const auto& [kk, cc] : coproduct(NCPoly::mono(k.second)).terms)
      r += cc * tensor(g * antipode(NCPoly::mono(kk.first)), NCPoly::mono(kk.second));
  }
  return r;
}

NCTensor theta_inverse(const NCTensor& x) {
  NCTensor r;
  for (const auto& [k, c] : x.terms) {
    NCPoly g = NCPoly::mono(k.first, c);
    for (const auto& [kk, cc] : coproduct(NCPoly::mono(k.second)).terms)
      r += cc * tensor(g * NCPoly::mono(kk.first), NCPoly::mono(kk.second));
  }
  return r;
}

NCTensor d_universal(const NCPoly& p) {
  NCPoly one(Scalar(1));
  return tensor(one, p) - tensor(p, one);
}

NCTensor invariant_form(const NCPoly& x) { return theta(tensor(NCPoly(Scalar(1)), x)); }

FibrePoly FibrePoly::z(int n, const Scalar& c) {
  FibrePoly f;
  f.add(n, c);
  return f;
}

void FibrePoly::add(int n, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(n, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

Scalar FibrePoly::counit() const {
  Scalar s(0);
  for (const auto& [n, c] : terms) s += c;
  return s;
}

std::string FibrePoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [n, c] : terms) {
    if (!s.empty()) s += " + ";
    std::string z = n == 0 ? "" : n == 1 ? "Z" : "Z^" + std::to_string(n);
    if (z.empty()) s += c.str();
    else if (c.is_one()) s += z;
    else s += "(" + c.str() + ")" + z;
  }
  return s;
}

FibrePoly& FibrePoly::operator+=(const FibrePoly& o) {
  for (const auto& [n, c] : o.terms) add(n, c);
  return *this;
}

FibrePoly operator*(const FibrePoly& a, const FibrePoly& b) {
  FibrePoly r;
  for (const auto& [n, c] : a.terms)
    for (const auto& [m, d] : b.terms) r.add(n + m, c * d);
  return r;
}

FibrePoly operator-(const FibrePoly& a, const FibrePoly& b) {
  FibrePoly r = a;
  for (const auto& [n, c] : b.terms) r.add(n, -c);
  return r;
}

FibrePoly fibre_generator() {
  FibrePoly g = FibrePoly::z(-1);
  g.add(1, qp(4));
  g.add(0, -(Scalar(1) + qp(4)));
  return g;
}

FibrePoly project_pi(const NCPoly& p) {
  FibrePoly f;
  for (const auto& [m, c] : p.terms) {
    if (!m.even()) throw std::domain_error("π is defined on SO_q(3) only: odd monomial " + m.str());
    if (m.b > 0 || m.c > 0) continue;
    f.add(m.delta ? -m.e / 2 : m.e / 2, c);
  }
  return f;
}

NCPoly splitting_i(int n) {
  return n >= 0 ? NCPoly::mono(Mono::make(false, 2 * n, 0, 0)) : NCPoly::mono(Mono::make(true, -2 * n, 0, 0));
}

NCPoly splitting_i(const FibrePoly& f) {
  NCPoly r;
  for (const auto& [n, c] : f.terms) r += c * splitting_i(n);
  return r;
}

std::vector<Mono> monomials_up_to(int d, bool even_only) {
  std::vector<Mono> r;
  for (int n = d; n >= 0; --n) {
    if (even_only && n % 2) continue;
    for (int e = 0; e <= n; ++e)
      for (int b = 0; b + e <= n; ++b) {
        int c = n - e - b;
        r.push_back(Mono::make(false, e, b, c));
        if (e > 0) r.push_back(Mono::make(true, e, b, c));
      }
  }
  return r;
}

TruncatedSpan::TruncatedSpan(int degree, int slack, bool even_only)
    : D_(degree), slack_(slack), even_(even_only), basis_(monomials_up_to(degree + slack, even_only)) {
  for (int i = 0; i < int(basis_.size()); ++i) index_[basis_[i]] = i;
  span_ = Subspace(int(basis_.size()));
}

Vec TruncatedSpan::to_vec(const NCPoly& p) const {
  Vec v(basis_.size(), Scalar(0));
  for (const auto& [m, c] : p.terms) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::length_error("monomial " + m.str() + " outside the truncation");
    v[it->second] = c;
  }
  return v;
}

NCPoly TruncatedSpan::from_vec(const Vec& v) const {
  NCPoly p;
  for (int i = 0; i < int(v.size()); ++i) p.add(basis_[i], v[i]);
  return p;
}

bool TruncatedSpan::add(const NCPoly& p) { return span_.add(to_vec(p)); }

void TruncatedSpan::add_all(const std::vector<NCPoly>& ps) {
  for (const auto& p : ps) add(p);
}

bool TruncatedSpan::contains(const NCPoly& p) const {
  if (p.degree() > D_) throw std::length_error("membership asked above the truncation degree");
  return span_.contains(to_vec(p));
}

NCPoly TruncatedSpan::reduce(const NCPoly& p) const { return from_vec(span_.reduce(to_vec(p))); }

std::vector<NCPoly> TruncatedSpan::part_up_to(int d) const {
  std::vector<NCPoly> r;
  for (int i = 0; i < span_.dim(); ++i)
    if (basis_[span_.pivots()[i]].degree() <= d) r.push_back(from_vec(span_.rows()[i]));
  return r;
}

int TruncatedSpan::dim_up_to(int d) const {
  int n = 0;
  for (int p : span_.pivots())
    if (basis_[p].degree() <= d) ++n;
  return n;
}

TruncatedSpan truncated_right_ideal(const std::vector<NCPoly>& gens, int degree, int slack, bool even_only) {
  TruncatedSpan s(degree, slack, even_only);
  int top = degree + slack;
  std::vector<std::pair<const NCPoly*, Mono>> jobs;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg < 0 || dg > top) continue;
    for (const auto& m : monomials_up_to(top - dg, even_only)) jobs.emplace_back(&g, m);
  }
  // products in parallel, echelon reduction serially in job order
  std::vector<NCPoly> prods(jobs.size());
  unsigned nt = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nt; ++t)
      pool.emplace_back([&, t] {
        for (size_t j = t; j < jobs.size(); j += nt) prods[j] = *jobs[j].first * NCPoly::mono(jobs[j].second);
      });
  }
  s.add_all(prods);
  return s;
}

std::vector<NCPoly> q0_generators() {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  Scalar q4 = qp(4), s = Scalar(1) + qp(4);
  return {b * c, q4 * (pow(a, 3) * b) + d * b - s * (a * b), q4 * (pow(a, 3) * c) + d * c - s * (a * c)};
}

std::vector<NCPoly> q_family_generators(int k, int l, int r, int s) {
  if (k < 1 || l < 1 || r < 0 || r > k || s < 0 || s > l) throw std::invalid_argument("family needs k,l ≥ 1, 0 ≤ r ≤ k, 0 ≤ s ≤ l");
  std::vector<NCPoly> g = q0_generators();
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  g.push_back(pow(b, 2 * k));
  g.push_back(pow(c, 2 * l));
  if (r < k) g.push_back((a - d) * pow(b, 2 * r + 1));
  if (s < l) g.push_back((a - d) * pow(c, 2 * s + 1));
  return g;
}

std::vector<NCPoly> qp_generators() {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  return {b * c, d * d + qp(4) * (a * a) - NCPoly(Scalar(1) + qp(4))};
}

std::vector<NCPoly> qp11_generators() {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  return {d * d + qp(4) * (a * a) - NCPoly(Scalar(1) + qp(4)), b * b, b * c, c * c};
}

namespace {

// i(g Z^n) for the fibre generator g, as long as the degree stays within max_degree
std::vector<NCPoly> fibre_ideal_images(int max_degree) {
  std::vector<NCPoly> r;
  FibrePoly g = fibre_generator();
  for (int n = -max_degree; n <= max_degree; ++n) {
    NCPoly x = splitting_i(g * FibrePoly::z(n));
    if (x.degree() <= max_degree) r.push_back(x);
  }
  return r;
}

}  // namespace

std::vector<NCPoly> qp_family_generators(int k, int l, int r, int s, int max_degree) {
  std::vector<NCPoly> g = q_family_generators(k, l, r, s);
  for (auto& x : fibre_ideal_images(max_degree)) g.push_back(x);
  return g;
}

std::vector<NCPoly> q0_instances(int max_degree) {
  std::vector<NCPoly> r;
  FibrePoly g = fibre_generator();
  for (int n = -max_degree; n <= max_degree; ++n) {
    FibrePoly f = g * FibrePoly::z(n);
    NCPoly iF = splitting_i(f);
    if (iF.degree() > max_degree) continue;
    for (const auto& u : monomials_up_to(max_degree - iF.degree(), true)) {
      NCPoly um = NCPoly::mono(u);
      NCPoly x = iF * um - splitting_i(f * project_pi(um));
      if (!x.is_zero() && x.degree() <= max_degree) r.push_back(x);
    }
  }
  return r;
}

int ambient_dim(Ambient a, int d) {
  int n = 0;
  for (const auto& m : monomials_up_to(d, true)) {
    if (a == Ambient::ker_pi && m.b == 0 && m.c == 0) continue;
    if (a == Ambient::ker_eps && m == Mono{}) continue;
    ++n;
  }
  return n;
}

StabilizedDim truncated_quotient_dims(Ambient a, const std::vector<NCPoly>& gens, int max_degree, int slack,
                                      bool with_fibre_ideal) {
  StabilizedDim r;
  for (int D = 2; D <= max_degree; D += 2) {
    std::vector<NCPoly> g = gens;
    if (with_fibre_ideal)
      for (auto& x : fibre_ideal_images(D + slack)) g.push_back(x);
    for (const auto& x : g) {
      if (a == Ambient::ker_pi && !project_pi(x).is_zero()) throw std::invalid_argument("generator outside ker π");
      if (a == Ambient::ker_eps && !counit(x).is_zero()) throw std::invalid_argument("generator outside ker ε");
    }
    TruncatedSpan s = truncated_right_ideal(g, D, slack, true);
    DimPoint p{D, ambient_dim(a, D), s.dim_up_to(D), 0};
    p.quotient = p.ambient - p.ideal;
    if (!r.points.empty() && r.points.back().quotient == p.quotient && !r.stabilized) {
      r.stabilized = true;
      r.value = p.quotient;
      r.at_degree = p.degree;
    }
    r.points.push_back(p);
  }
  return r;
}

bool in_theta_span(const NCTensor& x, const TruncatedSpan& ideal) {
  for (const auto& [m, c] : theta_inverse(x).by_left())
    if (!ideal.contains(c)) return false;
  return true;
}

NCTensor omega_form(int i) {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  Scalar q4m1 = qp(4) - Scalar(1), q2p1 = qp(2) + Scalar(1);
  switch (i) {
    case 0: return (Scalar(1) / q4m1) * invariant_form(qp(4) * (a * b) - d * b);
    case 1: return (Scalar(1) / (qp(-2) + Scalar(1))) * invariant_form(a * a - NCPoly(Scalar(1)));
    case 2: return (-qp(-1) / q4m1) * invariant_form(d * c - qp(4) * (a * c));
    case 3: return (Scalar(1) / q2p1) * invariant_form(a * b - d * b);
    case 4: return (-Scalar(1) / q2p1) * invariant_form(d * c - a * c);
    default: throw std::invalid_argument("ω index is 0…4");
  }
}

std::vector<IdentityResult> verify_identities(int degree, int slack) {
  std::vector<IdentityResult> out;
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta(), c = NCPoly::gamma(), d = NCPoly::delta();
  Scalar q4 = qp(4), s = Scalar(1) + qp(4);
  auto g = q0_generators();

  // δ³β + q⁴αβ − (1+q⁴)δβ = q^{-2}(q⁴α³β + δβ − (1+q⁴)αβ)δ² − βγ(q⁷αβ + q⁸α²βδ − (1+q⁴)βδ)
  NCPoly lhs = pow(d, 3) * b + q4 * (a * b) - s * (d * b);
  NCPoly rhs = qp(-2) * (g[1] * d * d) - b * c * (qp(7) * (a * b) + qp(8) * (a * a * b * d) - s * (b * d));
  out.push_back({"q0-decomposition-delta3beta", lhs == rhs, "difference " + (lhs - rhs).str()});
  TruncatedSpan q0span = truncated_right_ideal(g, degree, slack, true);
  out.push_back({"q0-member-delta3beta", q0span.contains(lhs), ""});

  NCPoly kp = d * d + q4 * (a * a) - NCPoly(s);
  NCPoly r1 = kp * a * b - qp(-3) * (b * c * d * b);
  NCPoly r2 = kp * a * c - qp(-3) * (b * c * d * c);
  out.push_back({"qp-decomposition-beta", g[1] == r1, "difference " + (g[1] - r1).str()});
  out.push_back({"qp-decomposition-gamma", g[2] == r2, "difference " + (g[2] - r2).str()});

  TruncatedSpan qp11 = truncated_right_ideal(qp11_generators(), degree, slack, true);
  TruncatedSpan qpi = truncated_right_ideal(qp_generators(), degree, slack, true);
  for (int i = 0; i < 3; ++i) {
    out.push_back({"q0-generator-" + std::to_string(i) + "-in-QP11", qp11.contains(g[i]), g[i].str()});
    out.push_back({"q0-generator-" + std::to_string(i) + "-in-QP", qpi.contains(g[i]), g[i].str()});
  }

  TruncatedSpan inst(degree, slack, true);
  inst.add_all(q0_instances(degree + slack));
  for (int i = 0; i < 3; ++i)
    out.push_back({"q0-generator-" + std::to_string(i) + "-from-instances", inst.contains(g[i]), g[i].str()});
  // βγ from q = Z^{-1} + q⁴Z − (1+q⁴) with u = α² and u = δ²
  FibrePoly f = fibre_generator();
  NCPoly w1 = splitting_i(f) * (a * a) - splitting_i(f * FibrePoly::z(1));
  NCPoly w2 = splitting_i(f) * (d * d) - splitting_i(f * FibrePoly::z(-1));
  TruncatedSpan w(degree, slack, true);
  w.add(w1);
  w.add(w2);
  out.push_back({"q0-witness-beta-gamma", w.contains(b * c), w1.str() + " ; " + w2.str()});
  return out;
}

namespace {

struct Relation {
  std::string name;
  std::vector<NCTensor> parts;  // each must vanish in the calculus
};

// The displayed commutation relations and exact forms; corrected swaps ω4 for
// ω3 in ω1β and flips the sign of the βω2 term of dα.
std::vector<Relation> displayed_relations(bool corrected) {
  NCPoly a = NCPoly::alpha(), b = NCPoly::beta();
  std::vector<NCTensor> w;
  for (int i = 0; i < 5; ++i) w.push_back(omega_form(i));
  auto rel = [&](int i, const NCPoly& p, int e) { return right_mul(w[i], p) - qp(e) * left_mul(p, w[i]); };
  Scalar one(1), k4 = qp(1) / (one - qp(2)), k3 = qp(2) / (one - qp(2));
  std::vector<Relation> out;
  out.push_back({"omega02-alpha", {rel(0, a, -1), rel(2, a, -1)}});
  out.push_back({"omega34-alpha", {rel(3, a, -3), rel(4, a, -3)}});
  out.push_back({"omega1-alpha", {rel(1, a, -2) - left_mul(b, w[4])}});
  out.push_back({"omega02-beta", {rel(0, b, 1), rel(2, b, 1)}});
  out.push_back({"omega34-beta", {rel(3, b, 3), rel(4, b, 3)}});
  out.push_back({"omega1-beta", {rel(1, b, 2) - left_mul(a, w[corrected ? 3 : 4])}});
  Scalar s2 = corrected ? qp(1) : -qp(1);
  out.push_back({"d-alpha", {d_universal(a) - left_mul(a, w[1]) - left_mul(b, s2 * w[2] + qp(1) * k4 * w[4])}});
  out.push_back({"d-beta", {d_universal(b) + qp(2) * left_mul(b, w[1]) - left_mul(a, w[0] + k3 * w[3])}});
  return out;
}

// Whether the relations hold in some calculus on SU_q(2) restricting to the
// SO_q(3) calculus of Q_P^{(1,1)}: adjoin their θ^{-1} coefficients to the
// right ideal of the Q_P^{(1,1)} generators and compare the image of ker ε of
// SO_q(3) in the quotient with the SO_q(3) quotient. Returns the image dim.
int embedded_image_dim(const std::vector<NCTensor>& parts, int D, int S) {
  std::vector<NCPoly> g = qp11_generators();
  for (const auto& x : parts)
    for (const auto& [m, c] : theta_inverse(x).by_left()) g.push_back(c);
  TruncatedSpan su = truncated_right_ideal(g, D, S, false);
  int before = su.dim_up_to(D);
  for (const auto& m : monomials_up_to(D, true)) {
    NCPoly p = NCPoly::mono(m);
    p -= NCPoly(counit(p));
    if (!p.is_zero()) su.add(p);
  }
  return su.dim_up_to(D) - before;
}

}  // namespace

std::vector<IdentityResult> relation_checks(int degree, int slack, bool corrected) {
  std::vector<IdentityResult> out;
  TruncatedSpan so = truncated_right_ideal(qp11_generators(), degree, slack, true);
  int target = ambient_dim(Ambient::ker_eps, degree) - so.dim_up_to(degree);
  auto rels = displayed_relations(corrected);
  std::vector<NCTensor> all;
  for (const auto& r : rels) {
    int k = embedded_image_dim(r.parts, degree, slack);
    out.push_back({r.name, k == target, "SO_q(3) image " + std::to_string(k) + " of " + std::to_string(target)});
    all.insert(all.end(), r.parts.begin(), r.parts.end());
  }
  int k = embedded_image_dim(all, degree, slack);
  out.push_back({"jointly", k == target, "SO_q(3) image " + std::to_string(k) + " of " + std::to_string(target)});
  NCTensor wd = invariant_form(splitting_i(FibrePoly::z(1) - FibrePoly::z(0)));
  out.push_back({"omegaD-Z-1", in_theta_span(wd - (Scalar(1) + qp(-2)) * omega_form(1), so), ""});
  return out;
}

}  // namespace qb
