#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/linalg.hpp"

namespace qb {

// Normal-form monomial x^e β^b γ^c of SU_q(2), x = α (e ≥ 0) or δ (e ≥ 1).
struct Mono {
  bool delta = false;
  int e = 0, b = 0, c = 0;

  static Mono make(bool delta, int e, int b, int c);  // δ^0 becomes α^0
  int degree() const { return e + b + c; }
  bool even() const { return degree() % 2 == 0; }
  std::string str() const;
  auto operator<=>(const Mono&) const = default;
};

// Sparse element of SU_q(2) over Q(q) in the normal-form basis.
struct NCPoly {
  std::map<Mono, Scalar> terms;

  NCPoly() = default;
  NCPoly(const Scalar& s);  // s·1
  static NCPoly mono(const Mono& m, const Scalar& c = Scalar(1));
  static NCPoly alpha();
  static NCPoly beta();
  static NCPoly gamma();
  static NCPoly delta();

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for zero
  bool even() const;   // every monomial has even degree
  Scalar coeff(const Mono& m) const;
  void add(const Mono& m, const Scalar& c);
  std::string str() const;

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator-() const;
  bool operator==(const NCPoly& o) const { return terms == o.terms; }
};

NCPoly operator+(NCPoly a, const NCPoly& b);
NCPoly operator-(NCPoly a, const NCPoly& b);
NCPoly operator*(const NCPoly& a, const NCPoly& b);
NCPoly operator*(const Scalar& s, NCPoly a);
NCPoly pow(const NCPoly& a, int k);
NCPoly mul_mono(const Mono& a, const Mono& b);

// Words in α=0, β=1, γ=2, δ=3.
using Word = std::vector<std::uint8_t>;
Word parse_word(const std::string& text);  // letters a b c d
// product of the letters via the normal-form multiplication
NCPoly normal_form(const Word& w);
// term rewriting with the commutation and determinant rules; with rng the
// redex is chosen at random, otherwise leftmost
NCPoly rewrite(const Word& w, std::mt19937_64* rng = nullptr);

// Elements of SU_q(2) ⊗ SU_q(2).
struct NCTensor {
  std::map<std::pair<Mono, Mono>, Scalar> terms;

  void add(const Mono& a, const Mono& b, const Scalar& c);
  bool is_zero() const { return terms.empty(); }
  int degree() const;  // max total degree of the two legs
  NCTensor& operator+=(const NCTensor& o);
  NCTensor& operator-=(const NCTensor& o);
  bool operator==(const NCTensor& o) const { return terms == o.terms; }
  // Σ m ⊗ c_m grouped by left monomial
  std::map<Mono, NCPoly> by_left() const;
  std::map<Mono, NCPoly> by_right() const;
};

NCTensor operator+(NCTensor a, const NCTensor& b);
NCTensor operator-(NCTensor a, const NCTensor& b);
NCTensor operator*(const Scalar& s, NCTensor a);
NCTensor tensor(const NCPoly& a, const NCPoly& b);
NCTensor tensor_mul(const NCTensor& x, const NCTensor& y);  // legwise
NCTensor left_mul(const NCPoly& p, const NCTensor& x);       // (p⊗1)x
NCTensor right_mul(const NCTensor& x, const NCPoly& p);      // x(1⊗p)
NCPoly multiply_legs(const NCTensor& x);

// Hopf structure; coproduct throws std::length_error past max_degree.
NCTensor coproduct(const NCPoly& p, int max_degree = 16);
Scalar counit(const NCPoly& p);
NCPoly antipode(const NCPoly& p);

// θ(g⊗h) = g Sh1 ⊗ h2 and its inverse g⊗h ↦ g h1 ⊗ h2
NCTensor theta(const NCTensor& x);
NCTensor theta_inverse(const NCTensor& x);
NCTensor d_universal(const NCPoly& p);  // 1⊗p − p⊗1
NCTensor invariant_form(const NCPoly& x);  // θ(1⊗x)

// Laurent polynomial in Z over Q(q).
struct FibrePoly {
  std::map<int, Scalar> terms;

  static FibrePoly z(int n, const Scalar& c = Scalar(1));
  bool is_zero() const { return terms.empty(); }
  void add(int n, const Scalar& c);
  Scalar counit() const;
  std::string str() const;
  FibrePoly& operator+=(const FibrePoly& o);
  bool operator==(const FibrePoly& o) const { return terms == o.terms; }
};

FibrePoly operator*(const FibrePoly& a, const FibrePoly& b);
FibrePoly operator-(const FibrePoly& a, const FibrePoly& b);
// Z^{-1} + q^4 Z − (1 + q^4)
FibrePoly fibre_generator();

// π: SO_q(3) → C[Z,Z^{-1}], α² ↦ Z, δ² ↦ Z^{-1}, β, γ ↦ 0; throws
// std::domain_error on odd-degree input.
FibrePoly project_pi(const NCPoly& p);
// i(Z^n) = α^{2n}, i(Z^{-n}) = δ^{2n}
NCPoly splitting_i(int n);
NCPoly splitting_i(const FibrePoly& f);

// Monomials of degree ≤ d, highest degree first; even_only restricts to SO_q(3).
std::vector<Mono> monomials_up_to(int d, bool even_only);

// Span inside the degree ≤ D + slack part, with columns ordered by
// decreasing degree so the degree ≤ D part is read off the echelon form.
class TruncatedSpan {
 public:
  TruncatedSpan(int degree, int slack, bool even_only);
  int degree() const { return D_; }
  int slack() const { return slack_; }
  bool even_only() const { return even_; }
  const std::vector<Mono>& basis() const { return basis_; }

  Vec to_vec(const NCPoly& p) const;  // throws std::length_error past D + slack
  NCPoly from_vec(const Vec& v) const;
  bool add(const NCPoly& p);
  void add_all(const std::vector<NCPoly>& ps);
  // membership in the span, for p of degree ≤ D
  bool contains(const NCPoly& p) const;
  // remainder of p against the echelon basis (zero iff p is in the span)
  NCPoly reduce(const NCPoly& p) const;
  // rows whose leading monomial has degree ≤ d
  std::vector<NCPoly> part_up_to(int d) const;
  int dim_up_to(int d) const;
  int dim() const { return span_.dim(); }

 private:
  int D_, slack_;
  bool even_;
  std::vector<Mono> basis_;
  std::map<Mono, int> index_;
  Subspace span_;
};

// Right ideal ⟨gens⟩ truncated: gen·m over monomials m of SO_q(3) (even_only)
// or SU_q(2), with deg(gen) + deg(m) ≤ D + slack.
TruncatedSpan truncated_right_ideal(const std::vector<NCPoly>& gens, int degree, int slack, bool even_only);

// The ideal families on SO_q(3).
std::vector<NCPoly> q0_generators();
// Q^{(k,l;r,s)}: Q0, β^{2k}, γ^{2l}, (α−δ)β^{2r+1}, (α−δ)γ^{2s+1}; r = k, s = l
// gives Q^{(k,l)}.
std::vector<NCPoly> q_family_generators(int k, int l, int r, int s);
// Q_P: βγ and δ² + q^4 α² − (1 + q^4)
std::vector<NCPoly> qp_generators();
// Q_P^{(1,1)} as displayed: δ² + q^4 α² − (1 + q^4), β², βγ, γ²
std::vector<NCPoly> qp11_generators();
// Q_P^{(k,l;r,s)} = ⟨Q^{(k,l;r,s)}, i(Q) SO_q(3)⟩ truncated at D + slack
std::vector<NCPoly> qp_family_generators(int k, int l, int r, int s, int max_degree);
// i(f)u − i(f π(u)) for f = g Z^n and even monomials u, within max_degree
std::vector<NCPoly> q0_instances(int max_degree);

enum class Ambient { ker_pi, ker_eps };

struct DimPoint {
  int degree = 0;
  int ambient = 0;
  int ideal = 0;
  int quotient = 0;
};

struct StabilizedDim {
  std::vector<DimPoint> points;
  bool stabilized = false;  // two consecutive even degrees agree
  int value = -1;
  int at_degree = -1;
};

int ambient_dim(Ambient a, int d);
// dim(ambient ∩ deg ≤ D) − dim(ideal ∩ deg ≤ D) for D = 2, 4, … , max_degree
StabilizedDim truncated_quotient_dims(Ambient a, const std::vector<NCPoly>& gens, int max_degree, int slack,
                                      bool with_fibre_ideal = false);

struct IdentityResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Fibre and bundle identities: the displayed ideal decompositions, Q0
// witnesses and the Q_P^{(1,1)} memberships.
std::vector<IdentityResult> verify_identities(int degree, int slack);
// Commutation relations of ω0…ω4 with α, β and the exact forms dα, dβ, each
// tested for holding in a calculus on SU_q(2) that restricts to the
// Q_P^{(1,1)} calculus on SO_q(3), then jointly; ω_D([Z−1]) = (1+q^{-2})ω1 is
// checked by membership in N = θ(P ⊗ Q_P^{(1,1)}). corrected uses ω1β =
// q²βω1 + αω3 and dα = αω1 + qβ(ω2 + q/(1−q²)ω4).
std::vector<IdentityResult> relation_checks(int degree, int slack, bool corrected = false);

// the left-invariant forms ω0…ω4 (before projection to the quotient)
NCTensor omega_form(int i);
// X ∈ θ(P ⊗ I) for the truncated right ideal I
bool in_theta_span(const NCTensor& x, const TruncatedSpan& ideal);

}  // namespace qb
