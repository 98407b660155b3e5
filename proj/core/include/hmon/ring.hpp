#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hmon {

/// Valuation of zero.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class BaseKind { IntLocal, PolyLocal };

/// The ambient discrete valuation ring S.
///
/// IntLocal(p): the integers localized at the prime p, uniformizer p.
/// PolyLocal(k): k[x] localized at (x), uniformizer x, with k = Q
/// (`prime == 0`) or the prime field F_q (`prime == q`).
struct BaseRing {
  BaseKind kind = BaseKind::IntLocal;
  long prime = 2;

  static BaseRing int_local(long p);
  static BaseRing poly_rational();
  static BaseRing poly_prime_field(long q);

  [[nodiscard]] bool finite_residue_field() const { return prime != 0; }
  /// p or q; 0 when the residue field is Q.
  [[nodiscard]] long residue_field_size() const { return prime; }
  [[nodiscard]] std::string describe() const;

  bool operator==(const BaseRing&) const = default;
};

bool is_prime(long n);

/// Dense univariate polynomial over Q (`modulus == 0`) or F_q.
/// Coefficients are stored low degree first, trimmed, and for F_q reduced
/// into [0, q).
class Poly {
 public:
  explicit Poly(long modulus = 0) : mod_(modulus) {}
  Poly(std::vector<mpq_class> coeffs, long modulus);

  static Poly constant(const mpq_class& c, long modulus);
  static Poly monomial(const mpq_class& c, int degree, long modulus);

  [[nodiscard]] long modulus() const { return mod_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; kInfinity for zero.
  [[nodiscard]] int low_degree() const;
  [[nodiscard]] mpq_class coeff(int k) const;
  [[nodiscard]] const std::vector<mpq_class>& coeffs() const { return c_; }
  [[nodiscard]] const mpq_class& leading() const { return c_.back(); }

  [[nodiscard]] Poly operator+(const Poly& o) const;
  [[nodiscard]] Poly operator-(const Poly& o) const;
  [[nodiscard]] Poly operator*(const Poly& o) const;
  [[nodiscard]] Poly operator-() const;
  [[nodiscard]] Poly scaled(const mpq_class& c) const;
  [[nodiscard]] Poly shifted_down(int k) const;  // divide by x^k, dropping low terms
  [[nodiscard]] Poly truncated(int n) const;     // mod x^n
  [[nodiscard]] Poly monic() const;

  /// Field-coefficient inverse (over F_q this is the modular inverse).
  [[nodiscard]] mpq_class inverse_coeff(const mpq_class& c) const;

  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  static Poly gcd(Poly a, Poly b);

  bool operator==(const Poly& o) const { return mod_ == o.mod_ && c_ == o.c_; }

 private:
  void normalize();
  [[nodiscard]] mpq_class reduce_coeff(const mpq_class& c) const;

  std::vector<mpq_class> c_;
  long mod_ = 0;
};

/// Element of Frac(S) stored as an exact fraction in lowest terms.
///
/// Elements of S itself are the fractions of valuation >= 0; ring-facing
/// operations (div_exact, matrix validation) keep values integral, while
/// inverse_frac and friends may produce proper fractions.
class Scalar {
 public:
  /// num/den with den monic and gcd(num, den) = 1.
  struct RatFunc {
    Poly num;
    Poly den;
    bool operator==(const RatFunc&) const = default;
  };

  static Scalar from_int(const BaseRing& ring, long value);
  static Scalar from_rational(const BaseRing& ring, const mpq_class& value);
  static Scalar from_polys(const Poly& num, const Poly& den);
  /// x^k for PolyLocal, p^k for IntLocal.
  static Scalar pi_power(const BaseRing& ring, int k);
  static Scalar zero(const BaseRing& ring) { return from_int(ring, 0); }
  static Scalar one(const BaseRing& ring) { return from_int(ring, 1); }

  [[nodiscard]] const BaseRing& ring() const { return ring_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  /// pi-adic valuation; kInfinity for zero, negative outside S.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] bool is_integral() const { return valuation() >= 0; }
  [[nodiscard]] bool is_unit() const { return valuation() == 0; }

  [[nodiscard]] Scalar operator+(const Scalar& o) const;
  [[nodiscard]] Scalar operator-(const Scalar& o) const;
  [[nodiscard]] Scalar operator*(const Scalar& o) const;
  [[nodiscard]] Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Division in Frac(S). Throws SingularMatrix on division by zero.
  [[nodiscard]] Scalar frac_div(const Scalar& o) const;
  /// Division inside S; throws DivisionLeavesRing when the quotient is not in S.
  [[nodiscard]] Scalar div_exact(const Scalar& o) const;
  /// Unit part u of a nonzero a = u * pi^v.
  [[nodiscard]] Scalar unit_part() const;

  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }
  [[nodiscard]] const RatFunc* as_ratfunc() const { return std::get_if<RatFunc>(&value_); }

  bool operator==(const Scalar& o) const { return ring_ == o.ring_ && value_ == o.value_; }

 private:
  Scalar(const BaseRing& ring, mpq_class v) : ring_(ring), value_(std::move(v)) {}
  Scalar(const BaseRing& ring, RatFunc v) : ring_(ring), value_(std::move(v)) {}
  void check_same_ring(const Scalar& o) const;

  BaseRing ring_;
  std::variant<mpq_class, RatFunc> value_;
};

/// Parses the scalar text syntax: integers, "a/b" fractions, and for
/// PolyLocal rings sums of "c", "c*x^k", "x^k", "x" terms with integer or
/// fractional c, optionally as "(num)/(den)". Whitespace is ignored.
Scalar parse_scalar(std::string_view text, const BaseRing& ring);

/// S together with the exponent t of omega = pi^t, i.e. the data of
/// S and R = S/(omega).
class RingCtx {
 public:
  RingCtx(BaseRing base, int t);

  [[nodiscard]] const BaseRing& base() const { return base_; }
  [[nodiscard]] int t() const { return t_; }
  [[nodiscard]] Scalar zero() const { return Scalar::zero(base_); }
  [[nodiscard]] Scalar one() const { return Scalar::one(base_); }
  [[nodiscard]] Scalar from_int(long v) const { return Scalar::from_int(base_, v); }
  [[nodiscard]] Scalar uniformizer() const { return Scalar::pi_power(base_, 1); }
  [[nodiscard]] Scalar pi_power(int k) const { return Scalar::pi_power(base_, k); }
  [[nodiscard]] Scalar omega() const { return Scalar::pi_power(base_, t_); }
  [[nodiscard]] std::string describe() const;

  bool operator==(const RingCtx&) const = default;

 private:
  BaseRing base_;
  int t_;
};

/// Canonical representative of an element of R = S/(omega): an integer in
/// [0, p^t) or a polynomial of degree < t.
class ResidueScalar {
 public:
  [[nodiscard]] const Scalar& lift() const { return rep_; }
  [[nodiscard]] int t() const { return t_; }
  [[nodiscard]] bool is_zero() const { return rep_.is_zero(); }
  [[nodiscard]] int valuation() const;  // capped: zero reports kInfinity

  [[nodiscard]] ResidueScalar operator+(const ResidueScalar& o) const;
  [[nodiscard]] ResidueScalar operator-(const ResidueScalar& o) const;
  [[nodiscard]] ResidueScalar operator*(const ResidueScalar& o) const;
  [[nodiscard]] ResidueScalar operator-() const;
  /// Canonical representative of this element modulo pi^e (e <= t).
  [[nodiscard]] ResidueScalar mod_pi_power(int e) const;

  [[nodiscard]] std::string to_string() const { return rep_.to_string(); }
  bool operator==(const ResidueScalar& o) const { return t_ == o.t_ && rep_ == o.rep_; }

 private:
  friend ResidueScalar reduce_mod_omega(const Scalar& a, const RingCtx& ctx);
  friend ResidueScalar reduce_mod_pi_power(const Scalar& a, const BaseRing& base, int e, int t);
  ResidueScalar(Scalar rep, int t) : rep_(std::move(rep)), t_(t) {}

  Scalar rep_;
  int t_;
};

ResidueScalar reduce_mod_omega(const Scalar& a, const RingCtx& ctx);
/// Representative of a mod pi^e, viewed as an element of S/(pi^t).
ResidueScalar reduce_mod_pi_power(const Scalar& a, const BaseRing& base, int e, int t);

/// R = S/(omega) with a finite residue field, elements encoded as integers
/// in [0, k^t) where k is the residue field size. For Z/p^t the code is the
/// canonical integer; for F_q[x]/(x^t) it is the base-q digit string of the
/// coefficients. In both encodings multiplication by pi^v is multiplication
/// of the code by k^v and reduction mod pi^e is the code mod k^e.
class FiniteResidueRing {
 public:
  using Code = std::uint64_t;

  explicit FiniteResidueRing(const RingCtx& ctx);

  [[nodiscard]] const RingCtx& ctx() const { return ctx_; }
  [[nodiscard]] Code field_size() const { return k_; }
  [[nodiscard]] Code size() const { return pow_[ctx_.t()]; }
  /// k^e, the number of elements of S/(pi^e).
  [[nodiscard]] Code card(int e) const { return pow_[e]; }

  [[nodiscard]] Code add(Code a, Code b) const;
  [[nodiscard]] Code neg(Code a) const;
  [[nodiscard]] Code sub(Code a, Code b) const { return add(a, neg(b)); }
  [[nodiscard]] Code mul(Code a, Code b) const;
  [[nodiscard]] Code mul_pi_power(Code a, int v) const;
  [[nodiscard]] Code truncate(Code a, int e) const { return a % pow_[e]; }
  [[nodiscard]] int valuation(Code a) const;

  [[nodiscard]] Code encode(const Scalar& a) const;
  [[nodiscard]] Scalar lift(Code a) const;

 private:
  RingCtx ctx_;
  Code k_;
  std::vector<Code> pow_;
};

}  // namespace hmon
