#include "hmon/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hmon/error.hpp"

namespace hmon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionLeavesRing: return "DivisionLeavesRing";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotMono: return "NotMono";
    case ErrorCode::CokernelNotOmegaTorsion: return "CokernelNotOmegaTorsion";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::SquareNotCommuting: return "SquareNotCommuting";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::NotExactTriangle: return "NotExactTriangle";
    case ErrorCode::SquaresNotHomotopyCommuting: return "SquaresNotHomotopyCommuting";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::InfiniteResidueField: return "InfiniteResidueField";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::ProjectiveObject: return "ProjectiveObject";
    case ErrorCode::ParametersTooLarge: return "ParametersTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseRing BaseRing::int_local(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::ParseError, "int-local ring needs a prime p, got " + std::to_string(p));
  return {BaseKind::IntLocal, p};
}

BaseRing BaseRing::poly_rational() { return {BaseKind::PolyLocal, 0}; }

BaseRing BaseRing::poly_prime_field(long q) {
  if (!is_prime(q)) throw Error(ErrorCode::ParseError, "prime-field coefficients need a prime q, got " + std::to_string(q));
  return {BaseKind::PolyLocal, q};
}

std::string BaseRing::describe() const {
  if (kind == BaseKind::IntLocal) return "Z_(" + std::to_string(prime) + ")";
  if (prime == 0) return "Q[x]_(x)";
  return "F_" + std::to_string(prime) + "[x]_(x)";
}

// ---------------------------------------------------------------- Poly

namespace {

mpz_class mod_nonneg(const mpz_class& a, long m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::DivisionLeavesRing, a.get_str() + " is not invertible modulo " + m.get_str());
  return inv;
}

int remove_factor(const mpz_class& a, long p) {
  if (a == 0) return kInfinity;
  mpz_class rest;
  mpz_class pz(p);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace

Poly::Poly(std::vector<mpq_class> coeffs, long modulus) : c_(std::move(coeffs)), mod_(modulus) { normalize(); }

Poly Poly::constant(const mpq_class& c, long modulus) { return Poly({c}, modulus); }

Poly Poly::monomial(const mpq_class& c, int degree, long modulus) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree) + 1, mpq_class(0));
  v.back() = c;
  return Poly(std::move(v), modulus);
}

mpq_class Poly::reduce_coeff(const mpq_class& c) const {
  if (mod_ == 0) return c;
  if (c.get_den() == 1) return mpq_class(mod_nonneg(c.get_num(), mod_));
  mpz_class den = mod_nonneg(c.get_den(), mod_);
  if (den == 0)
    throw Error(ErrorCode::ParseError, "coefficient " + c.get_str() + " has denominator divisible by " + std::to_string(mod_));
  mpz_class num = mod_nonneg(c.get_num(), mod_);
  mpz_class r = mod_nonneg(num * inverse_mod(den, mpz_class(mod_)), mod_);
  return mpq_class(r);
}

void Poly::normalize() {
  if (mod_ != 0)
    for (auto& c : c_) c = reduce_coeff(c);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return kInfinity;
}

mpq_class Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
  for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
  return Poly(std::move(r), mod_);
}

Poly Poly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& c : r) c = -c;
  return Poly(std::move(r), mod_);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(mod_);
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r), mod_);
}

Poly Poly::scaled(const mpq_class& c) const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= c;
  return Poly(std::move(r), mod_);
}

Poly Poly::shifted_down(int k) const {
  if (k >= static_cast<int>(c_.size())) return Poly(mod_);
  return Poly(std::vector<mpq_class>(c_.begin() + k, c_.end()), mod_);
}

Poly Poly::truncated(int n) const {
  if (n >= static_cast<int>(c_.size())) return *this;
  return Poly(std::vector<mpq_class>(c_.begin(), c_.begin() + n), mod_);
}

mpq_class Poly::inverse_coeff(const mpq_class& c) const {
  if (mod_ == 0) return 1 / c;
  return mpq_class(mod_nonneg(inverse_mod(mod_nonneg(c.get_num(), mod_), mpz_class(mod_)), mod_));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_coeff(leading()));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw Error(ErrorCode::SingularMatrix, "polynomial division by zero");
  const int db = b.degree();
  std::vector<mpq_class> r(a.c_);
  std::vector<mpq_class> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, mpq_class(0));
  const mpq_class inv_lead = b.inverse_coeff(b.leading());
  for (int k = a.degree(); k >= db; --k) {
    mpq_class c = r[static_cast<std::size_t>(k)];
    if (a.mod_ != 0) c = a.reduce_coeff(c);
    if (c == 0) continue;
    c *= inv_lead;
    if (a.mod_ != 0) c = a.reduce_coeff(c);
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(std::max(0, std::min(a.degree() + 1, db))));
  quot = Poly(std::move(q), a.mod_);
  rem = Poly(std::move(r), a.mod_);
}

namespace {

// Integer coefficient vector of p scaled to be primitive.
std::vector<mpz_class> primitive_part(const std::vector<mpq_class>& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p) {
    out.emplace_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(std::vector<mpz_class>& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

void trim(std::vector<mpz_class>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// gcd over Q by the primitive pseudo-remainder sequence; keeps the
// coefficients small where plain Euclid over Q blows them up.
std::vector<mpz_class> primitive_gcd(std::vector<mpz_class> a, std::vector<mpz_class> b) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // a <- prem(a, b)
    const std::size_t db = b.size() - 1;
    const mpz_class lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
      const mpz_class la = a.back();
      const std::size_t shift = a.size() - 1 - db;
      for (auto& c : a) c *= lb;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
      trim(a);
    }
    make_primitive(a);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  if (a.mod_ == 0 && !a.is_zero() && !b.is_zero()) {
    std::vector<mpz_class> g = primitive_gcd(primitive_part(a.c_), primitive_part(b.c_));
    std::vector<mpq_class> c(g.begin(), g.end());
    return Poly(std::move(c), 0).monic();
  }
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::from_int(const BaseRing& ring, long value) { return from_rational(ring, mpq_class(value)); }

Scalar Scalar::from_rational(const BaseRing& ring, const mpq_class& value) {
  if (ring.kind == BaseKind::IntLocal) {
    mpq_class v(value);
    v.canonicalize();
    return Scalar(ring, std::move(v));
  }
  return from_polys(Poly::constant(value, ring.prime), Poly::constant(1, ring.prime));
}

Scalar Scalar::from_polys(const Poly& num, const Poly& den) {
  if (num.modulus() != den.modulus())
    throw Error(ErrorCode::ContextMismatch, "numerator and denominator over different coefficient fields");
  if (den.is_zero()) throw Error(ErrorCode::SingularMatrix, "zero denominator");
  const long mod = num.modulus();
  const BaseRing ring{BaseKind::PolyLocal, mod};
  if (num.is_zero()) return Scalar(ring, RatFunc{Poly(mod), Poly::constant(1, mod)});
  if (den.degree() == 0) return Scalar(ring, RatFunc{num.scaled(den.inverse_coeff(den.leading())), Poly::constant(1, mod)});
  Poly g = Poly::gcd(num, den);
  Poly q1, r1, q2, r2;
  Poly::divmod(num, g, q1, r1);
  Poly::divmod(den, g, q2, r2);
  const mpq_class inv = q2.inverse_coeff(q2.leading());
  return Scalar(ring, RatFunc{q1.scaled(inv), q2.scaled(inv)});
}

Scalar Scalar::pi_power(const BaseRing& ring, int k) {
  if (ring.kind == BaseKind::IntLocal) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(ring.prime), static_cast<unsigned long>(k));
    return Scalar(ring, mpq_class(v));
  }
  return from_polys(Poly::monomial(1, k, ring.prime), Poly::constant(1, ring.prime));
}

bool Scalar::is_zero() const {
  if (auto q = as_rational()) return *q == 0;
  return as_ratfunc()->num.is_zero();
}

bool Scalar::is_one() const {
  if (auto q = as_rational()) return *q == 1;
  const auto& r = *as_ratfunc();
  return r.num == Poly::constant(1, r.num.modulus()) && r.den == r.num;
}

int Scalar::valuation() const {
  if (is_zero()) return kInfinity;
  if (auto q = as_rational()) return remove_factor(q->get_num(), ring_.prime) - remove_factor(q->get_den(), ring_.prime);
  const auto& r = *as_ratfunc();
  return r.num.low_degree() - r.den.low_degree();
}

void Scalar::check_same_ring(const Scalar& o) const {
  if (!(ring_ == o.ring_))
    throw Error(ErrorCode::ContextMismatch, "scalars over " + ring_.describe() + " and " + o.ring_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_ring(o);
  if (auto q = as_rational()) return Scalar(ring_, mpq_class(*q + *o.as_rational()));
  const auto& a = *as_ratfunc();
  const auto& b = *o.as_ratfunc();
  if (a.den == b.den) return from_polys(a.num + b.num, a.den);
  // gcd(n + m d, d) = gcd(n, d) = 1, so a denominator of 1 needs no reduction
  const Poly one = Poly::constant(1, a.num.modulus());
  if (a.den == one) return Scalar(ring_, RatFunc{a.num * b.den + b.num, b.den});
  if (b.den == one) return Scalar(ring_, RatFunc{b.num * a.den + a.num, a.den});
  return from_polys(a.num * b.den + b.num * a.den, a.den * b.den);
}

Scalar Scalar::operator-() const {
  if (auto q = as_rational()) return Scalar(ring_, mpq_class(-*q));
  const auto& a = *as_ratfunc();
  return Scalar(ring_, RatFunc{-a.num, a.den});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_ring(o);
  if (auto q = as_rational()) return Scalar(ring_, mpq_class(*q * *o.as_rational()));
  const auto& a = *as_ratfunc();
  const auto& b = *o.as_ratfunc();
  return from_polys(a.num * b.num, a.den * b.den);
}

Scalar Scalar::frac_div(const Scalar& o) const {
  check_same_ring(o);
  if (o.is_zero()) throw Error(ErrorCode::SingularMatrix, "division by zero");
  if (auto q = as_rational()) return Scalar(ring_, mpq_class(*q / *o.as_rational()));
  const auto& a = *as_ratfunc();
  const auto& b = *o.as_ratfunc();
  return from_polys(a.num * b.den, a.den * b.num);
}

Scalar Scalar::div_exact(const Scalar& o) const {
  Scalar r = frac_div(o);
  if (!r.is_integral())
    throw Error(ErrorCode::DivisionLeavesRing, to_string() + " / " + o.to_string() + " is not in " + ring_.describe());
  return r;
}

Scalar Scalar::unit_part() const { return frac_div(pi_power(ring_, valuation())); }

namespace {

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const mpq_class c = p.coeff(k);
    if (c == 0) continue;
    std::string term;
    if (k == 0) {
      term = c.get_str();
    } else {
      const std::string mono = k == 1 ? "x" : "x^" + std::to_string(k);
      if (c == 1) term = mono;
      else if (c == -1) term = "-" + mono;
      else term = c.get_str() + "*" + mono;
    }
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

}  // namespace

std::string Scalar::to_string() const {
  if (auto q = as_rational()) return q->get_str();
  const auto& r = *as_ratfunc();
  if (r.den == Poly::constant(1, r.den.modulus())) return poly_to_string(r.num);
  return "(" + poly_to_string(r.num) + ")/(" + poly_to_string(r.den) + ")";
}

// ---------------------------------------------------------------- parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string text, const BaseRing& ring) : s_(std::move(text)), ring_(ring) {}

  Scalar parse() {
    if (s_.empty()) fail("empty scalar");
    Scalar v = ring_.kind == BaseKind::IntLocal ? parse_int_local() : parse_poly_local();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "cannot parse scalar \"" + s_ + "\": " + why);
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  mpz_class parse_natural() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits at offset " + std::to_string(start));
    return mpz_class(s_.substr(start, pos_ - start));
  }

  // digits [ "/" digits ]
  mpq_class parse_unsigned_rational() {
    mpz_class num = parse_natural();
    mpz_class den = 1;
    if (accept('/')) {
      den = parse_natural();
      if (den == 0) fail("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  Scalar parse_int_local() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    mpq_class q = parse_unsigned_rational();
    return Scalar::from_rational(ring_, neg ? mpq_class(-q) : q);
  }

  Poly parse_poly() {
    Poly acc(ring_.prime);
    bool first = true;
    while (pos_ < s_.size() && !peek(')')) {
      bool neg = false;
      if (accept('-')) neg = true;
      else if (accept('+')) {}
      else if (!first) fail("expected '+' or '-' at offset " + std::to_string(pos_));
      first = false;
      mpq_class coeff = 1;
      int degree = 0;
      bool have_coeff = false;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = parse_unsigned_rational();
        have_coeff = true;
        if (accept('*')) {
          if (!peek('x')) fail("expected 'x' after '*'");
        } else if (peek('x')) {
          fail("missing '*' between coefficient and x");
        }
      }
      if (accept('x')) {
        degree = 1;
        if (accept('^')) degree = static_cast<int>(parse_natural().get_si());
      } else if (!have_coeff) {
        fail("expected a term at offset " + std::to_string(pos_));
      }
      if (neg) coeff = -coeff;
      acc = acc + Poly::monomial(coeff, degree, ring_.prime);
    }
    if (first) fail("empty polynomial");
    return acc;
  }

  Scalar parse_poly_local() {
    if (accept('(')) {
      Poly num = parse_poly();
      if (!accept(')') || !accept('/') || !accept('(')) fail("expected \"(num)/(den)\"");
      Poly den = parse_poly();
      if (!accept(')')) fail("missing ')'");
      if (den.is_zero()) fail("zero denominator");
      return Scalar::from_polys(num, den);
    }
    return Scalar::from_polys(parse_poly(), Poly::constant(1, ring_.prime));
  }

  std::string s_;
  const BaseRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const BaseRing& ring) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  return ScalarParser(std::move(compact), ring).parse();
}

// ---------------------------------------------------------------- RingCtx

RingCtx::RingCtx(BaseRing base, int t) : base_(base), t_(t) {
  if (t < 1) throw Error(ErrorCode::ParseError, "omega = pi^t needs t >= 1, got t = " + std::to_string(t));
  if (base.kind == BaseKind::IntLocal && !is_prime(base.prime))
    throw Error(ErrorCode::ParseError, "p must be prime, got " + std::to_string(base.prime));
  if (base.kind == BaseKind::PolyLocal && base.prime != 0 && !is_prime(base.prime))
    throw Error(ErrorCode::ParseError, "q must be prime, got " + std::to_string(base.prime));
}

std::string RingCtx::describe() const {
  const std::string pi = base_.kind == BaseKind::IntLocal ? std::to_string(base_.prime) : "x";
  return base_.describe() + ", omega = " + pi + "^" + std::to_string(t_);
}

// ---------------------------------------------------------------- residues

ResidueScalar reduce_mod_pi_power(const Scalar& a, const BaseRing& base, int e, int t) {
  if (!a.is_integral()) throw Error(ErrorCode::DivisionLeavesRing, a.to_string() + " is not in " + base.describe());
  if (auto q = a.as_rational()) {
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(base.prime), static_cast<unsigned long>(e));
    mpz_class r = (q->get_num() * inverse_mod(q->get_den(), modulus)) % modulus;
    if (r < 0) r += modulus;
    return ResidueScalar(Scalar::from_rational(base, mpq_class(r)), t);
  }
  const auto& rf = *a.as_ratfunc();
  const long mod = rf.num.modulus();
  // Power-series inverse of the denominator modulo x^e.
  const mpq_class d0_inv = rf.den.inverse_coeff(rf.den.coeff(0));
  std::vector<mpq_class> inv(static_cast<std::size_t>(e), mpq_class(0));
  if (e > 0) inv[0] = d0_inv;
  for (int k = 1; k < e; ++k) {
    mpq_class acc = 0;
    for (int j = 1; j <= k; ++j) acc += rf.den.coeff(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = Poly::constant(-acc * d0_inv, mod).coeff(0);
  }
  Poly r = (rf.num * Poly(std::move(inv), mod)).truncated(e);
  return ResidueScalar(Scalar::from_polys(r, Poly::constant(1, mod)), t);
}

ResidueScalar reduce_mod_omega(const Scalar& a, const RingCtx& ctx) {
  return reduce_mod_pi_power(a, ctx.base(), ctx.t(), ctx.t());
}

int ResidueScalar::valuation() const { return rep_.valuation(); }

ResidueScalar ResidueScalar::operator+(const ResidueScalar& o) const {
  return reduce_mod_pi_power(rep_ + o.rep_, rep_.ring(), t_, t_);
}
ResidueScalar ResidueScalar::operator-(const ResidueScalar& o) const {
  return reduce_mod_pi_power(rep_ - o.rep_, rep_.ring(), t_, t_);
}
ResidueScalar ResidueScalar::operator*(const ResidueScalar& o) const {
  return reduce_mod_pi_power(rep_ * o.rep_, rep_.ring(), t_, t_);
}
ResidueScalar ResidueScalar::operator-() const { return reduce_mod_pi_power(-rep_, rep_.ring(), t_, t_); }
ResidueScalar ResidueScalar::mod_pi_power(int e) const { return reduce_mod_pi_power(rep_, rep_.ring(), e, t_); }

// ---------------------------------------------------------------- finite R

FiniteResidueRing::FiniteResidueRing(const RingCtx& ctx) : ctx_(ctx) {
  if (!ctx.base().finite_residue_field())
    throw Error(ErrorCode::InfiniteResidueField, "enumeration over " + ctx.base().describe() + " is impossible");
  k_ = static_cast<Code>(ctx.base().prime);
  pow_.push_back(1);
  for (int e = 1; e <= ctx.t(); ++e) {
    if (pow_.back() > (Code{1} << 40) / k_)
      throw Error(ErrorCode::ParametersTooLarge, "residue ring " + ctx.describe() + " too large to enumerate");
    pow_.push_back(pow_.back() * k_);
  }
}

FiniteResidueRing::Code FiniteResidueRing::add(Code a, Code b) const {
  if (ctx_.base().kind == BaseKind::IntLocal) return (a + b) % size();
  Code r = 0;
  for (int d = ctx_.t() - 1; d >= 0; --d) {
    const Code da = a / pow_[d] % k_;
    const Code db = b / pow_[d] % k_;
    r = r * k_ + (da + db) % k_;
  }
  return r;
}

FiniteResidueRing::Code FiniteResidueRing::neg(Code a) const {
  if (ctx_.base().kind == BaseKind::IntLocal) return (size() - a) % size();
  Code r = 0;
  for (int d = ctx_.t() - 1; d >= 0; --d) r = r * k_ + (k_ - a / pow_[d] % k_) % k_;
  return r;
}

FiniteResidueRing::Code FiniteResidueRing::mul(Code a, Code b) const {
  if (ctx_.base().kind == BaseKind::IntLocal)
    return static_cast<Code>(static_cast<unsigned __int128>(a) * b % size());
  const int t = ctx_.t();
  std::vector<Code> prod(static_cast<std::size_t>(t), 0);
  for (int i = 0; i < t; ++i) {
    const Code da = a / pow_[i] % k_;
    if (da == 0) continue;
    for (int j = 0; i + j < t; ++j) prod[static_cast<std::size_t>(i + j)] += da * (b / pow_[j] % k_);
  }
  Code r = 0;
  for (int d = t - 1; d >= 0; --d) r = r * k_ + prod[static_cast<std::size_t>(d)] % k_;
  return r;
}

FiniteResidueRing::Code FiniteResidueRing::mul_pi_power(Code a, int v) const {
  if (v >= ctx_.t()) return 0;
  return static_cast<Code>(static_cast<unsigned __int128>(a) * pow_[v] % size());
}

int FiniteResidueRing::valuation(Code a) const {
  if (a == 0) return kInfinity;
  int v = 0;
  while (a % k_ == 0) {
    a /= k_;
    ++v;
  }
  return v;
}

FiniteResidueRing::Code FiniteResidueRing::encode(const Scalar& a) const {
  const ResidueScalar r = reduce_mod_omega(a, ctx_);
  if (auto q = r.lift().as_rational()) return q->get_num().get_ui();
  const Poly& p = r.lift().as_ratfunc()->num;
  Code c = 0;
  for (int d = ctx_.t() - 1; d >= 0; --d) c = c * k_ + p.coeff(d).get_num().get_ui();
  return c;
}

Scalar FiniteResidueRing::lift(Code a) const {
  const BaseRing& base = ctx_.base();
  if (base.kind == BaseKind::IntLocal) return Scalar::from_rational(base, mpq_class(mpz_class(static_cast<unsigned long>(a))));
  std::vector<mpq_class> coeffs;
  for (int d = 0; d < ctx_.t(); ++d) coeffs.emplace_back(static_cast<unsigned long>(a / pow_[d] % k_));
  return Scalar::from_polys(Poly(std::move(coeffs), base.prime), Poly::constant(1, base.prime));
}

}  // namespace hmon
