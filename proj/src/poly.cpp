#include "qhall/poly.hpp"

#include <sstream>

namespace qhall {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

Integer content(const IntPoly& p) {
  if (p.is_zero()) return 0;
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.leading() < 0) g = -g;
  return g;
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(l);
    check_internal(scaled.get_den() == 1, "denominator clearing failed");
    v.push_back(scaled.get_num());
  }
  IntPoly out(std::move(v));
  Integer g = content(out);
  if (g < 0) g = -g;  // keep a positive multiple of p
  std::vector<Integer> w;
  for (const auto& c : out.coeffs()) w.push_back(c / g);
  return IntPoly(std::move(w));
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

IntPoly gauss(int m) {
  if (m < 0) throw DomainError("gauss: negative argument " + std::to_string(m));
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)));
}

IntPoly gauss_factorial(int m) {
  if (m < 0) throw DomainError("gauss_factorial: negative argument " + std::to_string(m));
  IntPoly acc = IntPoly::one();
  for (int k = 2; k <= m; ++k) acc *= gauss(k);
  return acc;
}

// ---- LaurentPoly ----

LaurentPoly::LaurentPoly(int lo, IntPoly body) : lo_(lo), body_(std::move(body)) { normalize(); }

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    lo_ = 0;
    return;
  }
  int val = body_.valuation();
  if (val > 0) {
    body_ = body_.unshifted(val);
    lo_ += val;
  }
}

bool LaurentPoly::nonnegative() const {
  for (const auto& c : body_.coeffs()) {
    if (c < 0) return false;
  }
  return true;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int lo = std::min(a.lo_, b.lo_);
  return LaurentPoly(lo, a.body_.shifted(a.lo_ - lo) + b.body_.shifted(b.lo_ - lo));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.lo_ + b.lo_, a.body_ * b.body_);
}

// ---- RatFunc ----

RatFunc::RatFunc(RatPoly num, RatPoly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = RatPoly::one();
    return;
  }
  RatPoly g = gcd(num, den);
  num = num.exact_div(g);
  den = den.exact_div(g);
  Rational lead = den.leading();
  num_ = num * (1 / lead);
  den_ = den * (1 / lead);
}

RatFunc::RatFunc(const LaurentPoly& p) {
  if (p.is_zero()) {
    den_ = RatPoly::one();
    return;
  }
  RatPoly body = to_rational(p.body());
  if (p.lo() >= 0) {
    num_ = body.shifted(p.lo());
    den_ = RatPoly::one();
  } else {
    *this = RatFunc(body, RatPoly::monomial(Rational(1), -p.lo()));
  }
}

RatFunc RatFunc::v_power(int k) {
  if (k >= 0) return RatFunc(RatPoly::monomial(Rational(1), k));
  return RatFunc(RatPoly::one(), RatPoly::monomial(Rational(1), -k), Normalized{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // cross-cancel first to keep intermediate degrees small
  RatPoly g1 = gcd(a.num_, b.den_);
  RatPoly g2 = gcd(b.num_, a.den_);
  return RatFunc(a.num_.exact_div(g1) * b.num_.exact_div(g2), a.den_.exact_div(g2) * b.den_.exact_div(g1));
}

// ---- printing ----

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

template <class C>
std::string render_terms(const std::vector<std::pair<int, C>>& terms, const std::string& var) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    C mag = c < 0 ? C(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

template <class C>
std::vector<std::pair<int, C>> dense_terms(const std::vector<C>& coeffs, int lo) {
  std::vector<std::pair<int, C>> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out.emplace_back(lo + static_cast<int>(k), coeffs[k]);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& p, const std::string& var) { return render_terms(dense_terms(p.coeffs(), 0), var); }

std::string to_string(const RatPoly& p, const std::string& var) { return render_terms(dense_terms(p.coeffs(), 0), var); }

std::string to_string(const LaurentPoly& p, const std::string& var) {
  return render_terms(dense_terms(p.coeffs(), p.lo()), var);
}

std::string to_string(const RatFunc& f, const std::string& var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace qhall
