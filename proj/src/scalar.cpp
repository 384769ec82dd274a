#include "rbalg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace rbalg {

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const mpq_class& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, mpq_class(1));
  return p;
}

void Polynomial::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

const mpq_class& Polynomial::leading_coefficient() const { return terms_.rbegin()->second; }

Polynomial::Exponents Polynomial::monomial_gcd() const {
  Exponents g(nvars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      g = e;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < nvars_; ++i) g[i] = std::min(g[i], e[i]);
  }
  return g;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[index] > 0; });
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  if (c == 0) return Polynomial(nvars_);
  Polynomial r(nvars_);
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::divided_by_monomial(const Exponents& g) const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    for (std::size_t i = 0; i < nvars_; ++i) d[i] -= g[i];
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

namespace {

std::string monomial_string(const Polynomial::Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e, names);
    mpq_class mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDivision("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(std::size_t nvars, const mpq_class& c) {
  return RationalFunction(Polynomial::constant(nvars, c), Polynomial::constant(nvars, 1));
}

void RationalFunction::normalize() {
  const std::size_t n = den_.nvars();
  if (num_.is_zero()) {
    den_ = Polynomial::constant(n, 1);
    return;
  }
  auto g = num_.monomial_gcd();
  auto gd = den_.monomial_gcd();
  bool nontrivial = false;
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::min(g[i], gd[i]);
    nontrivial = nontrivial || g[i] > 0;
  }
  if (nontrivial) {
    num_ = num_.divided_by_monomial(g);
    den_ = den_.divided_by_monomial(g);
  }
  mpq_class lc = den_.leading_coefficient();
  if (lc != 1) {
    mpq_class inv = 1 / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  if (num_ == den_) {
    num_ = Polynomial::constant(n, 1);
    den_ = num_;
  }
}

bool RationalFunction::equals(const RationalFunction& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return constant(den_.nvars(), 0);
  if (num_ == o.den_) return RationalFunction(o.num_, den_);
  if (den_ == o.num_) return RationalFunction(num_, o.den_);
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw ZeroDivision("division by the zero rational function");
  return *this * RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

// --------------------------------------------------------------------- Field

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::rational() {
  static const Field q(std::make_shared<const FieldSpec>(FieldSpec{FieldSpec::Kind::rational, 0, {}}));
  return q;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw InvalidField("prime modulus must be below 2^32");
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  return Field(std::make_shared<const FieldSpec>(FieldSpec{FieldSpec::Kind::prime, p, {}}));
}

Field Field::rational_function(std::vector<std::string> params) {
  std::set<std::string> seen;
  for (const auto& name : params) {
    if (!is_identifier(name)) throw InvalidField("invalid parameter name '" + name + "'");
    if (!seen.insert(name).second) throw InvalidField("duplicate parameter name '" + name + "'");
  }
  return Field(std::make_shared<const FieldSpec>(FieldSpec{FieldSpec::Kind::rational_function, 0, std::move(params)}));
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long long v) const { return from_rational(mpq_class(static_cast<long>(v))); }

Scalar Field::from_rational(const mpq_class& q) const {
  switch (kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(*this, q);
    case FieldSpec::Kind::prime: {
      std::uint64_t p = characteristic();
      std::uint64_t d = reduce_mod(q.get_den(), p);
      if (d == 0) throw ZeroDivision("denominator vanishes modulo " + std::to_string(p));
      std::uint64_t n = reduce_mod(q.get_num(), p);
      return Scalar(*this, n * mod_pow(d, p - 2, p) % p);
    }
    case FieldSpec::Kind::rational_function:
      return Scalar(*this, RationalFunction::constant(params().size(), q));
  }
  throw InvalidField("unknown field kind");
}

Scalar Field::parameter(const std::string& name) const {
  if (kind() != FieldSpec::Kind::rational_function) throw InvalidField("field " + to_string() + " has no parameters");
  const auto& ps = params();
  auto it = std::find(ps.begin(), ps.end(), name);
  if (it == ps.end()) throw InvalidField("unknown parameter '" + name + "' in " + to_string());
  std::size_t n = ps.size();
  return Scalar(*this, RationalFunction(Polynomial::variable(n, static_cast<std::size_t>(it - ps.begin())),
                                        Polynomial::constant(n, 1)));
}

std::string Field::to_string() const {
  switch (kind()) {
    case FieldSpec::Kind::rational:
      return "Q";
    case FieldSpec::Kind::prime:
      return "F_" + std::to_string(characteristic());
    case FieldSpec::Kind::rational_function: {
      std::string s = "Q(";
      for (std::size_t i = 0; i < params().size(); ++i) s += (i ? "," : "") + params()[i];
      return s + ")";
    }
  }
  return "?";
}

// -------------------------------------------------------------------- Scalar

Scalar::Scalar(Field field, Value value) : field_(std::move(field)), value_(std::move(value)) {
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      if (!std::holds_alternative<mpq_class>(value_)) throw FieldMismatch("value does not belong to Q");
      break;
    case FieldSpec::Kind::prime:
      if (!std::holds_alternative<std::uint64_t>(value_) || residue() >= field_.characteristic()) {
        throw FieldMismatch("value does not belong to " + field_.to_string());
      }
      break;
    case FieldSpec::Kind::rational_function:
      if (!std::holds_alternative<RationalFunction>(value_) ||
          rational_function().num().nvars() != field_.params().size()) {
        throw FieldMismatch("value does not belong to " + field_.to_string());
      }
      break;
  }
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch("operands over " + field_.to_string() + " and " + o.field_.to_string());
}

bool Scalar::is_zero() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return rational() == 0;
    case FieldSpec::Kind::prime:
      return residue() == 0;
    case FieldSpec::Kind::rational_function:
      return rational_function().is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return equals(field_.one()); }

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(rational() + o.rational()));
    case FieldSpec::Kind::prime:
      return Scalar(field_, (residue() + o.residue()) % field_.characteristic());
    case FieldSpec::Kind::rational_function:
      return Scalar(field_, rational_function() + o.rational_function());
  }
  throw InvalidField("unknown field kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(rational() - o.rational()));
    case FieldSpec::Kind::prime: {
      std::uint64_t p = field_.characteristic();
      return Scalar(field_, (residue() + p - o.residue()) % p);
    }
    case FieldSpec::Kind::rational_function:
      return Scalar(field_, rational_function() - o.rational_function());
  }
  throw InvalidField("unknown field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(rational() * o.rational()));
    case FieldSpec::Kind::prime:
      return Scalar(field_, residue() * o.residue() % field_.characteristic());
    case FieldSpec::Kind::rational_function:
      return Scalar(field_, rational_function() * o.rational_function());
  }
  throw InvalidField("unknown field kind");
}

Scalar Scalar::operator-() const { return field_.zero() - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivision("inverse of zero in " + field_.to_string());
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return Scalar(field_, mpq_class(1 / rational()));
    case FieldSpec::Kind::prime: {
      std::uint64_t p = field_.characteristic();
      return Scalar(field_, mod_pow(residue(), p - 2, p));
    }
    case FieldSpec::Kind::rational_function: {
      const auto& f = rational_function();
      return Scalar(field_, RationalFunction(f.den(), f.num()));
    }
  }
  throw InvalidField("unknown field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

bool Scalar::equals(const Scalar& o) const {
  require_same_field(o);
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return rational() == o.rational();
    case FieldSpec::Kind::prime:
      return residue() == o.residue();
    case FieldSpec::Kind::rational_function:
      return rational_function().equals(o.rational_function());
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case FieldSpec::Kind::rational:
      return rational().get_str();
    case FieldSpec::Kind::prime:
      return std::to_string(residue());
    case FieldSpec::Kind::rational_function: {
      const auto& f = rational_function();
      const auto& names = field_.params();
      std::string num = f.num().to_string(names);
      if (f.den().is_constant()) return num;
      if (f.num().terms().size() > 1) num = "(" + num + ")";
      std::string den = f.den().to_string(names);
      const auto& dterms = f.den().terms();
      bool bare = dterms.size() == 1 && dterms.begin()->second == 1 &&
                  std::count_if(dterms.begin()->first.begin(), dterms.begin()->first.end(),
                                [](std::uint32_t e) { return e > 0; }) == 1;
      if (!bare) den = "(" + den + ")";
      return num + "/" + den;
    }
  }
  return "?";
}

Scalar arith(ArithOp op, const Scalar& x, const std::optional<Scalar>& y) {
  auto need = [&]() -> const Scalar& {
    if (!y) throw InvalidArity("binary scalar operation needs two operands");
    return *y;
  };
  switch (op) {
    case ArithOp::add:
      return x + need();
    case ArithOp::sub:
      return x - need();
    case ArithOp::mul:
      return x * need();
    case ArithOp::neg:
      return -x;
    case ArithOp::inv:
      return x.inverse();
  }
  throw InvalidArity("unknown scalar operation");
}

bool scalar_eq(const Scalar& x, const Scalar& y) { return x.equals(y); }

Scalar evaluate(const Scalar& x, const std::map<std::string, mpq_class>& assignment) {
  const Field& f = x.field();
  if (f.kind() == FieldSpec::Kind::rational) return x;
  if (f.kind() != FieldSpec::Kind::rational_function) {
    throw FieldMismatch("evaluate expects a rational-function scalar, got " + f.to_string());
  }
  const auto& rf = x.rational_function();
  const auto& names = f.params();
  std::vector<mpq_class> point(names.size(), mpq_class(0));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!rf.num().uses_variable(i) && !rf.den().uses_variable(i)) continue;
    auto it = assignment.find(names[i]);
    if (it == assignment.end()) throw IncompleteAssignment("no value for parameter '" + names[i] + "'");
    point[i] = it->second;
  }
  mpq_class den = rf.den().evaluate(point);
  if (den == 0) throw EvalSingular("denominator " + rf.den().to_string(names) + " vanishes at the sample");
  return Field::rational().from_rational(rf.num().evaluate(point) / den);
}

Scalar convert(const Scalar& x, const Field& target) {
  if (x.field() == target) return x;
  if (x.field().kind() == FieldSpec::Kind::rational) {
    if (target.kind() == FieldSpec::Kind::prime) {
      try {
        return target.from_rational(x.rational());
      } catch (const ZeroDivision&) {
        throw EvalSingular("denominator of " + x.to_string() + " vanishes in " + target.to_string());
      }
    }
    return target.from_rational(x.rational());
  }
  throw FieldMismatch("no conversion from " + x.field().to_string() + " to " + target.to_string());
}

}  // namespace rbalg
