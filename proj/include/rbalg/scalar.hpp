#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rbalg/errors.hpp"

namespace rbalg {

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are keyed by exponent vectors of fixed length `nvars`; zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Terms = std::map<Exponents, mpq_class>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const mpq_class& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the largest exponent vector; requires a nonzero polynomial.
  const mpq_class& leading_coefficient() const;
  /// Componentwise minimum of the exponents of all terms (the monomial gcd).
  Exponents monomial_gcd() const;
  /// True iff variable `index` has a positive exponent in some term.
  bool uses_variable(std::size_t index) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const mpq_class& c) const;
  Polynomial divided_by_monomial(const Exponents& e) const;
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  mpq_class evaluate(const std::vector<mpq_class>& point) const;
  std::string to_string(const std::vector<std::string>& names) const;

  void add_term(const Exponents& e, const mpq_class& c);

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Quotient of two polynomials, kept unreduced apart from cheap normalization.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(std::size_t nvars, const mpq_class& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool equals(const RationalFunction& o) const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

struct FieldSpec {
  enum class Kind { rational, prime, rational_function };
  Kind kind = Kind::rational;
  std::uint64_t p = 0;
  std::vector<std::string> params;
  bool operator==(const FieldSpec&) const = default;
};

class Scalar;

/// Shared handle to a field description; copies are cheap.
class Field {
 public:
  static Field rational();
  static Field prime(std::uint64_t p);
  static Field rational_function(std::vector<std::string> params);

  const FieldSpec& spec() const { return *spec_; }
  FieldSpec::Kind kind() const { return spec_->kind; }
  std::uint64_t characteristic() const { return spec_->p; }
  const std::vector<std::string>& params() const { return spec_->params; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// The indeterminate `name`; requires a rational_function field declaring it.
  Scalar parameter(const std::string& name) const;
  /// Parses a literal of the scalar grammar into this field.
  Scalar parse(std::string_view literal) const;

  std::string to_string() const;
  bool operator==(const Field& o) const { return spec_ == o.spec_ || *spec_ == *o.spec_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  explicit Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)) {}
  std::shared_ptr<const FieldSpec> spec_;
};

/// Immutable exact element of a Field.
class Scalar {
 public:
  using Value = std::variant<mpq_class, std::uint64_t, RationalFunction>;

  Scalar(Field field, Value value);

  const Field& field() const { return field_; }
  const Value& value() const { return value_; }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const RationalFunction& rational_function() const { return std::get<RationalFunction>(value_); }

  bool is_zero() const;
  bool is_one() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Field equality; fractions compare by cross-multiplication.
  bool equals(const Scalar& o) const;
  bool operator==(const Scalar& o) const { return equals(o); }
  bool operator!=(const Scalar& o) const { return !equals(o); }

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;
  Field field_;
  Value value_;
};

enum class ArithOp { add, sub, mul, neg, inv };

Scalar arith(ArithOp op, const Scalar& x, const std::optional<Scalar>& y = std::nullopt);
bool scalar_eq(const Scalar& x, const Scalar& y);

/// Substitutes rational values for the parameters of a rational-function scalar.
Scalar evaluate(const Scalar& x, const std::map<std::string, mpq_class>& assignment);

/// Maps a scalar into `target`: Q to F_p (reduction), Q or F_p to itself,
/// Q to a rational-function field (constants).
Scalar convert(const Scalar& x, const Field& target);

}  // namespace rbalg
