#include "goldprod/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace goldprod {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("Rational::parse: expected p or p/q with decimal digits, got \"" +
                                std::string(text) + "\"");
  }
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (sgn(den) == 0) {
    throw std::invalid_argument("Rational::parse: zero denominator in \"" + std::string(text) +
                                "\"");
  }
  if (negative) num = -num;
  return {num, den};
}

Rational Rational::abs() const {
  Rational r = *this;
  r.q_ = ::abs(r.q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational::inverse: zero");
  Rational r;
  r.q_ = 1 / q_;
  return r;
}

Rational Rational::pow(unsigned long k) const {
  // Components stay coprime under powering, so the result is canonical.
  Rational r;
  mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), k);
  mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), k);
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

}  // namespace goldprod
