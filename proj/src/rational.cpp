#include "fbrooks/rational.hpp"

#include "fbrooks/error.hpp"

namespace fbrooks {

Rational::Rational(long long n, long long d) {
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
  q_.canonicalize();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.starts_with('-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.starts_with('-'))
    throw Error(ErrorCode::kInvalidArgument,
                "malformed rational \"" + std::string(text) + "\"");
  mpz_class p{std::string(num)}, q{std::string(den)};
  if (q == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return Rational(mpq_class(p, q));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "reciprocal of zero");
  return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

long long Rational::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r.get_si();
}

long long Rational::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fbrooks
