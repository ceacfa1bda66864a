#include "opstruct/rational.hpp"

#include <cctype>

#include "opstruct/error.hpp"

namespace opstruct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::non_square: return "NonSquare";
    case ErrorKind::truncation_exceeded: return "TruncationExceeded";
    case ErrorKind::zero_norm: return "ZeroNorm";
    case ErrorKind::not_regular: return "NotRegular";
    case ErrorKind::insufficient_coefficients: return "InsufficientCoefficients";
    case ErrorKind::invalid_parameter: return "InvalidParameter";
    case ErrorKind::not_a_basis: return "NotABasis";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::missing_functional: return "MissingFunctional";
    case ErrorKind::singular_system: return "SingularSystem";
    case ErrorKind::initial_conditions_fail: return "InitialConditionsFail";
    case ErrorKind::hypothesis_fail: return "HypothesisFail";
    case ErrorKind::schema_error: return "SchemaError";
    case ErrorKind::invalid_rational: return "InvalidRational";
  }
  return "Unknown";
}

Rational frac(long num, long den) {
  if (den == 0) throw Error(ErrorKind::invalid_rational, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::invalid_rational, "cannot parse '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::invalid_rational, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace opstruct
