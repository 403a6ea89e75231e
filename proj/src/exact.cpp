#include "hcube/exact.hpp"

#include "hcube/error.hpp"

#include <cctype>

namespace hcube {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::NotOnCommonLine: return "NotOnCommonLine";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::DegenerateColoring: return "DegenerateColoring";
    case ErrorCode::OrderingImpossible: return "OrderingImpossible";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::DomainTooSmall: return "DomainTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

namespace {

BigInt parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::ParseError, "empty integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rational ipow(const Rational& base, std::uint64_t exponent) {
  return Rational(ipow(boost::multiprecision::numerator(base), exponent),
                  ipow(boost::multiprecision::denominator(base), exponent));
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt integer_root_floor(const BigInt& value, unsigned k) {
  if (value < 0 || k == 0) throw Error(ErrorCode::InvalidArgument, "integer_root_floor domain");
  if (value < 2 || k == 1) return value;
  // Binary search on [0, 2^(bits/k + 1)].
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= value) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace hcube
