#include "bodycad/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "bodycad/error.hpp"

namespace bodycad {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotACircuit: return "NotACircuit";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::RedPatternViolation: return "RedPatternViolation";
    case ErrorCode::NotCounted: return "NotCounted";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::ParallelVectors: return "ParallelVectors";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::MalformedConstraint: return "MalformedConstraint";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

ModP ModP::pow(std::uint64_t e) const {
  ModP base = *this;
  ModP acc = 1;
  while (e != 0) {
    if (e & 1U) acc *= base;
    base *= base;
    e >>= 1U;
  }
  return acc;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw std::domain_error("ModP: inverse of zero");
  return pow(kModulus - 2);
}

std::ostream& operator<<(std::ostream& os, ModP x) { return os << x.value(); }

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo,
                         std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(rng());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) {
      return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                       r % range);
    }
  }
}

std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index) {
  std::uint64_t z = parent + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::ParseError,
              "not an exact rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text);
    out = Rational(n, d);
    out.canonicalize();
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      bad_number(text);
    }
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac),
                10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    out = Rational(n, d);
    out.canonicalize();
  } else {
    if (!all_digits(s)) bad_number(text);
    out = Rational(mpz_class(std::string(s), 10));
  }
  if (negative) out = -out;
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace bodycad
