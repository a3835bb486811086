#pragma once

// Exact scalar fields used by every verdict: GMP rationals and a 62-bit
// prime field. Floating point never enters a rank or determinant.

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bodycad {

using Rational = mpq_class;

/// Residue modulo the prime 2^62 - 57.
class ModP {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 62) - 57;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t x)  // NOLINT(google-explicit-constructor)
      : value_(reduce_signed(x)) {}

  static constexpr ModP from_residue(std::uint64_t r) {
    ModP out;
    out.value_ = r % kModulus;
    return out;
  }

  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ModP operator+(ModP a, ModP b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= kModulus) s -= kModulus;
    return from_residue(s);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return from_residue(a.value_ >= b.value_ ? a.value_ - b.value_
                                             : a.value_ + kModulus - b.value_);
  }
  friend constexpr ModP operator-(ModP a) { return ModP{} - a; }
  friend constexpr ModP operator*(ModP a, ModP b) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a.value_) * b.value_;
    return from_residue(static_cast<std::uint64_t>(p % kModulus));
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }

  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  ModP& operator/=(ModP o) { return *this = *this / o; }

  friend constexpr bool operator==(ModP a, ModP b) = default;

  ModP pow(std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  ModP inverse() const;

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t x) {
    const std::int64_t m = static_cast<std::int64_t>(kModulus);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, ModP x);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(ModP x) { return x.value() == 0; }

/// Field name used in reports and on the command line.
template <class F>
constexpr std::string_view field_name();
template <>
constexpr std::string_view field_name<Rational>() { return "rational"; }
template <>
constexpr std::string_view field_name<ModP>() { return "prime"; }

/// Uniform draw from a set of at least 2^61 elements: all residues for ModP,
/// integers in [-2^62, 2^62) for Rational. Uses raw engine output only so that
/// draws are identical across standard library implementations.
template <class F>
F sample_scalar(std::mt19937_64& rng);

template <>
inline ModP sample_scalar<ModP>(std::mt19937_64& rng) {
  for (;;) {
    const std::uint64_t r = rng() >> 2;
    if (r < ModP::kModulus) return ModP::from_residue(r);
  }
}

template <>
inline Rational sample_scalar<Rational>(std::mt19937_64& rng) {
  const std::int64_t r =
      static_cast<std::int64_t>(rng() >> 1) - (std::int64_t{1} << 62);
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), r);
  return Rational(z);
}

/// Uniform integer in [lo, hi] from raw engine output (rejection sampling).
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// SplitMix64 finalizer: derives independent child seeds as
/// split_seed(parent, index).
std::uint64_t split_seed(std::uint64_t parent, std::uint64_t index);

/// Parses integers ("7"), fractions ("-3/14") and plain decimals ("0.25")
/// exactly. Exponent notation is rejected. Throws Error(ParseError).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// num/den in lowest terms (mpq_class(num, den) alone does not reduce).
inline Rational ratio(std::int64_t num, std::int64_t den) {
  Rational q{mpz_class(std::to_string(num)), mpz_class(std::to_string(den))};
  q.canonicalize();
  return q;
}

}  // namespace bodycad
