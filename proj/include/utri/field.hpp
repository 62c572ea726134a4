/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UTRI_FIELD_HPP
#define UTRI_FIELD_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "utri/errors.hpp"

namespace utri {

using Rng = std::mt19937_64;

enum class FieldKind { rational, prime, complex };

/// Residue class modulo a prime. The modulus travels with the value so that
/// arithmetic on two residues never needs the owning Field.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// An element of one of the three working fields. Immutable value type;
/// arithmetic between values of different kinds (or different moduli)
/// raises ErrorKind::field_mismatch.
class FieldValue {
 public:
  using Storage = std::variant<mpq_class, Residue, std::complex<double>>;

  FieldValue() : storage_(mpq_class(0)) {}
  explicit FieldValue(mpq_class q) : storage_(std::move(q)) { std::get<0>(storage_).canonicalize(); }
  explicit FieldValue(Residue r) : storage_(r) {}
  explicit FieldValue(std::complex<double> c) : storage_(c) {}

  FieldKind kind() const noexcept { return static_cast<FieldKind>(storage_.index()); }

  const mpq_class& rational() const { return std::get<mpq_class>(storage_); }
  const Residue& residue() const { return std::get<Residue>(storage_); }
  std::complex<double> complex() const { return std::get<std::complex<double>>(storage_); }

  /// Exact structural equality. Complex values compare bitwise; use
  /// Field::equal for tolerant comparison.
  friend bool operator==(const FieldValue& a, const FieldValue& b) { return a.storage_ == b.storage_; }

  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  /// Throws ErrorKind::zero_input when b is exactly zero.
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a);

  FieldValue& operator+=(const FieldValue& b) { return *this = *this + b; }
  FieldValue& operator-=(const FieldValue& b) { return *this = *this - b; }
  FieldValue& operator*=(const FieldValue& b) { return *this = *this * b; }

  bool is_exact_zero() const;

  /// "3/4", "12" (residue), "1.5-2i" (complex, shortest round-trip digits).
  std::string to_string() const;

 private:
  Storage storage_;
};

FieldValue pow(const FieldValue& base, std::uint64_t exponent);

/// Describes the active scalar field: exact rationals, a prime field F_p,
/// or binary64 complex numbers with a zero tolerance.
class Field {
 public:
  static constexpr std::int64_t kDefaultRationalHeight = 256;
  static constexpr double kDefaultZeroTolerance = 1e-9;
  /// Complex samples have real and imaginary parts in [-R, R].
  static constexpr double kComplexSampleRadius = 10.0;

  static Field rational(std::int64_t sampling_height = kDefaultRationalHeight);
  /// Throws ErrorKind::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);
  static Field complex(double zero_tolerance = kDefaultZeroTolerance);
  /// Parses "Q", "Fp:<prime>", "C" or "C:<tolerance>".
  static Field parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  double zero_tolerance() const noexcept { return zero_tolerance_; }
  std::int64_t sampling_height() const noexcept { return sampling_height_; }
  bool is_exact() const noexcept { return kind_ != FieldKind::complex; }

  Field with_sampling_height(std::int64_t height) const;

  FieldValue zero() const;
  FieldValue one() const;
  FieldValue from_int(std::int64_t v) const;
  FieldValue from_integer(const mpz_class& v) const;
  /// Throws ErrorKind::zero_input if the denominator vanishes in the field.
  FieldValue from_ratio(const mpz_class& num, const mpz_class& den) const;
  FieldValue from_complex(std::complex<double> c) const;
  /// Inverse of FieldValue::to_string for this field.
  FieldValue parse_value(std::string_view text) const;

  bool is_zero(const FieldValue& v) const;
  bool equal(const FieldValue& a, const FieldValue& b) const { return is_zero(a - b); }
  /// Raises field_mismatch if v does not belong to this field.
  void check_member(const FieldValue& v) const;

  /// Canonical descriptor string, accepted by parse().
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldKind kind_ = FieldKind::rational;
  std::uint64_t modulus_ = 0;
  double zero_tolerance_ = kDefaultZeroTolerance;
  std::int64_t sampling_height_ = kDefaultRationalHeight;
};

bool is_prime(std::uint64_t p);

/// Draws a field element. Rationals: numerator in [-H, H], denominator in
/// [1, H] with H the sampling height. Prime fields: uniform on [0, p).
/// Complex: real and imaginary parts uniform in [-10, 10].
FieldValue sample(const Field& field, Rng& rng);

/// Evaluates sum coeffs[i] * x^i.
FieldValue horner(std::span<const FieldValue> coeffs, const FieldValue& x);

/// All x in the field with h(x) = target, h given by ascending coefficients.
/// Prime: exhaustive search. Rational: rational root test. Complex:
/// simultaneous (Aberth) iteration with Newton polishing; only roots with
/// |h(x) - target| <= tolerance are reported.
std::vector<FieldValue> univariate_roots(const Field& field, std::span<const FieldValue> coeffs,
                                         const FieldValue& target);

/// One root of h(x) = target. Errors: no_root_in_field (exact kinds),
/// non_convergence (complex), precondition (degree < 1).
FieldValue solve_univariate(const Field& field, std::span<const FieldValue> coeffs,
                            const FieldValue& target);

}  // namespace utri

#endif  // UTRI_FIELD_HPP
