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

#include "utri/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace utri {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "SyntaxError";
    case ErrorKind::constant_term: return "ConstantTermError";
    case ErrorKind::variable_out_of_range: return "VariableOutOfRange";
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::arity_mismatch: return "ArityMismatch";
    case ErrorKind::size_mismatch: return "SizeMismatch";
    case ErrorKind::unbound_variable: return "UnboundVariable";
    case ErrorKind::non_linear_variable: return "NonLinearVariable";
    case ErrorKind::zero_input: return "ZeroInput";
    case ErrorKind::resource_limit: return "ResourceLimit";
    case ErrorKind::no_root_in_field: return "NoRootInField";
    case ErrorKind::non_convergence: return "NonConvergence";
    case ErrorKind::cap_reached: return "CapReached";
    case ErrorKind::precondition: return "PreconditionViolation";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    case ErrorKind::budget_exhausted: return "BudgetExhausted";
    case ErrorKind::degenerate_coefficient: return "DegenerateCoefficient";
    case ErrorKind::band_violation: return "BandViolation";
    case ErrorKind::order_mismatch: return "OrderMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

[[noreturn]] void mismatch() { raise(ErrorKind::field_mismatch, "operands belong to different fields"); }

template <class Op>
FieldValue combine(const FieldValue& a, const FieldValue& b, Op op) {
  if (a.kind() != b.kind()) mismatch();
  switch (a.kind()) {
    case FieldKind::rational: return FieldValue(op(a.rational(), b.rational()));
    case FieldKind::prime: {
      if (a.residue().modulus != b.residue().modulus) mismatch();
      return FieldValue(op(a.residue(), b.residue()));
    }
    case FieldKind::complex: return FieldValue(op(a.complex(), b.complex()));
  }
  mismatch();
}

struct Add {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x + y; }
  Residue operator()(Residue x, Residue y) const {
    std::uint64_t s = x.value + y.value;
    if (s >= x.modulus || s < x.value) s -= x.modulus;
    return {s, x.modulus};
  }
  std::complex<double> operator()(std::complex<double> x, std::complex<double> y) const { return x + y; }
};

struct Sub {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x - y; }
  Residue operator()(Residue x, Residue y) const {
    return {x.value >= y.value ? x.value - y.value : x.value + (x.modulus - y.value), x.modulus};
  }
  std::complex<double> operator()(std::complex<double> x, std::complex<double> y) const { return x - y; }
};

struct Mul {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const { return x * y; }
  Residue operator()(Residue x, Residue y) const { return {mul_mod(x.value, y.value, x.modulus), x.modulus}; }
  std::complex<double> operator()(std::complex<double> x, std::complex<double> y) const { return x * y; }
};

struct Div {
  mpq_class operator()(const mpq_class& x, const mpq_class& y) const {
    if (y == 0) raise(ErrorKind::zero_input, "division by zero");
    return x / y;
  }
  Residue operator()(Residue x, Residue y) const {
    if (y.value == 0) raise(ErrorKind::zero_input, "division by zero");
    return {mul_mod(x.value, pow_mod(y.value, x.modulus - 2, x.modulus), x.modulus), x.modulus};
  }
  std::complex<double> operator()(std::complex<double> x, std::complex<double> y) const {
    if (y == std::complex<double>(0.0, 0.0)) raise(ErrorKind::zero_input, "division by zero");
    return x / y;
  }
};

std::string double_to_string(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    raise(ErrorKind::invalid_argument, "cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::string text(s);
  if (!text.empty() && text.front() == '+') text.erase(0, 1);
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    raise(ErrorKind::invalid_argument, "cannot parse integer '" + std::string(s) + "'");
  }
  return z;
}

}  // namespace

FieldValue operator+(const FieldValue& a, const FieldValue& b) { return combine(a, b, Add{}); }
FieldValue operator-(const FieldValue& a, const FieldValue& b) { return combine(a, b, Sub{}); }
FieldValue operator*(const FieldValue& a, const FieldValue& b) { return combine(a, b, Mul{}); }
FieldValue operator/(const FieldValue& a, const FieldValue& b) { return combine(a, b, Div{}); }

FieldValue operator-(const FieldValue& a) {
  switch (a.kind()) {
    case FieldKind::rational: return FieldValue(mpq_class(-a.rational()));
    case FieldKind::prime: {
      const Residue& r = a.residue();
      return FieldValue(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
    }
    case FieldKind::complex: return FieldValue(-a.complex());
  }
  return a;
}

bool FieldValue::is_exact_zero() const {
  switch (kind()) {
    case FieldKind::rational: return rational() == 0;
    case FieldKind::prime: return residue().value == 0;
    case FieldKind::complex: return complex() == std::complex<double>(0.0, 0.0);
  }
  return false;
}

std::string FieldValue::to_string() const {
  switch (kind()) {
    case FieldKind::rational: return rational().get_str();
    case FieldKind::prime: return std::to_string(residue().value);
    case FieldKind::complex: {
      const auto c = complex();
      if (c.imag() == 0.0) return double_to_string(c.real());
      std::string im = double_to_string(c.imag());
      std::string out = c.real() == 0.0 ? std::string() : double_to_string(c.real());
      if (!out.empty() && im.front() != '-') out += '+';
      return out + im + "i";
    }
  }
  return {};
}

FieldValue pow(const FieldValue& base, std::uint64_t exponent) {
  FieldValue result = base;
  // one of the right kind
  switch (base.kind()) {
    case FieldKind::rational: result = FieldValue(mpq_class(1)); break;
    case FieldKind::prime: result = FieldValue(Residue{1 % base.residue().modulus, base.residue().modulus}); break;
    case FieldKind::complex: result = FieldValue(std::complex<double>(1.0, 0.0)); break;
  }
  FieldValue b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::rational(std::int64_t sampling_height) {
  if (sampling_height < 1) raise(ErrorKind::invalid_argument, "sampling height must be >= 1");
  Field f;
  f.kind_ = FieldKind::rational;
  f.sampling_height_ = sampling_height;
  return f;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) raise(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  Field f;
  f.kind_ = FieldKind::prime;
  f.modulus_ = p;
  return f;
}

Field Field::complex(double zero_tolerance) {
  if (!(zero_tolerance >= 0.0)) raise(ErrorKind::invalid_argument, "tolerance must be non-negative");
  Field f;
  f.kind_ = FieldKind::complex;
  f.zero_tolerance_ = zero_tolerance;
  return f;
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rational();
  if (text.starts_with("Fp:")) {
    mpz_class p = parse_integer(text.substr(3));
    if (p < 2 || !p.fits_ulong_p()) raise(ErrorKind::invalid_argument, "bad prime in '" + std::string(text) + "'");
    return prime(p.get_ui());
  }
  if (text == "C") return complex();
  if (text.starts_with("C:")) return complex(parse_double(text.substr(2)));
  raise(ErrorKind::invalid_argument, "unknown field '" + std::string(text) + "' (expected Q, Fp:<prime>, C[:tol])");
}

Field Field::with_sampling_height(std::int64_t height) const {
  if (height < 1) raise(ErrorKind::invalid_argument, "sampling height must be >= 1");
  Field f = *this;
  f.sampling_height_ = height;
  return f;
}

FieldValue Field::zero() const { return from_int(0); }
FieldValue Field::one() const { return from_int(1); }

FieldValue Field::from_int(std::int64_t v) const {
  switch (kind_) {
    case FieldKind::rational: return FieldValue(mpq_class(static_cast<long>(v)));
    case FieldKind::prime: {
      const auto p = static_cast<std::int64_t>(modulus_);
      std::int64_t r = v % p;
      if (r < 0) r += p;
      return FieldValue(Residue{static_cast<std::uint64_t>(r), modulus_});
    }
    case FieldKind::complex: return FieldValue(std::complex<double>(static_cast<double>(v), 0.0));
  }
  return {};
}

FieldValue Field::from_integer(const mpz_class& v) const {
  switch (kind_) {
    case FieldKind::rational: return FieldValue(mpq_class(v));
    case FieldKind::prime: {
      mpz_class r = v % mpz_class(static_cast<unsigned long>(modulus_));
      if (r < 0) r += static_cast<unsigned long>(modulus_);
      return FieldValue(Residue{r.get_ui(), modulus_});
    }
    case FieldKind::complex: return FieldValue(std::complex<double>(v.get_d(), 0.0));
  }
  return {};
}

FieldValue Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (kind_ == FieldKind::rational) {
    if (den == 0) raise(ErrorKind::zero_input, "zero denominator");
    return FieldValue(mpq_class(num, den));
  }
  FieldValue d = from_integer(den);
  if (d.is_exact_zero()) raise(ErrorKind::zero_input, "denominator vanishes in " + name());
  return from_integer(num) / d;
}

FieldValue Field::from_complex(std::complex<double> c) const {
  if (kind_ != FieldKind::complex) raise(ErrorKind::field_mismatch, "complex value in exact field " + name());
  return FieldValue(c);
}

FieldValue Field::parse_value(std::string_view text) const {
  text = trim(text);
  if (text.empty()) raise(ErrorKind::invalid_argument, "empty field value");
  if (kind_ != FieldKind::complex || text.find('/') != std::string_view::npos) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_integer(parse_integer(text));
    return from_ratio(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
  }
  if (text.back() != 'i') return FieldValue(std::complex<double>(parse_double(text), 0.0));
  std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_of = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_double(s);
  };
  if (split == std::string_view::npos) return FieldValue(std::complex<double>(0.0, imag_of(body)));
  return FieldValue(std::complex<double>(parse_double(body.substr(0, split)), imag_of(body.substr(split))));
}

bool Field::is_zero(const FieldValue& v) const {
  if (kind_ == FieldKind::complex && v.kind() == FieldKind::complex) {
    return std::abs(v.complex()) <= zero_tolerance_;
  }
  return v.is_exact_zero();
}

void Field::check_member(const FieldValue& v) const {
  if (static_cast<int>(v.kind()) != static_cast<int>(kind_) ||
      (kind_ == FieldKind::prime && v.residue().modulus != modulus_)) {
    mismatch();
  }
}

std::string Field::name() const {
  switch (kind_) {
    case FieldKind::rational: return "Q";
    case FieldKind::prime: return "Fp:" + std::to_string(modulus_);
    case FieldKind::complex: return "C:" + double_to_string(zero_tolerance_);
  }
  return {};
}

FieldValue sample(const Field& field, Rng& rng) {
  switch (field.kind()) {
    case FieldKind::rational: {
      const std::int64_t h = field.sampling_height();
      std::uniform_int_distribution<std::int64_t> num(-h, h);
      std::uniform_int_distribution<std::int64_t> den(1, h);
      const long n = static_cast<long>(num(rng));
      const long d = static_cast<long>(den(rng));
      return FieldValue(mpq_class(n, static_cast<unsigned long>(d)));
    }
    case FieldKind::prime: {
      std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
      return FieldValue(Residue{dist(rng), field.modulus()});
    }
    case FieldKind::complex: {
      std::uniform_real_distribution<double> dist(-Field::kComplexSampleRadius, Field::kComplexSampleRadius);
      const double re = dist(rng);
      const double im = dist(rng);
      return FieldValue(std::complex<double>(re, im));
    }
  }
  return {};
}

FieldValue horner(std::span<const FieldValue> coeffs, const FieldValue& x) {
  if (coeffs.empty()) raise(ErrorKind::precondition, "empty coefficient list");
  FieldValue acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

namespace {

// Coefficients of h - target with trailing (leading-degree) zeros removed.
std::vector<FieldValue> shifted(const Field& field, std::span<const FieldValue> coeffs, const FieldValue& target) {
  std::vector<FieldValue> g(coeffs.begin(), coeffs.end());
  for (const auto& c : g) field.check_member(c);
  field.check_member(target);
  while (!g.empty() && field.is_zero(g.back())) g.pop_back();
  if (g.size() < 2) raise(ErrorKind::precondition, "univariate polynomial must have degree >= 1");
  g[0] = g[0] - target;
  return g;
}

std::vector<FieldValue> prime_roots(const Field& field, const std::vector<FieldValue>& g) {
  const std::uint64_t p = field.modulus();
  std::vector<std::uint64_t> c;
  c.reserve(g.size());
  for (const auto& v : g) c.push_back(v.residue().value);
  std::vector<FieldValue> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      acc = mul_mod(acc, x, p) + c[i];
      if (acc >= p) acc -= p;
    }
    if (acc == 0) roots.push_back(FieldValue(Residue{x, p}));
  }
  return roots;
}

// Positive divisors of |v| (v != 0). Trial division up to 10^6; a leftover
// cofactor is treated as a single prime factor.
std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long d = 2; d <= 1000000UL && mpz_class(d) * d <= v; ++d) {
    if (v % d == 0) {
      unsigned e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      factors.emplace_back(mpz_class(d), e);
    }
  }
  if (v > 1) factors.emplace_back(v, 1U);
  std::vector<mpz_class> out{mpz_class(1)};
  for (const auto& [prime, e] : factors) {
    const std::size_t size = out.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
    if (out.size() > 200000) raise(ErrorKind::resource_limit, "too many divisor candidates in rational root search");
  }
  return out;
}

std::vector<FieldValue> rational_roots(const std::vector<FieldValue>& g) {
  mpz_class lcm = 1;
  for (const auto& c : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& c : g) a.push_back(c.rational().get_num() * (lcm / c.rational().get_den()));

  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(low));
  if (a.size() >= 2) {
    const auto ps = divisors(a.front());
    const auto qs = divisors(a.back());
    const std::size_t d = a.size() - 1;
    for (const auto& q : qs) {
      std::vector<mpz_class> qpow(d + 1, mpz_class(1));
      for (std::size_t i = 1; i <= d; ++i) qpow[i] = qpow[i - 1] * q;
      for (const auto& p0 : ps) {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), p0.get_mpz_t(), q.get_mpz_t());
        if (gcd != 1) continue;
        for (int sign : {1, -1}) {
          const mpz_class p = sign * p0;
          // sum a_i p^i q^(d-i)
          mpz_class acc = a[d];
          for (std::size_t i = d; i-- > 0;) acc = acc * p + a[i] * qpow[d - i];
          if (acc == 0) roots.emplace_back(p, q);
        }
      }
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end(), [](const mpq_class& x, const mpq_class& y) {
    const mpq_class ax = abs(x), ay = abs(y);
    if (ax != ay) return ax < ay;
    return x > y;
  });
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::vector<FieldValue> out;
  for (auto& r : roots) out.emplace_back(r);
  return out;
}

using cld = std::complex<long double>;

cld eval_ld(const std::vector<cld>& c, cld x) {
  cld acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

cld eval_derivative(const std::vector<cld>& c, cld x) {
  cld acc = c.back() * static_cast<long double>(c.size() - 1);
  for (std::size_t i = c.size() - 1; i-- > 1;) acc = acc * x + c[i] * static_cast<long double>(i);
  return acc;
}

constexpr int kRootRestarts = 5;
constexpr int kRootIterations = 500;

std::vector<FieldValue> complex_roots(const Field& field, const std::vector<FieldValue>& g) {
  std::vector<cld> c;
  for (const auto& v : g) c.emplace_back(v.complex().real(), v.complex().imag());
  const std::size_t d = c.size() - 1;
  const double tol = field.zero_tolerance();

  long double bound = 0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[i] / c[d]));
  const long double radius = 1 + bound;

  Rng rng(0x5eed + d);
  std::uniform_real_distribution<long double> angle_dist(0, 2 * std::numbers::pi_v<long double>);
  std::uniform_real_distribution<long double> scale_dist(0.3L, 1.0L);

  for (int attempt = 0; attempt < kRootRestarts; ++attempt) {
    std::vector<cld> z(d);
    const long double offset = angle_dist(rng);
    const long double scale = attempt == 0 ? 0.5L : scale_dist(rng);
    for (std::size_t k = 0; k < d; ++k) {
      const long double theta = offset + 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                             static_cast<long double>(d);
      z[k] = std::polar(radius * scale, theta);
    }
    for (int it = 0; it < kRootIterations; ++it) {
      long double max_step = 0;
      for (std::size_t k = 0; k < d; ++k) {
        const cld value = eval_ld(c, z[k]);
        const cld deriv = eval_derivative(c, z[k]);
        if (value == cld(0)) continue;
        cld ratio = deriv == cld(0) ? cld(1e-3L) : value / deriv;
        cld repulsion = 0;
        for (std::size_t j = 0; j < d; ++j) {
          if (j != k && z[k] != z[j]) repulsion += cld(1) / (z[k] - z[j]);
        }
        const cld step = ratio / (cld(1) - ratio * repulsion);
        z[k] -= step;
        max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[k])));
      }
      if (max_step < 1e-17L) break;
    }
    std::vector<FieldValue> roots;
    for (auto x : z) {
      for (int polish = 0; polish < 3; ++polish) {
        const cld deriv = eval_derivative(c, x);
        if (deriv == cld(0)) break;
        const cld next = x - eval_ld(c, x) / deriv;
        if (std::abs(eval_ld(c, next)) > std::abs(eval_ld(c, x))) break;
        x = next;
      }
      const std::complex<double> xd(static_cast<double>(x.real()), static_cast<double>(x.imag()));
      FieldValue fx(xd);
      if (std::abs(horner(g, fx).complex()) <= tol) roots.push_back(fx);
    }
    if (!roots.empty()) return roots;
  }
  return {};
}

}  // namespace

std::vector<FieldValue> univariate_roots(const Field& field, std::span<const FieldValue> coeffs,
                                         const FieldValue& target) {
  const auto g = shifted(field, coeffs, target);
  switch (field.kind()) {
    case FieldKind::prime: return prime_roots(field, g);
    case FieldKind::rational: return rational_roots(g);
    case FieldKind::complex: return complex_roots(field, g);
  }
  return {};
}

FieldValue solve_univariate(const Field& field, std::span<const FieldValue> coeffs, const FieldValue& target) {
  auto roots = univariate_roots(field, coeffs, target);
  if (roots.empty()) {
    if (field.kind() == FieldKind::complex) {
      raise(ErrorKind::non_convergence, "root iteration did not converge within the retry budget");
    }
    raise(ErrorKind::no_root_in_field, "no root of h(x) = target in " + field.name());
  }
  return roots.front();
}

}  // namespace utri
