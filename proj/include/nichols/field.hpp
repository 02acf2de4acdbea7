#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace nichols {

using Rational = mpq_class;

// Residue class modulo a process-wide prime. The modulus is set once before
// any algebra is built (see ModP::set_modulus); mixing moduli is undefined.
class ModP {
 public:
  static constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

  ModP() = default;
  ModP(long long x) {  // NOLINT: implicit from integers, like mpq_class
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    v_ = static_cast<std::uint64_t>(r);
  }

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus() { return p_; }

  std::uint64_t value() const { return v_; }

  ModP& operator+=(const ModP& o) {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP() - *this; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return a.v_ != b.v_; }

  ModP inverse() const;

 private:
  static std::uint64_t p_;
  std::uint64_t v_ = 0;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ModP& x) { return x.value() == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const ModP& x) { return std::to_string(x.value()); }

template <class F>
F parse_scalar(const std::string& s);

template <>
inline Rational parse_scalar<Rational>(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

template <>
inline ModP parse_scalar<ModP>(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return ModP(std::stoll(s));
  ModP den(std::stoll(s.substr(slash + 1)));
  if (is_zero(den)) throw std::invalid_argument("denominator vanishes mod p: " + s);
  return ModP(std::stoll(s.substr(0, slash))) / den;
}

template <class F>
const char* field_name();
template <>
inline const char* field_name<Rational>() { return "rational"; }
template <>
inline const char* field_name<ModP>() { return "prime"; }

// Small nonzero-biased integer coefficients for sampled checks.
template <class F>
F random_scalar(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return F(d(rng));
}

}  // namespace nichols
