#ifndef DUALBIMOD_RATIONAL_HPP
#define DUALBIMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dualbimod {

/*
  Exact rational scalar. Wraps mpq_class and keeps the value in canonical
  form at all times: positive denominator, gcd(num, den) = 1. The wrapper
  exists so that downstream code never touches GMP expression templates
  and so that parsing/printing of the "p/q" wire format lives in one place.
*/
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}                       // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<long>(n)) {}   // NOLINT
  Rat(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static std::optional<Rat> parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { v_ /= o.v_; return *this; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ / b.v_)); }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

inline std::optional<Rat> Rat::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const auto slash = s.find('/');
  const auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rat(mpq_class(mpz_class(std::string(s)), 1));
  }
  const auto p = s.substr(0, slash);
  const auto q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) return std::nullopt;
  mpz_class den{std::string(q)};
  if (den == 0) return std::nullopt;
  mpq_class v(mpz_class(std::string(p)), den);
  v.canonicalize();
  return Rat(v);
}

}  // namespace dualbimod

#endif
