#pragma once

#include <map>
#include <string>

namespace specht {

// sparse Laurent polynomial in q with integer coefficients
class Laurent {
public:
  Laurent() = default;
  Laurent(long long constant);  // implicit on purpose: 0 and 1 read naturally
  static Laurent q_power(int k);
  static Laurent from_coeffs(std::map<int, long long> coeffs);

  bool is_zero() const { return c_.empty(); }
  long long coeff(int exponent) const;
  const std::map<int, long long>& coeffs() const { return c_; }

  int min_exponent() const;  // throws on zero
  int max_exponent() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);

  Laurent shifted(int k) const;  // times q^k
  Laurent bar() const;           // q -> 1/q
  bool nonnegative() const;      // all coefficients >= 0

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // "q^3+2q+2q^-1+q^-3", "0", "1", "-q+3"
  std::string to_string() const;

private:
  std::map<int, long long> c_;  // exponent -> coefficient, no zeros stored
  void strip(int exponent);
};

// [n] = (q^n - q^-n)/(q - q^-1) and [n]! = [1][2]...[n]
Laurent quantum_int(int n);
Laurent quantum_factorial(int n);

}  // namespace specht
