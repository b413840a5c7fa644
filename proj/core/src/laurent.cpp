#include "specht/laurent.hpp"

#include <stdexcept>

namespace specht {

Laurent::Laurent(long long constant) {
  if (constant != 0) c_[0] = constant;
}

Laurent Laurent::q_power(int k) {
  Laurent p;
  p.c_[k] = 1;
  return p;
}

Laurent Laurent::from_coeffs(std::map<int, long long> coeffs) {
  Laurent p;
  for (const auto& [k, v] : coeffs)
    if (v != 0) p.c_[k] = v;
  return p;
}

long long Laurent::coeff(int exponent) const {
  auto it = c_.find(exponent);
  return it == c_.end() ? 0 : it->second;
}

int Laurent::min_exponent() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return c_.begin()->first;
}

int Laurent::max_exponent() const {
  if (c_.empty()) throw std::logic_error("zero polynomial has no exponents");
  return c_.rbegin()->first;
}

void Laurent::strip(int exponent) {
  auto it = c_.find(exponent);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, v] : o.c_) {
    c_[k] += v;
    strip(k);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, v] : o.c_) {
    c_[k] -= v;
    strip(k);
  }
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ka, va] : a.c_)
    for (const auto& [kb, vb] : b.c_) {
      out.c_[ka + kb] += va * vb;
      out.strip(ka + kb);
    }
  return out;
}

Laurent operator-(const Laurent& a) {
  Laurent out;
  for (const auto& [k, v] : a.c_) out.c_[k] = -v;
  return out;
}

Laurent Laurent::shifted(int k) const {
  Laurent out;
  for (const auto& [e, v] : c_) out.c_[e + k] = v;
  return out;
}

Laurent Laurent::bar() const {
  Laurent out;
  for (const auto& [e, v] : c_) out.c_[-e] = v;
  return out;
}

bool Laurent::nonnegative() const {
  for (const auto& [e, v] : c_)
    if (v < 0) return false;
  return true;
}

std::string Laurent::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long long v = it->second;
    int e = it->first;
    if (!out.empty()) {
      out += (v > 0) ? "+" : "-";
      if (v < 0) v = -v;
    } else if (v < 0) {
      out += "-";
      v = -v;
    }
    if (v != 1 || e == 0) out += std::to_string(v);
    if (e != 0) {
      out += "q";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Laurent quantum_int(int n) {
  if (n < 0) throw std::invalid_argument("negative quantum integer");
  Laurent out;
  std::map<int, long long> c;
  for (int k = -(n - 1); k <= n - 1; k += 2) c[k] = 1;
  return Laurent::from_coeffs(std::move(c));
}

Laurent quantum_factorial(int n) {
  if (n < 0) throw std::invalid_argument("negative quantum factorial");
  Laurent out = 1;
  for (int k = 2; k <= n; ++k) out = out * quantum_int(k);
  return out;
}

}  // namespace specht
