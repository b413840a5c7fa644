#include "specht/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace specht {

void check_e(int e) {
  if (e < 2) throw std::invalid_argument("number of residues must be at least 2");
}

int normalize_residue(long long r, int e) {
  check_e(e);
  long long m = r % e;
  if (m < 0) m += e;
  return static_cast<int>(m);
}

RootVector::RootVector(int e, int fill) {
  check_e(e);
  if (fill < 0) throw std::invalid_argument("negative multiplicity");
  c_.assign(static_cast<size_t>(e), fill);
}

RootVector::RootVector(std::vector<int> coeffs) : c_(std::move(coeffs)) {
  check_e(static_cast<int>(c_.size()));
}

RootVector RootVector::zero(int e) { return RootVector(e, 0); }

RootVector RootVector::simple(int i, int e) {
  check_e(e);
  if (i < 0 || i >= e) throw std::invalid_argument("residue out of range");
  RootVector v(e, 0);
  v.c_[static_cast<size_t>(i)] = 1;
  return v;
}

RootVector RootVector::delta(int e) { return RootVector(e, 1); }

bool RootVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool RootVector::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool RootVector::leq(const RootVector& other) const {
  if (e() != other.e()) throw std::invalid_argument("mismatched residue count");
  for (int i = 0; i < e(); ++i)
    if (c_[static_cast<size_t>(i)] > other.c_[static_cast<size_t>(i)]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (e() != o.e()) throw std::invalid_argument("mismatched residue count");
  for (int i = 0; i < e(); ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (e() != o.e()) throw std::invalid_argument("mismatched residue count");
  for (int i = 0; i < e(); ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

int height(const RootVector& v) {
  return std::accumulate(v.coeffs().begin(), v.coeffs().end(), 0);
}

int cartan_pairing(int i, int j, int e) {
  check_e(e);
  int a = normalize_residue(i, e);
  int b = normalize_residue(j, e);
  if (a == b) return 2;
  if (e == 2) return -2;  // the two vertices carry a double bond
  int d = std::abs(a - b);
  if (d == 1 || d == e - 1) return -1;
  return 0;
}

long long bilinear_form(const RootVector& v, const RootVector& w) {
  if (v.e() != w.e()) throw std::invalid_argument("mismatched residue count");
  int e = v.e();
  long long s = 0;
  for (int i = 0; i < e; ++i) {
    if (v.at(i) == 0) continue;
    for (int j = 0; j < e; ++j)
      s += static_cast<long long>(v.at(i)) * w.at(j) * cartan_pairing(i, j, e);
  }
  return s;
}

int weight_pairing(int i, const RootVector& v) {
  return v.at(normalize_residue(i, v.e()));
}

PositiveRoot PositiveRoot::real_plus(int m, int lo, int hi) {
  if (m < 0 || lo < 1 || lo > hi) throw std::invalid_argument("bad real root data");
  return PositiveRoot{RootKind::RealPlus, m, lo, hi};
}

PositiveRoot PositiveRoot::real_minus(int m, int lo, int hi) {
  if (m < 1 || lo < 1 || lo > hi) throw std::invalid_argument("bad real root data");
  return PositiveRoot{RootKind::RealMinus, m, lo, hi};
}

PositiveRoot PositiveRoot::imaginary(int n) {
  if (n < 1) throw std::invalid_argument("imaginary roots are positive multiples of delta");
  return PositiveRoot{RootKind::Imaginary, n, 0, 0};
}

PositiveRoot PositiveRoot::simple(int i, int e) {
  check_e(e);
  int r = normalize_residue(i, e);
  if (r == 0) return real_minus(1, 1, e - 1);  // a_0 = delta - a_1 - ... - a_{e-1}
  return real_plus(0, r, r);
}

RootVector root_vector(const PositiveRoot& r, int e) {
  check_e(e);
  if (r.is_real() && (r.lo < 1 || r.hi > e - 1))
    throw std::invalid_argument("root interval out of range for this e");
  RootVector v(e, r.m);
  if (r.kind == RootKind::RealPlus) {
    for (int i = r.lo; i <= r.hi; ++i) v.at(i) += 1;
  } else if (r.kind == RootKind::RealMinus) {
    for (int i = r.lo; i <= r.hi; ++i) v.at(i) -= 1;
  }
  if (!v.nonnegative()) throw std::invalid_argument("root data encodes a negative vector");
  return v;
}

int root_height(const PositiveRoot& r, int e) { return height(root_vector(r, e)); }

std::optional<PositiveRoot> classify_root(const RootVector& v) {
  int e = v.e();
  if (v.is_zero() || !v.nonnegative()) return std::nullopt;
  int m0 = *std::min_element(v.coeffs().begin(), v.coeffs().end());
  std::vector<int> u(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) u[static_cast<size_t>(i)] = v.at(i) - m0;
  bool all_zero = std::all_of(u.begin(), u.end(), [](int x) { return x == 0; });
  if (all_zero) return PositiveRoot::imaginary(m0);
  // u is v minus m0*delta and vanishes somewhere; v is a root iff u or
  // delta - u is the indicator of an interval inside [1, e-1]
  if (std::any_of(u.begin(), u.end(), [](int x) { return x > 1; })) return std::nullopt;
  auto interval_of = [e](const std::vector<int>& w) -> std::optional<std::pair<int, int>> {
    int lo = 0, hi = 0;
    for (int i = 0; i < e; ++i) {
      if (w[static_cast<size_t>(i)] == 1) {
        if (lo == 0) lo = i;
        hi = i;
      }
    }
    if (lo == 0) return std::nullopt;  // empty, or includes position 0
    for (int i = lo; i <= hi; ++i)
      if (w[static_cast<size_t>(i)] != 1) return std::nullopt;
    return std::make_pair(lo, hi);
  };
  if (u[0] == 0) {
    if (auto iv = interval_of(u)) return PositiveRoot::real_plus(m0, iv->first, iv->second);
    return std::nullopt;
  }
  std::vector<int> w(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) w[static_cast<size_t>(i)] = 1 - u[static_cast<size_t>(i)];
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) return std::nullopt;
  if (auto iv = interval_of(w)) return PositiveRoot::real_minus(m0 + 1, iv->first, iv->second);
  return std::nullopt;
}

bool is_positive_root(const RootVector& v) { return classify_root(v).has_value(); }

bool root_order_less(const PositiveRoot& a, const PositiveRoot& b, int e) {
  int ha = root_height(a, e), hb = root_height(b, e);
  if (ha != hb) return ha < hb;
  auto rank = [](RootKind k) {
    switch (k) {
      case RootKind::RealPlus: return 0;
      case RootKind::Imaginary: return 1;
      case RootKind::RealMinus: return 2;
    }
    return 3;
  };
  if (rank(a.kind) != rank(b.kind)) return rank(a.kind) < rank(b.kind);
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.hi < b.hi;
}

std::vector<PositiveRoot> positive_roots_up_to_height(int h, int e) {
  check_e(e);
  std::vector<PositiveRoot> out;
  if (h < 1) return out;
  for (int n = 1; n * e <= h; ++n) out.push_back(PositiveRoot::imaginary(n));
  for (int lo = 1; lo <= e - 1; ++lo) {
    for (int hi = lo; hi <= e - 1; ++hi) {
      int len = hi - lo + 1;
      for (int m = 0; m * e + len <= h; ++m)
        out.push_back(PositiveRoot::real_plus(m, lo, hi));
      for (int m = 1; m * e - len <= h; ++m)
        out.push_back(PositiveRoot::real_minus(m, lo, hi));
    }
  }
  std::sort(out.begin(), out.end(), RootOrder{e});
  return out;
}

std::string root_to_string(const PositiveRoot& r) {
  std::string s;
  if (r.kind == RootKind::Imaginary) {
    if (r.m != 1) s += std::to_string(r.m);
    s += "d";
    return s;
  }
  if (r.m > 0) {
    if (r.m != 1) s += std::to_string(r.m);
    s += "d";
    s += (r.kind == RootKind::RealPlus) ? "+" : "-";
  }
  s += "a" + std::to_string(r.lo);
  if (r.hi != r.lo) s += ".." + std::string("a") + std::to_string(r.hi);
  return s;
}

namespace {

struct RootParser {
  std::string_view s;
  size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  bool take(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::optional<int> number() {
    size_t start = pos;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    int v = 0;
    for (size_t i = start; i < pos; ++i) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) return std::nullopt;
    }
    return v;
  }
  std::optional<int> atom() {  // "a<k>"
    if (!take('a')) return std::nullopt;
    return number();
  }
};

}  // namespace

std::optional<PositiveRoot> parse_root(std::string_view s, int e) {
  check_e(e);
  RootParser p{s};
  int m = 0;
  bool have_delta = false;
  {
    RootParser probe = p;
    auto n = probe.number();
    if (probe.take('d')) {
      m = n.value_or(1);
      have_delta = true;
      p = probe;
    }
  }
  if (have_delta && p.eof()) {
    if (m < 1) return std::nullopt;
    return PositiveRoot::imaginary(m);
  }
  bool minus = false;
  if (have_delta) {
    if (p.take('+')) {
      minus = false;
    } else if (p.take('-')) {
      minus = true;
    } else {
      return std::nullopt;
    }
  }
  auto first = p.atom();
  if (!first) return std::nullopt;
  int lo = *first, hi = *first;
  if (p.take('.')) {
    if (!p.take('.')) return std::nullopt;
    auto last = p.atom();
    if (!last) return std::nullopt;
    hi = *last;
  } else {
    while (p.take('+')) {
      auto next = p.atom();
      if (!next || *next != hi + 1) return std::nullopt;
      hi = *next;
    }
  }
  if (!p.eof()) return std::nullopt;
  if (lo < 1 || hi > e - 1 || lo > hi) return std::nullopt;
  if (minus) {
    if (m < 1) return std::nullopt;
    return PositiveRoot::real_minus(m, lo, hi);
  }
  return PositiveRoot::real_plus(m, lo, hi);
}

}  // namespace specht
