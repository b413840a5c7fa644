#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

// Lie-theoretic ground data for the affine root system attached to the cyclic
// quiver with e >= 2 vertices. Residues live in Z/eZ. A RootVector holds the
// multiplicities of the simple roots a_0..a_{e-1}; the null root delta has
// every multiplicity 1.

void check_e(int e);
int normalize_residue(long long r, int e);

class RootVector {
public:
  RootVector() = default;
  RootVector(int e, int fill);
  explicit RootVector(std::vector<int> coeffs);

  static RootVector zero(int e);
  static RootVector simple(int i, int e);
  static RootVector delta(int e);

  int e() const { return static_cast<int>(c_.size()); }
  int at(int i) const { return c_.at(i); }
  int& at(int i) { return c_.at(i); }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const;
  bool nonnegative() const;
  // entrywise comparison, used when scanning for summands
  bool leq(const RootVector& other) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend bool operator==(const RootVector& a, const RootVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RootVector& a, const RootVector& b) { return !(a == b); }
  friend bool operator<(const RootVector& a, const RootVector& b) { return a.c_ < b.c_; }

private:
  std::vector<int> c_;
};

int height(const RootVector& v);

// Cartan matrix of the cyclic quiver: 2 on the diagonal, -1 between adjacent
// vertices (-2 when e = 2, where the two vertices are doubly linked), else 0.
int cartan_pairing(int i, int j, int e);
long long bilinear_form(const RootVector& v, const RootVector& w);
// (Lambda_i, v): coefficient of a_i in v
int weight_pairing(int i, const RootVector& v);

// Positive roots: m*delta + (a_i + ... + a_j) with m >= 0,
// m*delta - (a_i + ... + a_j) with m >= 1, and n*delta with n >= 1,
// where 1 <= i <= j <= e-1.
enum class RootKind { RealPlus, Imaginary, RealMinus };

struct PositiveRoot {
  RootKind kind = RootKind::Imaginary;
  int m = 1;      // delta multiplier (n for imaginary roots)
  int lo = 0;     // interval [lo..hi] in [1, e-1]; unused for imaginary
  int hi = 0;

  static PositiveRoot real_plus(int m, int lo, int hi);
  static PositiveRoot real_minus(int m, int lo, int hi);
  static PositiveRoot imaginary(int n);
  static PositiveRoot simple(int i, int e);  // a_i, including a_0 = delta - a_1..a_{e-1}

  bool is_real() const { return kind != RootKind::Imaginary; }

  friend bool operator==(const PositiveRoot& a, const PositiveRoot& b) {
    if (a.kind != b.kind || a.m != b.m) return false;
    if (a.kind == RootKind::Imaginary) return true;
    return a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const PositiveRoot& a, const PositiveRoot& b) { return !(a == b); }
};

RootVector root_vector(const PositiveRoot& r, int e);
int root_height(const PositiveRoot& r, int e);

// unique PositiveRoot with the given multiplicities, or nullopt if v is not a
// positive root
std::optional<PositiveRoot> classify_root(const RootVector& v);
bool is_positive_root(const RootVector& v);

// fixed enumeration order: height, then RealPlus < Imaginary < RealMinus,
// then the interval lexicographically
bool root_order_less(const PositiveRoot& a, const PositiveRoot& b, int e);
struct RootOrder {
  int e;
  bool operator()(const PositiveRoot& a, const PositiveRoot& b) const {
    return root_order_less(a, b, e);
  }
};

std::vector<PositiveRoot> positive_roots_up_to_height(int h, int e);

// spellings: "a1", "a1..a3" (equivalently "a1+a2+a3"), "d", "2d",
// "d-a1", "2d+a1..a3"
std::string root_to_string(const PositiveRoot& r);
std::optional<PositiveRoot> parse_root(std::string_view s, int e);

}  // namespace specht
