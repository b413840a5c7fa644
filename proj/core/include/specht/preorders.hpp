#pragma once

#include <functional>
#include <string>
#include <vector>

#include "specht/root_system.hpp"

namespace specht {

enum class Cmp { Less, Equiv, Greater };

// A convex total preorder on the positive roots.  The built-in "e-row" order
// puts the m*delta + interval roots on top (smaller starting index first, then
// smaller m, then shorter interval), the imaginary roots in the middle as one
// equivalence class, and the m*delta - interval roots below in the mirrored
// order.
class Preorder {
public:
    using Comparator = std::function<Cmp(const PositiveRoot&, const PositiveRoot&)>;

    static Preorder e_row(int e);
    // Runs the convexity and balance checks up to validate_height and throws
    // std::invalid_argument on failure; pass 0 to skip validation.
    static Preorder custom(int e, std::string name, Comparator cmp, int validate_height);

    int e() const { return e_; }
    const std::string& name() const { return name_; }

    Cmp compare(const PositiveRoot& a, const PositiveRoot& b) const { return cmp_(a, b); }
    bool less(const PositiveRoot& a, const PositiveRoot& b) const { return compare(a, b) == Cmp::Less; }
    bool greater(const PositiveRoot& a, const PositiveRoot& b) const { return compare(a, b) == Cmp::Greater; }
    bool equiv(const PositiveRoot& a, const PositiveRoot& b) const { return compare(a, b) == Cmp::Equiv; }
    bool leq(const PositiveRoot& a, const PositiveRoot& b) const { return compare(a, b) != Cmp::Greater; }
    bool geq(const PositiveRoot& a, const PositiveRoot& b) const { return compare(a, b) != Cmp::Less; }

private:
    Preorder(int e, std::string name, Comparator cmp);

    int e_ = 2;
    std::string name_;
    Comparator cmp_;
};

// Verifies on all roots of height <= max_height that compare is consistent and
// transitive, that equivalence happens exactly for proportional roots (equal,
// or both imaginary), and that a sum of two comparable roots sits weakly
// between them.
bool check_convexity(const Preorder& p, int max_height);

// Verifies that the real roots above delta are exactly the plus-form roots and
// the ones below are exactly the minus-form roots, up to max_height.
bool check_balanced(const Preorder& p, int max_height);

struct MinimalPair {
    PositiveRoot beta;
    PositiveRoot gamma;
    bool real = false;  // both roots real; beta can be imaginary when rho sits below delta
};

// All pairs beta + gamma = rho with beta above rho such that no other such pair
// fits strictly inside: every competitor has beta' above beta or gamma' below
// gamma.  Sorted by height of beta, then the fixed root enumeration order.
std::vector<MinimalPair> minimal_pairs(const Preorder& p, const PositiveRoot& rho);

// max { n >= 0 | beta - n*gamma is a positive root }
int p_max(const PositiveRoot& beta, const PositiveRoot& gamma, int e);

// Whether v is a (possibly empty) sum of positive roots satisfying pred.
bool is_sum_of_roots(const RootVector& v, const std::function<bool(const PositiveRoot&)>& pred);

}  // namespace specht
