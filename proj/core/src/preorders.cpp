#include "specht/preorders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace specht {

namespace {

Cmp flip(Cmp c) {
    if (c == Cmp::Less) return Cmp::Greater;
    if (c == Cmp::Greater) return Cmp::Less;
    return Cmp::Equiv;
}

Cmp e_row_compare(const PositiveRoot& a, const PositiveRoot& b) {
    if (a == b) return Cmp::Equiv;
    if (a.kind == b.kind) {
        if (a.kind == RootKind::Imaginary) return Cmp::Equiv;
        if (a.kind == RootKind::RealPlus) {
            if (a.lo != b.lo) return a.lo < b.lo ? Cmp::Greater : Cmp::Less;
            if (a.m != b.m) return a.m < b.m ? Cmp::Greater : Cmp::Less;
            return a.hi < b.hi ? Cmp::Greater : Cmp::Less;
        }
        if (a.lo != b.lo) return a.lo > b.lo ? Cmp::Greater : Cmp::Less;
        if (a.m != b.m) return a.m > b.m ? Cmp::Greater : Cmp::Less;
        return a.hi < b.hi ? Cmp::Greater : Cmp::Less;
    }
    auto rank = [](RootKind k) {
        return k == RootKind::RealPlus ? 0 : (k == RootKind::Imaginary ? 1 : 2);
    };
    return rank(a.kind) < rank(b.kind) ? Cmp::Greater : Cmp::Less;
}

bool proportional(const PositiveRoot& a, const PositiveRoot& b) {
    return a == b || (a.kind == RootKind::Imaginary && b.kind == RootKind::Imaginary);
}

}  // namespace

Preorder::Preorder(int e, std::string name, Comparator cmp)
    : e_(e), name_(std::move(name)), cmp_(std::move(cmp)) {
    check_e(e_);
    if (!cmp_) throw std::invalid_argument("Preorder: empty comparator");
}

Preorder Preorder::e_row(int e) { return Preorder(e, "erow", e_row_compare); }

Preorder Preorder::custom(int e, std::string name, Comparator cmp, int validate_height) {
    Preorder p(e, std::move(name), std::move(cmp));
    if (validate_height > 0) {
        if (!check_convexity(p, validate_height)) {
            throw std::invalid_argument("Preorder: comparator fails the convexity check");
        }
        if (!check_balanced(p, validate_height)) {
            throw std::invalid_argument("Preorder: comparator fails the balance check");
        }
    }
    return p;
}

bool check_convexity(const Preorder& p, int max_height) {
    const int e = p.e();
    std::vector<PositiveRoot> roots = positive_roots_up_to_height(max_height, e);
    const size_t n = roots.size();
    std::vector<RootVector> vecs;
    vecs.reserve(n);
    for (const PositiveRoot& r : roots) vecs.push_back(root_vector(r, e));

    std::vector<Cmp> table(n * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) table[i * n + j] = p.compare(roots[i], roots[j]);
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Cmp ij = table[i * n + j];
            if (ij != flip(table[j * n + i])) return false;
            if ((ij == Cmp::Equiv) != proportional(roots[i], roots[j])) return false;
            if (ij != Cmp::Greater) {
                // roots[i] <= roots[j]; their sum, when a root, must sit between
                auto sum = classify_root(vecs[i] + vecs[j]);
                if (sum) {
                    if (p.compare(roots[i], *sum) == Cmp::Greater) return false;
                    if (p.compare(*sum, roots[j]) == Cmp::Greater) return false;
                }
            }
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (table[i * n + j] == Cmp::Greater) continue;
            for (size_t k = 0; k < n; ++k) {
                if (table[j * n + k] != Cmp::Greater && table[i * n + k] == Cmp::Greater) return false;
            }
        }
    }
    return true;
}

bool check_balanced(const Preorder& p, int max_height) {
    const PositiveRoot delta = PositiveRoot::imaginary(1);
    for (const PositiveRoot& r : positive_roots_up_to_height(max_height, p.e())) {
        if (!r.is_real()) continue;
        Cmp c = p.compare(r, delta);
        if (c == Cmp::Equiv) return false;
        if ((r.kind == RootKind::RealPlus) != (c == Cmp::Greater)) return false;
    }
    return true;
}

std::vector<MinimalPair> minimal_pairs(const Preorder& p, const PositiveRoot& rho) {
    if (!rho.is_real()) throw std::domain_error("minimal_pairs: rho must be real");
    const int e = p.e();
    const RootVector vr = root_vector(rho, e);

    std::vector<MinimalPair> cands;
    for (const PositiveRoot& beta : positive_roots_up_to_height(height(vr) - 1, e)) {
        RootVector vg = root_vector(beta, e);
        if (!vg.leq(vr)) continue;
        vg = vr - vg;
        if (vg.is_zero()) continue;
        auto gamma = classify_root(vg);
        if (!gamma) continue;
        if (p.compare(beta, rho) != Cmp::Greater) continue;
        cands.push_back(MinimalPair{beta, *gamma, beta.is_real() && gamma->is_real()});
    }

    std::vector<MinimalPair> out;
    for (const MinimalPair& cand : cands) {
        bool minimal = true;
        for (const MinimalPair& other : cands) {
            if (other.beta == cand.beta) continue;
            if (p.compare(other.beta, cand.beta) == Cmp::Greater) continue;
            if (p.compare(other.gamma, cand.gamma) == Cmp::Less) continue;
            minimal = false;
            break;
        }
        if (minimal) out.push_back(cand);
    }
    std::sort(out.begin(), out.end(), [&](const MinimalPair& a, const MinimalPair& b) {
        int ha = root_height(a.beta, e), hb = root_height(b.beta, e);
        if (ha != hb) return ha < hb;
        return root_order_less(a.beta, b.beta, e);
    });
    return out;
}

int p_max(const PositiveRoot& beta, const PositiveRoot& gamma, int e) {
    const RootVector vb = root_vector(beta, e);
    const RootVector vg = root_vector(gamma, e);
    RootVector v = vb;
    int best = 0;
    for (int n = 1;; ++n) {
        if (n > height(vb) + 1) throw std::logic_error("p_max: iteration cap exceeded");
        v -= vg;
        if (!v.nonnegative() || v.is_zero()) break;
        if (is_positive_root(v)) best = n;
    }
    return best;
}

bool is_sum_of_roots(const RootVector& v, const std::function<bool(const PositiveRoot&)>& pred) {
    if (v.is_zero()) return true;
    if (!v.nonnegative()) return false;
    const int e = v.e();

    std::vector<RootVector> gens;
    for (const PositiveRoot& r : positive_roots_up_to_height(height(v), e)) {
        if (!pred(r)) continue;
        RootVector vr = root_vector(r, e);
        if (vr.leq(v)) gens.push_back(std::move(vr));
    }

    std::map<std::vector<int>, bool> memo;
    std::function<bool(const RootVector&)> decompose = [&](const RootVector& u) -> bool {
        if (u.is_zero()) return true;
        auto it = memo.find(u.coeffs());
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const RootVector& g : gens) {
            if (!g.leq(u)) continue;
            if (decompose(u - g)) {
                ok = true;
                break;
            }
        }
        memo.emplace(u.coeffs(), ok);
        return ok;
    };
    return decompose(v);
}

}  // namespace specht
