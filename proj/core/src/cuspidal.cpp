#include "specht/cuspidal.hpp"

#include <stdexcept>
#include <utility>

namespace specht {

CuspidalEngine::CuspidalEngine(Preorder p) : p_(std::move(p)), memo_(RootOrder{p_.e()}) {}

const CuspidalResult& CuspidalEngine::result(const PositiveRoot& alpha) {
    std::lock_guard<std::recursive_mutex> guard(lock_);
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    CuspidalResult r = compute(alpha);
    return memo_.emplace(alpha, std::move(r)).first->second;
}

CuspidalResult CuspidalEngine::compute(const PositiveRoot& alpha) {
    if (!alpha.is_real()) throw std::domain_error("cuspidal: root must be real");
    const int e = p_.e();

    SkewShape shape;
    int shift = 0;
    if (alpha.lo == alpha.hi) {
        if (alpha.kind == RootKind::RealPlus) {
            shape = shape_plus(alpha.m, alpha.lo, e);
            shift = 0;
        } else {
            shape = shape_minus(alpha.m, alpha.lo, e);
            shift = 1 - alpha.m;
        }
    } else if (alpha == PositiveRoot::simple(0, e)) {
        // the affine simple root has no summand pair; its module is the single
        // box of residue 0
        shape = partition_shape(Multipartition{{1}}, Multicharge{0}, e);
        shift = 0;
    } else {
        bool found = false;
        for (const MinimalPair& mp : minimal_pairs(p_, alpha)) {
            if (!mp.real) continue;
            const CuspidalResult rb = result(mp.beta);
            const CuspidalResult rg = result(mp.gamma);
            const int pm = p_max(mp.beta, mp.gamma, e);
            const int form = static_cast<int>(
                bilinear_form(root_vector(mp.beta, e), root_vector(mp.gamma, e)));
            SkewShape bg = assemble_pair(rb.shape, rg.shape);
            if (is_joinable(bg)) {
                if (!check_join_identity(bg)) throw std::logic_error("cuspidal: join identity failed");
                JoinData jd = join_data(bg);
                shape = jd.right;
                shift = rb.shift + rg.shift - pm + form + jd.shift_right - jd.shift_product;
            } else {
                SkewShape gb = assemble_pair(rg.shape, rb.shape);
                if (!is_joinable(gb)) continue;
                if (!check_join_identity(gb)) throw std::logic_error("cuspidal: join identity failed");
                JoinData jd = join_data(gb);
                shape = jd.above;
                shift = rb.shift + rg.shift + pm + jd.shift_above - jd.shift_product;
            }
            found = true;
            break;
        }
        if (!found) throw std::logic_error("cuspidal: no real minimal pair joins");
    }

    if (content(shape) != root_vector(alpha, e)) throw std::logic_error("cuspidal: content mismatch");
    if (!is_skew_hook(shape) || !is_minimal_skew(shape)) {
        throw std::logic_error("cuspidal: shape is not a minimal skew hook");
    }
    return CuspidalResult{alpha, shape, shift, specht_character(shape).shifted(shift)};
}

std::vector<CuspidalResult> CuspidalEngine::table(int max_height) {
    std::vector<CuspidalResult> out;
    for (const PositiveRoot& r : positive_roots_up_to_height(max_height, p_.e())) {
        if (r.is_real()) out.push_back(result(r));
    }
    return out;
}

CuspidalResult cuspidal_shape(const PositiveRoot& alpha, const Preorder& p) {
    CuspidalEngine engine(p);
    return engine.result(alpha);
}

std::vector<CuspidalResult> cuspidal_table(const Preorder& p, int max_height) {
    CuspidalEngine engine(p);
    return engine.table(max_height);
}

namespace {

bool split_test(const GradedCharacter& x, const PositiveRoot& alpha, const Preorder& p,
                bool strict) {
    const int e = p.e();
    auto below = [&](const PositiveRoot& r) {
        Cmp c = p.compare(r, alpha);
        return strict ? c == Cmp::Less : c != Cmp::Greater;
    };
    auto above = [&](const PositiveRoot& r) {
        Cmp c = p.compare(r, alpha);
        return strict ? c == Cmp::Greater : c != Cmp::Less;
    };
    std::map<std::vector<int>, bool> below_memo, above_memo;
    auto decomposes = [](const RootVector& v, std::map<std::vector<int>, bool>& memo,
                         const std::function<bool(const PositiveRoot&)>& pred) {
        auto it = memo.find(v.coeffs());
        if (it != memo.end()) return it->second;
        bool ok = is_sum_of_roots(v, pred);
        memo.emplace(v.coeffs(), ok);
        return ok;
    };
    for (const auto& [w, poly] : x.terms()) {
        RootVector prefix = RootVector::zero(e);
        for (size_t j = 0; j + 1 < w.size(); ++j) {
            prefix += RootVector::simple(w[j], e);
            if (!decomposes(prefix, below_memo, below)) return false;
            if (!decomposes(x.content() - prefix, above_memo, above)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_cuspidal_character(const GradedCharacter& x, const PositiveRoot& alpha, const Preorder& p) {
    return split_test(x, alpha, p, true);
}

bool is_semicuspidal_character(const GradedCharacter& x, const PositiveRoot& alpha,
                               const Preorder& p) {
    return split_test(x, alpha, p, false);
}

bool verify_minimal_pair_identity(CuspidalEngine& engine, const PositiveRoot& rho,
                                  const PositiveRoot& beta, const PositiveRoot& gamma) {
    const Preorder& p = engine.preorder();
    const int e = p.e();
    bool listed = false;
    for (const MinimalPair& mp : minimal_pairs(p, rho)) {
        if (mp.beta == beta && mp.gamma == gamma && mp.real) {
            listed = true;
            break;
        }
    }
    if (!listed) throw std::invalid_argument("verify_minimal_pair_identity: not a real minimal pair");

    GradedCharacter chb = engine.result(beta).character;
    GradedCharacter chg = engine.result(gamma).character;
    GradedCharacter chr = engine.result(rho).character;
    const int pm = p_max(beta, gamma, e);
    const int form = static_cast<int>(bilinear_form(root_vector(beta, e), root_vector(gamma, e)));

    GradedCharacter residual = shuffle_product(chb, chg) - chr.shifted(pm - form);
    if (!residual.nonnegative()) return false;
    return shuffle_product(chg, chb) == residual.shifted(-form) + chr.shifted(-pm);
}

}  // namespace specht
