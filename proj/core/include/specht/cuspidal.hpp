#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "specht/characters.hpp"
#include "specht/preorders.hpp"

namespace specht {

// Identification of the cuspidal module of a real positive root as a grading
// shift of a minimal skew hook Specht module.  Roots mδ ± α_i are base cases
// with explicit shapes; other roots are resolved by joining the shapes of a
// real minimal pair.
struct CuspidalResult {
    PositiveRoot root;
    SkewShape shape;                // minimal skew hook with content root
    int shift = 0;
    GradedCharacter character;      // q^shift times the character of shape
};

class CuspidalEngine {
public:
    explicit CuspidalEngine(Preorder p);

    const Preorder& preorder() const { return p_; }
    const CuspidalResult& result(const PositiveRoot& alpha);

    // results for all real roots of height <= max_height, in enumeration order
    std::vector<CuspidalResult> table(int max_height);

private:
    CuspidalResult compute(const PositiveRoot& alpha);

    Preorder p_;
    // recursive because compute() asks for the pair members; entries are never
    // mutated after insertion, so returned references stay valid
    mutable std::recursive_mutex lock_;
    std::map<PositiveRoot, CuspidalResult, RootOrder> memo_;
};

CuspidalResult cuspidal_shape(const PositiveRoot& alpha, const Preorder& p);
std::vector<CuspidalResult> cuspidal_table(const Preorder& p, int max_height);

// A character of content alpha is cuspidal when for every word and every
// proper split, the prefix content is a sum of roots strictly below alpha and
// the suffix content a sum of roots strictly above.  The semicuspidal version
// allows equivalents of alpha on both sides.
bool is_cuspidal_character(const GradedCharacter& x, const PositiveRoot& alpha, const Preorder& p);
bool is_semicuspidal_character(const GradedCharacter& x, const PositiveRoot& alpha, const Preorder& p);

// For a real minimal pair (beta, gamma) of rho: the shuffle of the cuspidal
// characters in the (beta, gamma) order minus q^(p - (beta,gamma)) times the
// cuspidal character of rho must be nonnegative, and the opposite shuffle must
// equal q^(-(beta,gamma)) times that residual plus q^(-p) times the character
// of rho, where p = p_max(beta, gamma).
bool verify_minimal_pair_identity(CuspidalEngine& engine, const PositiveRoot& rho,
                                  const PositiveRoot& beta, const PositiveRoot& gamma);

}  // namespace specht
