#include "doctest.h"
#include "specht/cuspidal.hpp"

#include <stdexcept>

using namespace specht;

TEST_CASE("base case shapes") {
    Preorder p2 = Preorder::e_row(2);
    CuspidalEngine engine(p2);

    const CuspidalResult& plus1 = engine.result(PositiveRoot::real_plus(1, 1, 1));
    CHECK(plus1.shape == partition_shape({{2, 1}}, {0}, 2));
    CHECK(plus1.shift == 0);

    const CuspidalResult& minus1 = engine.result(PositiveRoot::real_minus(1, 1, 1));
    CHECK(minus1.shape == partition_shape({{1}}, {0}, 2));
    CHECK(minus1.shift == 0);

    const CuspidalResult& minus2 = engine.result(PositiveRoot::real_minus(2, 1, 1));
    CHECK(minus2.shape == make_shape({{2, 2}}, {{1}}, {1}, 2));
    CHECK(minus2.shift == -1);

    // the affine simple root: a single box of residue 0
    Preorder p3 = Preorder::e_row(3);
    CuspidalResult azero = cuspidal_shape(PositiveRoot::simple(0, 3), p3);
    CHECK(azero.shape == partition_shape({{1}}, {0}, 3));
    CHECK(azero.shift == 0);

    CHECK_THROWS_AS(cuspidal_shape(PositiveRoot::imaginary(1), p3), std::domain_error);
    CHECK_THROWS_AS(engine.result(PositiveRoot::imaginary(2)), std::domain_error);
}

TEST_CASE("two-vertex catalogue") {
    Preorder p2 = Preorder::e_row(2);
    auto table = cuspidal_table(p2, 5);
    REQUIRE(table.size() == 6);

    const PositiveRoot expected_roots[] = {
        PositiveRoot::real_plus(0, 1, 1), PositiveRoot::real_minus(1, 1, 1),
        PositiveRoot::real_plus(1, 1, 1), PositiveRoot::real_minus(2, 1, 1),
        PositiveRoot::real_plus(2, 1, 1), PositiveRoot::real_minus(3, 1, 1),
    };
    const int expected_shifts[] = {0, 0, 0, -1, 0, -2};
    for (size_t k = 0; k < 6; ++k) {
        CHECK(table[k].root == expected_roots[k]);
        CHECK(table[k].shift == expected_shifts[k]);
        const PositiveRoot& r = table[k].root;
        SkewShape want = r.kind == RootKind::RealPlus ? shape_plus(r.m, 1, 2)
                                                      : shape_minus(r.m, 1, 2);
        CHECK(table[k].shape == want);
    }
    CHECK(table[4].shape == make_shape({{3, 2, 1}}, {{1}}, {1}, 2));
    CHECK(table[5].shape == make_shape({{3, 3, 2}}, {{2, 1}}, {0}, 2));
}

TEST_CASE("three-vertex roots of height two") {
    Preorder p3 = Preorder::e_row(3);
    auto table = cuspidal_table(p3, 2);
    REQUIRE(table.size() == 6);

    CHECK(table[0].shape == partition_shape({{1}}, {1}, 3));      // a1
    CHECK(table[1].shape == partition_shape({{1}}, {2}, 3));      // a2
    CHECK(table[2].shape == partition_shape({{1}}, {0}, 3));      // a0
    CHECK(table[3].root == PositiveRoot::real_plus(0, 1, 2));
    CHECK(table[3].shape == partition_shape({{1, 1}}, {2}, 3));   // a1..a2
    CHECK(table[4].shape == partition_shape({{1, 1}}, {0}, 3));   // d-a1
    CHECK(table[5].shape == partition_shape({{2}}, {0}, 3));      // d-a2
    for (const CuspidalResult& r : table) CHECK(r.shift == 0);
}

TEST_CASE("column shape for the width-two interval") {
    Preorder p3 = Preorder::e_row(3);
    CuspidalResult r = cuspidal_shape(PositiveRoot::real_plus(0, 1, 2), p3);
    CHECK(r.shape == partition_shape({{1, 1}}, {2}, 3));
    CHECK(r.shift == 0);
    REQUIRE(r.character.terms().size() == 1);
    CHECK(r.character.coeff(Word{2, 1}) == Laurent(1));
}

TEST_CASE("cuspidality of characters") {
    Preorder p3 = Preorder::e_row(3);
    PositiveRoot a12 = PositiveRoot::real_plus(0, 1, 2);

    GradedCharacter col(word_content({2, 1}, 3));
    col.add({2, 1}, Laurent(1));
    CHECK(is_cuspidal_character(col, a12, p3));
    CHECK(is_semicuspidal_character(col, a12, p3));

    // (1,2) splits as a1 | a2 with a1 above a12: not cuspidal
    GradedCharacter row(word_content({1, 2}, 3));
    row.add({1, 2}, Laurent(1));
    CHECK(!is_cuspidal_character(row, a12, p3));

    // single letters split nowhere
    GradedCharacter dot(word_content({1}, 3));
    dot.add({1}, Laurent(1));
    CHECK(is_cuspidal_character(dot, PositiveRoot::real_plus(0, 1, 1), p3));
}

TEST_CASE("minimal pair character identity") {
    Preorder p3 = Preorder::e_row(3);
    CuspidalEngine engine(p3);
    PositiveRoot rho = PositiveRoot::real_plus(0, 1, 2);
    PositiveRoot beta = PositiveRoot::real_plus(0, 1, 1);
    PositiveRoot gamma = PositiveRoot::real_plus(0, 2, 2);

    CHECK(verify_minimal_pair_identity(engine, rho, beta, gamma));

    // residual of the straight shuffle is the single straightened word
    GradedCharacter lhs = shuffle_product(engine.result(beta).character,
                                          engine.result(gamma).character);
    int pm = p_max(beta, gamma, 3);
    int form = static_cast<int>(bilinear_form(root_vector(beta, 3), root_vector(gamma, 3)));
    CHECK(pm == 0);
    CHECK(form == -1);
    GradedCharacter residual = lhs - engine.result(rho).character.shifted(pm - form);
    REQUIRE(residual.terms().size() == 1);
    CHECK(residual.coeff(Word{1, 2}) == Laurent(1));

    // swapping the pair is rejected: beta must sit above rho
    CHECK_THROWS_AS(verify_minimal_pair_identity(engine, rho, gamma, beta),
                    std::invalid_argument);
}

TEST_CASE("catalogue invariants") {
    for (int e : {2, 3, 4}) {
        Preorder p = Preorder::e_row(e);
        CuspidalEngine engine(p);
        auto table = engine.table(6);
        CHECK(!table.empty());
        for (const CuspidalResult& r : table) {
            CHECK(content(r.shape) == root_vector(r.root, e));
            CHECK(r.shape.level() == 1);
            CHECK(is_skew_hook(r.shape));
            CHECK(is_minimal_skew(r.shape));
            CHECK(r.character == specht_character(r.shape).shifted(r.shift));
            CHECK(bar_involution(r.character) == r.character);
            CHECK(is_cuspidal_character(r.character, r.root, p));
            CHECK(is_semicuspidal_character(r.character, r.root, p));

            ExtremalData ex = extremal_word(r.character);
            Laurent prod(1);
            for (auto [letter, mult] : ex.runs) prod = prod * quantum_factorial(mult);
            CHECK(ex.dim == prod);
        }
    }
}

TEST_CASE("any real minimal pair reproduces the shape and shift") {
    for (int e : {2, 3, 4}) {
        Preorder p = Preorder::e_row(e);
        CuspidalEngine engine(p);
        for (const PositiveRoot& rho : positive_roots_up_to_height(8, e)) {
            if (!rho.is_real()) continue;
            const CuspidalResult want = engine.result(rho);
            for (const MinimalPair& mp : minimal_pairs(p, rho)) {
                if (!mp.real) continue;
                const CuspidalResult rb = engine.result(mp.beta);
                const CuspidalResult rg = engine.result(mp.gamma);
                const int pm = p_max(mp.beta, mp.gamma, e);
                const int form = static_cast<int>(
                    bilinear_form(root_vector(mp.beta, e), root_vector(mp.gamma, e)));

                SkewShape shape;
                int shift = 0;
                SkewShape bg = assemble_pair(rb.shape, rg.shape);
                if (is_joinable(bg)) {
                    JoinData jd = join_data(bg);
                    shape = jd.right;
                    shift = rb.shift + rg.shift - pm + form + jd.shift_right - jd.shift_product;
                } else {
                    SkewShape gb = assemble_pair(rg.shape, rb.shape);
                    REQUIRE(is_joinable(gb));
                    JoinData jd = join_data(gb);
                    shape = jd.above;
                    shift = rb.shift + rg.shift + pm + jd.shift_above - jd.shift_product;
                }
                CHECK(shape == want.shape);
                CHECK(shift == want.shift);
            }
        }
    }
}
