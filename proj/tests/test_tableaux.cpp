#include "doctest.h"
#include "specht/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace specht;

namespace {

SkewShape level1(Partition outer, Partition inner, int charge, int e) {
    return make_shape({std::move(outer)}, {std::move(inner)}, {charge}, e);
}

std::vector<SkewShape> level1_shapes(int max_nodes, int e) {
    std::vector<SkewShape> out;
    for (int n = 1; n <= max_nodes; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : subpartitions(lam))
                if (partition_size(mu) < n) out.push_back(level1(lam, mu, 0, e));
    return out;
}

Permutation product_of(const std::vector<int>& word, int n) {
    Permutation acc = Permutation::identity(n);
    for (int r : word) acc = acc * Permutation::transposition(n, r);
    return acc;
}

// reduced word that picks the largest adjacent value inversion first, as a
// second witness besides the lexicographically smallest one
std::vector<int> greedy_max_reduced_word(const Permutation& w) {
    std::vector<int> word;
    std::vector<int> pos(static_cast<size_t>(w.n()) + 1);
    for (int k = 1; k <= w.n(); ++k) pos[static_cast<size_t>(w(k))] = k;
    while (true) {
        int r = 0;
        for (int v = w.n() - 1; v >= 1; --v)
            if (pos[static_cast<size_t>(v)] > pos[static_cast<size_t>(v + 1)]) {
                r = v;
                break;
            }
        if (r == 0) break;
        word.push_back(r);
        std::swap(pos[static_cast<size_t>(r)], pos[static_cast<size_t>(r + 1)]);
    }
    return word;
}

int crossing_degree(const std::vector<int>& reduced, const Word& start, int e) {
    Word cur = start;
    int deg = 0;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
        size_t r = static_cast<size_t>(*it);
        deg -= cartan_pairing(cur[r - 1], cur[r], e);
        std::swap(cur[r - 1], cur[r]);
    }
    return deg;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("leading tableau and row reading") {
    SkewShape s = level1({4, 4, 1}, {2, 1, 1}, 0, 2);
    SkewTableau t = leading_tableau(s);
    CHECK(t.size() == 5);
    CHECK(t.at(Node{1, 3, 1}) == 1);
    CHECK(t.at(Node{1, 4, 1}) == 2);
    CHECK(t.at(Node{2, 2, 1}) == 3);
    CHECK(t.at(Node{2, 4, 1}) == 5);
    CHECK(t.is_standard());

    SkewTableau box = leading_tableau(level1({1}, {}, 0, 2));
    CHECK(box.at(Node{1, 1, 1}) == 1);
}

TEST_CASE("Y-embedding") {
    SkewShape s = level1({4, 4, 1}, {2, 1, 1}, 0, 2);
    SkewTableau y = embed_Y(leading_tableau(s));
    CHECK(y.shape() == partition_shape({{4, 4, 1}}, {0}, 2));
    // inner nodes hold their own leading tableau, skew entries shift by 4
    CHECK(y.at(Node{1, 1, 1}) == 1);
    CHECK(y.at(Node{1, 2, 1}) == 2);
    CHECK(y.at(Node{2, 1, 1}) == 3);
    CHECK(y.at(Node{3, 1, 1}) == 4);
    CHECK(y.at(Node{1, 3, 1}) == 5);
    CHECK(y.at(Node{1, 4, 1}) == 6);
    CHECK(y.at(Node{2, 2, 1}) == 7);
    CHECK(y.at(Node{2, 3, 1}) == 8);
    CHECK(y.at(Node{2, 4, 1}) == 9);
    CHECK(y.is_standard());

    // empty inner: the embedding is the identity
    SkewTableau t = leading_tableau(level1({2, 1}, {}, 0, 2));
    CHECK(embed_Y(t) == t);

    for (const SkewShape& sh : level1_shapes(5, 2))
        for (const SkewTableau& u : standard_tableaux(sh)) CHECK(embed_Y(u).is_standard());
}

TEST_CASE("standardness predicates") {
    SkewShape s21 = level1({2, 1}, {}, 0, 2);
    SkewTableau lead = leading_tableau(s21);  // [1 2 / 3]
    CHECK(lead.is_standard());
    SkewTableau swapped = lead.with_swapped(2);  // [1 3 / 2]
    CHECK(swapped.is_standard());
    SkewTableau bad(s21, {2, 1, 3});  // [2 1 / 3]
    CHECK(!bad.is_row_strict());
    CHECK(!bad.is_standard());

    CHECK_THROWS_AS(SkewTableau(s21, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SkewTableau(s21, {1, 2, 2}), std::invalid_argument);
}

TEST_CASE("standard tableau enumeration") {
    CHECK(count_standard(level1({2, 1}, {}, 0, 2)) == 2);
    CHECK(count_standard(level1({5}, {}, 0, 2)) == 1);
    CHECK(count_standard(level1({3, 2}, {}, 0, 2)) == 5);
    CHECK(count_standard(level1({4, 2}, {}, 0, 2)) == 9);
    CHECK(count_standard(hook_eta(4, 2)) == 3);

    // disconnected boxes carry the full symmetric group
    SkewShape boxes = make_shape({{1}, {1}, {1}, {1}}, {}, {0, 0, 0, 0}, 2);
    CHECK(count_standard(boxes) == 24);

    // stream, vector and counter agree; the stream is ordered by entry placement
    for (const SkewShape& s : level1_shapes(6, 2)) {
        auto all = standard_tableaux(s);
        CHECK(static_cast<long long>(all.size()) == count_standard(s));
        long long seen = 0;
        for_each_standard(s, [&](const SkewTableau& t) {
            CHECK(t.is_standard());
            ++seen;
        });
        CHECK(seen == static_cast<long long>(all.size()));
        for (size_t i = 0; i + 1 < all.size(); ++i) {
            std::vector<Node> a, b;
            for (int k = 1; k <= all[i].size(); ++k) {
                a.push_back(all[i].node_of(k));
                b.push_back(all[i + 1].node_of(k));
            }
            CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
}

TEST_CASE("enumeration matches brute force over all fillings") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : subpartitions(lam)) {
                if (partition_size(mu) == n) continue;
                SkewShape s = level1(lam, mu, 0, 2);
                int d = shape_size(s);
                std::vector<int> vals(static_cast<size_t>(d));
                std::iota(vals.begin(), vals.end(), 1);
                long long brute = 0;
                do
                    if (SkewTableau(s, vals).is_standard()) ++brute;
                while (std::next_permutation(vals.begin(), vals.end()));
                CHECK(brute == count_standard(s));
            }
}

TEST_CASE("residue sequences") {
    SkewShape s3 = level1({2, 1}, {}, 0, 3);
    CHECK(leading_tableau(s3).residue_sequence() == Word{0, 1, 2});
    CHECK(leading_tableau(s3).with_swapped(2).residue_sequence() == Word{0, 2, 1});

    SkewShape s2 = level1({2, 1}, {}, 0, 2);
    for (const SkewTableau& t : standard_tableaux(s2))
        CHECK(t.residue_sequence() == Word{0, 1, 1});
}

TEST_CASE("signed addable counts around a node") {
    CHECK(d_below({{1}}, {0}, 2, Node{1, 1, 1}) == 0);
    CHECK(d_below({{2}}, {0}, 2, Node{1, 2, 1}) == 1);
    CHECK(d_below({{2, 1}}, {0}, 2, Node{1, 2, 1}) == -1);
    CHECK(d_above({{2, 1}}, {0}, 2, Node{3, 1, 1}) == 2);
    // interior nodes are rejected
    CHECK_THROWS_AS(d_below({{2, 1}}, {0}, 2, Node{1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(d_above({{2, 2}}, {0}, 2, Node{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("tableau degrees") {
    for (int k = 0; k < 3; ++k)
        CHECK(degree(leading_tableau(level1({1}, {}, k, 3))) == 0);

    SkewShape s2 = level1({2, 1}, {}, 0, 2);
    SkewTableau lead2 = leading_tableau(s2);
    CHECK(degree(lead2) == 1);
    CHECK(degree(lead2.with_swapped(2)) == -1);
    CHECK(codegree(lead2) == -1);
    CHECK(codegree(lead2.with_swapped(2)) == 1);

    SkewShape s3 = level1({2, 1}, {}, 0, 3);
    CHECK(degree(leading_tableau(s3)) == 0);
    CHECK(degree(leading_tableau(s3).with_swapped(2)) == 1);

    CHECK_THROWS_AS(degree(SkewTableau(s2, {2, 1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(codegree(SkewTableau(s2, {2, 1, 3})), std::invalid_argument);

    // degree + codegree only depends on the shape, not the tableau
    for (int e : {2, 3})
        for (const SkewShape& s : level1_shapes(6, e)) {
            auto all = standard_tableaux(s);
            if (all.empty()) continue;
            int ref = degree(all.front()) + codegree(all.front());
            for (const SkewTableau& t : all) CHECK(degree(t) + codegree(t) == ref);
        }
}

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    Permutation s1 = Permutation::transposition(4, 1);
    Permutation s3 = Permutation::transposition(4, 3);
    CHECK(permutation_length(id) == 0);
    CHECK(permutation_length(s1) == 1);
    CHECK((s1 * s3) == (s3 * s1));
    CHECK(s1 * s1 == id);
    CHECK(s1.inverse() == s1);
    CHECK(permutation_length(Permutation({3, 2, 1})) == 3);
    CHECK(lex_min_reduced_word(Permutation({2, 1})) == std::vector<int>{1});
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);

    // reduced words rebuild the permutation
    for (const Permutation& w : symmetric_group(5)) {
        auto rw = lex_min_reduced_word(w);
        CHECK(static_cast<int>(rw.size()) == permutation_length(w));
        CHECK(product_of(rw, 5) == w);
        auto alt = greedy_max_reduced_word(w);
        CHECK(alt.size() == rw.size());
        CHECK(product_of(alt, 5) == w);
    }
}

TEST_CASE("tableau permutations") {
    SkewShape s21 = level1({2, 1}, {}, 0, 2);
    SkewTableau lead = leading_tableau(s21);
    CHECK(tableau_permutation(lead) == Permutation::identity(3));
    CHECK(tableau_permutation(lead.with_swapped(2)) == Permutation::transposition(3, 2));

    for (const SkewShape& s : level1_shapes(5, 2)) {
        SkewTableau l = leading_tableau(s);
        for (const SkewTableau& t : standard_tableaux(s)) {
            bool trivial = permutation_length(tableau_permutation(t)) == 0;
            CHECK(trivial == (t == l));
        }
    }
}

TEST_CASE("permutation Bruhat order matches the subword criterion") {
    for (int n = 2; n <= 5; ++n) {
        auto group = symmetric_group(n);
        for (const Permutation& w : group) {
            // all subword products of one fixed reduced expression of w
            auto rw = lex_min_reduced_word(w);
            std::set<std::vector<int>> below;
            for (unsigned mask = 0; mask < (1u << rw.size()); ++mask) {
                std::vector<int> pick;
                for (size_t i = 0; i < rw.size(); ++i)
                    if (mask & (1u << i)) pick.push_back(rw[i]);
                below.insert(product_of(pick, n).one_line());
            }
            for (const Permutation& u : group)
                CHECK(bruhat_leq_permutation(u, w) == (below.count(u.one_line()) > 0));
        }
    }
}

TEST_CASE("tableau Bruhat order") {
    SkewShape s21 = level1({2, 1}, {}, 0, 2);
    SkewTableau lead = leading_tableau(s21);
    CHECK(bruhat_leq(lead, lead.with_swapped(2)));
    CHECK(!bruhat_leq(lead.with_swapped(2), lead));
    CHECK_THROWS_AS(bruhat_leq(lead, leading_tableau(level1({3}, {}, 0, 2))),
                    std::invalid_argument);

    // the shape criterion agrees with the Bruhat order of the permutations;
    // all skew shapes up to five nodes plus the straight shapes of six
    auto shapes = level1_shapes(5, 2);
    for (const Partition& lam : partitions_of(6)) shapes.push_back(level1(lam, {}, 0, 2));
    for (const SkewShape& s : shapes) {
        auto all = standard_tableaux(s);
        SkewTableau l = leading_tableau(s);
        for (const SkewTableau& a : all) {
            CHECK(bruhat_leq(l, a));
            for (const SkewTableau& b : all)
                CHECK(bruhat_leq(a, b) ==
                      bruhat_leq_permutation(tableau_permutation(a), tableau_permutation(b)));
        }
    }
}

TEST_CASE("swapping adjacent entries") {
    SkewShape s21 = level1({2, 1}, {}, 0, 2);
    SkewTableau lead = leading_tableau(s21);
    CHECK(adjacent_swap_standard(lead, 2));
    CHECK(!adjacent_swap_standard(lead, 1));  // 2 sits right of 1

    for (const SkewShape& s : level1_shapes(6, 2))
        for (const SkewTableau& t : standard_tableaux(s))
            for (int r = 1; r < t.size(); ++r)
                CHECK(adjacent_swap_standard(t, r) == t.with_swapped(r).is_standard());
}

TEST_CASE("swaps against straightened neighbours stay below") {
    // if r+1 sits directly right of or below r in t, the swapped filling u is
    // no longer standard, but any standard s strictly under u is under t
    auto shapes = level1_shapes(5, 2);
    for (const Partition& lam : partitions_of(6)) shapes.push_back(level1(lam, {}, 0, 2));
    for (const SkewShape& s : shapes) {
        auto all = standard_tableaux(s);
        for (const SkewTableau& t : all) {
            for (int r = 1; r < t.size(); ++r) {
                Node a = t.node_of(r), b = t.node_of(r + 1);
                bool right = b == Node{a.row, a.col + 1, a.comp};
                bool under = b == Node{a.row + 1, a.col, a.comp};
                if (!right && !under) continue;
                SkewTableau u = t.with_swapped(r);
                CHECK(!u.is_standard());
                if (!u.is_row_strict()) continue;  // comparison needs row-strict fillings
                for (const SkewTableau& x : all) {
                    if (bruhat_leq(x, u) && x != u) CHECK(bruhat_leq(x, t));
                }
            }
        }
    }
}

TEST_CASE("crossing degrees of permuted words") {
    CHECK(wiring_degree(Permutation::identity(2), Word{0, 1}, 2) == 0);
    CHECK(wiring_degree(Permutation::transposition(2, 1), Word{0, 0}, 2) == -2);
    CHECK(wiring_degree(Permutation::transposition(2, 1), Word{1, 1}, 3) == -2);
    CHECK(wiring_degree(Permutation::transposition(2, 1), Word{0, 1}, 3) == 1);

    // independent of the chosen reduced expression
    for (const Permutation& w : symmetric_group(5)) {
        auto lex = lex_min_reduced_word(w);
        auto alt = greedy_max_reduced_word(w);
        Word word{0, 1, 0, 1, 0};
        CHECK(wiring_degree(w, word, 2) == crossing_degree(lex, word, 2));
        CHECK(crossing_degree(lex, word, 2) == crossing_degree(alt, word, 2));
        Word word3{0, 1, 2, 0, 1};
        CHECK(wiring_degree(w, word3, 3) == crossing_degree(lex, word3, 3));
        CHECK(crossing_degree(lex, word3, 3) == crossing_degree(alt, word3, 3));
    }

    // degree drop of a standard tableau equals the crossing degree of its
    // permutation on the leading word
    for (int e : {2, 3}) {
        SkewShape s = level1({3, 2}, {1}, 0, e);
        SkewTableau l = leading_tableau(s);
        for (const SkewTableau& t : standard_tableaux(s))
            CHECK(degree(t) - degree(l) ==
                  wiring_degree(tableau_permutation(t), l.residue_sequence(), e));
    }
}
