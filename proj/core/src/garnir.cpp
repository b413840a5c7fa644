#include "specht/garnir.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace specht {

std::vector<Node> garnir_nodes(const SkewShape& shape) {
    std::vector<Node> out;
    for (const Node& n : shape_nodes(shape)) {
        if (node_in_skew(shape, Node{n.row + 1, n.col, n.comp})) out.push_back(n);
    }
    return out;
}

GarnirData garnir_belt(const SkewShape& shape, const Node& A) {
    if (!node_in_skew(shape, A) || !node_in_skew(shape, Node{A.row + 1, A.col, A.comp})) {
        throw std::invalid_argument("garnir_belt: " + node_to_string(A) + " is not a Garnir node");
    }
    const int e = shape.e;
    const int a = A.row, b = A.col, m = A.comp;
    const Partition& lam = shape.outer[m - 1];
    const Partition& mu = shape.inner[m - 1];

    GarnirData data;
    data.node = A;
    for (int c = b; c <= part(lam, a); ++c) data.belt.push_back(Node{a, c, m});
    for (int c = part(mu, a + 1) + 1; c <= b; ++c) data.belt.push_back(Node{a + 1, c, m});

    // Greedy left-to-right brick scan: a brick starts wherever the residue of A
    // recurs and e nodes of the belt row remain to its right.
    const int res_A = residue(shape, A);
    auto scan_row = [&](int row, int lo, int hi) {
        std::vector<std::vector<Node>> out;
        int c = lo;
        while (c + e - 1 <= hi) {
            if (node_residue(shape.charge[m - 1], row, c, e) == res_A) {
                std::vector<Node> brick;
                for (int j = 0; j < e; ++j) brick.push_back(Node{row, c + j, m});
                out.push_back(std::move(brick));
                c += e;
            } else {
                ++c;
            }
        }
        return out;
    };
    std::vector<std::vector<Node>> lower = scan_row(a + 1, part(mu, a + 1) + 1, b);
    std::vector<std::vector<Node>> upper = scan_row(a, b, part(lam, a));

    // The tiling is forced: lower bricks end at b, b-e, ... and upper bricks
    // start at b, b+e, ...  Anything else means the scan went wrong.
    if (!lower.empty() && lower.back().back().col != b) {
        throw std::logic_error("garnir_belt: lower bricks misaligned");
    }
    if (!upper.empty() && upper.front().front().col != b) {
        throw std::logic_error("garnir_belt: upper bricks misaligned");
    }

    data.bricks = std::move(lower);
    data.f = static_cast<int>(upper.size());
    for (auto& brick : upper) data.bricks.push_back(std::move(brick));
    data.k = static_cast<int>(data.bricks.size());
    return data;
}

namespace {

int reading_index(const std::vector<Node>& nodes, const Node& n) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), n);
    if (it == nodes.end() || !(*it == n)) throw std::logic_error("reading_index: node not in shape");
    return static_cast<int>(it - nodes.begin());
}

}  // namespace

SkewTableau garnir_tableau(const SkewShape& shape, const Node& A) {
    GarnirData data = garnir_belt(shape, A);
    SkewTableau lead = leading_tableau(shape);
    std::vector<int> vals = lead.values();

    std::vector<int> belt_vals;
    for (const Node& n : data.belt) belt_vals.push_back(lead.at(n));
    std::sort(belt_vals.begin(), belt_vals.end());

    // Refill the belt bottom row first, both rows left to right.
    std::vector<Node> order;
    for (const Node& n : data.belt) {
        if (n.row == A.row + 1) order.push_back(n);
    }
    for (const Node& n : data.belt) {
        if (n.row == A.row) order.push_back(n);
    }
    const std::vector<Node>& nodes = lead.nodes();
    for (size_t i = 0; i < order.size(); ++i) {
        vals[reading_index(nodes, order[i])] = belt_vals[i];
    }
    return SkewTableau(shape, vals);
}

std::vector<SkewTableau> garnir_set(const SkewShape& shape, const Node& A) {
    GarnirData data = garnir_belt(shape, A);
    SkewTableau g = garnir_tableau(shape, A);
    const int k = data.k, f = data.f;

    // Value runs carried by the bricks of g^A; run i is entirely smaller than
    // run i+1 because the brick positions are consecutive in the refill order.
    std::vector<std::vector<int>> runs;
    for (const auto& brick : data.bricks) {
        std::vector<int> run;
        for (const Node& n : brick) run.push_back(g.at(n));
        std::sort(run.begin(), run.end());
        runs.push_back(std::move(run));
    }
    for (int i = 0; i + 1 < k; ++i) {
        if (runs[i].back() >= runs[i + 1].front()) throw std::logic_error("garnir_set: runs out of order");
    }

    const std::vector<Node>& nodes = shape_nodes(shape);
    std::vector<SkewTableau> out;
    std::vector<int> subset(f);
    for (int i = 0; i < f; ++i) subset[i] = i;
    const int kf = k - f;
    while (true) {
        std::vector<bool> chosen(k, false);
        for (int s : subset) chosen[s] = true;
        std::vector<int> vals = g.values();
        int up = 0, down = 0;
        for (int i = 0; i < k; ++i) {
            // chosen runs go to the upper-row bricks (labels kf+1..k), the rest
            // stay below, preserving order in both rows
            const auto& brick = data.bricks[chosen[i] ? kf + up++ : down++];
            for (int j = 0; j < shape.e; ++j) {
                vals[reading_index(nodes, brick[j])] = runs[i][j];
            }
        }
        out.emplace_back(shape, vals);

        // next f-subset of {0..k-1} in lexicographic order
        int i = f - 1;
        while (i >= 0 && subset[i] == kf + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < f; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (!(out.back() == g)) throw std::logic_error("garnir_set: last member is not the Garnir tableau");
    return out;
}

bool check_garnir_degree_lemma(const SkewShape& shape, const Node& A) {
    std::vector<SkewTableau> gar = garnir_set(shape, A);
    const SkewTableau& g = gar.back();
    if (gar.size() <= 1) return true;

    const int r = g.at(A) - 1;
    // entries r and r+1 sit just below A and at A
    if (!(g.node_of(r) == Node{A.row + 1, A.col, A.comp})) return false;
    if (!(g.node_of(r + 1) == A)) return false;

    Word word = g.residue_sequence();
    SkewTableau srg = g.with_swapped(r);
    if (!srg.is_standard()) return false;
    const int expected = degree(srg) - cartan_pairing(word[r - 1], word[r], shape.e);

    for (size_t i = 0; i + 1 < gar.size(); ++i) {
        const SkewTableau& t = gar[i];
        if (!t.is_standard()) return false;
        if (t.residue_sequence() != word) return false;
        if (degree(t) != expected) return false;
    }
    return true;
}

bool check_garnir_set_description(const SkewShape& shape, const Node& A) {
    std::vector<SkewTableau> gar = garnir_set(shape, A);
    const SkewTableau& g = gar.back();
    Word word = g.residue_sequence();

    std::set<std::vector<int>> members;
    for (size_t i = 0; i + 1 < gar.size(); ++i) members.insert(gar[i].values());

    std::set<std::vector<int>> expected;
    for_each_standard(shape, [&](const SkewTableau& t) {
        if (t.residue_sequence() == word && bruhat_leq(t, g)) expected.insert(t.values());
    });
    return members == expected;
}

std::string render_garnir(const SkewShape& shape, const GarnirData& data) {
    std::map<Node, std::string> label;
    for (const Node& n : data.belt) label[n] = "*";
    for (size_t i = 0; i < data.bricks.size(); ++i) {
        for (const Node& n : data.bricks[i]) label[n] = std::to_string(i + 1);
    }
    size_t width = 1;
    for (const auto& [n, s] : label) width = std::max(width, s.size());

    std::string out;
    for (int m = 1; m <= shape.level(); ++m) {
        if (m > 1) out += "---\n";
        const Partition& lam = shape.outer[m - 1];
        for (int a = 1; a <= partition_rows(lam); ++a) {
            std::string line;
            for (int b = 1; b <= part(lam, a); ++b) {
                Node n{a, b, m};
                std::string cell;
                if (!node_in_skew(shape, n)) {
                    cell = ".";
                } else if (auto it = label.find(n); it != label.end()) {
                    cell = it->second;
                } else {
                    cell = "o";
                }
                if (b > 1) line += ' ';
                line += std::string(width - cell.size(), ' ');
                line += cell;
            }
            out += line;
            out += '\n';
        }
    }
    return out;
}

}  // namespace specht
