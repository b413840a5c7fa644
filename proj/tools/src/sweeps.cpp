#include "sweeps.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "serialize.hpp"

namespace specht::cli {

unsigned worker_count(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SPECHT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < static_cast<long>(hw)) {
            hw = static_cast<unsigned>(v);
        }
    }
    if (jobs == 0) return 1;
    if (jobs < hw) hw = static_cast<unsigned>(jobs);
    return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = worker_count(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

namespace {

struct ShapeCase {
    Partition lam, mu;
    int charge = 0;
    int e = 2;
};

std::vector<int> all_charges(int e) {
    std::vector<int> out(static_cast<size_t>(e));
    for (int i = 0; i < e; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

std::vector<ShapeCase> level1_cases(int max_nodes, int e, bool skew,
                                    const std::vector<int>& charges) {
    std::vector<ShapeCase> out;
    for (int n = 1; n <= max_nodes; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            std::vector<Partition> inners =
                skew ? subpartitions(lam) : std::vector<Partition>{Partition{}};
            for (const Partition& mu : inners) {
                if (partition_size(mu) == n) continue;
                for (int k : charges) out.push_back(ShapeCase{lam, mu, k, e});
            }
        }
    }
    return out;
}

std::string vec_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// fn checks one shape, filling fail on the first broken identity, and returns
// how many identities it verified
template <class Fn>
SweepResult run_shape_sweep(std::string name, const std::vector<ShapeCase>& cases, Fn&& fn) {
    SweepResult res;
    res.name = std::move(name);
    std::vector<std::string> fails(cases.size());
    std::vector<long long> counts(cases.size(), 0);
    parallel_for(cases.size(), [&](std::size_t i) {
        try {
            SkewShape s = make_shape(Multipartition{cases[i].lam}, Multipartition{cases[i].mu},
                                     Multicharge{cases[i].charge}, cases[i].e);
            counts[i] = fn(s, fails[i]);
        } catch (const std::exception& ex) {
            fails[i] = std::string("exception: ") + ex.what();
        }
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
        res.cases += counts[i];
        if (res.ok && !fails[i].empty()) {
            res.ok = false;
            SkewShape s = make_shape(Multipartition{cases[i].lam}, Multipartition{cases[i].mu},
                                     Multicharge{cases[i].charge}, cases[i].e);
            res.detail = shape_to_string(s) + ": " + fails[i];
        }
    }
    return res;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

SweepResult sweep_garnir(int max_nodes, const std::vector<int>& es) {
    std::vector<ShapeCase> cases;
    for (int e : es) {
        auto cs = level1_cases(max_nodes, e, true, all_charges(e));
        cases.insert(cases.end(), cs.begin(), cs.end());
    }
    return run_shape_sweep("garnir", cases, [](const SkewShape& s, std::string& fail) -> long long {
        long long done = 0;
        for (const Node& A : garnir_nodes(s)) {
            if (!check_garnir_degree_lemma(s, A)) {
                fail = "degree relation fails at " + node_to_string(A);
                return done;
            }
            if (!check_garnir_set_description(s, A)) {
                fail = "set description fails at " + node_to_string(A);
                return done;
            }
            ++done;
        }
        return done;
    });
}

SweepResult sweep_filtration(int max_nodes, const std::vector<int>& es) {
    std::vector<ShapeCase> cases;
    for (int e : es) {
        auto cs = level1_cases(max_nodes, e, false, {0, 1});
        cases.insert(cases.end(), cs.begin(), cs.end());
    }
    return run_shape_sweep(
        "filtration", cases, [](const SkewShape& s, std::string& fail) -> long long {
            const RootVector cont = content(s);
            const int e = s.e;
            long long done = 0;
            RootVector alpha = RootVector::zero(e);
            while (true) {
                if (!check_restriction_filtration(s.outer, s.charge, e, alpha, cont - alpha)) {
                    fail = "split at alpha=" + vec_to_string(alpha.coeffs()) + " breaks";
                    return done;
                }
                ++done;
                int i = 0;
                while (i < e && alpha.at(i) == cont.at(i)) alpha.at(i++) = 0;
                if (i == e) break;
                ++alpha.at(i);
            }
            return done;
        });
}

SweepResult sweep_join(int max_nodes, const std::vector<int>& es) {
    SweepResult res;
    res.name = "join";

    struct Comp {
        Partition lam, mu;
        int size = 0;
    };
    std::vector<Comp> comps;
    for (int n = 1; n <= max_nodes; ++n) {
        for (const Partition& lam : partitions_of(n)) {
            for (const Partition& mu : subpartitions(lam)) {
                int sz = n - partition_size(mu);
                if (sz == 0) continue;
                // minimality does not involve the charge or e
                SkewShape probe = make_shape(Multipartition{lam}, Multipartition{mu},
                                             Multicharge{0}, 2);
                if (!is_minimal_skew(probe)) continue;
                comps.push_back(Comp{lam, mu, sz});
            }
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (comps[i].size + comps[j].size <= max_nodes) pairs.emplace_back(i, j);
        }
    }

    std::vector<std::string> fails(pairs.size());
    std::vector<long long> counts(pairs.size(), 0);
    parallel_for(pairs.size(), [&](std::size_t t) {
        const Comp& a = comps[pairs[t].first];
        const Comp& b = comps[pairs[t].second];
        try {
            for (int e : es) {
                for (int k1 = 0; k1 < e; ++k1) {
                    for (int k2 = 0; k2 < e; ++k2) {
                        SkewShape pair = make_shape(Multipartition{a.lam, b.lam},
                                                    Multipartition{a.mu, b.mu},
                                                    Multicharge{k1, k2}, e);
                        if (!is_joinable(pair)) continue;
                        ++counts[t];
                        if (!check_join_identity(pair)) {
                            fails[t] = shape_to_string(pair) + ": join identity fails";
                            return;
                        }
                    }
                }
            }
        } catch (const std::exception& ex) {
            fails[t] = std::string("exception: ") + ex.what();
        }
    });
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        res.cases += counts[t];
        if (res.ok && !fails[t].empty()) {
            res.ok = false;
            res.detail = fails[t];
        }
    }
    return res;
}

SweepResult sweep_degmatch(int max_nodes, const std::vector<int>& es) {
    std::vector<ShapeCase> cases;
    for (int e : es) {
        auto cs = level1_cases(max_nodes, e, true, all_charges(e));
        cases.insert(cases.end(), cs.begin(), cs.end());
    }
    return run_shape_sweep(
        "degmatch", cases, [](const SkewShape& s, std::string& fail) -> long long {
            SkewTableau lead = leading_tableau(s);
            const Word lw = lead.residue_sequence();
            const int dlead = degree(lead);
            long long done = 0;
            for_each_standard(s, [&](const SkewTableau& t) {
                if (!fail.empty()) return;
                int expect = dlead + wiring_degree(tableau_permutation(t), lw, t.shape().e);
                if (degree(t) != expect) {
                    std::ostringstream os;
                    os << "tableau " << vec_to_string(t.values()) << " has degree " << degree(t)
                       << ", crossing count gives " << expect;
                    fail = os.str();
                    return;
                }
                ++done;
            });
            return done;
        });
}

SweepResult sweep_minuscule(const std::vector<int>& es) {
    SweepResult res;
    res.name = "minuscule";
    for (int e : es) {
        for (int i = 1; i <= e - 1; ++i) {
            SkewShape eta = hook_eta(e, i);
            GradedCharacter x = specht_character(eta);
            long long words = 0;
            for (const auto& [w, poly] : x.terms()) {
                ++words;
                std::string why;
                if (w.front() != 0) {
                    why = "word does not start with 0";
                } else if (poly != Laurent(1) && poly != Laurent::q_power(1)) {
                    why = "word space is not one copy in degree 0 or 1";
                } else if (i > 1 && (poly == Laurent::q_power(1)) != (w.back() == i - 1)) {
                    why = "degree-1 words are not exactly those ending in the arm residue";
                }
                if (!why.empty()) {
                    res.ok = false;
                    res.detail = shape_to_string(eta) + " word " + word_to_string(w) + ": " + why;
                    return res;
                }
            }
            if (words != binomial(e - 1, i - 1) || words != count_standard(eta)) {
                res.ok = false;
                res.detail = shape_to_string(eta) + ": wrong number of standard tableaux";
                return res;
            }
            ++res.cases;
        }
    }
    return res;
}

SweepResult sweep_catalogue(int max_m, const std::vector<int>& es) {
    SweepResult res;
    res.name = "catalogue";
    for (int e : es) {
        CuspidalEngine engine(Preorder::e_row(e));
        for (int m = 0; m <= max_m; ++m) {
            for (int i = 1; i < e; ++i) {
                const PositiveRoot plus = PositiveRoot::real_plus(m, i, i);
                const CuspidalResult& rp = engine.result(plus);
                if (rp.shape != shape_plus(m, i, e) || rp.shift != 0) {
                    res.ok = false;
                    res.detail = root_to_string(plus) + ": wrong shape or shift";
                    return res;
                }
                // extremal word 0^m 1^m .. (i-1)^m (e-1)^m .. (i+1)^m i^(m+1)
                Word expected;
                for (int j = 0; j < i; ++j) expected.insert(expected.end(), m, j);
                for (int j = e - 1; j > i; --j) expected.insert(expected.end(), m, j);
                expected.insert(expected.end(), m + 1, i);
                ExtremalData ext = extremal_word(rp.character);
                Laurent dim = quantum_factorial(m + 1);
                for (int j = 0; j < e - 1; ++j) dim = dim * quantum_factorial(m);
                const int top = (e - 1) * (m - 1) * m / 2 + m * (m + 1) / 2;
                if (ext.word != expected || ext.dim != dim || ext.dim.max_exponent() != top) {
                    res.ok = false;
                    res.detail = root_to_string(plus) + ": extremal word space mismatch";
                    return res;
                }
                ++res.cases;
                if (m >= 1) {
                    const PositiveRoot minus = PositiveRoot::real_minus(m, i, i);
                    const CuspidalResult& rm = engine.result(minus);
                    if (rm.shape != shape_minus(m, i, e) || rm.shift != 1 - m) {
                        res.ok = false;
                        res.detail = root_to_string(minus) + ": wrong shape or shift";
                        return res;
                    }
                    ++res.cases;
                }
            }
        }
    }
    return res;
}

SweepResult sweep_cuspidality(int max_height, const std::vector<int>& es) {
    SweepResult res;
    res.name = "cuspidality";
    for (int e : es) {
        Preorder p = Preorder::e_row(e);
        CuspidalEngine engine(p);
        std::vector<CuspidalResult> table = engine.table(max_height);
        std::vector<std::string> fails(table.size());
        parallel_for(table.size(), [&](std::size_t i) {
            try {
                if (!is_cuspidal_character(table[i].character, table[i].root, p)) {
                    fails[i] = root_to_string(table[i].root) + ": character is not cuspidal";
                } else if (bar_involution(table[i].character) != table[i].character) {
                    fails[i] = root_to_string(table[i].root) + ": character not bar-symmetric";
                }
            } catch (const std::exception& ex) {
                fails[i] = std::string("exception: ") + ex.what();
            }
        });
        res.cases += static_cast<long long>(table.size());
        for (const std::string& f : fails) {
            if (res.ok && !f.empty()) {
                res.ok = false;
                res.detail = "e=" + std::to_string(e) + " " + f;
            }
        }
        if (!res.ok) return res;
    }
    return res;
}

SweepResult sweep_minimal_pairs(int max_height, const std::vector<int>& es) {
    SweepResult res;
    res.name = "minimal-pairs";
    for (int e : es) {
        Preorder p = Preorder::e_row(e);
        CuspidalEngine engine(p);
        engine.table(max_height);  // warm the memo before the parallel part
        struct Case {
            PositiveRoot rho, beta, gamma;
        };
        std::vector<Case> cases;
        for (const PositiveRoot& rho : positive_roots_up_to_height(max_height, e)) {
            if (!rho.is_real()) continue;
            for (const MinimalPair& mp : minimal_pairs(p, rho)) {
                if (mp.real) cases.push_back(Case{rho, mp.beta, mp.gamma});
            }
        }
        std::vector<std::string> fails(cases.size());
        parallel_for(cases.size(), [&](std::size_t i) {
            try {
                if (!verify_minimal_pair_identity(engine, cases[i].rho, cases[i].beta,
                                                  cases[i].gamma)) {
                    fails[i] = root_to_string(cases[i].rho) + " with pair (" +
                               root_to_string(cases[i].beta) + ", " +
                               root_to_string(cases[i].gamma) + ") fails";
                }
            } catch (const std::exception& ex) {
                fails[i] = std::string("exception: ") + ex.what();
            }
        });
        res.cases += static_cast<long long>(cases.size());
        for (const std::string& f : fails) {
            if (res.ok && !f.empty()) {
                res.ok = false;
                res.detail = "e=" + std::to_string(e) + " " + f;
            }
        }
        if (!res.ok) return res;
    }
    return res;
}

SweepResult sweep_convexity(int max_height, const std::vector<int>& es) {
    SweepResult res;
    res.name = "convexity";
    for (int e : es) {
        Preorder p = Preorder::e_row(e);
        if (!check_convexity(p, max_height)) {
            res.ok = false;
            res.detail = "e=" + std::to_string(e) + ": convexity fails";
            return res;
        }
        ++res.cases;
        if (!check_balanced(p, max_height)) {
            res.ok = false;
            res.detail = "e=" + std::to_string(e) + ": balance fails";
            return res;
        }
        ++res.cases;
    }
    return res;
}

SweepResult sweep_roundtrip(int max_nodes, const std::vector<int>& es) {
    SweepResult res;
    res.name = "roundtrip";
    auto check_char = [&](const GradedCharacter& x, const std::string& label) {
        json j = character_to_json(x);
        if (character_from_json(j) != x || json::parse(j.dump()).dump() != j.dump()) {
            res.ok = false;
            res.detail = label + ": character does not round-trip";
            return false;
        }
        ++res.cases;
        return true;
    };
    for (int e : es) {
        for (const ShapeCase& c : level1_cases(max_nodes, e, true, {0})) {
            SkewShape s = make_shape(Multipartition{c.lam}, Multipartition{c.mu},
                                     Multicharge{c.charge}, c.e);
            std::string spelled = shape_to_string(s);
            auto back = parse_shape(spelled);
            if (!back || *back != s || shape_from_json(shape_to_json(s)) != s) {
                res.ok = false;
                res.detail = spelled + ": shape does not round-trip";
                return res;
            }
            ++res.cases;
            if (!check_char(specht_character(s), spelled)) return res;
        }
        for (const CuspidalResult& r : cuspidal_table(Preorder::e_row(e), max_nodes)) {
            if (!check_char(r.character, root_to_string(r.root))) return res;
        }
    }
    return res;
}

}  // namespace specht::cli
