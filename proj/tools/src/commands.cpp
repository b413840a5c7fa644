#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "serialize.hpp"
#include "sweeps.hpp"

namespace specht::cli {

namespace {

SkewShape shape_from_flags(int e, const std::string& charge, const std::string& outer,
                           const std::string& inner) {
    std::string spec =
        "outer=" + outer + ";inner=" + inner + ";charge=" + charge + ";e=" + std::to_string(e);
    std::string why;
    auto s = parse_shape(spec, &why);
    if (!s) throw std::invalid_argument(why.empty() ? "malformed shape" : why);
    return *s;
}

std::vector<int> parse_csv(const std::string& text, const char* what) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("bad ") + what + ": '" + piece + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

std::string bare_word(const Word& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
    return os.str();
}

std::string poly_prefix(const Laurent& p) {
    std::string s = p.to_string();
    if (p.coeffs().size() > 1 || (!p.is_zero() && p.coeffs().begin()->second < 0)) {
        s = "(" + s + ")";
    }
    return s;
}

int run_character(const SkewShape& shape, bool as_json, bool with_tableaux, std::ostream& out) {
    GradedCharacter x = specht_character(shape);
    if (as_json) {
        out << character_to_json(x).dump() << "\n";
        return 0;
    }
    out << character_to_text(x);
    if (with_tableaux) {
        for_each_standard(shape, [&](const SkewTableau& t) {
            out << render_tableau(t) << "degree=" << degree(t)
                << " word=" << word_to_string(t.residue_sequence()) << "\n";
        });
    }
    return 0;
}

int run_restrict(const SkewShape& shape, const std::string& alpha_csv, bool as_json,
                 std::ostream& out) {
    std::vector<int> a = parse_csv(alpha_csv, "alpha");
    if (static_cast<int>(a.size()) != shape.e) {
        throw std::invalid_argument("alpha needs one multiplicity per residue");
    }
    RootVector alpha(a);
    RootVector beta = content(shape) - alpha;
    GradedCharacter x = specht_character(shape);
    PairCharacter pc = restrict_character(x, alpha, beta);
    if (as_json) {
        out << pair_character_to_json(pc, alpha, beta).dump() << "\n";
        return 0;
    }
    for (const auto& [words, poly] : pc) {
        out << poly_prefix(poly) << "*(" << bare_word(words.first) << " | "
            << bare_word(words.second) << ")\n";
    }
    return 0;
}

int run_join(const SkewShape& shape, bool as_json, std::ostream& out) {
    bool joinable = is_joinable(shape);
    if (!joinable) {
        if (as_json) {
            out << json{{"joinable", false}}.dump() << "\n";
        } else {
            out << "joinable: no\n";
        }
        return 0;
    }
    JoinData jd = join_data(shape);
    bool ok = check_join_identity(shape);
    if (as_json) {
        out << json{{"joinable", true},
                    {"above", shape_to_json(jd.above)},
                    {"right", shape_to_json(jd.right)},
                    {"shift_above", jd.shift_above},
                    {"shift_right", jd.shift_right},
                    {"shift_product", jd.shift_product},
                    {"identity", ok}}
                   .dump()
            << "\n";
    } else {
        out << "joinable: yes\n";
        out << "above: " << shape_to_string(jd.above) << " shift=" << jd.shift_above << "\n";
        out << "right: " << shape_to_string(jd.right) << " shift=" << jd.shift_right << "\n";
        out << "product shift: " << jd.shift_product << "\n";
        out << "identity: " << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int run_garnir(const SkewShape& shape, const std::string& node_csv, bool verify_set, bool as_json,
               std::ostream& out) {
    std::vector<int> nc = parse_csv(node_csv, "node");
    if (nc.size() != 2 && nc.size() != 3) {
        throw std::invalid_argument("node must be row,col or row,col,component");
    }
    Node A{nc[0], nc[1], nc.size() == 3 ? nc[2] : 1};
    GarnirData data = garnir_belt(shape, A);
    std::vector<SkewTableau> members = garnir_set(shape, A);
    bool lemma = check_garnir_degree_lemma(shape, A);
    bool setok = !verify_set || check_garnir_set_description(shape, A);
    if (as_json) {
        json j = garnir_to_json(shape, data, members);
        j["degree_lemma"] = lemma;
        if (verify_set) j["set_description"] = setok;
        out << j.dump() << "\n";
    } else {
        out << render_garnir(shape, data);
        out << "k=" << data.k << " f=" << data.f << " members=" << members.size() << "\n";
        for (const SkewTableau& t : members) {
            out << render_tableau(t);
            if (t.is_standard()) {
                out << "standard, degree=" << degree(t) << "\n";
            } else {
                out << "not standard (the Garnir tableau)\n";
            }
        }
        out << "degree lemma: " << (lemma ? "ok" : "FAILED") << "\n";
        if (verify_set) out << "set description: " << (setok ? "ok" : "FAILED") << "\n";
    }
    return (lemma && setok) ? 0 : 1;
}

int run_cuspidal(int e, const std::string& root_text, bool as_json, std::ostream& out) {
    auto root = parse_root(root_text, e);
    if (!root) throw std::invalid_argument("unrecognized root: '" + root_text + "'");
    Preorder p = Preorder::e_row(e);
    CuspidalResult res = cuspidal_shape(*root, p);
    bool cusp = is_cuspidal_character(res.character, res.root, p);
    bool selfdual = bar_involution(res.character) == res.character;
    if (as_json) {
        json j = cuspidal_to_json(res);
        j["cuspidal"] = cusp;
        j["self_dual"] = selfdual;
        out << j.dump() << "\n";
    } else {
        out << "root: " << root_to_string(res.root) << "\n";
        out << "shape: " << shape_to_string(res.shape) << "\n";
        out << "shift: " << res.shift << "\n";
        out << render_shape(res.shape);
        out << "character:\n" << character_to_text(res.character);
        out << "cuspidal: " << (cusp ? "yes" : "NO") << "\n";
        out << "self-dual: " << (selfdual ? "yes" : "NO") << "\n";
    }
    return (cusp && selfdual) ? 0 : 1;
}

int run_table(int e, int max_height, bool as_json, std::ostream& out) {
    std::vector<CuspidalResult> table = cuspidal_table(Preorder::e_row(e), max_height);
    if (as_json) {
        json j = json::array();
        for (const CuspidalResult& r : table) j.push_back(cuspidal_to_json(r));
        out << j.dump() << "\n";
        return 0;
    }
    for (const CuspidalResult& r : table) {
        out << root_to_string(r.root) << " " << shape_to_string(r.shape) << " shift=" << r.shift
            << "\n";
    }
    return 0;
}

int run_preorder(int e, int max_height, std::ostream& out) {
    Preorder p = Preorder::e_row(e);
    std::vector<PositiveRoot> roots = positive_roots_up_to_height(max_height, e);
    std::stable_sort(roots.begin(), roots.end(),
                     [&](const PositiveRoot& a, const PositiveRoot& b) {
                         Cmp c = p.compare(a, b);
                         if (c != Cmp::Equiv) return c == Cmp::Greater;
                         return false;
                     });
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i > 0 && p.equiv(roots[i - 1], roots[i])) {
            out << " ~ " << root_to_string(roots[i]);
        } else {
            out << (i ? "\n" : "") << root_to_string(roots[i]);
        }
    }
    out << "\n";
    return 0;
}

int run_check(const std::string& suite, int e, int max_size, int max_height, std::ostream& out) {
    auto es = [&](std::vector<int> def) { return e ? std::vector<int>{e} : std::move(def); };
    auto size_or = [&](int def) { return max_size ? max_size : def; };
    auto height_or = [&](int def) { return max_height ? max_height : def; };

    const std::vector<std::pair<std::string, std::function<SweepResult()>>> suites = {
        {"garnir", [&] { return sweep_garnir(size_or(8), es({2, 3})); }},
        {"filtration", [&] { return sweep_filtration(size_or(6), es({2, 3})); }},
        {"join", [&] { return sweep_join(size_or(8), es({2, 3})); }},
        {"degmatch", [&] { return sweep_degmatch(size_or(8), es({2, 3})); }},
        {"minuscule", [&] { return sweep_minuscule(es({2, 3, 4, 5})); }},
        {"catalogue", [&] { return sweep_catalogue(2, es({2, 3})); }},
        {"cuspidality", [&] { return sweep_cuspidality(height_or(10), es({2, 3, 4})); }},
        {"minimal-pairs", [&] { return sweep_minimal_pairs(height_or(8), es({2, 3})); }},
        {"convexity", [&] { return sweep_convexity(height_or(12), es({2, 3, 4})); }},
        {"roundtrip", [&] { return sweep_roundtrip(size_or(5), es({2, 3})); }},
    };

    int rc = 0;
    bool matched = false;
    for (const auto& [name, runner] : suites) {
        if (suite != "all" && suite != name) continue;
        matched = true;
        SweepResult r = runner();
        out << r.name << ": " << (r.ok ? "PASS" : "FAIL") << " (" << r.cases << " cases)";
        if (!r.ok) out << " " << r.detail;
        out << "\n";
        if (!r.ok) rc = 1;
    }
    if (!matched) throw std::invalid_argument("unknown suite: '" + suite + "'");
    return rc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"graded Specht characters, Garnir sets, and cuspidal shapes for cyclic quivers"};
    app.require_subcommand(1);

    int e = 2;
    std::string charge, outer, inner, alpha, node, root, suite("all"), preorder_name("erow");
    int max_height = 0, max_size = 0, check_e_flag = 0;
    bool as_json = false, with_tableaux = false, verify_set = false;

    auto add_shape_flags = [&](CLI::App* cmd, bool need_inner) {
        cmd->add_option("--e", e, "number of residues (at least 2)")->required();
        cmd->add_option("--charge", charge, "charge residues, comma separated")->required();
        cmd->add_option("--outer", outer, "outer partitions, components split by |")->required();
        auto* opt = cmd->add_option("--inner", inner, "inner partitions");
        if (need_inner) opt->required();
        cmd->add_flag("--json", as_json, "emit canonical JSON");
    };

    CLI::App* character = app.add_subcommand("character", "graded character of a Specht module");
    add_shape_flags(character, false);
    character->add_flag("--tableaux", with_tableaux, "also list the standard tableaux");

    CLI::App* restrict_cmd = app.add_subcommand("restrict", "split the character at a content");
    add_shape_flags(restrict_cmd, false);
    restrict_cmd->add_option("--alpha", alpha, "content of the left factor, comma separated")
        ->required();

    CLI::App* join = app.add_subcommand("join", "joinability data of a two-component shape");
    add_shape_flags(join, false);

    CLI::App* garnir = app.add_subcommand("garnir", "belt, bricks, and Garnir tableaux at a node");
    add_shape_flags(garnir, false);
    garnir->add_option("--node", node, "Garnir node as row,col[,component]")->required();
    garnir->add_flag("--verify-set", verify_set, "also verify the Bruhat description of the set");

    CLI::App* cuspidal = app.add_subcommand("cuspidal", "cuspidal shape and character of a root");
    cuspidal->add_option("--e", e, "number of residues")->required();
    cuspidal->add_option("--root", root, "root spelling, e.g. d+a1 or a1+a2 or 2d-a1..a2")
        ->required();
    cuspidal->add_option("--preorder", preorder_name, "convex preorder (erow)")
        ->check(CLI::IsMember({"erow"}));
    cuspidal->add_flag("--json", as_json, "emit canonical JSON");

    CLI::App* table = app.add_subcommand("table", "cuspidal catalogue up to a height");
    table->add_option("--e", e, "number of residues")->required();
    table->add_option("--max-height", max_height, "height bound (default 8)");
    table->add_option("--preorder", preorder_name, "convex preorder (erow)")
        ->check(CLI::IsMember({"erow"}));
    table->add_flag("--json", as_json, "emit canonical JSON");

    CLI::App* preorder = app.add_subcommand("preorder", "list roots from greatest to least");
    preorder->add_option("--e", e, "number of residues")->required();
    preorder->add_option("--max-height", max_height, "height bound (default 8)");

    CLI::App* check = app.add_subcommand("check", "verification sweeps");
    check->add_option("--suite", suite,
                      "garnir|filtration|join|degmatch|minuscule|catalogue|cuspidality|"
                      "minimal-pairs|convexity|roundtrip|all");
    check->add_option("--e", check_e_flag, "restrict the sweep to one e");
    check->add_option("--max-size", max_size, "node bound override");
    check->add_option("--max-height", max_height, "height bound override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& pe) {
        int rc = app.exit(pe, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (character->parsed()) {
            return run_character(shape_from_flags(e, charge, outer, inner), as_json, with_tableaux,
                                 out);
        }
        if (restrict_cmd->parsed()) {
            return run_restrict(shape_from_flags(e, charge, outer, inner), alpha, as_json, out);
        }
        if (join->parsed()) {
            return run_join(shape_from_flags(e, charge, outer, inner), as_json, out);
        }
        if (garnir->parsed()) {
            return run_garnir(shape_from_flags(e, charge, outer, inner), node, verify_set, as_json,
                              out);
        }
        if (cuspidal->parsed()) return run_cuspidal(e, root, as_json, out);
        if (table->parsed()) return run_table(e, max_height ? max_height : 8, as_json, out);
        if (preorder->parsed()) return run_preorder(e, max_height ? max_height : 8, out);
        if (check->parsed()) return run_check(suite, check_e_flag, max_size, max_height, out);
    } catch (const std::invalid_argument& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::logic_error& ex) {
        err << "internal check failed: " << ex.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace specht::cli
