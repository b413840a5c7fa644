#include "doctest.h"
#include "commands.hpp"
#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int rc = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<const char*> args) {
    args.insert(args.begin(), "specht");
    std::ostringstream out, err;
    CliResult r;
    r.rc = specht::cli::run(static_cast<int>(args.size()), args.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("cli character command") {
    CliResult r = run_cli({"character", "--e", "2", "--charge", "0", "--outer", "2,1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "(q+q^-1)*(0 1 1)\n");
    CHECK(r.err.empty());

    CliResult row = run_cli({"character", "--e", "2", "--charge", "0", "--outer", "2"});
    CHECK(row.rc == 0);
    CHECK(row.out == "q*(0 1)\n");

    CliResult j = run_cli({"character", "--e", "2", "--charge", "0", "--outer", "2,1", "--json"});
    CHECK(j.rc == 0);
    CHECK(j.out ==
          "{\"content\":[1,2],\"terms\":[{\"poly\":{\"-1\":1,\"1\":1},\"word\":[0,1,1]}]}\n");

    CliResult t =
        run_cli({"character", "--e", "2", "--charge", "0", "--outer", "2,1", "--tableaux"});
    CHECK(t.rc == 0);
    CHECK(t.out ==
          "(q+q^-1)*(0 1 1)\n"
          "1 2\n"
          "3\n"
          "degree=1 word=(0 1 1)\n"
          "1 3\n"
          "2\n"
          "degree=-1 word=(0 1 1)\n");
}

TEST_CASE("cli restrict command") {
    CliResult r = run_cli(
        {"restrict", "--e", "2", "--charge", "0", "--outer", "2,1", "--alpha", "1,1"});
    CHECK(r.rc == 0);
    CHECK(r.out == "(q+q^-1)*(0 1 | 1)\n");

    CliResult bad = run_cli(
        {"restrict", "--e", "2", "--charge", "0", "--outer", "2,1", "--alpha", "1,1,1"});
    CHECK(bad.rc == 2);
    CHECK(bad.err == "error: alpha needs one multiplicity per residue\n");
}

TEST_CASE("cli join command") {
    CliResult r = run_cli({"join", "--e", "3", "--charge", "2,1", "--outer", "1|1"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "joinable: yes\n"
          "above: outer=1,1;inner=;charge=2;e=3 shift=0\n"
          "right: outer=2;inner=;charge=1;e=3 shift=1\n"
          "product shift: 0\n"
          "identity: ok\n");

    CliResult no = run_cli({"join", "--e", "3", "--charge", "0,1", "--outer", "1|1"});
    CHECK(no.rc == 0);
    CHECK(no.out == "joinable: no\n");

    CliResult nj = run_cli({"join", "--e", "3", "--charge", "0,1", "--outer", "1|1", "--json"});
    CHECK(nj.rc == 0);
    CHECK(nj.out == "{\"joinable\":false}\n");
}

TEST_CASE("cli garnir command") {
    CliResult r = run_cli({"garnir", "--e", "2", "--charge", "1", "--outer", "11,10,7,2,2",
                           "--inner", "7,4,3,1", "--node", "2,6"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          ". . . . . . . o o o o\n"
          ". . . . o 2 2 3 3 *\n"
          ". . . * 1 1 o\n"
          ". o\n"
          "o o\n"
          "k=3 f=2 members=3\n"
          " .  .  .  .  .  .  .  1  2  3  4\n"
          " .  .  .  .  5  7  8  9 10 13\n"
          " .  .  .  6 11 12 14\n"
          " . 15\n"
          "16 17\n"
          "standard, degree=11\n"
          " .  .  .  .  .  .  .  1  2  3  4\n"
          " .  .  .  .  5  7  8 11 12 13\n"
          " .  .  .  6  9 10 14\n"
          " . 15\n"
          "16 17\n"
          "standard, degree=11\n"
          " .  .  .  .  .  .  .  1  2  3  4\n"
          " .  .  .  .  5  9 10 11 12 13\n"
          " .  .  .  6  7  8 14\n"
          " . 15\n"
          "16 17\n"
          "not standard (the Garnir tableau)\n"
          "degree lemma: ok\n");

    // byte-identical on a second run
    CliResult again = run_cli({"garnir", "--e", "2", "--charge", "1", "--outer", "11,10,7,2,2",
                               "--inner", "7,4,3,1", "--node", "2,6"});
    CHECK(again.out == r.out);

    CliResult j = run_cli({"garnir", "--e", "2", "--charge", "1", "--outer", "11,10,7,2,2",
                           "--inner", "7,4,3,1", "--node", "2,6", "--verify-set", "--json"});
    CHECK(j.rc == 0);
    nlohmann::json parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["f"] == 2);
    CHECK(parsed["degree_lemma"] == true);
    CHECK(parsed["set_description"] == true);
    CHECK(parsed["tableaux"].size() == 3);
}

TEST_CASE("cli cuspidal and table commands") {
    CliResult r = run_cli({"cuspidal", "--e", "3", "--root", "a1+a2"});
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "root: a1..a2\n"
          "shape: outer=1,1;inner=;charge=2;e=3\n"
          "shift: 0\n"
          "2\n"
          "1\n"
          "character:\n"
          "1*(2 1)\n"
          "cuspidal: yes\n"
          "self-dual: yes\n");

    CliResult t = run_cli({"table", "--e", "3", "--max-height", "2"});
    CHECK(t.rc == 0);
    CHECK(t.out ==
          "a1 outer=1;inner=;charge=1;e=3 shift=0\n"
          "a2 outer=1;inner=;charge=2;e=3 shift=0\n"
          "d-a1..a2 outer=1;inner=;charge=0;e=3 shift=0\n"
          "a1..a2 outer=1,1;inner=;charge=2;e=3 shift=0\n"
          "d-a1 outer=1,1;inner=;charge=0;e=3 shift=0\n"
          "d-a2 outer=2;inner=;charge=0;e=3 shift=0\n");
}

TEST_CASE("cli preorder and check commands") {
    CliResult r = run_cli({"preorder", "--e", "2", "--max-height", "4"});
    CHECK(r.rc == 0);
    CHECK(r.out == "a1\nd+a1\nd ~ 2d\n2d-a1\nd-a1\n");

    CliResult c = run_cli({"check", "--suite", "convexity", "--e", "2", "--max-height", "6"});
    CHECK(c.rc == 0);
    CHECK(c.out == "convexity: PASS (2 cases)\n");
}

TEST_CASE("cli error handling") {
    CliResult sub = run_cli({"bogus"});
    CHECK(sub.rc == 2);
    CHECK(sub.err.find("subcommand") != std::string::npos);

    CliResult missing = run_cli({"character", "--e", "2", "--charge", "0"});
    CHECK(missing.rc == 2);
    CHECK(missing.err.find("--outer") != std::string::npos);

    CliResult bad_e = run_cli({"character", "--e", "1", "--charge", "0", "--outer", "2"});
    CHECK(bad_e.rc == 2);
    CHECK(bad_e.err == "error: bad e '1'\n");

    CliResult bad_shape = run_cli({"character", "--e", "2", "--charge", "0", "--outer", "1,2"});
    CHECK(bad_shape.rc == 2);
    CHECK(bad_shape.err == "error: not weakly decreasing positive parts\n");

    CliResult imaginary = run_cli({"cuspidal", "--e", "2", "--root", "d"});
    CHECK(imaginary.rc == 2);
    CHECK(imaginary.err == "error: cuspidal: root must be real\n");

    CliResult bad_root = run_cli({"cuspidal", "--e", "2", "--root", "zzz"});
    CHECK(bad_root.rc == 2);
    CHECK(bad_root.err == "error: unrecognized root: 'zzz'\n");

    CliResult bad_suite = run_cli({"check", "--suite", "bogus"});
    CHECK(bad_suite.rc == 2);
    CHECK(bad_suite.err == "error: unknown suite: 'bogus'\n");

    CliResult help = run_cli({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("Subcommands") != std::string::npos);
    CHECK(help.err.empty());
}
