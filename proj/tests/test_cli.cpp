#include <fstream>
#include <sstream>

#include "cat2vect/catfile.hpp"
#include "cat2vect/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cat2vect;
using ordered_json = nlohmann::ordered_json;

TEST_SUITE_BEGIN("cli");

namespace {

const std::string kData = CAT2VECT_DATA_DIR;

std::pair<int, ordered_json> run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    int code = cli::run(args, out);
    return {code, ordered_json::parse(out.str())};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bundled category files parse, validate and round-trip byte-identically") {
    for (const char* name : {"z2.cat", "z3.cat", "s3.cat", "discrete3.cat", "groupoid2_z2.cat"}) {
        std::string text = slurp(kData + "/" + name);
        FinCategory c = parse_category_file(text);
        CHECK(serialize_category(c) == text);
    }
}

TEST_CASE("gl2 subcommand reproduces the closed-form counts") {
    auto [code, rep] = run_cli({"gl2", "--group", kData + "/z2.cat", "--n", "1", "--field", "Fp:7"});
    CHECK(code == 0);
    CHECK(rep["results"]["pi0_order"] == 2);
    CHECK(rep["results"]["pi1_order"] == 36);
    CHECK(rep["results"]["split"] == true);
    CHECK(rep["verification"]["section_verified"] == true);
}

TEST_CASE("gl2 with the oracle cross-check") {
    auto [code, rep] =
        run_cli({"gl2", "--group", kData + "/z2.cat", "--n", "1", "--field", "Fp:3", "--oracle"});
    CHECK(code == 0);
    CHECK(rep["results"]["oracle"]["pi0"] == 2);
    CHECK(rep["results"]["oracle"]["pi1"] == 4);
    CHECK(rep["verification"]["oracle_pi0_matches"] == true);
    CHECK(rep["verification"]["oracle_pi1_matches"] == true);
}

TEST_CASE("kernel subcommand matches the no-kernel example") {
    auto [code, rep] =
        run_cli({"kernel", "--monoid", kData + "/z2.cat", "--elem", "(+)-(-)", "--field", "Fp:7"});
    CHECK(code == 0);
    CHECK(rep["results"]["kernel"] == false);
    auto [code2, rep2] =
        run_cli({"kernel", "--monoid", kData + "/z2.cat", "--elem", "2*(+)", "--field", "Q"});
    CHECK(code2 == 0);
    CHECK(rep2["results"]["kernel"] == true);
}

TEST_CASE("validate rejects a broken table with exit 1") {
    auto [code, rep] = run_cli({"validate", kData + "/broken.cat"});
    CHECK(code == 1);
    CHECK(rep["error"]["code"] == "AssociativityViolation");
}

TEST_CASE("unknown flags and missing files are usage errors") {
    auto [code, rep] = run_cli({"validate", kData + "/does_not_exist.cat"});
    CHECK(code == 1);
    CHECK(rep["error"]["code"] == "UsageError");
    auto [code2, rep2] = run_cli({"gl2", "--group", kData + "/z2.cat"});
    CHECK(code2 == 1);  // missing --n
    CHECK(rep2["error"]["code"] == "UsageError");
}

TEST_CASE("same seed gives identical reports modulo timing") {
    auto strip = [](ordered_json j) {
        j.erase("timing_ms");
        return j;
    };
    auto a = run_cli({"wedderburn", "--group", kData + "/s3.cat", "--seed", "9"});
    auto b = run_cli({"wedderburn", "--group", kData + "/s3.cat", "--seed", "9"});
    CHECK(a.first == 0);
    CHECK(strip(a.second) == strip(b.second));
}

TEST_CASE("iso subcommand emits a verified witness") {
    auto [code, rep] = run_cli({"iso", "--cat", kData + "/groupoid2_z2.cat", "--src",
                                "c0.*,c1.*", "--tgt", "c1.*,c0.*", "--field", "Fp:3"});
    CHECK(code == 0);
    CHECK(rep["results"]["status"] == "iso");
    CHECK(rep["verification"]["witness_invertible"] == true);
    auto [code2, rep2] = run_cli({"iso", "--cat", kData + "/z2.cat", "--src", "*,*", "--tgt", "*",
                                  "--field", "Fp:3"});
    CHECK(code2 == 0);
    CHECK(rep2["results"]["status"] == "not_iso");
}

TEST_CASE("matrix morphism files round-trip through compose") {
    FinCategory c = parse_category_file(slurp(kData + "/z2.cat"));
    VectC v(c, FieldSpec::prime(7));
    MatMorph m = v.zero_morph(v.seq({0, 0}), v.seq({0}));
    m.cells[0][0] = v.kcat().parse("2*(+)");
    m.cells[0][1] = v.kcat().parse("(-)");
    std::string text = serialize_matmorph(v, m);
    CHECK(parse_matmorph(v, text) == m);
    CHECK(serialize_matmorph(v, parse_matmorph(v, text)) == text);
}

TEST_CASE("basis subcommand rejects mixed unions via exit 1") {
    // build a mixed union on the fly
    FinCategory mixed = FinCategory::disjoint_union({FinCategory::group_cat(GroupTable::cyclic(2)),
                                                     FinCategory::group_cat(GroupTable::cyclic(3))});
    std::string path = "/tmp/cat2vect_mixed.cat";
    write_category_file(path, mixed);
    auto [code, rep] = run_cli({"basis", "--cat", path});
    CHECK(code == 1);
    CHECK(rep["error"]["code"] == "NotHomogeneous");
    auto [code2, rep2] = run_cli({"basis", "--cat", kData + "/groupoid2_z2.cat"});
    CHECK(code2 == 0);
    CHECK(rep2["results"]["rank"] == 2);
}

TEST_CASE("structconst subcommand verifies the axioms") {
    auto [code, rep] = run_cli({"structconst", "--cat", kData + "/s3.cat", "--field", "Fp:7"});
    CHECK(code == 0);
    CHECK(rep["verification"]["axioms"] == true);
    CHECK(rep["results"]["rank"] == 1);
}

TEST_CASE("weyl and yoneda subcommands") {
    auto [code, rep] = run_cli({"weyl", "--cat", kData + "/discrete3.cat", "--field", "Fp:3"});
    CHECK(code == 0);
    CHECK(rep["results"]["weyl_pi0"] == 6);
    CHECK(rep["results"]["gl_pi1"] == 8);
    CHECK(rep["results"]["full"] == false);

    auto [code2, rep2] = run_cli({"yoneda", "--cat", kData + "/z2.cat", "--field", "Fp:3"});
    CHECK(code2 == 0);
    CHECK(rep2["verification"]["dimensions_match"] == true);
}

TEST_CASE("compose subcommand multiplies matrix files") {
    FinCategory c = parse_category_file(slurp(kData + "/z2.cat"));
    VectC v(c, FieldSpec::prime(7));
    MatMorph row = v.zero_morph(v.seq({0, 0}), v.seq({0}));
    row.cells[0][0] = v.kcat().parse("(+)");
    row.cells[0][1] = v.kcat().parse("(-)");
    MatMorph col = v.zero_morph(v.seq({0}), v.seq({0, 0}));
    col.cells[0][0] = v.kcat().parse("(+)");
    col.cells[1][0] = v.kcat().parse("(-)");
    std::ofstream("/tmp/cat2vect_row.mat") << serialize_matmorph(v, row);
    std::ofstream("/tmp/cat2vect_col.mat") << serialize_matmorph(v, col);
    auto [code, rep] = run_cli({"compose", "--cat", kData + "/z2.cat", "--lhs",
                                "/tmp/cat2vect_row.mat", "--rhs", "/tmp/cat2vect_col.mat",
                                "--field", "Fp:7"});
    CHECK(code == 0);
    CHECK(rep["results"]["composite"]["cells"][0][0]["(+)"] == "2");
}

TEST_CASE("indecomposable and out subcommands") {
    auto [code, rep] = run_cli({"indecomposable", "--cat", kData + "/s3.cat"});
    CHECK(code == 0);
    CHECK(rep["results"]["objects"][0]["verdict"] == "indecomposable");

    auto [code2, rep2] = run_cli({"out", "--group", kData + "/s3.cat"});
    CHECK(code2 == 0);
    CHECK(rep2["results"]["out_order"] == 2);
    CHECK(rep2["verification"]["section_is_homomorphism"] == true);
}

TEST_CASE("cocycle subcommand, canonical and bad representatives") {
    auto [code, rep] = run_cli({"cocycle", "--group", kData + "/z2.cat", "--n", "1", "--field", "Fp:3"});
    CHECK(code == 0);
    CHECK(rep["results"]["identity_valued"] == true);
    CHECK(rep["verification"]["normalized"] == true);
    CHECK(rep["verification"]["cocycle_identity"] == true);
    CHECK(rep["verification"]["cohomologically_trivial"] == true);

    auto [code2, rep2] = run_cli({"cocycle", "--group", kData + "/z2.cat", "--n", "1", "--field",
                                  "Fp:3", "--bad-reps"});
    CHECK(code2 == 0);
    CHECK(rep2["verification"]["cocycle_identity"] == true);
    CHECK(rep2["verification"]["cohomologically_trivial"] == true);
}

TEST_SUITE_END();
