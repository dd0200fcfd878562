#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bgph/cli.hpp"
#include "bgph/distances.hpp"
#include "bgph/io.hpp"

using namespace bgph;
namespace fs = std::filesystem;

namespace {

struct temp_dir {
    fs::path path;
    temp_dir() {
        path = fs::temp_directory_path() / ("bgph_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~temp_dir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) {
        std::string p = (path / name).string();
        io::write_file(p, content);
        return p;
    }
    std::string name(const std::string& n) { return (path / n).string(); }
};

int run(std::vector<std::string> args, std::string* out = nullptr) {
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    int code = run_cli(args);
    std::cout.rdbuf(old);
    if (out) *out = captured.str();
    return code;
}

const char* kX1 = "0,0\n2,0\n0,4\n";
const char* kX2 = "0,0\n2,0\n1,3.872983346207417\n";

}  // namespace

TEST_CASE("barcode subcommand writes the expected document") {
    temp_dir tmp;
    auto in = tmp.file("x1.csv", kX1);
    auto out = tmp.name("x1.json");
    auto svg = tmp.name("x1.svg");
    CHECK(run({"barcode", "--input", in, "--mode", "phz", "--out", out, "--svg", svg}) == 0);

    auto doc = io::deserialize(io::read_file(out));
    CHECK(doc.bars.kind == grading_kind::bigraded);
    CHECK(doc.bars.bars.size() == 6);
    CHECK(doc.bars.count_at({0, 0}, 100.0) == 1);  // the infinite bar
    CHECK(doc.bars.count_at({1, 2}, 1.0) == 3);
    CHECK(doc.bars.count_at({2, 3}, 1.0) == 2);
    CHECK(io::read_file(svg).substr(0, 4) == "<svg");

    // deterministic bytes for fixed input and config
    auto out2 = tmp.name("x1_again.json");
    CHECK(run({"barcode", "--input", in, "--mode", "phz", "--out", out2}) == 0);
    CHECK(io::read_file(out) == io::read_file(out2));
}

TEST_CASE("ph barcodes of the two clouds coincide, phz barcodes differ") {
    temp_dir tmp;
    auto a = tmp.file("x1.csv", kX1);
    auto b = tmp.file("x2.csv", kX2);
    auto ja = tmp.name("a.json"), jb = tmp.name("b.json");
    auto pa = tmp.name("pa.json"), pb = tmp.name("pb.json");
    REQUIRE(run({"barcode", "--input", a, "--mode", "phz", "--out", ja}) == 0);
    REQUIRE(run({"barcode", "--input", b, "--mode", "phz", "--out", jb}) == 0);
    REQUIRE(run({"barcode", "--input", a, "--mode", "ph", "--out", pa}) == 0);
    REQUIRE(run({"barcode", "--input", b, "--mode", "ph", "--out", pb}) == 0);

    std::string out;
    CHECK(run({"distance", "--a", pa, "--b", pb, "--kind", "bottleneck"}, &out) == 0);
    CHECK(std::stod(out) == 0.0);
    CHECK(run({"distance", "--a", ja, "--b", jb, "--kind", "bottleneck"}, &out) == 0);
    CHECK(std::stod(out) == doctest::Approx(2.0 * std::sqrt(5.0) - 4.0).epsilon(1e-12));
    CHECK(run({"distance", "--a", ja, "--b", jb, "--kind", "interleaving"}, &out) == 0);
    CHECK(std::stod(out) == doctest::Approx(2.0 * std::sqrt(5.0) - 4.0).epsilon(1e-12));

    // mixed gradings are refused
    CHECK(run({"distance", "--a", ja, "--b", pb}) == 1);
}

TEST_CASE("phhz barcodes from a geodesic distance matrix") {
    temp_dir tmp;
    auto g = tmp.file("wedge.csv",
                      "0,1,1,2,3,3,4\n"
                      "1,0,2,1,2,2,3\n"
                      "1,2,0,1,2,2,3\n"
                      "2,1,1,0,1,1,2\n"
                      "3,2,2,1,0,2,1\n"
                      "3,2,2,1,2,0,1\n"
                      "4,3,3,2,1,1,0\n");
    auto out = tmp.name("wedge.json");
    REQUIRE(run({"barcode", "--input", g, "--matrix", "--mode", "phhz", "--out", out}) == 0);
    auto doc = io::deserialize(io::read_file(out));
    REQUIRE(doc.bars.bars.size() == 2);
    CHECK(doc.bars.bars[0].grade == bigrade{0, 0});
    CHECK(doc.bars.bars[0].infinite());
    CHECK(doc.bars.bars[1].grade == bigrade{1, 2});
    CHECK(doc.bars.bars[1].birth == 0.0);
    CHECK(doc.bars.bars[1].death == 4.0);

    // a barcode compared against itself through the distance subcommand
    std::string out2;
    CHECK(run({"distance", "--a", out, "--b", out}, &out2) == 0);
    CHECK(std::stod(out2) == 0.0);
}

TEST_CASE("gh subcommand") {
    temp_dir tmp;
    auto a = tmp.file("x1.csv", kX1);
    std::string out;
    CHECK(run({"gh", "--a", a, "--b", a, "--mode", "exact"}, &out) == 0);
    CHECK(std::stod(out) == 0.0);

    // doubling leaves d_GH at zero
    auto d = tmp.file("x1d.csv", "0,0\n2,0\n0,4\n0,0\n");
    CHECK(run({"gh", "--a", a, "--b", d, "--mode", "exact"}, &out) == 0);
    CHECK(std::stod(out) == 0.0);

    CHECK(run({"gh", "--a", a, "--b", d, "--mode", "bijective"}) == 1);  // unequal size

    auto big = tmp.file("big.csv", "0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n");
    CHECK(run({"gh", "--a", big, "--b", big, "--mode", "exact"}) == 2);  // cap exceeded
}

TEST_CASE("stability subcommand reports PASS") {
    temp_dir tmp;
    auto a = tmp.file("x1.csv", kX1);
    auto b = tmp.file("x2.csv", kX2);
    std::string out;
    CHECK(run({"stability", "--a", a, "--b", b, "--mode", "phhz"}, &out) == 0);
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(run({"stability", "--a", a, "--b", b, "--mode", "phz"}, &out) == 0);
    CHECK(out.find("PASS") != std::string::npos);
    CHECK(run({"stability", "--a", a, "--b", a, "--mode", "phhz"}, &out) == 0);
}

TEST_CASE("betti subcommand") {
    temp_dir tmp;
    auto a = tmp.file("x1.csv", kX1);
    std::string out;
    CHECK(run({"betti", "--input", a, "--t", "2.0"}, &out) == 0);
    CHECK(out ==
          "i\\2j,0,2,4,6\n"
          "0,1,0,0,0\n"
          "-1,0,0,2,0\n"
          "-2,0,0,0,1\n");
}

TEST_CASE("selftest subcommand") {
    std::string out;
    CHECK(run({"selftest", "--seed", "7", "--trials", "3"}, &out) == 0);
    CHECK(out.find("all properties PASS") != std::string::npos);
}

TEST_CASE("usage and parse failures exit with 1") {
    temp_dir tmp;
    CHECK(run({"barcode", "--input", tmp.name("missing.csv")}) == 1);
    auto ragged = tmp.file("bad.csv", "1,2\n3\n");
    CHECK(run({"barcode", "--input", ragged}) == 1);
    auto a = tmp.file("x1.csv", kX1);
    CHECK(run({"barcode", "--input", a, "--mode", "nope"}) == 1);
    CHECK(run({"nonsense"}) == 1);
    // field must be prime
    CHECK(run({"barcode", "--input", a, "--field", "4"}) == 1);
    // matrix flag on a non-symmetric file
    auto asym = tmp.file("asym.csv", "0,1\n2,0\n");
    CHECK(run({"barcode", "--input", asym, "--matrix"}) == 1);
}

TEST_CASE("cap exceeded exits with 2") {
    temp_dir tmp;
    auto a = tmp.file("x1.csv", kX1);
    CHECK(run({"barcode", "--input", a, "--mode", "phz", "--cap", "2"}) == 2);
}
