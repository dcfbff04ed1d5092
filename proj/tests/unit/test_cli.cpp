#include <doctest.h>

#include "hessen/cli.hpp"
#include "hessen/io.hpp"
#include "support/test_support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace hessen;
using namespace hessen::testing;
using hessen::io::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("hessen_cli_test_" + std::to_string(::getpid()) + "_"
                                             + std::to_string(counter++) + ".json");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { fs::remove(path_); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    [[nodiscard]] std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

std::string identity_json(std::size_t n) {
    return io::to_json(HessenbergMatrix<Q>::identity(n)).dump();
}

} // namespace

TEST_CASE("det") {
    TempFile m(R"({"order": 2, "rows": [[1, 2], [3, 4]]})");
    for (const char* method : {"recurrence", "closed", "leibniz"}) {
        const auto r = run_cli({"det", m.path(), "--method", method});
        REQUIRE(r.code == 0);
        const auto doc = json::parse(r.out);
        CHECK(doc["backend"] == "exact");
        CHECK(doc["method"] == method);
        CHECK(doc["order"] == 2);
        CHECK(doc["value"] == json::array({-2, 1, 0, 1}));
    }
    const auto f = run_cli({"--backend", "float", "det", m.path(), "--method", "closed"});
    REQUIRE(f.code == 0);
    CHECK(json::parse(f.out)["value"] == json::array({-2.0, 0.0}));
}

TEST_CASE("det caps and errors") {
    TempFile id3(identity_json(3));
    CHECK(json::parse(run_cli({"det", id3.path(), "--method", "closed"}).out)["value"] == json::array({1, 1, 0, 1}));

    TempFile id30(identity_json(30));
    const auto closed = run_cli({"--backend", "float", "det", id30.path(), "--method", "closed"});
    CHECK(closed.code == 3);
    CHECK(closed.err.rfind("error:", 0) == 0);
    CHECK(run_cli({"det", id30.path(), "--method", "recurrence"}).code == 0);

    TempFile id11(identity_json(11));
    CHECK(run_cli({"det", id11.path(), "--method", "leibniz"}).code == 3);
    CHECK(run_cli({"--oracle-cap", "11", "det", id11.path(), "--method", "leibniz"}).code == 0);

    TempFile bad(R"({"order": 2, "rows": [[1, 2], [3]]})");
    const auto wrong = run_cli({"det", bad.path()});
    CHECK(wrong.code == 2);
    CHECK(wrong.err.rfind("error:", 0) == 0);
    CHECK(wrong.err.find('\n') == wrong.err.size() - 1);

    CHECK(run_cli({"det", "/nonexistent/matrix.json"}).code == 2);
    CHECK(run_cli({"det", id3.path(), "--method", "bogus"}).code == 2);
    CHECK(run_cli({"--threads", "0", "det", id3.path()}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("expand") {
    const auto r = run_cli({"expand", "--order", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "+h(1,2)h(2,3)h(3,1)\n-h(1,2)h(2,1)h(3,3)\n-h(1,1)h(2,3)h(3,2)\n+h(1,1)h(2,2)h(3,3)\n");
    CHECK(run_cli({"expand", "--order", "16", "--limit", "2"}).out
          == "-h(1,2)h(2,3)h(3,4)h(4,5)h(5,6)h(6,7)h(7,8)h(8,9)h(9,10)h(10,11)h(11,12)h(12,13)h(13,14)h(14,15)"
             "h(15,16)h(16,1)\n"
             "+h(1,2)h(2,3)h(3,4)h(4,5)h(5,6)h(6,7)h(7,8)h(8,9)h(9,10)h(10,11)h(11,12)h(12,13)h(13,14)h(14,15)"
             "h(15,1)h(16,16)\n");
    CHECK(run_cli({"expand", "--order", "17"}).code == 3);
    CHECK(run_cli({"expand", "--order", "0"}).code == 2);
}

TEST_CASE("sep") {
    const auto r = run_cli({"sep", "--order", "8", "--index", "81"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["bits"] == json::array({1, 0, 1, 0, 0, 0, 1, 1}));
    CHECK(doc["columns"] == json::array({1, 3, 2, 5, 6, 7, 4, 8}));
    CHECK(doc["sign"] == 1);
    CHECK(run_cli({"sep", "--order", "3", "--index", "4"}).code == 2);
    CHECK(run_cli({"sep", "--order", "3", "--index", "-1"}).code == 2);
}

TEST_CASE("gen and solve") {
    SUBCASE("constant alpha family is the first-order equation") {
        const auto r = run_cli({"gen", "--family", "constant", "--N", "1", "--horizon", "6", "--alpha", "-3/2"});
        REQUIRE(r.code == 0);
        CHECK(io::spec_from_json<Q>(json::parse(r.out)) == first_order_spec(rational(-3, 2), 6));

        TempFile spec(r.out);
        for (const char* method : {"ratio-recurrence", "ratio-closed", "reduced-recurrence", "reduced-closed", "forward"}) {
            const auto s = run_cli({"solve", spec.path(), "--init", "2", "--method", method, "--bundle"});
            REQUIRE(s.code == 0);
            const auto doc = json::parse(s.out);
            CHECK(doc["class"] == "n-order");
            CHECK(doc["N"] == 1);
            for (std::size_t n = 0; n <= 6; ++n) {
                CHECK(io::scalar_from_json<Q>(doc["y"][n]) == power(rational(-3, 2), n + 1) * rational(2));
                CHECK(io::scalar_from_json<Q>(doc["fundamentals"][0][n]) == power(rational(-3, 2), n + 1));
            }
        }
        CHECK(run_cli({"solve", spec.path(), "--init", "1,2"}).code == 2);
        CHECK(run_cli({"solve", spec.path(), "--init", "x"}).code == 2);
    }
    SUBCASE("random family is reproducible for a fixed seed") {
        const std::vector<std::string> args{"--seed", "42", "gen", "--family", "random", "--N", "2", "--horizon", "5"};
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        REQUIRE(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out != run_cli({"--seed", "43", "gen", "--family", "random", "--N", "2", "--horizon", "5"}).out);
        const auto spec = io::spec_from_json<Q>(json::parse(a.out));
        CHECK(spec.index_n() == 2);
        CHECK(spec.horizon() == 5);
    }
    SUBCASE("periodic family") {
        const auto r = run_cli({"gen", "--family", "periodic", "--N", "2", "--horizon", "8", "--period", "2"});
        REQUIRE(r.code == 0);
        const auto spec = io::spec_from_json<Q>(json::parse(r.out));
        for (std::size_t n = 0; n + 2 <= 8; ++n) {
            CHECK(spec.g(n + 2) == spec.g(n));
            for (std::size_t i = 0; i <= 2 + n; ++i) CHECK(spec.a(n + 2, i + 2) == spec.a(n, i));
        }
        TempFile file(r.out);
        const auto forward = json::parse(run_cli({"solve", file.path(), "--init", "1,-1", "--method", "forward"}).out);
        const auto closed =
            json::parse(run_cli({"solve", file.path(), "--init", "1,-1", "--method", "reduced-closed"}).out);
        CHECK(forward["y"] == closed["y"]);
    }
    SUBCASE("float backend") {
        const auto r = run_cli({"--backend", "float", "gen", "--family", "constant", "--N", "1", "--horizon", "4",
                                "--alpha", "0.5"});
        REQUIRE(r.code == 0);
        TempFile spec(r.out);
        const auto doc = json::parse(run_cli({"--backend", "float", "solve", spec.path(), "--init", "1"}).out);
        CHECK(doc["backend"] == "float");
        CHECK(doc["y"][3][0].get<double>() == doctest::Approx(0.0625));
    }
}

TEST_CASE("bench") {
    const auto r = run_cli({"bench", "--orders", "4", "--reps", "3"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "order,method,median_ns");
    CHECK(rows[1].rfind("4,recurrence,", 0) == 0);
    CHECK(rows[2].rfind("4,closed,", 0) == 0);
    CHECK(run_cli({"bench", "--orders", "40", "--methods", "closed"}).code == 3);
    CHECK(run_cli({"bench", "--orders", "4", "--methods", "nope"}).code == 2);
}

TEST_CASE("--out writes the file instead of stdout") {
    const auto path = (fs::temp_directory_path() / ("hessen_cli_out_" + std::to_string(::getpid()) + ".txt")).string();
    const auto r = run_cli({"--out", path, "expand", "--order", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == "-h(1,2)h(2,1)\n+h(1,1)h(2,2)\n");
    fs::remove(path);
}
