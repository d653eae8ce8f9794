#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef KK_CLI_PATH
#error "KK_CLI_PATH must point at the kk binary"
#endif

namespace {

struct TempDir {
    std::string path;
    TempDir() {
        char tmpl[] = "/tmp/kk-cli-test-XXXXXX";
        path = mkdtemp(tmpl);
    }
    ~TempDir() {
        std::string cmd = "rm -rf '" + path + "'";
        if (std::system(cmd.c_str()) != 0) { /* best effort */ }
    }
    std::string file(const std::string& name) const { return path + "/" + name; }
};

int run(const std::string& args) {
    std::string cmd = std::string(KK_CLI_PATH) + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("demo: consistent signal exits 0 and reports are byte-deterministic") {
    TempDir dir;
    std::string base = "demo --signal exp-decay --param alpha=1 "
                       "--grid -50:50:256 --engine pv --report " +
                       dir.file("r1.json") + " --plot " + dir.file("p1.csv");
    CHECK(run(base) == 0);
    std::string rep1 = slurp(dir.file("r1.json"));
    CHECK(contains(rep1, "\"verdict\": \"Consistent\""));
    CHECK(contains(rep1, "\"tool_version\": \"0.1.0\""));
    CHECK(contains(rep1, "\"subcommand\": \"demo\""));

    std::string again = "demo --signal exp-decay --param alpha=1 "
                        "--grid -50:50:256 --engine pv --report " +
                        dir.file("r2.json") + " --plot " + dir.file("p2.csv");
    CHECK(run(again) == 0);
    CHECK(rep1 == slurp(dir.file("r2.json")));
    CHECK(slurp(dir.file("p1.csv")) == slurp(dir.file("p2.csv")));

    std::string header = slurp(dir.file("p1.csv")).substr(0, 60);
    CHECK(contains(header,
                   "omega,re_given,im_given,re_reconstructed,im_reconstructed"));
}

TEST_CASE("demo: negative control exits 2; malformed grid exits 1") {
    TempDir dir;
    CHECK(run("demo --signal constant --grid -50:50:256 --engine spectral "
              "--report " +
              dir.file("c.json")) == 2);
    CHECK(contains(slurp(dir.file("c.json")), "\"verdict\": \"Inconsistent\""));

    CHECK(run("demo --signal exp-decay --grid a:b --report " +
              dir.file("x.json")) == 1);
    CHECK(run("demo --signal no-such-signal --grid -50:50:256 --report " +
              dir.file("y.json")) == 1);
}

TEST_CASE("classify: verdict JSON and exit codes") {
    TempDir dir;
    CHECK(run("classify --signal inv-t-tail --out " + dir.file("t.json")) == 0);
    std::string t = slurp(dir.file("t.json"));
    CHECK(contains(t, "\"l1\": \"No\""));
    CHECK(contains(t, "\"l2\": \"Yes\""));
    CHECK(contains(t, "\"verdict\": \"Match\""));

    CHECK(run("classify --signal inv-sqrt-pulse --out " + dir.file("s.json")) ==
          0);
    std::string s = slurp(dir.file("s.json"));
    CHECK(contains(s, "\"l1\": \"Yes\""));
    CHECK(contains(s, "\"l2\": \"No\""));

    CHECK(run("classify --signal exp-decay --out " + dir.file("e.json")) == 0);
    CHECK(run("classify --signal nope --out " + dir.file("n.json")) == 1);
}

TEST_CASE("contour: closure, JSON breakdown, geometry violations") {
    TempDir dir;
    CHECK(run("contour --signal exp-decay --omega 2 --radius 100 "
              "--epsilon 1e-3 --out " +
              dir.file("c.json")) == 0);
    std::string c = slurp(dir.file("c.json"));
    CHECK(contains(c, "\"segment_lower\""));
    CHECK(contains(c, "\"verdict\": \"Closed\""));
    double abs_total = -1.0;
    auto pos = c.find("\"abs_total\": ");
    REQUIRE(pos != std::string::npos);
    abs_total = std::strtod(c.c_str() + pos + 13, nullptr);
    CHECK(abs_total < 1e-6);

    CHECK(run("contour --signal exp-decay --omega 2 --radius 100 "
              "--epsilon 200 --out " +
              dir.file("bad.json")) == 1);
    CHECK(run("contour --signal damped-oscillator --omega 0 --radius 100 "
              "--epsilon 1e-3 --out " +
              dir.file("d.json")) == 0);
    CHECK(run("contour --signal heaviside --omega 1 --radius 100 "
              "--epsilon 1e-3 --out " +
              dir.file("h.json")) == 1);  // not L1
}

TEST_CASE("check: round-trips the demo plot CSV") {
    TempDir dir;
    REQUIRE(run("demo --signal exp-decay --grid -50:50:512 --engine pv "
                "--report " +
                dir.file("demo.json") + " --plot " + dir.file("demo.csv")) ==
            0);
    CHECK(run("check --input " + dir.file("demo.csv") +
              " --columns omega,re_given,im_given --grid -40:40:256 "
              "--engine pv --report " +
              dir.file("check.json")) == 0);
    CHECK(contains(slurp(dir.file("check.json")),
                   "\"verdict\": \"Consistent\""));
    CHECK(contains(slurp(dir.file("check.json")),
                   "requested grid is narrower"));

    // a grid wider than the data cannot be resampled
    CHECK(run("check --input " + dir.file("demo.csv") +
              " --columns omega,re_given,im_given --grid -60:60:256 "
              "--engine pv --report " +
              dir.file("wide.json")) == 1);
}

TEST_CASE("check: zeroed imaginary column is Inconsistent") {
    TempDir dir;
    std::ofstream csv(dir.file("in.csv"));
    csv << "# synthetic spectrum with the imaginary part removed\n";
    csv << "omega,re,im\n";
    for (int i = 0; i < 201; ++i) {
        double w = -50.0 + 100.0 * i / 200.0;
        csv << w << "," << 1.0 / (1.0 + w * w) << ",0\n";
    }
    csv.close();
    CHECK(run("check --input " + dir.file("in.csv") +
              " --grid -40:40:256 --engine spectral --report " +
              dir.file("r.json")) == 2);
    CHECK(contains(slurp(dir.file("r.json")), "\"verdict\": \"Inconsistent\""));
}

TEST_CASE("check: parse errors exit 1") {
    TempDir dir;
    { std::ofstream f(dir.file("empty.csv")); }
    CHECK(run("check --input " + dir.file("empty.csv") +
              " --grid -40:40:256 --report " + dir.file("r.json")) == 1);

    std::ofstream bad(dir.file("bad.csv"));
    bad << "omega,re,im\n0,1,2\n-1,3,4\n";  // omega not increasing
    bad.close();
    CHECK(run("check --input " + dir.file("bad.csv") +
              " --grid -40:40:256 --report " + dir.file("r2.json")) == 1);

    CHECK(run("check --input " + dir.file("missing.csv") +
              " --grid -40:40:256 --report " + dir.file("r3.json")) == 1);
}

}  // TEST_SUITE
