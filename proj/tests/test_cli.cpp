// End-to-end checks of the command line tool: exit codes, output
// determinism, and file artifacts. Runs the installed binary as a
// subprocess.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const std::string cli = POLYCONF_CLI_PATH;

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("polyconf_cli_" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path out_file = scratch() / "stdout.txt";
    std::string cmd = cli + " " + args + " > " + out_file.string() + " 2> /dev/null";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return {code, os.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("scan --config builtin:golden").code == 2);          // missing region
    CHECK(run("frobnicate --config builtin:golden").code == 2);    // unknown subcommand
    CHECK(run("verify --poly x-1 --config missing.json --region -4..4").code == 2);
    CHECK(run("scan --config builtin:golden --region -8..8").code == 2);  // missing --max
}

TEST_CASE("cli: examples materialize configurations and shapes") {
    auto r = run("examples --name golden");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"manifest\"") != std::string::npos);
    CHECK(r.out.find("\"beatty\"") != std::string::npos);

    auto shape = run("examples --name tshape");
    CHECK(shape.code == 0);
    CHECK(shape.out.find("\"cells\"") != std::string::npos);

    auto ascii = run("examples --name golden --window -10..10");
    CHECK(ascii.code == 0);
    CHECK(ascii.out.rfind("# manifest:", 0) == 0);
    CHECK(ascii.out.find("#") != std::string::npos);

    CHECK(run("examples --name martian").code == 2);
}

TEST_CASE("cli: golden window render matches the frozen grid") {
    // frozen from the defining Beatty floors and cross-checked independently
    auto r = run("render --config builtin:golden --region 0..7 --format ascii");
    CHECK(r.code == 0);
    const std::string grid =
        "...#..#.\n"
        ".#.##.##\n"
        "........\n"
        ".#.#..#.\n"
        ".####.##\n"
        "...#....\n"
        ".#.##.#.\n"
        "........\n";
    CHECK(r.out.substr(r.out.size() - grid.size()) == grid);
}

TEST_CASE("cli: outputs are byte-identical across runs") {
    auto a = run("examples --name golden --window -14..14");
    auto b = run("examples --name golden --window -14..14");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto s1 = run("scan --config builtin:golden --max 3 --region -16..16 --format json");
    auto s2 = run("scan --config builtin:golden --max 3 --region -16..16 --format json");
    CHECK(s1.code == 0);
    CHECK(s1.out == s2.out);
}

TEST_CASE("cli: verify exit codes reflect verdicts") {
    // a doubly periodic configuration built as row part + column part is
    // annihilated by (x-1)(y-1) at the proven tier
    fs::path p22 = scratch() / "periodic22.json";
    spit(p22, R"({"dim":2,"type":"full_periodic","basis":[[2,0],[0,2]],"values":[0,1,2,3]})");
    auto ok = run("verify --poly \"(x-1)*(y-1)\" --config " + p22.string() + " --region -6..6");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("proven_zero") != std::string::npos);
    CHECK(ok.out.find("full_lattice_periodic") != std::string::npos);

    auto fail = run("verify --poly \"x-1\" --config builtin:golden --region -10..10");
    CHECK(fail.code == 1);
    CHECK(fail.out.find("nonzero_at") != std::string::npos);

    auto evidence =
        run("verify --poly \"(x-1)*(y-1)*(x*y^-1-1)\" --config builtin:golden --region -12..12");
    CHECK(evidence.code == 0);
    CHECK(evidence.out.find("zero_on_region") != std::string::npos);
}

TEST_CASE("cli: annihilate reports results or inconclusive budgets") {
    auto found = run("annihilate --config builtin:golden --region -16..16 --max-norm 2 --max-factors 3");
    CHECK(found.code == 0);
    CHECK(found.out.find("\"factors\": 3") != std::string::npos);

    auto nothing = run("annihilate --config builtin:golden --region -16..16 --max-norm 1 --max-factors 2");
    CHECK(nothing.code == 3);

    auto kernel = run("annihilate --config builtin:golden --region -20..20 --shape-box 0..2,0..2");
    CHECK(kernel.code == 0);
    CHECK(kernel.out.find("\"g\"") != std::string::npos);
}

TEST_CASE("cli: scan writes TSV files with a manifest header") {
    fs::path out = scratch() / "scan.tsv";
    auto r = run("scan --config builtin:golden --max 2 --region -12..12 --out " + out.string());
    CHECK(r.code == 0);
    auto text = slurp(out);
    CHECK(text.rfind("# manifest:", 0) == 0);
    CHECK(text.find("m\tn\tcount\tmn\tflag\tverdict") != std::string::npos);
}

TEST_CASE("cli: decompose and classify round trips") {
    auto dec = run("decompose --config builtin:twolines3d --factor x-1 --factor z-1 --window -5..5");
    CHECK(dec.code == 0);
    CHECK(dec.out.find("\"residual_max_abs\": 0") != std::string::npos);

    auto bad = run("decompose --config builtin:golden --factor x-1 --window -5..5");
    CHECK(bad.code == 1);  // the factor does not annihilate

    auto cls = run("classify --config builtin:golden --region -20..20 --max-norm 2 --max-factors 3 --bound 3");
    CHECK(cls.code == 0);
    CHECK(cls.out.find("non_periodic_evidence") != std::string::npos);

    auto none = run("classify --config builtin:golden --region -16..16 --max-norm 1 --max-factors 1 --bound 2");
    CHECK(none.code == 3);
}

TEST_CASE("cli: tile verdicts") {
    auto good = run("tile --tile '{\"dim\":1,\"cells\":[[0],[1],[2]]}' --cotiler '{\"dim\":1,\"basis\":[[3]]}'");
    CHECK(good.code == 0);
    CHECK(good.out.find("\"prime_periods\"") != std::string::npos);

    auto bad = run("tile --tile '{\"dim\":1,\"cells\":[[0],[1]]}' --cotiler '{\"dim\":1,\"basis\":[[3]]}'");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("\"cover_count\"") != std::string::npos);
}

TEST_CASE("cli: ppm render writes the image and its sidecar") {
    fs::path img = scratch() / "golden.ppm";
    auto r = run("render --config builtin:golden --region -10..10 --format ppm --out " + img.string());
    CHECK(r.code == 0);
    auto bytes = slurp(img);
    CHECK(bytes.rfind("P6\n21 21\n255\n", 0) == 0);
    CHECK(bytes.size() == 13 + 21 * 21 * 3);
    auto sidecar = slurp(img.string() + ".json");
    CHECK(sidecar.find("\"manifest\"") != std::string::npos);
    CHECK(sidecar.find("\"scale\"") != std::string::npos);

    auto r2 = run("render --config builtin:golden --region -10..10 --format ppm --out " + img.string());
    CHECK(r2.code == 0);
    CHECK(slurp(img) == bytes);
}
