// End-to-end checks of the command-line tool: exit codes, JSON output and
// error channels. Takes the binary path as its only argument.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "FAIL: " << what << "\n";
        ++g_failures;
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: edgering_cli_tests <path-to-edgering>\n";
        return 2;
    }
    g_cli = argv[1];

    const std::string dir = "/tmp/edgering_cli_tests";
    if (std::system(("mkdir -p " + dir).c_str()) != 0) {
        std::cerr << "cannot create " << dir << "\n";
        return 2;
    }

    write_file(dir + "/c4.txt", "# a square\n4\n1 2\n2 3\n3 4\n1 4\n");
    write_file(dir + "/disconnected.txt", "6\n1 2\n3 4\n5 6\n");
    write_file(dir + "/loop.txt", "3\n1 1\n");
    write_file(dir + "/big.txt", [] {
        std::string s = "20\n";
        for (int i = 1; i < 20; ++i) {
            s += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
        }
        s += "1 20\n";
        return s;
    }());

    {
        RunResult r = run("analyze " + dir + "/c4.txt");
        expect(r.exit_code == 0, "analyze C4 exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(!j.is_discarded(), "analyze C4 emits JSON");
        expect(j.at("classification").at("gorenstein") == true, "C4 is Gorenstein");
        expect(j.at("certificates").at("phi") == 1, "C4 has phi 1");
        expect(j.at("schema_version") == 1, "schema version present");
    }
    {
        RunResult r = run("analyze " + dir + "/disconnected.txt");
        expect(r.exit_code == 1, "disconnected input exits 1");
        expect(r.out.find("\"error\"") != std::string::npos, "error JSON on stderr");
        expect(r.out.find("connected") != std::string::npos, "error names the problem");
    }
    {
        RunResult r = run("analyze " + dir + "/loop.txt");
        expect(r.exit_code == 1, "loop input exits 1");
        expect(r.out.find("line 2") != std::string::npos, "error names the line");
    }
    {
        // A 20-vertex cycle is past the cone guard.
        RunResult r = run("analyze " + dir + "/big.txt");
        expect(r.exit_code == 2, "guard overflow exits 2");
        expect(r.out.find("\"type\":\"guard\"") != std::string::npos, "guard error type");
    }
    {
        RunResult r = run("analyze --family petersen");
        expect(r.exit_code == 0, "analyze --family petersen exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(j.at("hilbert").at("h_vector") ==
                   std::vector<std::int64_t>{1, 5, 15, 25, 5, 1},
               "petersen h-vector in JSON");
        expect(j.at("classification").at("almost_gorenstein") == true,
               "petersen almost Gorenstein in JSON");
    }
    {
        RunResult r = run("family gmnr 4 4 2 --oracle");
        expect(r.exit_code == 0, "family gmnr oracle exits 0");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(j.at("oracle").at("match") == true, "gmnr formula matches enumeration");
    }
    {
        RunResult r = run("family kmn 3 3 --oracle");
        auto j = nlohmann::json::parse(r.out, nullptr, false);
        expect(j.at("oracle").at("match") == true, "kmn formula matches enumeration");
    }
    {
        RunResult r = run("family gmnr 2 3 1");
        expect(r.exit_code == 1, "invalid gmnr parameters exit 1");
    }
    {
        RunResult r = run("family petersen --pretty");
        expect(r.exit_code == 0, "pretty output exits 0");
        expect(r.out.find("pseudo-gorenstein   yes") != std::string::npos,
               "pretty output formatted");
    }
    {
        RunResult r = run("family cycle 8 --max-dilate 10");
        expect(r.exit_code == 0, "--max-dilate accepted");
    }
    {
        RunResult r = run("analyze " + dir + "/c4.txt --json --pretty");
        expect(r.exit_code == 1, "--json with --pretty is rejected");
    }
    {
        RunResult r = run("explore --mode exhaustive --max-vertices 12");
        expect(r.exit_code == 2, "exhaustive mode beyond 8 vertices exits 2");
    }
    {
        RunResult a = run("explore --bipartite --max-vertices 7 --mode exhaustive");
        expect(a.exit_code == 0, "exhaustive explore exits 0");
        expect(a.out.find("\"violations\":0") != std::string::npos,
               "no violations under the bipartite exhaustive run");
        RunResult b = run("explore --samples 20 --seed 9 --max-vertices 8");
        RunResult b2 = run("explore --samples 20 --seed 9 --max-vertices 8");
        expect(b.out == b2.out, "seeded explore is byte-identical");
    }

    if (g_failures == 0) std::cout << "cli tests: all passed\n";
    return g_failures == 0 ? 0 : 1;
}
