#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct run_result {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch_file(const std::string& tag) {
    static std::atomic<int> counter{0};
    return fs::temp_directory_path() /
           ("patternlab_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + "_" + tag);
}

/// Run the binary under test through the shell; args is everything after the
/// program name and may carry an environment prefix via env_prefix.
run_result run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* cli = std::getenv("PATTERNLAB_CLI");
    REQUIRE(cli != nullptr);
    const fs::path out_file = scratch_file("out.txt");
    const fs::path err_file = scratch_file("err.txt");
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" + cli + "\" " + args + " > \"" +
                      out_file.string() + "\" 2> \"" + err_file.string() + "\"";
    const int status = std::system(cmd.c_str());
    run_result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return r;
}

} // namespace

TEST_CASE("series text output is exact") {
    const run_result r = run_cli("series --family s3 --nmax 3");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "t^0: 1\n"
          "t^1: 1\n"
          "t^2: x1 + x2\n"
          "t^3: x1^3*x3 + x1^2*x2*x4 + x1*x2^2*x5 + x1*x2^2*x6 + x2^3*x7\n");
    CHECK(r.err.empty());
}

TEST_CASE("series json output parses and carries the family shape") {
    const run_result r = run_cli("series --family fh --nmax 4 --format json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["family"] == "fh");
    CHECK(j["vars"] == nlohmann::json({"x1", "x2"}));
    CHECK(j["entries"].size() == 5);
    CHECK(j["entries"][2]["n"] == 2);
    CHECK(j["entries"][2]["poly"]["arity"] == 2);
    CHECK(j["entries"][0]["poly"]["terms"][0]["c"] == "1");
}

TEST_CASE("table prints one entry") {
    const run_result fh3 = run_cli("table --family fh --n 3");
    CHECK(fh3.code == 0);
    CHECK(fh3.out == "x1^3 + x1^2*x2 + 2*x1*x2^2 + x2^3\n");

    const run_result grid = run_cli("table --family s4 --n 2 --i 1");
    CHECK(grid.code == 0);
    CHECK(grid.out == "1\n");

    const run_result row = run_cli("table --family dtable --n 3 --k 1");
    CHECK(row.code == 0);
    CHECK(row.out == "q^2\n");

    const run_result j = run_cli("table --family dtable --n 4 --k 2 --format json");
    CHECK(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["family"] == "dtable");
    CHECK(parsed["k"] == 2);
    CHECK(parsed["vars"] == nlohmann::json({"q", "x", "y"}));

    CHECK(run_cli("table --family fh --n 3 --i 1").code == 2);
    CHECK(run_cli("table --family s4 --n 2 --i 3").code == 2);
}

TEST_CASE("printed dtable recursion is exposed and marked") {
    // identical through n = 4, apart at n = 5 in the y bookkeeping
    const run_result same = run_cli("table --family dtable --n 4 --k 3 --printed");
    CHECK(same.code == 0);
    CHECK(same.out == run_cli("table --family dtable --n 4 --k 3").out);

    const run_result truth = run_cli("table --family dtable --n 5 --k 3");
    const run_result rec = run_cli("table --family dtable --n 5 --k 3 --printed");
    CHECK(truth.code == 0);
    CHECK(rec.code == 0);
    CHECK(truth.out != rec.out);

    const run_result j = run_cli("table --family dtable --n 5 --k 3 --printed --format json");
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["printed"] == true);

    const run_result s = run_cli("series --family dtable --nmax 2 --printed --format json");
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["family"] == "dtable_printed");

    CHECK(run_cli("table --family fh --n 3 --printed").code == 2);
    CHECK(run_cli("series --family s3 --nmax 3 --printed").code == 2);
}

TEST_CASE("bijection directions and stats") {
    const run_result fwd = run_cli("bijection --phi 867943251");
    CHECK(fwd.code == 0);
    CHECK(fwd.out == "DDRDDRRRDDRDRDRRDR ret=4 area=7 coarea=29\n");

    const run_result back = run_cli("bijection --phi-inv DDRDDRRRDDRDRDRRDR");
    CHECK(back.code == 0);
    CHECK(back.out == "867943251\n");

    const run_result psi_back = run_cli("bijection --psi-inv DDRDDRRRDDRDRDRRDR");
    CHECK(psi_back.code == 0);
    CHECK(psi_back.out == "869743251\n");

    const run_result jr = run_cli("bijection --psi 869743251 --format json");
    CHECK(jr.code == 0);
    const auto j = nlohmann::json::parse(jr.out);
    CHECK(j["direction"] == "psi");
    CHECK(j["perm"] == "869743251");
    CHECK(j["path"] == "DDRDDRRRDDRDRDRRDR");
    CHECK(j["ret"] == 4);
    CHECK(j["area"] == 7);
    CHECK(j["coarea"] == 29);
    CHECK(j["diag_peaks"]["0"] == 1);
    CHECK(j["diag_peaks"]["1"] == 4);
    CHECK(j["diag_peaks"]["2"] == 1);

    CHECK(run_cli("bijection --phi 867943251 --psi 123").code == 2);
    CHECK(run_cli("bijection").code == 2);
}

TEST_CASE("popularity formats") {
    const run_result csv = run_cli("popularity --pattern 12 --class 132 --nmax 4 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == "n,f\n0,0\n1,0\n2,1\n3,7\n4,37\n");

    const run_result text = run_cli("popularity --pattern 132 --class 123 --nmax 4");
    CHECK(text.code == 0);
    CHECK(text.out ==
          "pattern 132 over class 123 (chain from enumerated seed)\n"
          "t^0: 0\nt^1: 0\nt^2: 0\nt^3: 1\nt^4: 9\n");

    const run_result printed = run_cli("popularity --pattern 12 --class 123 --nmax 4 --printed --format json");
    CHECK(printed.code == 0);
    const auto j = nlohmann::json::parse(printed.out);
    CHECK(j["disputed"] == true);
    CHECK(j["coeffs"] == nlohmann::json({"0", "1", "4", "15", "56"}));

    // an arbitrary pattern falls back to enumeration
    const run_result any = run_cli("popularity --pattern 231 --class 132 --nmax 4 --format csv");
    CHECK(any.code == 0);
    CHECK(any.out.rfind("n,f\n0,0\n", 0) == 0);

    CHECK(run_cli("popularity --pattern 12 --class 132 --nmax 4 --printed").code == 2);
    CHECK(run_cli("popularity --pattern 12 --class 321 --nmax 4").code == 2);
}

TEST_CASE("check subcommand exit codes and verdict line") {
    const run_result fam = run_cli("check --family fh --nmax 7");
    CHECK(fam.code == 0);
    CHECK(fam.out.find("n=7: ok") != std::string::npos);
    const std::string verdict = "{\"family\":\"fh\",\"n\":7,\"equal\":true,\"first_mismatch\":null}\n";
    CHECK(fam.out.size() > verdict.size());
    CHECK(fam.out.compare(fam.out.size() - verdict.size(), verdict.size(), verdict) == 0);

    const run_result coeff = run_cli("check --coeff-equality --nmax 7 --jmax 4");
    CHECK(coeff.code == 0);
    CHECK(coeff.out.find("72 comparisons for hook lengths 2..4\n") != std::string::npos);
    CHECK(coeff.out.find("no mismatches\n") != std::string::npos);

    const run_result refine = run_cli("check --refinement --nmax 5 --format json");
    CHECK(refine.code == 0);
    const auto j = nlohmann::json::parse(refine.out);
    CHECK(j["equal"] == true);
    CHECK(j["first_mismatch"].is_null());

    CHECK(run_cli("check --family fh --coeff-equality --nmax 5").code == 2);
    CHECK(run_cli("check --nmax 5").code == 2);
}

TEST_CASE("observe subcommand") {
    const run_result r = run_cli("observe --nmax 6 --fib-nmax 6");
    CHECK(r.code == 0);
    CHECK(r.out.find("all observations hold\n") != std::string::npos);
    CHECK(r.out.find(" FAIL") == std::string::npos);
}

TEST_CASE("bad input exits 2 and names the offender") {
    const run_result bad_perm = run_cli("bijection --phi 19z");
    CHECK(bad_perm.code == 2);
    CHECK(bad_perm.err.find("error:") != std::string::npos);
    CHECK(bad_perm.err.find("'z'") != std::string::npos);

    const run_result not_avoiding = run_cli("bijection --phi 132");
    CHECK(not_avoiding.code == 2);
    CHECK(not_avoiding.err.find("contains 132") != std::string::npos);

    const run_result bad_path = run_cli("bijection --phi-inv DRXD");
    CHECK(bad_path.code == 2);
    CHECK(bad_path.err.find("'X'") != std::string::npos);

    CHECK(run_cli("series --family nope --nmax 3").code == 2);
    CHECK(run_cli("series --family s3 --nmax 3 --format yaml").code == 2);
    CHECK(run_cli("series --family s3").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("size caps") {
    const run_result capped = run_cli("series --family s3 --nmax 10");
    CHECK(capped.code == 2);
    CHECK(capped.err.find("exceeds the default cap 9") != std::string::npos);
    CHECK(capped.err.find("--force") != std::string::npos);

    const run_result forced = run_cli("popularity --pattern 12 --class 132 --nmax 11 --force --format csv");
    CHECK(forced.code == 0);
    CHECK(forced.err.find("warning:") != std::string::npos);
    CHECK(forced.out.rfind("n,f\n", 0) == 0);

    const run_result hard = run_cli("series --family fh --nmax 5", "PATTERNLAB_NMAX_HARD=4");
    CHECK(hard.code == 2);
    CHECK(hard.err.find("PATTERNLAB_NMAX_HARD=4") != std::string::npos);

    // the hard cap cannot be forced
    const run_result hard_forced = run_cli("series --family fh --nmax 5 --force", "PATTERNLAB_NMAX_HARD=4");
    CHECK(hard_forced.code == 2);
}

TEST_CASE("output redirection to a file") {
    const fs::path target = scratch_file("payload.txt");
    const run_result r = run_cli("series --family fh --nmax 2 --out \"" + target.string() + "\"");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(target) == "t^0: 1\nt^1: 1\nt^2: x1 + x2\n");
    fs::remove(target);

    CHECK(run_cli("series --family fh --nmax 2 --out /nonexistent_dir_zz/x.txt").code == 2);
}

TEST_CASE("thread fan-out does not change the bytes") {
    const run_result one = run_cli("series --family s3 --nmax 6 --threads 1");
    const run_result four = run_cli("series --family s3 --nmax 6 --threads 4");
    CHECK(one.code == 0);
    CHECK(four.code == 0);
    CHECK(one.out == four.out);
}
