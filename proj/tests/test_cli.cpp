#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

// Runs the tool named by GCCD_CLI (set by the test harness) and captures
// stdout; stderr is dropped since only the exit code and stdout are contract.
CliResult run_cli(const std::string& args) {
    const char* exe = std::getenv("GCCD_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "GCCD_CLI must point at the command-line binary");
    const std::string cmd = '"' + std::string(exe) + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int rc = pclose(pipe);
    result.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("gccd_cli_test_" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string file_arg(const std::string& name) { return (work_dir() / name).string(); }

std::vector<unsigned char> slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("encode then verify accepts") {
    const std::string wire = file_arg("landmark.gccd");
    const CliResult enc = run_cli("encode --bits 110 --out " + wire);
    REQUIRE(enc.code == 0);
    const json summary = json::parse(enc.out);
    CHECK(summary["order"] == 3);
    CHECK(summary["chromatic"] == 2);
    CHECK(summary["payload_bits"] == 3);
    CHECK(summary["mode"] == "zero");
    CHECK(slurp(wire).size() == 27);

    const CliResult v = run_cli("verify --in " + wire);
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["verdict"] == "accepted");
}

TEST_CASE("all payload spellings agree") {
    const std::string a = file_arg("spell_bits.gccd");
    const std::string b = file_arg("spell_hex.gccd");
    const std::string c = file_arg("spell_dec.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + a).code == 0);
    REQUIRE(run_cli("encode --hex 0x6 --bits-len 3 --out " + b).code == 0);
    REQUIRE(run_cli("encode --dec 6 --bits-len 3 --out " + c).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(c));
}

TEST_CASE("encoding is byte-for-byte repeatable") {
    const std::string a = file_arg("repeat_a.gccd");
    const std::string b = file_arg("repeat_b.gccd");
    const CliResult ra = run_cli("encode --bits 110100111010 --out " + a);
    const CliResult rb = run_cli("encode --bits 110100111010 --out " + b);
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("a corrupted wire file is rejected with the stage named") {
    const std::string wire = file_arg("to_corrupt.gccd");
    const std::string hit = file_arg("corrupted.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + wire).code == 0);

    const CliResult cor = run_cli("corrupt --in " + wire + " --flip 2 --out " + hit);
    REQUIRE(cor.code == 0);
    CHECK(json::parse(cor.out)["changed_positions"] == json::array({2}));

    const CliResult v = run_cli("verify --in " + hit);
    CHECK(v.code == 1);
    const json verdict = json::parse(v.out);
    CHECK(verdict["verdict"] == "error_detected");
    CHECK(verdict["stage"] == "improper_coloring");
}

TEST_CASE("the blind spot is reachable end to end") {
    const std::string wire = file_arg("blind.gccd");
    const std::string hit = file_arg("blind_hit.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + wire).code == 0);
    REQUIRE(run_cli("corrupt --in " + wire + " --flip 0 --out " + hit).code == 0);
    const CliResult v = run_cli("verify --in " + hit);
    CHECK(v.code == 0);  // 110 -> 010 is one of the two undetectable corruptions
    CHECK(json::parse(v.out)["verdict"] == "accepted");
}

TEST_CASE("random corruption needs its seed and stays reproducible") {
    const std::string wire = file_arg("rand_src.gccd");
    const std::string h1 = file_arg("rand_a.gccd");
    const std::string h2 = file_arg("rand_b.gccd");
    REQUIRE(run_cli("encode --bits 1010011 --out " + wire).code == 0);

    CHECK(run_cli("corrupt --in " + wire + " --random 2 --out " + h1).code == 2);
    CHECK(run_cli("corrupt --in " + wire + " --flip 1 --seed 5 --out " + h1).code == 2);
    CHECK(run_cli("corrupt --in " + wire + " --out " + h1).code == 2);

    REQUIRE(run_cli("corrupt --in " + wire + " --random 2 --seed 77 --out " + h1).code == 0);
    REQUIRE(run_cli("corrupt --in " + wire + " --random 2 --seed 77 --out " + h2).code == 0);
    CHECK(slurp(h1) == slurp(h2));
}

TEST_CASE("verify diagnoses garbage and truncation") {
    const std::string junk = file_arg("junk.bin");
    std::ofstream(junk, std::ios::binary) << "this is not a wire file";
    const CliResult v = run_cli("verify --in " + junk);
    CHECK(v.code == 2);
    const json verdict = json::parse(v.out);
    CHECK(verdict["verdict"] == "malformed");
    CHECK(verdict["error"] == "bad_magic");

    const std::string wire = file_arg("trunc_src.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + wire).code == 0);
    const auto bytes = slurp(wire);
    const std::string cut = file_arg("trunc.gccd");
    std::ofstream(cut, std::ios::binary)
        .write(reinterpret_cast<const char*>(bytes.data()), 19);
    const CliResult t = run_cli("verify --in " + cut);
    CHECK(t.code == 2);
    CHECK(json::parse(t.out)["error"] == "length_mismatch");

    CHECK(run_cli("verify --in " + file_arg("no_such_file.gccd")).code == 2);
}

TEST_CASE("pinned encoding raises the floor end to end") {
    const std::string wire = file_arg("pinned.gccd");
    const CliResult enc =
        run_cli("encode --bits 1 --mode pin --pin-size 3 --out " + wire);
    REQUIRE(enc.code == 0);
    const json summary = json::parse(enc.out);
    CHECK(summary["order"] == 5);
    CHECK(summary["chromatic"] == 3);
    CHECK(summary["pin_size"] == 3);
    CHECK(run_cli("verify --in " + wire).code == 0);
}

TEST_CASE("analysis of a vertex/color pair prints the pinned keys") {
    const CliResult r = run_cli("analyze --m 4 --n 2 --format json");
    REQUIRE(r.code == 0);
    const json expected = {{"gamma_total_exp", 6},
                           {"gamma_max_exp", 4},
                           {"y", 2},
                           {"p1", "2^-2"},
                           {"overhead", "3/2"}};
    CHECK(json::parse(r.out) == expected);
    CHECK(r.out.rfind("{\"gamma_total_exp\":", 0) == 0);
}

TEST_CASE("analysis of one partition") {
    const CliResult r = run_cli("analyze --partition 2,2 --format json");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["m"] == 4);
    CHECK(j["n"] == 2);
    CHECK(j["gamma_partition_exp"] == 4);
    CHECK(j["gamma_partition"] == "16");
    CHECK(run_cli("analyze --partition 2,2 --m 5 --format json").code == 2);
}

TEST_CASE("overhead table across a range") {
    const CliResult r = run_cli("analyze --m-range 3..6 --format json");
    REQUIRE(r.code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == json({{"m", 3}, {"payload_bits", 3}, {"check_symbols", 3}, {"ratio", "1"}}));
    CHECK(rows[2]["ratio"] == "2");
    CHECK(rows[3] == json({{"m", 6}, {"payload_bits", 15}, {"check_symbols", 6}, {"ratio", "5/2"}}));

    const CliResult csv = run_cli("analyze --m 64 --format csv");
    REQUIRE(csv.code == 0);
    CHECK(csv.out == "m,payload_bits,check_symbols,ratio\n64,2016,64,63/2\n");
}

TEST_CASE("census totals cover the graph space") {
    const CliResult r = run_cli("oracle --m 4 --format json");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["total"] == 64);
    REQUIRE(j["counts"].size() == 4);
    CHECK(j["counts"][0] == 1);  // only the edgeless graph needs one color
    CHECK(j["counts"][3] == 1);  // only the complete graph needs four

    const CliResult p = run_cli("oracle --m 4 --partition 2,2 --format json");
    CHECK(p.code == 0);
    const json pj = json::parse(p.out);
    CHECK(pj["enumerated"] == 16);
    CHECK(pj["match"] == true);
}

TEST_CASE("simulation via the command line") {
    const std::string wire = file_arg("sim.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + wire).code == 0);
    const std::string base = "simulate --in " + wire + " --trials 300 ";

    const CliResult det = run_cli(base + "--flip 2");
    REQUIRE(det.code == 0);
    const json dj = json::parse(det.out);
    CHECK(dj["trials"] == 300);
    CHECK(dj["detected_by_stage"]["improper_coloring"] == 300);
    CHECK(dj["undetected"] == 0);

    const CliResult rnd = run_cli(base + "--random 1 --seed 9");
    REQUIRE(rnd.code == 0);
    const json rj = json::parse(rnd.out);
    CHECK(rj["undetected"].get<int>() + rj["detected_by_stage"]["improper_coloring"].get<int>() ==
          300);
    CHECK(rj["accepted_identity"] == 0);
    CHECK(rj["p1_exact"] == "2^-1");

    const CliResult again = run_cli(base + "--random 1 --seed 9");
    CHECK(again.out == rnd.out);

    const CliResult rep = run_cli(base + "--seed 4 --format csv");
    REQUIRE(rep.code == 0);
    CHECK(rep.out.rfind("trials,malformed,improper_coloring,chromatic_drop,undetected,"
                        "accepted_identity,p_hat,stderr,p1_exact,bound_2_to_minus_y,"
                        "detection_exponent,model_mismatch\n",
                        0) == 0);
    CHECK(std::count(rep.out.begin(), rep.out.end(), '\n') == 2);
}

TEST_CASE("usage errors exit with the usage code") {
    const std::string wire = file_arg("usage.gccd");
    REQUIRE(run_cli("encode --bits 110 --out " + wire).code == 0);

    CHECK(run_cli("").code == 2);                                    // no subcommand
    CHECK(run_cli("frobnicate").code == 2);                          // unknown subcommand
    CHECK(run_cli("encode --out " + file_arg("x.gccd")).code == 2);  // no payload source
    CHECK(run_cli("encode --bits 110 --bits-len 3 --out " + file_arg("x.gccd")).code == 2);
    CHECK(run_cli("encode --hex 0x6 --out " + file_arg("x.gccd")).code == 2);
    CHECK(run_cli("encode --bits 2 --out " + file_arg("x.gccd")).code == 2);
    CHECK(run_cli("simulate --in " + wire + " --trials 10").code == 2);  // seedless replacement
    CHECK(run_cli("simulate --in " + wire + " --trials 10 --random 1").code == 2);
    CHECK(run_cli("simulate --in " + wire + " --trials 10 --flip 1 --seed 3").code == 2);
    CHECK(run_cli("simulate --in " + wire + " --seed 3").code == 2);  // --trials is required
    CHECK(run_cli("simulate --in " + wire + " --trials 0 --seed 3").code == 2);
    CHECK(run_cli("analyze").code == 2);
    CHECK(run_cli("analyze --n 2").code == 2);
    CHECK(run_cli("analyze --m-range 9..3").code == 2);
    CHECK(run_cli("oracle --partition 2,2").code == 2);  // oracle requires --m
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("encode --help").code == 0);

    // The flag list is closed: spelling variants or leftovers must not parse.
    CHECK(run_cli("simulate --in " + wire + " --trials 10 --seed 1 --eps 0.1").code == 2);
    CHECK(run_cli("simulate --in " + wire + " --trials 10 --seed 1 --exhaustive").code == 2);
}
