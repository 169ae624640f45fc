#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out, err;
    json doc() const { return json::parse(out); }
    json error() const { return json::parse(err); }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    auto dir = std::filesystem::temp_directory_path();
    auto out = dir / "ecpair_cli_test.out", err = dir / "ecpair_cli_test.err";
    std::string cmd = std::string(ECPAIR_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

} // namespace

TEST_CASE("pairing") {
    Run r = run("pairing --family E2x2@u=2,a=1 --points P,P");
    REQUIRE(r.code == 0);
    CHECK(r.doc()["value"] == json::parse(R"({"2": "1/2"})"));

    Run q = run("pairing --family E2x2@u=2,a=1 --points P,Q");
    CHECK(q.doc()["value"] == json::object());
    Run c = run("pairing --curve 0,-3,0,2,0 --points 0:0,2:0");
    CHECK(c.doc()["value"] == json::parse(R"({"2": "1/2"})"));
    Run e4 = run("pairing --family E4@t=2 --points 2P,P");
    CHECK(e4.doc()["value"] == json::parse(R"({"2": "1/2"})"));
}

TEST_CASE("tensor keys ascend numerically") {
    Run r = run("pairing --family E6x2@u=2 --points Q,Q");
    REQUIRE(r.code == 0);
    // insertion order survives parsing into an ordered object
    auto doc = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto& [k, v] : doc["value"].items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"3", "5", "7"});
}

TEST_CASE("classify") {
    Run r = run("classify --curve 0,1,1,0,0");
    REQUIRE(r.code == 0);
    json d = r.doc();
    CHECK(d["A"] == "0");
    CHECK(d["B"] == 1);
    CHECK(d["orbit"].is_null());

    Run b = run("classify --curve 0,-3,0,2,0");
    CHECK(b.doc()["A"] == "2x2");
    CHECK(b.doc()["B"] == 2);

    Run m = run("classify --family E8@t=9 --M 2");
    CHECK(m.doc()["membership"] == true);
    Run mv = run("classify --family E4x2@u=3 --Mvec 1,2,2");
    CHECK(mv.doc()["membership"] == false);
}

TEST_CASE("gram") {
    Run r = run("gram --curve 0,-3,0,2,0");
    REQUIRE(r.code == 0);
    CHECK(r.doc()["torsion"] == "2x2");
    CHECK(r.doc()["gram"].size() == 2);
}

TEST_CASE("verify-universal") {
    Run r = run("verify-universal --family E5 --samples 200 --height 40");
    REQUIRE(r.code == 0);
    CHECK(r.doc()["pass"] == true);
    CHECK(r.doc()["checked"] == 200);
    Run s = run("verify-universal --family E5 --samples 10 --height 40 --seed 9");
    Run t = run("verify-universal --family E5 --samples 10 --height 40 --seed 9");
    CHECK(s.out == t.out);
}

TEST_CASE("search") {
    Run r = run("search --family E7 --height 10");
    REQUIRE(r.code == 0);
    json d = r.doc();
    CHECK(d["family"] == "E7");
    CHECK(d["H"] == 10);
    REQUIRE(d["rows"].size() == 1);
    CHECK(d["rows"][0]["A"] == "7");
    CHECK(d["rows"][0]["B"] == 1);
    CHECK(d["rows"][0]["count"].get<long>() > 0);
    CHECK(d["rows"][0]["witness"]["curve"].size() == 5);
}

TEST_CASE("verify-qseries") {
    Run r = run("verify-qseries --id tu2 --precision 200");
    REQUIRE(r.code == 0);
    CHECK(r.doc()["pass"] == true);
    CHECK(r.doc()["mismatch"].is_null());
    Run bad = run("verify-qseries --id f11");
    CHECK(bad.code == 2);
    CHECK(bad.error()["error"]["kind"] == "UnsupportedCombination");
}

TEST_CASE("tate") {
    Run r = run("tate --p 3 --q 9 --m 2 --a 3 --b 3");
    REQUIRE(r.code == 0);
    json d = r.doc();
    CHECK(d["s_a"] == 1);
    CHECK(d["s_b"] == 1);
    CHECK(d["pairing_valuation"] == "1/2");
    CHECK(d["pairing"] == json::parse(R"({"3": "1/2"})"));
    CHECK(d["m_T"] == 2);
    Run w = run("tate --p 5 --q 25 --m 5");
    CHECK(w.code == 2);
    CHECK(w.error()["error"]["kind"] == "WildCase");
}

TEST_CASE("factor") {
    Run r = run("factor -- -8/27");
    REQUIRE(r.code == 0);
    CHECK(r.doc()["sign"] == -1);
    CHECK(r.doc()["factors"] == json::parse(R"({"2": 3, "3": -3})"));
}

TEST_CASE("errors and exit codes") {
    Run deg = run("pairing --family E5@t=0");
    CHECK(deg.code == 2);
    CHECK(deg.error()["error"]["kind"] == "DegenerateParameter");
    CHECK(deg.out.empty());

    Run nt = run("pairing --curve 0,0,1,-1,0 --points 0:0,O");
    CHECK(nt.code == 2);

    Run usage = run("pairing");
    CHECK(usage.code == 1);
    CHECK(usage.error()["error"]["kind"] == "UsageError");
    CHECK(run("frobnicate").code == 1);
    CHECK(run("pairing --family E4@t=x").code == 1);
    CHECK(run("classify --curve 1,2,3").code == 1);
    CHECK(run("pairing --family E4@t=2 --points P,R").code == 1);
}
