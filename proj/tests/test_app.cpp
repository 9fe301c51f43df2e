#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "frdt/app.hpp"
#include "frdt/errors.hpp"

namespace fs = std::filesystem;
using namespace frdt::app;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

int run_args(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int rc = main_entry(args, out, err);
    if (out_text) *out_text = out.str() + err.str();
    return rc;
}

RunConfig parse(const std::vector<std::string>& args) {
    std::ostringstream sink;
    auto c = parse_command_line(args, sink);
    REQUIRE(c.has_value());
    return *c;
}

}  // namespace

TEST_CASE("flags build a config on top of problem defaults") {
    const auto c = parse({"--problem", "lse-cosh", "--alpha", "0.9", "--terms", "25", "--x", "-3.1416", "3.1416",
                          "33", "--t", "0", "0.01", "11", "--out", "csv", "--verify"});
    CHECK(c.problem == frdt::Problem::LseCosh);
    CHECK(c.alpha == 0.9);
    CHECK(c.a == 2.0);
    CHECK(c.terms == 25);
    CHECK(c.x_grid.min == -3.1416);
    CHECK(c.x_grid.count == 33);
    CHECK(c.t_grid.max == 0.01);
    CHECK(c.outputs == std::set{OutputFormat::Csv});
    CHECK(c.verify);

    const auto d = parse({"--problem", "coupled", "--out", "csv,svg", "--out", "json"});
    CHECK(d.outputs.size() == 3);
    CHECK(d.x_grid.min == -10.0);
    CHECK(d.m == 1.5);
}

TEST_CASE("usage errors") {
    std::ostringstream sink;
    CHECK_THROWS_AS(parse_command_line({"--alpha", "0.5"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "nls"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "lse-exp", "--alpha", "1.5"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "lse-exp", "--t", "-1", "1", "5"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "lse-exp", "--x", "0", "1", "1"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "lse-exp", "--out", "png"}, sink), frdt::UsageError);
    CHECK_THROWS_AS(parse_command_line({"--problem", "lse-exp", "--bogus"}, sink), frdt::UsageError);
    try {
        parse_command_line({"--problem", "lse-exp", "--terms", "0"}, sink);
        FAIL("expected UsageError");
    } catch (const frdt::UsageError& e) {
        CHECK(std::string(e.what()).rfind("terms:", 0) == 0);
    }
    CHECK(run_args({"--problem", "nope"}) == 2);
}

TEST_CASE("help exits cleanly") {
    std::string text;
    CHECK(run_args({"--help"}, &text) == 0);
    CHECK(text.find("--problem") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
    TempDir dir("frdt_app_config");
    const auto cfg_path = dir.path / "run.json";
    std::ofstream(cfg_path) << R"({"problem": "lse-exp", "alpha": 0.5, "n": 5, "terms": 30,
        "x_grid": {"min": -3, "max": 3, "count": 7}, "outputs": ["json"]})";
    const auto c = parse({"--config", cfg_path.string(), "--alpha", "0.7"});
    CHECK(c.problem == frdt::Problem::LseExp);
    CHECK(c.alpha == 0.7);
    CHECK(c.n == 5.0);
    CHECK(c.terms == 30);
    CHECK(c.x_grid.count == 7);
    CHECK(c.t_grid.max == 0.01);
    CHECK(c.outputs == std::set{OutputFormat::Json});

    std::ofstream(cfg_path) << R"({"problem": "lse-exp", "alhpa": 0.5})";
    std::ostringstream sink;
    try {
        parse_command_line({"--config", cfg_path.string()}, sink);
        FAIL("expected UsageError");
    } catch (const frdt::UsageError& e) {
        CHECK(std::string(e.what()).find("alhpa") != std::string::npos);
    }

    std::ofstream(cfg_path) << R"({"problem": "lse-exp", "x_grid": {"min": 0, "max": 1, "count": 3, "step": 1}})";
    CHECK_THROWS_AS(parse_command_line({"--config", cfg_path.string()}, sink), frdt::UsageError);
    std::ofstream(cfg_path) << R"({"problem": "lse-exp", "terms": 2.5})";
    CHECK_THROWS_AS(parse_command_line({"--config", cfg_path.string()}, sink), frdt::UsageError);
    std::ofstream(cfg_path) << "{not json";
    CHECK_THROWS_AS(parse_command_line({"--config", cfg_path.string()}, sink), frdt::UsageError);
}

TEST_CASE("config echo reproduces every parameter") {
    RunConfig c = default_config(frdt::Problem::Coupled);
    c.alpha = 0.123456789012345678;
    c.a = 1.0 / 3.0;
    c.outputs = {OutputFormat::Csv, OutputFormat::Svg};
    c.verify = true;
    c.output_path = "some/where";
    const auto j = to_json(c);
    const RunConfig back = apply_json(RunConfig{}, nlohmann::json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(back.alpha == c.alpha);
    CHECK(back.a == c.a);
    CHECK(back.x_grid.min == c.x_grid.min);
    CHECK(back.outputs == c.outputs);
    CHECK(back.output_path == c.output_path);
}

TEST_CASE("run writes artifacts deterministically") {
    TempDir dir("frdt_app_run");
    const auto prefix_a = (dir.path / "a").string();
    const auto prefix_b = (dir.path / "b").string();
    const std::vector<std::string> base{"--problem", "coupled", "--terms", "8", "--x", "-10", "10", "9",
                                        "--t", "0", "1", "3", "--out", "csv,json,svg"};
    auto args = base;
    args.insert(args.end(), {"-o", prefix_a});
    CHECK(run_args(args) == 0);
    args = base;
    args.insert(args.end(), {"-o", prefix_b});
    CHECK(run_args(args) == 0);

    CHECK(slurp(prefix_a + ".csv") == slurp(prefix_b + ".csv"));
    const auto ja = nlohmann::json::parse(slurp(prefix_a + ".json"));
    const auto jb = nlohmann::json::parse(slurp(prefix_b + ".json"));
    CHECK(ja.at("rows") == jb.at("rows"));
    CHECK(ja.at("meta").at("terms") == 8);
    CHECK(ja.at("meta").at("problem") == "coupled");
    CHECK(ja.at("rows").size() == 27);

    const auto csv = slurp(prefix_a + ".csv");
    CHECK(csv.rfind("x,t,re_u,im_u,abs_u,re_v,im_v,abs_v\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 28);
    CHECK(fs::exists(prefix_a + ".svg"));
}

TEST_CASE("verification gate") {
    TempDir dir("frdt_app_verify");
    const auto prefix = (dir.path / "v").string();
    std::string text;
    CHECK(run_args({"--problem", "nlse-trap", "--alpha", "1", "--terms", "16", "--verify", "-o", prefix}, &text) == 0);
    const auto report = nlohmann::json::parse(slurp(prefix + ".verify.json"));
    CHECK(report.at("passed") == true);
    CHECK(report.at("max_oracle_error").get<double>() < 1e-8);
    CHECK(report.at("max_residual").get<double>() <= 1e-9);

    // No closed form at fractional alpha: residual only.
    CHECK(run_args({"--problem", "nlse-plane", "--verify", "-o", prefix}) == 0);
    CHECK(nlohmann::json::parse(slurp(prefix + ".verify.json")).at("max_oracle_error").is_null());

    for (int k : {0, 1, 5, 16}) {
        CHECK(run_args({"--problem", "nlse-trap", "--alpha", "1", "--terms", "16", "--verify", "-o", prefix,
                        "--corrupt-coeff", std::to_string(k)}) == 1);
    }
    // U_k = 0 for k >= 1 here; the hook must still be detected.
    CHECK(run_args({"--problem", "coupled", "--verify", "-o", prefix, "--corrupt-coeff", "4"}) == 1);
}

TEST_CASE("runtime errors map to exit code 3") {
    TempDir dir("frdt_app_err");
    std::string text;
    // Unwritable output location.
    CHECK(run_args({"--problem", "lse-cosh", "-o", (dir.path / "no" / "such" / "dir").string()}, &text) == 3);
    // e^{a x} overflow while sampling.
    CHECK(run_args({"--problem", "lse-cosh", "--a", "100", "--x", "-10", "10", "3", "-o",
                    (dir.path / "o").string()}, &text) == 3);
    CHECK(text.find("overflow") != std::string::npos);
}
