#include "frdt/app.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include <CLI11.hpp>

#include "frdt/errors.hpp"
#include "frdt/table_io.hpp"

namespace frdt::app {

namespace {

constexpr double kPi = std::numbers::pi;

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Json:
            return "json";
        case OutputFormat::Svg:
            return "svg";
    }
    return "?";
}

OutputFormat parse_format(const std::string& s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    if (s == "svg") return OutputFormat::Svg;
    throw UsageError("outputs: unknown format '" + s + "' (expected csv, json or svg)");
}

Problem parse_problem_or_throw(const std::string& s) {
    if (auto p = parse_problem(s)) return *p;
    throw UsageError("problem: unknown problem '" + s +
                     "' (expected lse-cosh, lse-exp, nlse-plane, nlse-trap or coupled)");
}

nlohmann::json grid_json(const Grid& g) {
    return {{"min", g.min}, {"max", g.max}, {"count", g.count}};
}

template <class T>
T get_field(const nlohmann::json& j, const std::string& key) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError(key + ": wrong type");
    }
}

double get_number(const nlohmann::json& j, const std::string& key) {
    if (!j.is_number()) throw UsageError(key + ": expected a number");
    return j.get<double>();
}

int get_integer(const nlohmann::json& j, const std::string& key) {
    if (!j.is_number_integer()) throw UsageError(key + ": expected an integer");
    return j.get<int>();
}

Grid grid_from_json(const nlohmann::json& j, const std::string& key) {
    if (!j.is_object()) throw UsageError(key + ": expected an object {min, max, count}");
    Grid g;
    for (const auto& [k, v] : j.items()) {
        if (k == "min") {
            g.min = get_number(v, key + ".min");
        } else if (k == "max") {
            g.max = get_number(v, key + ".max");
        } else if (k == "count") {
            g.count = get_integer(v, key + ".count");
        } else {
            throw UsageError(key + ": unknown key '" + k + "'");
        }
    }
    if (!j.contains("min") || !j.contains("max") || !j.contains("count")) {
        throw UsageError(key + ": min, max and count are all required");
    }
    return g;
}

Grid grid_from_values(const std::vector<double>& v, const std::string& key) {
    if (v.size() != 3) throw UsageError(key + ": expected MIN MAX COUNT");
    const double c = v[2];
    if (c != std::floor(c)) throw UsageError(key + ": COUNT must be an integer");
    return {v[0], v[1], static_cast<int>(c)};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("config: " + path + " is not valid JSON: " + e.what());
    }
}

}  // namespace

ProblemSpec RunConfig::spec() const {
    ProblemSpec s;
    s.problem = problem;
    s.alpha = alpha;
    s.sigma = sigma;
    s.a = a;
    s.b = b;
    s.n = n;
    s.m = m;
    s.K = terms;
    return s;
}

RunConfig default_config(Problem p) {
    const ProblemSpec s = default_spec(p);
    RunConfig c;
    c.problem = p;
    c.alpha = s.alpha;
    c.sigma = s.sigma;
    c.a = s.a;
    c.b = s.b;
    c.n = s.n;
    c.m = s.m;
    c.terms = s.K;
    switch (p) {
        case Problem::LseCosh:
        case Problem::LseExp:
            c.x_grid = {-kPi, kPi, 33};
            c.t_grid = {0.0, 0.01, 11};
            break;
        case Problem::NlsePlane:
            c.x_grid = {-kPi, kPi, 33};
            c.t_grid = {0.0, 0.1, 11};
            break;
        case Problem::NlseTrap:
            c.x_grid = {-2 * kPi, 2 * kPi, 65};
            c.t_grid = {0.0, 0.1, 11};
            break;
        case Problem::Coupled:
            c.x_grid = {-10.0, 10.0, 41};
            c.t_grid = {0.0, 1.0, 11};
            break;
    }
    return c;
}

void validate(const RunConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) throw UsageError("alpha: must lie in (0, 1]");
    if (cfg.terms < 1) throw UsageError("terms: must be at least 1");
    const std::pair<const char*, double> params[] = {
        {"sigma", cfg.sigma}, {"a", cfg.a}, {"b", cfg.b}, {"n", cfg.n}, {"m", cfg.m}};
    for (const auto& [name, v] : params) {
        if (!std::isfinite(v)) throw UsageError(std::string(name) + ": must be finite");
    }
    for (const auto& [name, g] : {std::pair{"x_grid", cfg.x_grid}, std::pair{"t_grid", cfg.t_grid}}) {
        if (g.count < 2) throw UsageError(std::string(name) + ": count must be at least 2");
        if (!std::isfinite(g.min) || !std::isfinite(g.max)) {
            throw UsageError(std::string(name) + ": bounds must be finite");
        }
        if (g.min > g.max) throw UsageError(std::string(name) + ": min exceeds max");
    }
    if (cfg.t_grid.min < 0.0) throw UsageError("t_grid: min must be >= 0");
    if (cfg.outputs.empty() && !cfg.verify) {
        throw UsageError("outputs: nothing to do (no outputs and no verification)");
    }
    if (cfg.output_path.empty()) throw UsageError("output_path: must not be empty");
    if (cfg.corrupt_coeff && (*cfg.corrupt_coeff < 0 || *cfg.corrupt_coeff > cfg.terms)) {
        throw UsageError("corrupt_coeff: index outside 0..terms");
    }
}

nlohmann::json to_json(const RunConfig& cfg) {
    nlohmann::json outs = nlohmann::json::array();
    for (auto f : cfg.outputs) outs.push_back(format_name(f));
    nlohmann::json j = {
        {"problem", std::string(problem_name(cfg.problem))},
        {"alpha", cfg.alpha},
        {"sigma", cfg.sigma},
        {"a", cfg.a},
        {"b", cfg.b},
        {"n", cfg.n},
        {"m", cfg.m},
        {"terms", cfg.terms},
        {"x_grid", grid_json(cfg.x_grid)},
        {"t_grid", grid_json(cfg.t_grid)},
        {"outputs", outs},
        {"verify", cfg.verify},
        {"output_path", cfg.output_path},
    };
    if (cfg.corrupt_coeff) j["corrupt_coeff"] = *cfg.corrupt_coeff;
    return j;
}

RunConfig apply_json(RunConfig c, const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("config: top level must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        if (k == "problem") {
            c.problem = parse_problem_or_throw(get_field<std::string>(v, k));
        } else if (k == "alpha") {
            c.alpha = get_number(v, k);
        } else if (k == "sigma") {
            c.sigma = get_number(v, k);
        } else if (k == "a") {
            c.a = get_number(v, k);
        } else if (k == "b") {
            c.b = get_number(v, k);
        } else if (k == "n") {
            c.n = get_number(v, k);
        } else if (k == "m") {
            c.m = get_number(v, k);
        } else if (k == "terms") {
            c.terms = get_integer(v, k);
        } else if (k == "x_grid") {
            c.x_grid = grid_from_json(v, k);
        } else if (k == "t_grid") {
            c.t_grid = grid_from_json(v, k);
        } else if (k == "outputs") {
            if (!v.is_array()) throw UsageError("outputs: expected an array of strings");
            c.outputs.clear();
            for (const auto& f : v) c.outputs.insert(parse_format(get_field<std::string>(f, k)));
        } else if (k == "verify") {
            if (!v.is_boolean()) throw UsageError("verify: expected a boolean");
            c.verify = v.get<bool>();
        } else if (k == "output_path") {
            c.output_path = get_field<std::string>(v, k);
        } else if (k == "corrupt_coeff") {
            c.corrupt_coeff = get_integer(v, k);
        } else {
            throw UsageError("config: unknown key '" + k + "'");
        }
    }
    return c;
}

std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App cli{"Fractional reduced differential transform solver for time-fractional "
                 "Schrodinger equations"};
    cli.name("frdt");

    std::string problem, config_path, output_path;
    double alpha = 0, sigma = 0, a = 0, b = 0, n = 0, m = 0;
    int terms = 0, corrupt = 0;
    std::vector<double> xg, tg;
    std::vector<std::string> outs;
    bool verify_flag = false;

    cli.add_option("--problem", problem, "lse-cosh | lse-exp | nlse-plane | nlse-trap | coupled");
    cli.add_option("--config", config_path, "JSON RunConfig file; flags override its values");
    cli.add_option("--alpha", alpha, "Fractional order in (0, 1]");
    cli.add_option("--sigma", sigma, "Nonlinearity strength");
    cli.add_option("--a", a, "Amplitude / cosh rate a");
    cli.add_option("--b", b, "Amplitude of v (coupled)");
    cli.add_option("--n", n, "Wave number of u");
    cli.add_option("--m", m, "Wave number of v (coupled)");
    cli.add_option("--terms", terms, "Truncation order K");
    cli.add_option("--x", xg, "x grid: MIN MAX COUNT")->expected(3);
    cli.add_option("--t", tg, "t grid: MIN MAX COUNT")->expected(3);
    cli.add_option("--out", outs, "Output formats: csv, json, svg")->delimiter(',')->expected(1, 3);
    cli.add_flag("--verify", verify_flag, "Check residuals and closed forms; exit 1 on failure");
    cli.add_option("-o,--output", output_path, "Output path prefix (extensions are appended)");
    cli.add_option("--corrupt-coeff", corrupt, "Test hook: perturb U_k before verification");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        cli.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << cli.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    nlohmann::json file_cfg = nlohmann::json::object();
    if (cli.count("--config")) file_cfg = load_json_file(config_path);
    if (!file_cfg.is_object()) throw UsageError("config: top level must be a JSON object");

    Problem p;
    if (cli.count("--problem")) {
        p = parse_problem_or_throw(problem);
    } else if (file_cfg.contains("problem")) {
        p = parse_problem_or_throw(get_field<std::string>(file_cfg["problem"], "problem"));
    } else {
        throw UsageError("problem: required (flag --problem or config key)");
    }

    RunConfig c = apply_json(default_config(p), file_cfg);
    c.problem = p;
    if (cli.count("--alpha")) c.alpha = alpha;
    if (cli.count("--sigma")) c.sigma = sigma;
    if (cli.count("--a")) c.a = a;
    if (cli.count("--b")) c.b = b;
    if (cli.count("--n")) c.n = n;
    if (cli.count("--m")) c.m = m;
    if (cli.count("--terms")) c.terms = terms;
    if (cli.count("--x")) c.x_grid = grid_from_values(xg, "x_grid");
    if (cli.count("--t")) c.t_grid = grid_from_values(tg, "t_grid");
    if (cli.count("--out")) {
        c.outputs.clear();
        for (const auto& f : outs) c.outputs.insert(parse_format(f));
    }
    if (verify_flag) c.verify = true;
    if (cli.count("--output")) c.output_path = output_path;
    if (cli.count("--corrupt-coeff")) c.corrupt_coeff = corrupt;

    validate(c);
    return c;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j = {{"max_residual", max_residual},
                        {"max_relative_residual", max_relative_residual},
                        {"residual_tol", residual_tol},
                        {"passed", passed}};
    j["max_oracle_error"] = max_oracle_error ? nlohmann::json(*max_oracle_error) : nlohmann::json();
    j["oracle_tol"] = oracle_tol ? nlohmann::json(*oracle_tol) : nlohmann::json();
    return j;
}

VerificationReport verify(const ProblemSpec& spec, const Solution& sol, const Grid& x_grid,
                          const Grid& t_grid) {
    VerificationReport rep;
    const Residuals res = residuals(spec, sol.u, sol.v);
    rep.max_residual = res.max_abs();
    rep.max_relative_residual = res.max_relative();
    bool ok = rep.max_relative_residual <= rep.residual_tol;

    if (has_oracle(spec)) {
        rep.oracle_tol = spec.family() == Family::LSE ? kLinearOracleTol : kNonlinearOracleTol;
        const FractionalSeries u(sol.u);
        const std::optional<FractionalSeries> v =
            sol.v ? std::optional<FractionalSeries>(FractionalSeries(*sol.v)) : std::nullopt;
        double worst = 0.0;
        for (double x : x_grid.points()) {
            for (double t : t_grid.points()) {
                const OracleValue ref = oracle(spec, x, t);
                worst = std::max(worst, std::abs(u.evaluate(x, t) - ref.u));
                if (v && ref.v) worst = std::max(worst, std::abs(v->evaluate(x, t) - *ref.v));
            }
        }
        rep.max_oracle_error = worst;
        ok = ok && worst <= *rep.oracle_tol;
    }
    rep.passed = ok;
    return rep;
}

ExitCode run(const RunConfig& cfg, std::ostream& out) {
    validate(cfg);
    const ProblemSpec spec = cfg.spec();
    Solution sol = [&] {
        try {
            return solve(spec);
        } catch (const BlowUpError& e) {
            throw BlowUpError("problem " + std::string(problem_name(spec.problem)) + " (K=" +
                              std::to_string(spec.K) + "): " + e.what());
        }
    }();

    if (cfg.corrupt_coeff) {
        const auto k = static_cast<std::size_t>(*cfg.corrupt_coeff);
        sol.u = sol.u.with_coeff(k, sol.u[k].scaled(1.1) + ExpField::constant(1e-3));
    }

    const FractionalSeries u(sol.u);
    const std::optional<FractionalSeries> v =
        sol.v ? std::optional<FractionalSeries>(FractionalSeries(*sol.v)) : std::nullopt;
    const SolutionTable table = sample(u, v, cfg.x_grid, cfg.t_grid);
    const nlohmann::json meta = to_json(cfg);

    for (auto f : cfg.outputs) {
        const std::string path = cfg.output_path + "." + format_name(f);
        switch (f) {
            case OutputFormat::Csv:
                emit_csv(table, path);
                break;
            case OutputFormat::Json:
                emit_json(table, meta, path);
                break;
            case OutputFormat::Svg: {
                char title[160];
                std::snprintf(title, sizeof title, "%s, alpha=%g, K=%d",
                              std::string(problem_name(cfg.problem)).c_str(), cfg.alpha, cfg.terms);
                emit_svg(table, path, title);
                break;
            }
        }
        out << "wrote " << path << " (" << table.rows.size() << " rows)\n";
    }

    if (!cfg.verify) return ExitCode::Success;

    const VerificationReport rep = verify(spec, sol, cfg.x_grid, cfg.t_grid);
    nlohmann::json report = rep.to_json();
    report["meta"] = meta;
    const std::string report_path = cfg.output_path + ".verify.json";
    {
        std::ofstream f(report_path, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + report_path + " for writing");
        f << report.dump(2) << "\n";
    }
    out << "max residual coefficient: " << rep.max_residual
        << ", relative to term scale: " << rep.max_relative_residual << " (tol " << rep.residual_tol
        << ")\n";
    if (rep.max_oracle_error) {
        out << "max oracle error: " << *rep.max_oracle_error << " (tol " << *rep.oracle_tol << ")\n";
    } else {
        out << "max oracle error: n/a (no closed form at this alpha)\n";
    }
    out << "verification " << (rep.passed ? "PASSED" : "FAILED") << ", report " << report_path << "\n";
    return rep.passed ? ExitCode::Success : ExitCode::VerificationFailed;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const auto cfg = parse_command_line(args, out);
        if (!cfg) return static_cast<int>(ExitCode::Success);
        return static_cast<int>(run(*cfg, out));
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Runtime);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Runtime);
    }
}

}  // namespace frdt::app
