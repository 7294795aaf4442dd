#include "sf/cli.hpp"

#include "sf/arith.hpp"
#include "sf/construct.hpp"
#include "sf/evaluate.hpp"
#include "sf/io.hpp"
#include "sf/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace sf::cli {

using nlohmann::json;

namespace {

long default_digits() {
    const char* env = std::getenv(kDigitsEnv);
    if (!env || !*env) return kDefaultDigits;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 10 || v > 100000)
        throw InvalidInput(std::string(kDigitsEnv) + " must be an integer in [10, 100000]");
    return v;
}

Params checked_params(const std::string& path) {
    Params p = load_params(path);
    p.validate();
    if (p.kappa) (void)p.kappa_n();
    return p;
}

void emit(std::ostream& out, const json& j, const std::string& path = {}) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) out << text;
    else write_file(path, text);
}

std::vector<std::pair<long, long>> parse_selection(const std::string& s) {
    std::vector<std::pair<long, long>> sel;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw InvalidInput("selection items are p:k, got " + item);
        try {
            std::size_t used1 = 0, used2 = 0;
            const long p = std::stol(item.substr(0, colon), &used1);
            const long k = std::stol(item.substr(colon + 1), &used2);
            if (used1 != colon || used2 != item.size() - colon - 1) throw std::invalid_argument(item);
            sel.emplace_back(p, k);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad selection item " + item);
        }
    }
    if (sel.empty()) throw InvalidInput("empty selection");
    return sel;
}

std::vector<long> parse_n_list(const std::string& s) {
    std::vector<long> ns;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            ns.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw InvalidInput("bad n-list entry " + item);
        }
    }
    if (ns.empty()) throw InvalidInput("empty n-list");
    return ns;
}

CoeffTable load_table(const std::string& path, const Params& p) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    CoeffTable t = table_from_json(j);
    if (t.a != p.a || t.n != p.n) throw InvalidInput("table shape does not match params a, n");
    return t;
}

json pairs_json(const std::vector<std::pair<long, long>>& v) {
    json arr = json::array();
    for (const auto& [p, k] : v) arr.push_back({p, k});
    return arr;
}

struct Options {
    bool json_mode = false;
    // delta
    long a = 0, n = 0;
    bool oracle = false;
    // shared
    std::string params, table, out, backend = "auto", selection = "auto";
    long digits = 0;
    bool weighted = false;
    // theta
    long k = 0;
    bool closed = false, check = false;
    // verify
    long p = 0;
    bool all = false;
    // constants
    std::string mode = "zeta";
    std::optional<double> r, kappa, omega, Omega_coef, h_frac;
    // sweep
    std::string n_list;
};

int cmd_delta(const Options& o, std::ostream& out) {
    if (o.a < 1 || o.n < 1) throw InvalidInput("delta needs a >= 1 and n >= 1");
    const FactoredInt d = delta(static_cast<std::uint64_t>(o.a), static_cast<std::uint64_t>(o.n));
    json j;
    j["a"] = o.a;
    j["n"] = o.n;
    json f = json::object();
    for (const auto& [prime, e] : d.factors) f[std::to_string(prime)] = e;
    j["factors"] = f;
    j["value"] = to_string(d.value());
    int code = kOk;
    if (o.oracle) {
        const BigInt brute = delta_bruteforce(static_cast<std::uint64_t>(o.a), static_cast<std::uint64_t>(o.n));
        j["oracle"] = to_string(brute);
        j["oracle_match"] = brute == d.value();
        if (brute != d.value()) code = kInvariant;
    }
    emit(out, j);
    return code;
}

int cmd_theta(const Options& o, std::ostream& out) {
    const Params p = checked_params(o.params);
    if (o.k < 1) throw InvalidInput("theta needs k >= 1");
    const ThetaShape shape{p.a, p.n, p.alpha()};
    const ThetaTable t = o.closed ? theta_table_closed(shape, o.k) : theta_table_oracle(shape, o.k);
    json j = theta_to_json(t, shape, o.k);
    j["source"] = o.closed ? "closed" : "oracle";
    int code = kOk;
    if (o.check) {
        const auto mism = theta_crosscheck(shape, o.k);
        json m = json::array();
        for (const auto& x : mism)
            m.push_back({{"key", {x.key.k, x.key.i, x.key.j, x.key.ip, x.key.jp}},
                         {"oracle", to_string(x.oracle)},
                         {"closed", to_string(x.closed)}});
        j["mismatches"] = m;
        if (!mism.empty()) code = kInvariant;
    }
    emit(out, j, o.out);
    return code;
}

int cmd_construct(const Options& o, std::ostream& out) {
    const Params p = checked_params(o.params);
    BuildOptions opt;
    opt.backend = parse_backend(o.backend);
    opt.weighted = o.weighted;
    const BuildResult built = build_Fn(p, opt);
    const EquivalenceReport eq = verify_equivalences(built.table, p, o.digits);

    json rep;
    rep["params"] = params_to_json(p);
    rep["backend"] = to_string(built.solution.used);
    rep["certified"] = built.solution.certified;
    rep["X"] = built.solution.X.to_string(10);
    rep["max_abs_c"] = to_string(built.table.max_abs());
    rep["b"] = built.table.b();
    rep["log_max_c"] = built.log_max_c;
    rep["log_chi_n"] = built.log_chi_n;
    rep["cap"] = eq.cap;
    rep["d1"] = eq.d1 ? json(*eq.d1) : json(nullptr);
    rep["d2"] = eq.d2 ? json(*eq.d2) : json(nullptr);
    rep["residual"] = ball_to_json(eq.residual, 6);
    rep["equivalences_ok"] = eq.ok();

    const json table = table_to_json(built.table, &built.tail);
    if (o.out.empty()) {
        rep["table"] = table;
    } else {
        emit(out, table, o.out);
        rep["table_path"] = o.out;
    }
    emit(out, rep);
    return eq.ok() ? kOk : kInvariant;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const Params p = checked_params(o.params);
    const CoeffTable t = load_table(o.table, p);
    if (o.all) {
        const auto records = verify_forms(t, p, admissible_pairs(p, true), o.digits);
        json arr = json::array();
        bool ok = true;
        for (const auto& r : records) {
            arr.push_back(form_record_to_json(r));
            ok = ok && r.ok;
        }
        emit(out, arr, o.out);
        return ok ? kOk : kInvariant;
    }
    const FormRecord r = verify_form(t, p, o.p, o.k, o.digits);
    emit(out, form_record_to_json(r), o.out);
    return r.ok ? kOk : kInvariant;
}

int cmd_rank(const Options& o, std::ostream& out) {
    const Params p = checked_params(o.params);
    const CoeffTable t = load_table(o.table, p);
    const auto sel = o.selection == "auto" ? auto_selection(t, p) : parse_selection(o.selection);
    const RankResult res = rank_matrix(t, p, sel);
    json j;
    j["selection"] = pairs_json(res.selection);
    json m = json::array();
    for (const auto& row : res.matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        m.push_back(r);
    }
    j["matrix"] = m;
    j["det"] = to_string(res.det);
    j["rank"] = res.rank;
    j["size"] = res.matrix.size();
    j["invertible"] = res.invertible();
    emit(out, j, o.out);
    return kOk;
}

int cmd_constants(const Options& o, std::ostream& out) {
    const Mode mode = parse_mode(o.mode);
    const bool z = mode == Mode::Zeta;
    const double r = o.r.value_or(z ? 3.9 : 5.3);
    const double kappa = o.kappa.value_or(z ? 10.58 : 8.8343);
    const double omega = o.omega.value_or(z ? 11.58 : 9.8343);
    const double Om = o.Omega_coef.value_or(z ? 3.9 : 3.3);
    const double hf = o.h_frac.value_or(z ? 0.36 : 0.3946);
    const AsymptoticConstants c = asymptotic_constants(r, kappa, omega, Om, hf, mode);

    const std::vector<std::pair<std::string, double>> rows{
        {"r", r},
        {"kappa", kappa},
        {"omega", omega},
        {"Omega_coef", Om},
        {"h_frac", hf},
        {"logchi_coef", c.logchi_coef},
        {"logbeta_coef", c.logbeta_coef},
        {"logalpha_coef", c.logalpha_coef},
        {"tau_ratio_coef", c.tau_ratio_coef},
        {"shrink_factor", c.shrink_factor},
        {"final_coef", c.final_coef},
    };
    if (o.json_mode) {
        json j;
        j["mode"] = to_string(mode);
        for (const auto& [k, v] : rows) j[k] = v;
        emit(out, j, o.out);
        return kOk;
    }
    std::ostringstream s;
    s << "mode            " << to_string(mode) << '\n' << std::fixed << std::setprecision(4);
    for (const auto& [k, v] : rows) s << std::left << std::setw(16) << k << v << '\n';
    if (o.out.empty()) out << s.str();
    else write_file(o.out, s.str());
    return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    const std::vector<long> ns = parse_n_list(o.n_list);
    Config cfg = o.params.size() > 5 && o.params.compare(o.params.size() - 5, 5, ".json") == 0
                     ? config_from_json(json::parse(read_file(o.params), nullptr, false))
                     : parse_toml(read_file(o.params));
    cfg["n"] = ConfigValue{ConfigValue::Kind::Number, std::to_string(ns.front())};
    Params base = params_from_config(cfg);
    base.validate();
    for (long n : ns) {
        Params p = base;
        p.n = n;
        p.validate();
        (void)p.kappa_n();
    }
    BuildOptions opt;
    opt.backend = parse_backend(o.backend);
    opt.weighted = o.weighted;
    const SweepReport rep = run_sweep(base, ns, o.digits, opt);
    bool ok = true;
    for (const auto& r : rep.rows) ok = ok && r.forms_ok;

    if (o.json_mode) {
        json j;
        j["params"] = params_to_json(base);
        json rows = json::array();
        for (const auto& r : rep.rows)
            rows.push_back({{"n", r.n},
                            {"log_max_c", r.log_max_c},
                            {"log_max_ell", r.log_max_ell},
                            {"log_max_form", r.log_max_form},
                            {"forms", r.forms},
                            {"forms_ok", r.forms_ok}});
        j["rows"] = rows;
        j["slope_c"] = rep.slope_c;
        j["slope_ell"] = rep.slope_ell;
        j["slope_form"] = rep.slope_form;
        j["log_chi"] = rep.log_chi;
        j["log_beta"] = rep.log_beta;
        j["log_alpha0"] = rep.log_alpha0;
        emit(out, j, o.out);
    } else {
        const std::string csv = sweep_csv(rep);
        if (o.out.empty()) out << csv;
        else write_file(o.out, csv);
    }
    return ok ? kOk : kInvariant;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o.digits = default_digits();
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App app{"Linear forms in zeta and polylogarithm values: construction and verification"};
    app.name("siegelforms");
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    app.add_flag("--json", o.json_mode, "Machine-readable JSON output");

    auto* delta_cmd = app.add_subcommand("delta", "Factored Delta_{a,N} as JSON");
    delta_cmd->add_option("--a", o.a, "a")->required();
    delta_cmd->add_option("--n", o.n, "N")->required();
    delta_cmd->add_flag("--oracle,--bruteforce", o.oracle, "Cross-check with the brute-force oracle");

    auto* theta_cmd = app.add_subcommand("theta", "Recurrence coefficients theta at level k");
    theta_cmd->add_option("--params", o.params, "Params file (TOML or .json)")->required();
    theta_cmd->add_option("--k", o.k, "Level k")->required();
    auto* closed_flag = theta_cmd->add_flag("--closed", o.closed, "Use the closed form");
    theta_cmd->add_flag("--oracle", "Use unit-vector probing (default)")->excludes(closed_flag);
    theta_cmd->add_flag("--check", o.check, "Cross-check closed form against the oracle for levels 1..k");
    theta_cmd->add_option("--out", o.out, "Output JSON path");

    auto* construct_cmd = app.add_subcommand("construct", "Build F_n and check D1 = D2");
    construct_cmd->add_option("--params", o.params, "Params file")->required();
    construct_cmd->add_option("--out", o.out, "Table JSON path");
    construct_cmd->add_option("--backend", o.backend, "auto|enumeration|reduction");
    construct_cmd->add_flag("--weighted", o.weighted, "Add the weighted rows");
    construct_cmd->add_option("--digits", o.digits, "Working precision in decimal digits");

    auto* verify_cmd = app.add_subcommand("verify", "Check a linear-form identity with ball arithmetic");
    verify_cmd->add_option("--table", o.table, "Table JSON")->required();
    verify_cmd->add_option("--params", o.params, "Params file")->required();
    auto* p_opt = verify_cmd->add_option("--p", o.p, "Derivative order p");
    auto* k_opt = verify_cmd->add_option("--k", o.k, "Index k");
    auto* all_flag = verify_cmd->add_flag("--all", o.all, "Every convergent admissible pair");
    all_flag->excludes(p_opt)->excludes(k_opt);
    verify_cmd->add_option("--digits", o.digits, "Working precision in decimal digits");
    verify_cmd->add_option("--out", o.out, "Output JSON path");

    auto* rank_cmd = app.add_subcommand("rank", "Exact determinant of a (b+h+1)-square ell matrix");
    rank_cmd->add_option("--table", o.table, "Table JSON")->required();
    rank_cmd->add_option("--params", o.params, "Params file")->required();
    rank_cmd->add_option("--selection", o.selection, "auto or p:k,p:k,...");
    rank_cmd->add_option("--out", o.out, "Output JSON path");

    auto* constants_cmd = app.add_subcommand("constants", "Asymptotic constants");
    constants_cmd->add_option("--mode", o.mode, "zeta|polylog");
    constants_cmd->add_option("--r", o.r, "r");
    constants_cmd->add_option("--kappa", o.kappa, "kappa");
    constants_cmd->add_option("--omega", o.omega, "omega");
    constants_cmd->add_option("--Omega-coef", o.Omega_coef, "Omega coefficient");
    constants_cmd->add_option("--h-frac", o.h_frac, "h / a");
    constants_cmd->add_option("--out", o.out, "Output path");

    auto* sweep_cmd = app.add_subcommand("sweep", "Construct and evaluate over a list of n, CSV output");
    sweep_cmd->add_option("--params-template", o.params, "Params file; n is taken from --n-list")->required();
    sweep_cmd->add_option("--n-list", o.n_list, "Comma-separated n values")->required();
    sweep_cmd->add_option("--digits", o.digits, "Working precision in decimal digits");
    sweep_cmd->add_option("--out", o.out, "Output path");
    sweep_cmd->add_option("--backend", o.backend, "auto|enumeration|reduction");
    sweep_cmd->add_flag("--weighted", o.weighted, "Add the weighted rows");

    for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", o.json_mode, "Machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (verify_cmd->parsed() && !o.all && (p_opt->count() == 0 || k_opt->count() == 0)) {
        err << "error: verify needs --p and --k, or --all\n" << verify_cmd->help();
        return kUsage;
    }
    if (o.digits < 10) {
        err << "error: --digits must be at least 10\n";
        return kUsage;
    }

    try {
        if (delta_cmd->parsed()) return cmd_delta(o, out);
        if (theta_cmd->parsed()) return cmd_theta(o, out);
        if (construct_cmd->parsed()) return cmd_construct(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
        if (rank_cmd->parsed()) return cmd_rank(o, out);
        if (constants_cmd->parsed()) return cmd_constants(o, out);
        if (sweep_cmd->parsed()) return cmd_sweep(o, out);
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    } catch (const NoSolution& e) {
        err << "no solution: " << e.what() << '\n';
        return kInvariant;
    } catch (const DivergenceError& e) {
        err << "divergent series: " << e.what() << '\n';
        return kInvariant;
    }
    return kUsage;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

} // namespace sf::cli
