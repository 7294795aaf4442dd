#include "sf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sf {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
    if (!out) throw IoError("cannot write " + path);
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

[[noreturn]] void toml_error(std::size_t line, const std::string& msg) {
    throw InvalidInput("params line " + std::to_string(line) + ": " + msg);
}

} // namespace

Config parse_toml(std::string_view text) {
    Config cfg;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        // Strip a comment that is not inside a string.
        char quote = 0;
        std::size_t cut = raw.size();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const char ch = raw[i];
            if (quote) {
                if (ch == '\\' && quote == '"') ++i;
                else if (ch == quote) quote = 0;
            } else if (ch == '"' || ch == '\'') {
                quote = ch;
            } else if (ch == '#') {
                cut = i;
                break;
            }
        }
        const std::string line = trim(std::string_view(raw).substr(0, cut));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') toml_error(lineno, "unterminated table header");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) toml_error(lineno, "expected key = value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string val = trim(std::string_view(line).substr(eq + 1));
        if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
        if (key.empty()) toml_error(lineno, "empty key");
        if (val.empty()) toml_error(lineno, "missing value for " + key);
        if (cfg.count(key)) toml_error(lineno, "duplicate key " + key);

        ConfigValue v;
        if (val.front() == '"' || val.front() == '\'') {
            const char q = val.front();
            if (val.size() < 2 || val.back() != q) toml_error(lineno, "unterminated string");
            std::string body;
            for (std::size_t i = 1; i + 1 < val.size(); ++i) {
                if (q == '"' && val[i] == '\\' && i + 2 < val.size()) {
                    const char e = val[++i];
                    body += e == 'n' ? '\n' : e == 't' ? '\t' : e;
                } else {
                    body += val[i];
                }
            }
            v.kind = ConfigValue::Kind::String;
            v.text = body;
        } else if (val == "true" || val == "false") {
            v.kind = ConfigValue::Kind::Bool;
            v.text = val;
        } else {
            for (char ch : val)
                if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '.' || ch == '_'))
                    toml_error(lineno, "unsupported value for " + key + ": " + val);
            std::string digits;
            for (char ch : val)
                if (ch != '_') digits += ch;
            v.kind = ConfigValue::Kind::Number;
            v.text = digits;
        }
        cfg[key] = v;
    }
    return cfg;
}

Config config_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("params JSON must be an object");
    Config cfg;
    for (const auto& [key, val] : j.items()) {
        ConfigValue v;
        if (val.is_string()) {
            v.kind = ConfigValue::Kind::String;
            v.text = val.get<std::string>();
        } else if (val.is_boolean()) {
            v.kind = ConfigValue::Kind::Bool;
            v.text = val.get<bool>() ? "true" : "false";
        } else if (val.is_number()) {
            v.kind = ConfigValue::Kind::Number;
            v.text = val.dump();
        } else {
            throw InvalidInput("params JSON value for " + key + " must be a string, number or boolean");
        }
        cfg[key] = v;
    }
    return cfg;
}

Params load_params(const std::string& path) {
    const std::string text = read_file(path);
    const bool is_json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    if (!is_json) return params_from_config(parse_toml(text));
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return params_from_config(config_from_json(j));
}

json params_to_json(const Params& p) {
    json j;
    j["a"] = p.a;
    j["n"] = p.n;
    j["r"] = to_string(p.r);
    j["omega"] = to_string(p.omega);
    j["Omega"] = to_string(p.Omega);
    if (p.kappa) j["kappa"] = to_string(*p.kappa);
    j["h"] = p.h;
    j["mode"] = to_string(p.mode);
    j["z0"] = to_string(p.z0);
    j["q"] = p.q;
    return j;
}

json ball_to_json(const BallReal& b, int digits) {
    const double mag = b.mid().is_zero() ? 0.0 : b.mid().log10_abs();
    const int shown = digits + (mag > 0 ? static_cast<int>(mag) + 1 : 0);
    return {{"mid", b.mid_string(shown)}, {"rad", b.rad_string()}};
}

json table_to_json(const CoeffTable& t, const TailExpansion* tail) {
    json j;
    j["a"] = t.a;
    j["n"] = t.n;
    j["b"] = t.b();
    json rows = json::array();
    for (const auto& row : t.c) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(r);
    }
    j["c"] = rows;
    if (tail) {
        json tl = json::array();
        for (const auto& v : tail->coeffs) tl.push_back(to_string(v));
        j["tail"] = tl;
    }
    return j;
}

CoeffTable table_from_json(const json& j) {
    try {
        const long a = j.at("a").get<long>(), n = j.at("n").get<long>();
        CoeffTable t = CoeffTable::zeros(a, n);
        const auto& rows = j.at("c");
        if (!rows.is_array() || static_cast<long>(rows.size()) != a) throw InvalidInput("table: c must have a rows");
        for (long i = 0; i < a; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<long>(row.size()) != n + 1) throw InvalidInput("table: each row needs n+1 entries");
            for (long jj = 0; jj <= n; ++jj) {
                const auto& v = row[static_cast<std::size_t>(jj)];
                t.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] =
                    v.is_string() ? parse_bigint(v.get<std::string>()) : BigInt(v.get<long>());
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("table JSON: ") + e.what());
    }
}

json theta_to_json(const ThetaTable& t, const ThetaShape& shape, long k) {
    json j;
    j["a"] = shape.a;
    j["n"] = shape.n;
    j["k"] = k;
    j["alpha"] = {shape.alpha.a0, shape.alpha.a1};
    json entries = json::object();
    for (const auto& [key, v] : t.entries) {
        if (key.k != k) continue;
        const std::string name = std::to_string(key.k) + "," + std::to_string(key.i) + "," + std::to_string(key.j) + "," +
                                 std::to_string(key.ip) + "," + std::to_string(key.jp);
        entries[name] = to_string(v);
    }
    j["entries"] = entries;
    return j;
}

json form_record_to_json(const FormRecord& r) {
    json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["z0"] = to_string(r.z0);
    j["q"] = r.q;
    j["digits"] = r.digits;
    json ell = json::array();
    for (const auto& v : r.ell) ell.push_back(to_string(v));
    j["ell"] = ell;
    j["lhs"] = ball_to_json(r.lhs, static_cast<int>(r.digits));
    j["rhs"] = ball_to_json(r.rhs, static_cast<int>(r.digits));
    j["residual"] = ball_to_json(r.residual, 6);
    j["ok"] = r.ok;
    return j;
}

} // namespace sf
