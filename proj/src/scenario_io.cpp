#include "scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace mrac {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct Entry {
    int line = 0;
    std::string value;
};

using Section = std::map<std::string, Entry>;

struct Context {
    std::string section;
    std::string key;
    int line = 0;
    [[nodiscard]] std::string where() const {
        return "line " + std::to_string(line) + ": key '" + key + "' in [" + section + "]";
    }
};

double parse_double(const std::string& text, const Context& ctx) {
    const std::string t = trim(text);
    if (t.empty()) throw parse_error(ctx.where() + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(v))
        throw parse_error(ctx.where() + ": bad number '" + t + "'");
    return v;
}

std::vector<double> parse_number_list(const std::string& text, const Context& ctx) {
    std::vector<double> out;
    for (const std::string& part : split(text, ',')) out.push_back(parse_double(part, ctx));
    return out;
}

VectorXd parse_vector(const std::string& text, const Context& ctx) {
    const std::vector<double> v = parse_number_list(text, ctx);
    return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

MatrixXd parse_matrix(const std::string& text, const Context& ctx) {
    const std::vector<std::string> rows = split(text, ';');
    std::vector<std::vector<double>> data;
    for (const std::string& row : rows) data.push_back(parse_number_list(row, ctx));
    const size_t cols = data[0].size();
    for (const auto& row : data)
        if (row.size() != cols)
            throw parse_error(ctx.where() + ": rows have different lengths");
    MatrixXd m(static_cast<Eigen::Index>(data.size()), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < data.size(); ++i)
        for (size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = data[i][j];
    return m;
}

Polynomial parse_poly(const std::string& text, const Context& ctx) {
    try {
        return Polynomial(parse_number_list(text, ctx));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ctx.where() + ": " + ex.what());
    }
}

RefInputSpec parse_input(const std::string& text, const Context& ctx) {
    const std::string t = trim(text);
    RefInputSpec spec;
    if (t.rfind("const", 0) == 0) {
        spec.kind = RefInputSpec::Kind::Constant;
        spec.constant = parse_double(t.substr(5), ctx);
        return spec;
    }
    if (t.rfind("sines", 0) == 0) {
        spec.kind = RefInputSpec::Kind::Sines;
        const std::string body = trim(t.substr(5));
        if (body.empty()) throw parse_error(ctx.where() + ": 'sines' needs at least one a,w term");
        for (const std::string& term : split(body, ';')) {
            const std::vector<double> aw = parse_number_list(term, ctx);
            if (aw.size() != 2)
                throw parse_error(ctx.where() + ": each sines term must be 'amplitude,frequency'");
            spec.sines.emplace_back(aw[0], aw[1]);
        }
        return spec;
    }
    throw parse_error(ctx.where() + ": reference input must start with 'const' or 'sines'");
}

const std::map<std::string, std::vector<std::string>> kKnownKeys = {
    {"plant", {"A", "b", "c", "x0"}},
    {"reference", {"A", "b", "c", "k1m", "input", "xm0"}},
    {"design", {"scheme", "P_m", "Lambda", "Lambda_e"}},
    {"adaptation", {"Gamma", "gamma", "sign_kp", "theta0_scale", "theta0", "rho0_scale", "rho0"}},
    {"sim", {"horizon", "dt"}},
};

class Reader {
public:
    explicit Reader(std::map<std::string, Section> sections) : sections_(std::move(sections)) {}

    [[nodiscard]] bool has(const std::string& section, const std::string& key) const {
        const auto sit = sections_.find(section);
        return sit != sections_.end() && sit->second.count(key) > 0;
    }

    [[nodiscard]] Context require(const std::string& section, const std::string& key,
                                  std::string* value) const {
        const auto sit = sections_.find(section);
        if (sit == sections_.end() || sit->second.count(key) == 0)
            throw parse_error("missing required key '" + key + "' in [" + section + "]");
        const Entry& e = sit->second.at(key);
        *value = e.value;
        return Context{section, key, e.line};
    }

    [[nodiscard]] Context get(const std::string& section, const std::string& key,
                              std::string* value) const {
        const Entry& e = sections_.at(section).at(key);
        *value = e.value;
        return Context{section, key, e.line};
    }

private:
    std::map<std::string, Section> sections_;
};

std::map<std::string, Section> tokenize(const std::string& text) {
    std::map<std::string, Section> sections;
    std::istringstream in(text);
    std::string raw;
    std::string current;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw parse_error("line " + std::to_string(lineno) + ": malformed section header '" +
                                  line + "'");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (kKnownKeys.count(name) == 0)
                throw parse_error("line " + std::to_string(lineno) + ": unknown section [" + name +
                                  "]");
            if (sections.count(name) > 0)
                throw parse_error("line " + std::to_string(lineno) + ": duplicate section [" + name +
                                  "]");
            sections[name];  // create
            current = name;
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'key = value', got '" +
                              line + "'");
        if (current.empty())
            throw parse_error("line " + std::to_string(lineno) + ": key outside any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty key");
        if (value.empty())
            throw parse_error("line " + std::to_string(lineno) + ": empty value for key '" + key +
                              "'");

        const auto& known = kKnownKeys.at(current);
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw parse_error("line " + std::to_string(lineno) + ": unknown key '" + key +
                              "' in [" + current + "]");
        Section& sec = sections[current];
        if (sec.count(key) > 0)
            throw parse_error("line " + std::to_string(lineno) + ": duplicate key '" + key +
                              "' in [" + current + "]");
        sec[key] = Entry{lineno, value};
    }
    for (const auto& [name, keys] : kKnownKeys) {
        (void)keys;
        if (sections.count(name) == 0)
            throw parse_error("missing required section [" + name + "]");
    }
    return sections;
}

StateSpace parse_state_space(const Reader& r, const std::string& section) {
    std::string text;
    StateSpace sys;
    Context ctx = r.require(section, "A", &text);
    sys.A = parse_matrix(text, ctx);
    ctx = r.require(section, "b", &text);
    sys.b = parse_vector(text, ctx);
    ctx = r.require(section, "c", &text);
    sys.c = parse_vector(text, ctx).transpose();
    return sys;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& name) {
    const Reader r(tokenize(text));
    Scenario scn;
    scn.name = name;
    std::string v;

    scn.plant = parse_state_space(r, "plant");
    if (r.has("plant", "x0")) {
        const Context ctx = r.get("plant", "x0", &v);
        scn.x0 = parse_vector(v, ctx);
    }
    scn.ref_sys = parse_state_space(r, "reference");
    {
        const Context ctx = r.require("reference", "k1m", &v);
        scn.k1m = parse_vector(v, ctx);
    }
    {
        const Context ctx = r.require("reference", "input", &v);
        scn.input = parse_input(v, ctx);
    }
    if (r.has("reference", "xm0")) {
        const Context ctx = r.get("reference", "xm0", &v);
        scn.xm0 = parse_vector(v, ctx);
    }

    {
        (void)r.require("design", "scheme", &v);
        scn.scheme = parse_scheme(trim(v));
    }
    {
        const Context ctx = r.require("design", "P_m", &v);
        scn.P_m = parse_poly(v, ctx);
    }
    if (r.has("design", "Lambda")) {
        const Context ctx = r.get("design", "Lambda", &v);
        scn.Lambda = parse_poly(v, ctx);
        scn.has_lambda = true;
    }
    if (r.has("design", "Lambda_e")) {
        const Context ctx = r.get("design", "Lambda_e", &v);
        scn.Lambda_e = parse_poly(v, ctx);
        scn.has_lambda_e = true;
    }

    {
        const Context ctx = r.require("adaptation", "Gamma", &v);
        scn.gamma_theta = parse_double(v, ctx);
    }
    {
        const Context ctx = r.require("adaptation", "gamma", &v);
        scn.gamma_rho = parse_double(v, ctx);
    }
    {
        const Context ctx = r.require("adaptation", "sign_kp", &v);
        scn.sign_kp = parse_double(v, ctx);
        if (scn.sign_kp != 1.0 && scn.sign_kp != -1.0)
            throw parse_error(ctx.where() + ": sign_kp must be +1 or -1");
    }
    const bool has_t0s = r.has("adaptation", "theta0_scale");
    const bool has_t0 = r.has("adaptation", "theta0");
    if (has_t0s == has_t0)
        throw parse_error(
            "[adaptation] needs exactly one of 'theta0_scale' or 'theta0'");
    if (has_t0s) {
        const Context ctx = r.get("adaptation", "theta0_scale", &v);
        scn.theta0_is_scale = true;
        scn.theta0_scale = parse_double(v, ctx);
    } else {
        const Context ctx = r.get("adaptation", "theta0", &v);
        scn.theta0_is_scale = false;
        scn.theta0 = parse_vector(v, ctx);
    }
    const bool has_r0s = r.has("adaptation", "rho0_scale");
    const bool has_r0 = r.has("adaptation", "rho0");
    if (has_r0s == has_r0)
        throw parse_error("[adaptation] needs exactly one of 'rho0_scale' or 'rho0'");
    if (has_r0s) {
        const Context ctx = r.get("adaptation", "rho0_scale", &v);
        scn.rho0_is_scale = true;
        scn.rho0_scale = parse_double(v, ctx);
    } else {
        const Context ctx = r.get("adaptation", "rho0", &v);
        scn.rho0_is_scale = false;
        scn.rho0 = parse_double(v, ctx);
    }

    {
        const Context ctx = r.require("sim", "horizon", &v);
        scn.horizon = parse_double(v, ctx);
    }
    {
        const Context ctx = r.require("sim", "dt", &v);
        scn.dt = parse_double(v, ctx);
    }
    return scn;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), std::filesystem::path(path).stem().string());
}

}  // namespace mrac
