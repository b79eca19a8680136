#include "sysfile.hpp"

#include <sstream>

namespace hensel {

std::vector<Elem> SystemSpec::base_elems() const {
    std::vector<Elem> out;
    if (point.empty()) return std::vector<Elem>(vars->size(), Elem::zero(ring));
    for (const auto& c : point) out.push_back(Elem::from_scalar(c));
    return out;
}

bool operator==(const SystemSpec& a, const SystemSpec& b) {
    if (!a.ring->same(*b.ring)) return false;
    if (*a.vars != *b.vars) return false;
    if (a.poly_names != b.poly_names || a.polys != b.polys) return false;
    if (a.point != b.point) return false;
    if (a.role != b.role || a.role_index != b.role_index) return false;
    if (a.avoid.has_value() != b.avoid.has_value()) return false;
    if (a.avoid && !(*a.avoid == *b.avoid)) return false;
    return true;
}

namespace {

[[noreturn]] void fail_line(int line, const std::string& msg) {
    raise(errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

// "key=value" pairs on directive lines
int64_t parse_kv_int(const std::string& tok, const std::string& key, int line) {
    if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 || tok[key.size()] != '=')
        fail_line(line, "expected " + key + "=<integer>, got '" + tok + "'");
    try {
        size_t used = 0;
        int64_t v = std::stoll(tok.substr(key.size() + 1), &used);
        if (used != tok.size() - key.size() - 1) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail_line(line, "expected " + key + "=<integer>, got '" + tok + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool valid_var_name(const std::string& s) {
    if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

SystemSpec parse_system(const std::string& text) {
    SystemSpec spec;
    bool saw_role = false;

    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(input, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);

        std::istringstream ls(line);
        std::string directive;
        ls >> directive;
        std::string rest;
        std::getline(ls, rest);

        if (directive == "ring") {
            if (spec.ring) fail_line(lineno, "duplicate ring directive");
            auto toks = split_ws(rest);
            if (toks.size() != 3) fail_line(lineno, "expected: ring <zp|fpt> p=<prime> cap=<n>");
            Backend backend;
            if (toks[0] == "zp")
                backend = Backend::PAdic;
            else if (toks[0] == "fpt")
                backend = Backend::TruncatedSeries;
            else
                fail_line(lineno, "unknown backend '" + toks[0] + "' (expected zp or fpt)");
            int64_t p = parse_kv_int(toks[1], "p", lineno);
            int64_t cap = parse_kv_int(toks[2], "cap", lineno);
            if (cap < 1) fail_line(lineno, "cap must be >= 1");
            try {
                spec.ring = make_ring(backend, p, int(cap));
            } catch (const Error& e) {
                fail_line(lineno, e.what());
            }
        } else if (directive == "vars") {
            if (!spec.ring) fail_line(lineno, "vars before ring directive");
            if (spec.vars) fail_line(lineno, "duplicate vars directive");
            auto names = split_ws(rest);
            if (names.empty()) fail_line(lineno, "vars directive needs at least one name");
            for (const auto& name : names) {
                if (!valid_var_name(name)) fail_line(lineno, "invalid variable name '" + name + "'");
                if (name == "t") fail_line(lineno, "'t' is reserved for the series parameter");
                for (const auto& other : names)
                    if (&other != &name && other == name) fail_line(lineno, "duplicate variable '" + name + "'");
            }
            spec.vars = std::make_shared<const std::vector<std::string>>(names);
        } else if (directive == "poly") {
            if (!spec.ring || !spec.vars) fail_line(lineno, "poly before ring/vars directives");
            auto eq = rest.find('=');
            if (eq == std::string::npos) fail_line(lineno, "expected: poly <name> = <expression>");
            auto name_toks = split_ws(rest.substr(0, eq));
            if (name_toks.size() != 1 || !valid_var_name(name_toks[0]))
                fail_line(lineno, "expected a single polynomial name before '='");
            for (const auto& existing : spec.poly_names)
                if (existing == name_toks[0]) fail_line(lineno, "duplicate polynomial '" + name_toks[0] + "'");
            spec.poly_names.push_back(name_toks[0]);
            spec.polys.push_back(parse_poly(rest.substr(eq + 1), spec.ring, spec.vars, lineno - 1));
        } else if (directive == "point") {
            if (!spec.ring || !spec.vars) fail_line(lineno, "point before ring/vars directives");
            if (!spec.point.empty()) fail_line(lineno, "duplicate point directive");
            spec.point = parse_scalar_vector(rest, spec.ring, lineno - 1);
            if (spec.point.size() != spec.vars->size())
                fail_line(lineno, "point has " + std::to_string(spec.point.size()) + " coordinates, expected " +
                                      std::to_string(spec.vars->size()));
        } else if (directive == "square") {
            if (saw_role) fail_line(lineno, "duplicate role directive");
            if (!split_ws(rest).empty()) fail_line(lineno, "square takes no arguments");
            spec.role = Role::Square;
            saw_role = true;
        } else if (directive == "implicit") {
            if (saw_role) fail_line(lineno, "duplicate role directive");
            auto toks = split_ws(rest);
            if (toks.size() != 1) fail_line(lineno, "expected: implicit r=<k>");
            spec.role = Role::Implicit;
            spec.role_index = int(parse_kv_int(toks[0], "r", lineno));
            saw_role = true;
        } else if (directive == "variety") {
            if (saw_role) fail_line(lineno, "duplicate role directive");
            auto toks = split_ws(rest);
            if (toks.size() != 1) fail_line(lineno, "expected: variety dim=<k>");
            spec.role = Role::Variety;
            spec.role_index = int(parse_kv_int(toks[0], "dim", lineno));
            saw_role = true;
        } else if (directive == "avoid") {
            if (!spec.ring || !spec.vars) fail_line(lineno, "avoid before ring/vars directives");
            if (spec.avoid) fail_line(lineno, "duplicate avoid directive");
            spec.avoid = parse_poly(rest, spec.ring, spec.vars, lineno - 1);
        } else {
            fail_line(lineno, "unknown directive '" + directive + "'");
        }
    }

    if (!spec.ring) raise(errc::parse_error, "missing ring directive");
    if (!spec.vars) raise(errc::parse_error, "missing vars directive");
    if (spec.polys.empty()) raise(errc::parse_error, "no polynomials defined");

    int n = int(spec.vars->size());
    int k = int(spec.polys.size());
    switch (spec.role) {
        case Role::Square:
            if (k != n)
                raise(errc::parse_error, "square system needs " + std::to_string(n) + " polynomials, got " +
                                             std::to_string(k));
            break;
        case Role::Implicit: {
            int r = spec.role_index;
            if (r < 0 || r >= n) raise(errc::parse_error, "implicit r must satisfy 0 <= r < nvars");
            if (k != n - r)
                raise(errc::parse_error, "implicit system needs n-r = " + std::to_string(n - r) +
                                             " polynomials, got " + std::to_string(k));
            for (const auto& c : spec.point)
                if (!c.is_zero()) raise(errc::parse_error, "implicit systems are origin-based; remove the point");
            break;
        }
        case Role::Variety: {
            int d = spec.role_index;
            if (d < 0 || d >= n) raise(errc::parse_error, "variety dim must satisfy 0 <= dim < nvars");
            break;
        }
    }
    return spec;
}

std::string print_system(const SystemSpec& spec) {
    std::ostringstream os;
    os << "ring " << (spec.ring->backend() == Backend::PAdic ? "zp" : "fpt") << " p=" << spec.ring->p()
       << " cap=" << spec.ring->cap() << "\n";
    os << "vars";
    for (const auto& v : *spec.vars) os << " " << v;
    os << "\n";
    for (size_t i = 0; i < spec.polys.size(); ++i)
        os << "poly " << spec.poly_names[i] << " = " << spec.polys[i].to_string() << "\n";
    if (!spec.point.empty()) {
        os << "point ";
        for (size_t i = 0; i < spec.point.size(); ++i) {
            if (i) os << ", ";
            os << spec.point[i].to_string();
        }
        os << "\n";
    }
    switch (spec.role) {
        case Role::Square: os << "square\n"; break;
        case Role::Implicit: os << "implicit r=" << spec.role_index << "\n"; break;
        case Role::Variety: os << "variety dim=" << spec.role_index << "\n"; break;
    }
    if (spec.avoid) os << "avoid " << spec.avoid->to_string() << "\n";
    return os.str();
}

} // namespace hensel
