#include "config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "adslen/errors.hpp"

namespace adslen::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(trim(cur));
    return out;
}

bool to_double(const std::string& s, double& v) {
    if (s.empty()) return false;
    errno = 0;
    char* end = nullptr;
    v = std::strtod(s.c_str(), &end);
    return errno == 0 && end == s.c_str() + s.size();
}

}  // namespace

ConfigError::ConfigError(const std::string& file, int line, const std::string& msg)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + msg) {}

Config Config::parse(const std::string& text, const std::string& file) {
    Config c;
    c.file_ = file;
    std::istringstream is(text);
    std::string raw, current;
    int n = 0;
    while (std::getline(is, raw)) {
        ++n;
        auto cut = raw.find_first_of("#;");
        std::string line = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(file, n, "unterminated section header");
            current = trim(line.substr(1, line.size() - 2));
            if (current.empty()) throw ConfigError(file, n, "empty section name");
            if (c.sections_.count(current)) throw ConfigError(file, n, "duplicate section [" + current + "]");
            c.sections_[current];
            c.header_lines_[current] = n;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(file, n, "expected key = value");
        if (current.empty()) throw ConfigError(file, n, "key outside of any section");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(file, n, "empty key");
        auto& sec = c.sections_[current];
        if (sec.count(key)) throw ConfigError(file, n, "duplicate key '" + key + "'");
        sec[key] = {value, n};
    }
    return c;
}

Config Config::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path, 0, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

std::vector<std::string> Config::section_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : sections_) out.push_back(k);
    return out;
}

Config::Section Config::section(const std::string& name) const {
    auto it = sections_.find(name);
    if (it == sections_.end()) throw ConfigError(file_, 0, "no [" + name + "] section");
    Section s;
    s.file_ = file_;
    s.name_ = name;
    s.header_line_ = header_lines_.at(name);
    s.entries_ = it->second;
    return s;
}

void Config::Section::fail(const std::string& key, const std::string& msg) const {
    throw ConfigError(file_, line(key), key + ": " + msg);
}

int Config::Section::line(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? header_line_ : it->second.line;
}

const Entry& Config::Section::at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw ConfigError(file_, header_line_, "[" + name_ + "] is missing required key '" + key + "'");
    return it->second;
}

std::string Config::Section::str(const std::string& key) const { return at(key).value; }

std::string Config::Section::str(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
}

double Config::Section::real(const std::string& key) const {
    double v;
    if (!to_double(str(key), v)) fail(key, "'" + str(key) + "' is not a number");
    return v;
}

double Config::Section::real(const std::string& key, double fallback) const {
    return has(key) ? real(key) : fallback;
}

long Config::Section::integer(const std::string& key) const {
    const std::string& s = str(key);
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || errno != 0 || end != s.c_str() + s.size()) fail(key, "'" + s + "' is not an integer");
    return v;
}

long Config::Section::integer(const std::string& key, long fallback) const {
    return has(key) ? integer(key) : fallback;
}

bool Config::Section::flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string& s = str(key);
    if (s == "true" || s == "yes" || s == "1") return true;
    if (s == "false" || s == "no" || s == "0") return false;
    fail(key, "'" + s + "' is not a boolean");
}

std::vector<std::string> Config::Section::list(const std::string& key) const {
    auto out = split(str(key), ',');
    for (const auto& s : out)
        if (s.empty()) fail(key, "empty list item");
    return out;
}

std::vector<double> Config::Section::reals(const std::string& key) const {
    std::vector<double> out;
    for (const auto& s : list(key)) {
        double v;
        if (!to_double(s, v)) fail(key, "'" + s + "' is not a number");
        out.push_back(v);
    }
    return out;
}

std::vector<double> Config::Section::grid(const std::string& key) const {
    const std::string& s = str(key);
    if (s.find(':') == std::string::npos) return reals(key);
    auto parts = split(s, ':');
    double a, b, n;
    if (parts.size() != 3 || !to_double(parts[0], a) || !to_double(parts[1], b) || !to_double(parts[2], n) || n < 2 ||
        n != static_cast<long>(n))
        fail(key, "expected start:stop:count with count >= 2");
    std::vector<double> out;
    for (long i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
    return out;
}

ShearCoordinates Config::Section::shear(const std::string& key) const {
    auto v = reals(key);
    if (v.size() != 3) fail(key, "expected three shear values x, y, z");
    ShearCoordinates s{v[0], v[1], v[2]};
    try {
        s.validate();
    } catch (const Error& e) {
        fail(key, e.what());
    }
    return s;
}

Slope parse_slope(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw Error(ErrorKind::Domain, "slope '" + text + "' is not of the form p/q");
    std::string ps = trim(text.substr(0, slash)), qs = trim(text.substr(slash + 1));
    char *e1 = nullptr, *e2 = nullptr;
    long p = std::strtol(ps.c_str(), &e1, 10), q = std::strtol(qs.c_str(), &e2, 10);
    if (ps.empty() || qs.empty() || *e1 || *e2) throw Error(ErrorKind::Domain, "slope '" + text + "' is not p/q");
    return Slope::make(p, q);
}

Slope Config::Section::slope(const std::string& key) const {
    try {
        return parse_slope(str(key));
    } catch (const Error& e) {
        fail(key, e.what());
    }
}

std::vector<Slope> Config::Section::slopes(const std::string& key) const {
    std::vector<Slope> out;
    for (const auto& s : list(key)) {
        try {
            out.push_back(parse_slope(s));
        } catch (const Error& e) {
            fail(key, e.what());
        }
    }
    return out;
}

std::vector<Word> Config::Section::words(const std::string& key) const {
    std::vector<Word> out;
    for (const auto& s : list(key)) {
        try {
            Word w(s);
            if (w.empty()) fail(key, "trivial word");
            out.push_back(w);
        } catch (const Error& e) {
            fail(key, e.what());
        }
    }
    return out;
}

std::vector<std::pair<Word, double>> Config::Section::weighted_words(const std::string& key) const {
    std::vector<std::pair<Word, double>> out;
    for (const auto& item : list(key)) {
        auto parts = split(item, ':');
        double k = 1;
        if (parts.size() > 2 || (parts.size() == 2 && !to_double(parts[1], k)))
            fail(key, "expected word or word:weight, got '" + item + "'");
        try {
            out.push_back({Word(parts[0]), k});
        } catch (const Error& e) {
            fail(key, e.what());
        }
    }
    return out;
}

FiniteLamination Config::Section::lamination(const std::string& key) const {
    if (!has(key)) return FiniteLamination::triangulation();
    std::istringstream is(str(key));
    std::string kind, slope;
    is >> kind;
    if (kind == "triangulation") return FiniteLamination::triangulation();
    if (kind != "spin") fail(key, "expected 'triangulation' or 'spin p/q [weight]'");
    double weight = 1;
    if (!(is >> slope)) fail(key, "spin lamination needs a slope");
    if (!(is >> weight)) weight = 1;
    try {
        return FiniteLamination::spin(parse_slope(slope), weight);
    } catch (const Error& e) {
        fail(key, e.what());
    }
}

}  // namespace adslen::cli
