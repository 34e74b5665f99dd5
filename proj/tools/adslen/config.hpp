#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "adslen/hyperbolic.hpp"
#include "adslen/mess.hpp"

namespace adslen::cli {

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& file, int line, const std::string& msg);
};

struct Entry {
    std::string value;
    int line = 0;
};

// Flat key = value text with [section] headers; '#' and ';' start comments.
class Config {
public:
    static Config parse(const std::string& text, const std::string& file = "config");
    static Config load(const std::string& path);

    bool has_section(const std::string& s) const { return sections_.count(s) > 0; }
    std::vector<std::string> section_names() const;

    // Typed access into one section. Missing required keys and malformed values throw
    // ConfigError with the offending line.
    class Section {
    public:
        bool has(const std::string& key) const { return entries_.count(key) > 0; }
        std::string str(const std::string& key) const;
        std::string str(const std::string& key, const std::string& fallback) const;
        double real(const std::string& key) const;
        double real(const std::string& key, double fallback) const;
        long integer(const std::string& key) const;
        long integer(const std::string& key, long fallback) const;
        bool flag(const std::string& key, bool fallback) const;
        std::vector<double> reals(const std::string& key) const;
        // "a:b:n" expands to n evenly spaced values from a to b; otherwise a list.
        std::vector<double> grid(const std::string& key) const;
        std::vector<std::string> list(const std::string& key) const;
        ShearCoordinates shear(const std::string& key) const;
        Slope slope(const std::string& key) const;
        std::vector<Slope> slopes(const std::string& key) const;
        std::vector<Word> words(const std::string& key) const;
        // "word:weight" pairs
        std::vector<std::pair<Word, double>> weighted_words(const std::string& key) const;
        // "triangulation" or "spin <p/q> [weight]"
        FiniteLamination lamination(const std::string& key) const;

        [[noreturn]] void fail(const std::string& key, const std::string& msg) const;
        int line(const std::string& key) const;

    private:
        friend class Config;
        const Entry& at(const std::string& key) const;
        std::string file_;
        std::string name_;
        int header_line_ = 0;
        std::map<std::string, Entry> entries_;
    };

    Section section(const std::string& name) const;

private:
    std::string file_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
    std::map<std::string, int> header_lines_;
};

Slope parse_slope(const std::string& text);

}  // namespace adslen::cli
