#include "ringlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ringlab/ringspec.hpp"

namespace ringlab::cli {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::uint64_t positive(std::string_view key, std::string_view value, std::size_t line, bool allow_zero = false)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || (!allow_zero && v == 0))
        throw ConfigError("line " + std::to_string(line) + ": " + std::string(key) + " needs a " +
                          (allow_zero ? "non-negative" : "positive") + " integer, got '" + std::string(value) + "'");
    return v;
}

} // namespace

std::vector<std::string> default_corpus_rings()
{
    std::vector<std::string> out;
    for (int n = 2; n <= 12; ++n)
        out.push_back("Z" + std::to_string(n));
    for (const char* s : {"Z4 x Z6", "Z2 x Z2 x Z3", "M2(Z2)", "M2(Z3)", "M2(Z4)", "T2(Z2)", "T2(Z3)", "T3(Z2)",
                          "Z9[C2]", "Z3[C2]", "Z6[C2]", "Z4[x]/x^2", "Z8/(4)", "corner(Z6,3)", "corner(Z12,4)"})
        out.emplace_back(s);
    return out;
}

CorpusConfig default_corpus()
{
    CorpusConfig c;
    c.rings = default_corpus_rings();
    return c;
}

OrthogonalReading parse_reading(std::string_view text)
{
    if (text == "exclude-trivial")
        return OrthogonalReading::ExcludeTrivial;
    if (text == "all-pairs")
        return OrthogonalReading::AllPairs;
    throw ConfigError("orthogonal interpretation must be exclude-trivial or all-pairs, got '" + std::string(text) + "'");
}

std::string_view reading_name(OrthogonalReading r)
{
    return r == OrthogonalReading::ExcludeTrivial ? "exclude-trivial" : "all-pairs";
}

CorpusConfig parse_config(std::string_view text)
{
    CorpusConfig c;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        auto key = trim(s.substr(0, eq));
        auto value = trim(s.substr(eq + 1));
        if (key == "ring") {
            try {
                parse_ring(value);
            } catch (const ParseError& e) {
                throw ConfigError("line " + std::to_string(line) + ": ring '" + std::string(value) + "': " + e.what());
            }
            c.rings.emplace_back(value);
        } else if (key == "theorem") {
            auto id = theorem_from_name(value);
            if (!id)
                throw ConfigError("line " + std::to_string(line) + ": unknown theorem '" + std::string(value) + "'");
            c.theorems.push_back(*id);
        } else if (key == "deg-f") {
            c.options.deg_f = static_cast<int>(std::min<std::uint64_t>(positive(key, value, line, true), kMaxPolyDegree + 1));
        } else if (key == "deg-g") {
            c.options.deg_g = static_cast<int>(std::min<std::uint64_t>(positive(key, value, line, true), kMaxPolyDegree + 1));
        } else if (key == "size-cap") {
            c.options.size_cap = positive(key, value, line);
        } else if (key == "parallel") {
            c.parallel = positive(key, value, line);
        } else if (key == "orthogonal-interpretation") {
            c.options.orthogonal = parse_reading(value);
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
        }
    }
    if (c.options.deg_f > kMaxPolyDegree || c.options.deg_g > kMaxPolyDegree)
        throw ConfigError("degree caps must be at most " + std::to_string(kMaxPolyDegree));
    return c;
}

CorpusConfig load_config(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_config(buf.str());
}

} // namespace ringlab::cli
