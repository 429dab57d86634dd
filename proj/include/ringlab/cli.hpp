#pragma once

// Command-line front end: corpus configuration, the suite runner, JSON
// documents and the subcommand dispatcher.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ringlab/classify.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusConfig {
    std::vector<std::string> rings;
    /// Empty selects every theorem.
    std::vector<TheoremId> theorems;
    VerifyOptions options;
    /// 0 selects the number of hardware threads.
    std::size_t parallel = 0;
};

std::vector<std::string> default_corpus_rings();
CorpusConfig default_corpus();

/**
 * Config files are flat "key = value" lines; '#' starts a comment. Keys:
 *   ring = <spec>            one per line, accumulates
 *   theorem = <id>           one per line, accumulates
 *   deg-f, deg-g, size-cap, parallel = <integer>
 *   orthogonal-interpretation = exclude-trivial | all-pairs
 * A file without ring lines yields an empty corpus.
 */
CorpusConfig parse_config(std::string_view text);
CorpusConfig load_config(const std::string& path);

OrthogonalReading parse_reading(std::string_view text);
std::string_view reading_name(OrthogonalReading r);

struct RingSummary {
    std::string ring;
    std::size_t order = 0;
    bool clean = false;
    bool r_clean = false;
    /// Set when the ring could not be built; its theorems are then skipped.
    std::optional<std::string> error;

    friend bool operator==(const RingSummary&, const RingSummary&) = default;
};

struct SuiteResult {
    std::vector<RingSummary> rings;
    /// Sorted by (ring spec, theorem id).
    std::vector<VerifyReport> reports;

    std::size_t count(Verdict v) const;
    /// Counterexamples plus rings whose clean and r-clean flags are not both true.
    std::size_t failures() const;
};

SuiteResult run_suite(const CorpusConfig& config);

// JSON
Json to_json(const VerifyReport& r);
VerifyReport report_from_json(const Json& j);
Json to_json(const FiniteRing& ring, const ElementClass& c);
Json to_json(const FiniteRing& ring, const RingProfile& p);
Json to_json(const SuiteResult& s);
SuiteResult suite_from_json(const Json& j);
/// Top-level envelope with schema_version, tool_version, command and ring.
Json document(std::string_view command, std::string_view ring, Json results);

/// Entry point behind the ringlab executable. Returns the process exit code:
/// 0 verified or not applicable, 1 counterexample, 2 usage, parse or size error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ringlab::cli
