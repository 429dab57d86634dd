#include "ringlab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringlab/ringspec.hpp"

namespace ringlab::cli {

namespace {

inline constexpr std::size_t kListLimit = 64;

const char* const kFiniteCleanNote =
    "every finite ring is semiperfect, and a ring is semiperfect if and only if it is clean and has no "
    "infinite orthogonal family of idempotents; so every finite ring is clean, and an r-clean element that "
    "is not clean can only occur in an infinite ring";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    bool timing = false;
    std::optional<std::size_t> size_cap;
    int deg_f = 2;
    int deg_g = 4;
    std::size_t parallel = 0;
    std::string reading = "exclude-trivial";
    std::string corpus;
};

std::size_t resolve_cap(const Globals& g)
{
    if (g.size_cap)
        return *g.size_cap;
    if (const char* env = std::getenv("RINGLAB_SIZE_CAP"); env && *env) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v == 0)
            throw UsageError(std::string("RINGLAB_SIZE_CAP must be a positive integer, got '") + env + "'");
        return static_cast<std::size_t>(v);
    }
    return kDefaultSizeCap;
}

VerifyOptions options_of(const Globals& g)
{
    VerifyOptions o;
    o.size_cap = resolve_cap(g);
    o.deg_f = g.deg_f;
    o.deg_g = g.deg_g;
    o.orthogonal = parse_reading(g.reading);
    return o;
}

std::string show(const FiniteRing& ring, Elem x)
{
    auto label = ring.label(x);
    return label == std::to_string(x) ? label : label + " (#" + std::to_string(x) + ")";
}

std::string show_set(const FiniteRing& ring, const std::vector<Elem>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size() && i < kListLimit; ++i)
        out += (i ? ", " : "") + show(ring, xs[i]);
    if (xs.size() > kListLimit)
        out += ", ... (" + std::to_string(xs.size() - kListLimit) + " more)";
    return out + "}";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// describe ------------------------------------------------------------------

int cmd_describe(const Globals& g, const std::string& spec, std::ostream& out)
{
    auto ring = elaborate(spec, resolve_cap(g));
    auto name = print_expr(ring.construction());
    auto p = ring_profile(ring);
    if (g.json) {
        auto res = to_json(ring, p);
        Json els = Json::array();
        for (Elem x = 0; x < ring.order() && x < kListLimit; ++x)
            els.push_back(Json{{"index", x}, {"label", ring.label(x)}});
        res["elements"] = els;
        res["elements_truncated"] = ring.order() > kListLimit;
        emit(out, document("describe", name, std::move(res)));
        return 0;
    }
    out << "ring: " << name << '\n' << "order: " << p.order << '\n';
    std::vector<Elem> all;
    for (Elem x = 0; x < ring.order(); ++x)
        all.push_back(x);
    out << "elements: " << show_set(ring, all) << '\n';
    out << "idempotents: " << show_set(ring, p.idempotents) << '\n';
    out << "central idempotents: " << show_set(ring, p.central_idempotents) << '\n';
    out << "units: " << show_set(ring, p.units) << '\n';
    out << "J(R): " << show_set(ring, p.jacobson_radical) << '\n';
    out << "commutative: " << yes(p.commutative) << '\n';
    out << "local: " << yes(p.local) << '\n';
    out << "regular: " << yes(p.regular);
    if (p.not_regular)
        out << " (" << show(ring, *p.not_regular) << " is not regular)";
    out << '\n';
    out << "clean: " << yes(p.clean) << '\n';
    out << "r-clean: " << yes(p.r_clean) << '\n';
    out << "exchange: " << yes(p.exchange) << '\n';
    out << "directly finite: " << yes(p.directly_finite) << '\n';
    out << "semiperfect: " << yes(p.semiperfect) << '\n';
    for (const auto& n : p.notes)
        out << "note: " << n << '\n';
    return 0;
}

// classify ------------------------------------------------------------------

int cmd_classify(const Globals& g, const std::string& spec, const std::string& elem, std::ostream& out)
{
    auto ring = elaborate(spec, resolve_cap(g));
    auto name = print_expr(ring.construction());
    auto x = parse_element(ring, elem);
    auto c = classify_element(ring, x);
    if (g.json) {
        emit(out, document("classify", name, to_json(ring, c)));
        return 0;
    }
    auto s = [&](Elem e) { return show(ring, e); };
    out << "ring: " << name << '\n' << "element: " << s(x) << '\n';
    out << "unit: " << yes(c.unit);
    if (c.inverse)
        out << "  inverse " << s(*c.inverse);
    out << '\n' << "idempotent: " << yes(c.idempotent) << '\n';
    out << "nilpotent: " << yes(c.nilpotent);
    if (c.nilpotency_index)
        out << "  index " << *c.nilpotency_index;
    out << '\n' << "regular: " << yes(c.regular);
    if (c.regular_witness)
        out << "  y = " << s(c.regular_witness->y);
    out << '\n' << "unit-regular: " << yes(c.unit_regular);
    if (c.unit_regular_witness)
        out << "  u = " << s(*c.unit_regular_witness);
    out << '\n' << "central: " << yes(c.central) << '\n';
    out << "clean: " << yes(c.clean);
    if (c.clean_witness)
        out << "  u = " << s(c.clean_witness->u) << ", e = " << s(c.clean_witness->e);
    out << '\n' << "r-clean: " << yes(c.r_clean);
    if (c.r_clean_witness)
        out << "  r = " << s(c.r_clean_witness->r) << ", e = " << s(c.r_clean_witness->e)
            << ", y = " << s(c.r_clean_witness->y);
    out << '\n' << "exchange: " << yes(c.exchange);
    if (c.exchange_witness)
        out << "  e = " << s(*c.exchange_witness);
    out << '\n';
    return 0;
}

// verify --------------------------------------------------------------------

void print_report(std::ostream& out, const VerifyReport& r)
{
    out << "theorem: " << r.theorem << '\n' << "ring: " << r.ring << '\n' << "verdict: " << to_string(r.verdict) << '\n';
    for (const auto& h : r.hypotheses) {
        out << "hypothesis [" << to_string(h.status) << "] " << h.name;
        if (!h.detail.empty())
            out << ": " << h.detail;
        out << '\n';
    }
    if (r.counterexample)
        out << "counterexample: " << *r.counterexample << '\n';
    const auto& s = r.stats;
    out << "elements checked: " << s.elements_checked << ", witnesses produced: " << s.witnesses_produced
        << ", constructive: " << s.constructive_certified << ", search: " << s.brute_force_certified
        << ", discrepancies: " << s.discrepancies << '\n';
    for (const auto& n : r.notes)
        out << "note: " << n << '\n';
}

int cmd_verify(const Globals& g, const std::string& spec, const std::string& theorem, std::ostream& out)
{
    auto id = theorem_from_name(theorem);
    if (!id) {
        std::string names;
        for (auto t : all_theorems())
            names += "\n  " + std::string(theorem_name(t));
        throw UsageError("unknown theorem '" + theorem + "'; available:" + names);
    }
    auto opts = options_of(g);
    auto ring = elaborate(spec, opts.size_cap);
    auto start = std::chrono::steady_clock::now();
    auto report = run_theorem(*id, ring, opts);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (g.json) {
        auto doc = document("verify", report.ring, to_json(report));
        if (g.timing)
            doc["timing_ms"] = ms;
        emit(out, doc);
    } else {
        print_report(out, report);
        if (g.timing)
            out << "time: " << ms << " ms\n";
    }
    return report.verdict == Verdict::Counterexample ? 1 : 0;
}

// suite ---------------------------------------------------------------------

CorpusConfig corpus_of(const Globals& g, bool explicit_options[3])
{
    auto c = g.corpus.empty() ? default_corpus() : load_config(g.corpus);
    // Command-line flags override the file.
    if (g.size_cap || std::getenv("RINGLAB_SIZE_CAP") || g.corpus.empty())
        c.options.size_cap = resolve_cap(g);
    if (explicit_options[0] || g.corpus.empty())
        c.options.deg_f = g.deg_f;
    if (explicit_options[1] || g.corpus.empty())
        c.options.deg_g = g.deg_g;
    if (explicit_options[2] || g.corpus.empty())
        c.options.orthogonal = parse_reading(g.reading);
    if (g.parallel)
        c.parallel = g.parallel;
    return c;
}

char code(Verdict v)
{
    switch (v) {
    case Verdict::Verified:
        return 'V';
    case Verdict::NotApplicable:
        return '-';
    case Verdict::Counterexample:
        return 'X';
    case Verdict::Skipped:
        return 'S';
    }
    return '?';
}

int cmd_suite(const Globals& g, bool explicit_options[3], std::ostream& out)
{
    auto config = corpus_of(g, explicit_options);
    auto start = std::chrono::steady_clock::now();
    auto result = run_suite(config);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (g.json) {
        auto doc = document("suite", "", to_json(result));
        if (g.timing)
            doc["timing_ms"] = ms;
        emit(out, doc);
        return result.failures() ? 1 : 0;
    }

    std::vector<std::string> names;
    for (const auto& r : result.reports)
        if (std::find(names.begin(), names.end(), r.theorem) == names.end())
            names.push_back(r.theorem);
    std::sort(names.begin(), names.end());
    out << "theorems:\n";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << "  " << (i < 9 ? " " : "") << i + 1 << "  " << names[i] << '\n';
    out << "legend: V verified, - not applicable, X counterexample, S skipped\n\n";

    std::size_t width = 4;
    for (const auto& r : result.rings)
        width = std::max(width, r.ring.size());
    out << std::string(width, ' ') << "  order  clean  r-clean  ";
    for (std::size_t i = 0; i < names.size(); ++i)
        out << (i + 1) % 10;
    out << '\n';
    std::size_t k = 0;
    for (const auto& ring : result.rings) {
        std::ostringstream order;
        order << ring.order;
        out << ring.ring << std::string(width - ring.ring.size(), ' ') << "  " << std::string(5 - std::min<std::size_t>(5, order.str().size()), ' ')
            << order.str() << "  " << (ring.error ? "  -  " : ring.clean ? " yes " : " NO  ") << "  "
            << (ring.error ? "   -   " : ring.r_clean ? "  yes  " : "  NO   ") << "  ";
        std::string row(names.size(), ' ');
        while (k < result.reports.size() && result.reports[k].ring == ring.ring) {
            auto pos = std::find(names.begin(), names.end(), result.reports[k].theorem) - names.begin();
            row[static_cast<std::size_t>(pos)] = code(result.reports[k].verdict);
            ++k;
        }
        out << row << '\n';
    }
    out << '\n';
    for (const auto& ring : result.rings)
        if (ring.error)
            out << "skipped " << ring.ring << ": " << *ring.error << '\n';
    for (const auto& r : result.reports)
        if (r.verdict == Verdict::Counterexample)
            out << "counterexample " << r.theorem << " on " << r.ring << ": " << r.counterexample.value_or("") << '\n';
    out << "summary: " << result.count(Verdict::Verified) << " verified, " << result.count(Verdict::NotApplicable)
        << " not applicable, " << result.count(Verdict::Counterexample) << " counterexamples, "
        << result.count(Verdict::Skipped) << " skipped\n";
    if (!result.rings.empty())
        out << "every ring built is clean and r-clean: " << yes(result.failures() == result.count(Verdict::Counterexample))
            << " (" << kFiniteCleanNote << ")\n";
    if (g.timing)
        out << "time: " << ms << " ms\n";
    return result.failures() ? 1 : 0;
}

// radical -------------------------------------------------------------------

int cmd_radical(const Globals& g, const std::string& spec, std::ostream& out)
{
    auto ring = elaborate(spec, resolve_cap(g));
    auto name = print_expr(ring.construction());
    auto jac = jacobson_radical(ring);
    if (g.json) {
        Json els = Json::array();
        for (auto x : jac)
            els.push_back(Json{{"index", x}, {"label", ring.label(x)}});
        emit(out, document("radical", name, Json{{"jacobson_radical", els}}));
        return 0;
    }
    out << "J(" << name << ") = " << show_set(ring, jac) << '\n';
    return 0;
}

// search --------------------------------------------------------------------

struct Flag {
    std::string name;
    std::string value; // "", "true" or "false"
};

using Predicate = std::function<bool(const RingFacts&, Elem)>;

Predicate predicate_of(const std::string& name)
{
    if (name == "unit")
        return [](const RingFacts& f, Elem x) { return f.inverse(x).has_value(); };
    if (name == "idempotent")
        return [](const RingFacts& f, Elem x) { return is_idempotent(f.ring(), x); };
    if (name == "nilpotent")
        return [](const RingFacts& f, Elem x) { return is_nilpotent(f.ring(), x).has_value(); };
    if (name == "regular")
        return [](const RingFacts& f, Elem x) { return f.is_regular(x); };
    if (name == "unit-regular")
        return [](const RingFacts& f, Elem x) { return unit_regular_witness(f.ring(), x).has_value(); };
    if (name == "central")
        return [](const RingFacts& f, Elem x) { return is_central(f.ring(), x); };
    if (name == "clean")
        return [](const RingFacts& f, Elem x) { return f.clean_witness(x).has_value(); };
    if (name == "r-clean")
        return [](const RingFacts& f, Elem x) { return f.r_clean_witness(x).has_value(); };
    return [](const RingFacts& f, Elem x) { return exchange_witness(f.ring(), x).has_value(); };
}

int cmd_search(const Globals& g, const std::optional<std::string>& spec, const std::vector<Flag>& flags,
               std::ostream& out)
{
    std::vector<std::string> specs;
    if (spec)
        specs.push_back(*spec);
    else
        specs = g.corpus.empty() ? default_corpus_rings() : load_config(g.corpus).rings;
    auto cap = resolve_cap(g);

    std::vector<std::pair<Predicate, bool>> query;
    Json query_json = Json::object();
    std::string query_text;
    bool rclean_not_clean = false;
    bool want_rclean = false, want_not_clean = false;
    for (const auto& f : flags) {
        if (f.value.empty())
            continue;
        bool v = f.value == "true";
        query.emplace_back(predicate_of(f.name), v);
        query_json[f.name] = v;
        query_text += (query_text.empty() ? "" : " and ") + std::string(v ? "" : "not ") + f.name;
        want_rclean |= f.name == "r-clean" && v;
        want_not_clean |= f.name == "clean" && !v;
    }
    rclean_not_clean = want_rclean && want_not_clean;
    if (query_text.empty())
        query_text = "any element";

    Json rings = Json::array();
    std::size_t total = 0;
    for (const auto& s : specs) {
        auto ring = elaborate(s, cap);
        RingFacts facts(ring);
        std::vector<Elem> hits;
        for (Elem x = 0; x < ring.order(); ++x) {
            bool ok = true;
            for (const auto& [p, v] : query)
                if (p(facts, x) != v) {
                    ok = false;
                    break;
                }
            if (ok)
                hits.push_back(x);
        }
        total += hits.size();
        auto name = print_expr(ring.construction());
        if (g.json) {
            Json els = Json::array();
            for (auto x : hits)
                els.push_back(Json{{"index", x}, {"label", ring.label(x)}});
            rings.push_back(Json{{"ring", name}, {"order", ring.order()}, {"matches", els}});
        } else {
            out << name << ": " << show_set(ring, hits) << '\n';
        }
    }
    std::string footnote = rclean_not_clean ? kFiniteCleanNote : "";
    if (g.json) {
        Json res{{"query", query_json}, {"rings", rings}, {"total_matches", total}};
        if (!footnote.empty())
            res["footnote"] = footnote;
        emit(out, document("search", spec.value_or(""), std::move(res)));
    } else {
        out << "query: " << query_text << "; " << total << " matches in " << specs.size() << " ring"
            << (specs.size() == 1 ? "" : "s") << '\n';
        if (!footnote.empty())
            out << "note: " << footnote << '\n';
    }
    return 0;
}

void print_parse_error(std::ostream& err, const std::string& spec, const ParseError& e)
{
    err << "error: " << e.what() << '\n';
    if (spec.find('\n') == std::string::npos && e.position() <= spec.size())
        err << "  " << spec << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite rings, r-clean elements and constructive checks of statements about them.", "ringlab"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--timing", g.timing, "Report wall-clock time");
    app.add_option("--size-cap", g.size_cap, "Largest ring order to build (default 20000, or RINGLAB_SIZE_CAP)")
        ->check(CLI::PositiveNumber);
    auto* opt_deg_f = app.add_option("--deg-f", g.deg_f, "Degree cap for f in polynomial checks")
                          ->check(CLI::Range(0, kMaxPolyDegree));
    auto* opt_deg_g = app.add_option("--deg-g", g.deg_g, "Degree cap for g in polynomial checks")
                          ->check(CLI::Range(0, kMaxPolyDegree));
    app.add_option("--parallel", g.parallel, "Suite worker threads (default: hardware threads)")
        ->check(CLI::PositiveNumber);
    auto* opt_reading = app.add_option("--orthogonal-interpretation", g.reading,
                                       "Reading of 'each pair of idempotents is orthogonal'")
                            ->check(CLI::IsMember({"exclude-trivial", "all-pairs"}));
    app.add_option("--corpus", g.corpus, "Corpus config file for suite and search");

    std::string spec, element, theorem;
    std::optional<std::string> search_spec;

    auto* describe = app.add_subcommand("describe", "Order, elements, idempotents, units, J(R) and ring flags");
    describe->add_option("ring", spec, "Ring spec, e.g. \"M2(Z2)\"")->required();

    auto* classify = app.add_subcommand("classify", "Classify one element, with witnesses");
    classify->add_option("ring", spec, "Ring spec")->required();
    classify->add_option("element", element, "Element literal: index, (a,b), [[a,b],[c,d]], {a} or <a>")->required();

    auto* verify = app.add_subcommand("verify", "Run one theorem verifier");
    verify->add_option("ring", spec, "Ring spec")->required();
    verify->add_option("theorem", theorem, "Theorem id")->required();

    auto* suite = app.add_subcommand("suite", "Run every verifier on every corpus ring");

    auto* radical = app.add_subcommand("radical", "List the Jacobson radical");
    radical->add_option("ring", spec, "Ring spec")->required();

    auto* search = app.add_subcommand("search", "List elements matching classification flags");
    search->add_option("ring", search_spec, "Ring spec (default: every corpus ring)");
    std::vector<Flag> flags;
    for (const char* name : {"unit", "idempotent", "nilpotent", "regular", "unit-regular", "central", "clean", "r-clean",
                             "exchange"})
        flags.push_back({name, ""});
    for (auto& f : flags)
        search->add_option("--" + f.name, f.value, "true or false")->check(CLI::IsMember({"true", "false"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    const std::string& shown = search_spec && search->parsed() ? *search_spec : spec;
    try {
        if (describe->parsed())
            return cmd_describe(g, spec, out);
        if (classify->parsed())
            return cmd_classify(g, spec, element, out);
        if (verify->parsed())
            return cmd_verify(g, spec, theorem, out);
        if (radical->parsed())
            return cmd_radical(g, spec, out);
        if (search->parsed())
            return cmd_search(g, search_spec, flags, out);
        if (suite->parsed()) {
            bool explicit_options[3] = {opt_deg_f->count() > 0, opt_deg_g->count() > 0, opt_reading->count() > 0};
            return cmd_suite(g, explicit_options, out);
        }
    } catch (const ParseError& e) {
        print_parse_error(err, shown, e);
        return 2;
    } catch (const SizeCapError& e) {
        err << "error: size cap: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace ringlab::cli
