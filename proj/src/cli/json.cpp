#include "ringlab/cli.hpp"

namespace ringlab::cli {

namespace {

template <typename Enum, std::size_t N>
Enum enum_from(const Json& j, const std::array<Enum, N>& values, std::string_view what)
{
    auto s = j.get<std::string>();
    for (auto v : values)
        if (to_string(v) == s)
            return v;
    throw std::runtime_error("unknown " + std::string(what) + " '" + s + "'");
}

constexpr std::array kVerdicts = {Verdict::Verified, Verdict::NotApplicable, Verdict::Counterexample, Verdict::Skipped};
constexpr std::array kStatuses = {CheckStatus::Pass, CheckStatus::Fail, CheckStatus::NotApplicable};

Json element(const FiniteRing& ring, Elem x) { return Json{{"index", x}, {"label", ring.label(x)}}; }

template <typename T, typename F>
Json optional_json(const std::optional<T>& v, F&& f)
{
    return v ? f(*v) : Json(nullptr);
}

Json elements(const FiniteRing& ring, const std::vector<Elem>& xs)
{
    Json a = Json::array();
    for (auto x : xs)
        a.push_back(element(ring, x));
    return a;
}

} // namespace

Json to_json(const VerifyReport& r)
{
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses)
        hyps.push_back({{"name", h.name}, {"status", to_string(h.status)}, {"detail", h.detail}});
    return Json{
        {"theorem", r.theorem},
        {"ring", r.ring},
        {"verdict", to_string(r.verdict)},
        {"hypotheses", hyps},
        {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
        {"stats",
         {{"elements_checked", r.stats.elements_checked},
          {"witnesses_produced", r.stats.witnesses_produced},
          {"constructive_certified", r.stats.constructive_certified},
          {"brute_force_certified", r.stats.brute_force_certified},
          {"discrepancies", r.stats.discrepancies}}},
        {"notes", r.notes},
    };
}

VerifyReport report_from_json(const Json& j)
{
    VerifyReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.ring = j.at("ring").get<std::string>();
    r.verdict = enum_from(j.at("verdict"), kVerdicts, "verdict");
    for (const auto& h : j.at("hypotheses"))
        r.hypotheses.push_back({h.at("name").get<std::string>(), enum_from(h.at("status"), kStatuses, "status"),
                                h.at("detail").get<std::string>()});
    if (!j.at("counterexample").is_null())
        r.counterexample = j.at("counterexample").get<std::string>();
    const auto& s = j.at("stats");
    r.stats.elements_checked = s.at("elements_checked").get<std::uint64_t>();
    r.stats.witnesses_produced = s.at("witnesses_produced").get<std::uint64_t>();
    r.stats.constructive_certified = s.at("constructive_certified").get<std::uint64_t>();
    r.stats.brute_force_certified = s.at("brute_force_certified").get<std::uint64_t>();
    r.stats.discrepancies = s.at("discrepancies").get<std::uint64_t>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const FiniteRing& ring, const ElementClass& c)
{
    auto el = [&](Elem x) { return element(ring, x); };
    return Json{
        {"element", el(c.element)},
        {"unit", c.unit},
        {"inverse", optional_json(c.inverse, el)},
        {"idempotent", c.idempotent},
        {"nilpotent", c.nilpotent},
        {"nilpotency_index", optional_json(c.nilpotency_index, [](std::size_t k) { return Json(k); })},
        {"regular", c.regular},
        {"regular_witness", optional_json(c.regular_witness, [&](const RegularWitness& w) { return Json{{"y", el(w.y)}}; })},
        {"unit_regular", c.unit_regular},
        {"unit_regular_witness", optional_json(c.unit_regular_witness, el)},
        {"central", c.central},
        {"clean", c.clean},
        {"clean_witness",
         optional_json(c.clean_witness, [&](const CleanWitness& w) { return Json{{"u", el(w.u)}, {"e", el(w.e)}}; })},
        {"r_clean", c.r_clean},
        {"r_clean_witness", optional_json(c.r_clean_witness,
                                          [&](const RCleanWitness& w) {
                                              return Json{{"r", el(w.r)}, {"e", el(w.e)}, {"y", el(w.y)}};
                                          })},
        {"exchange", c.exchange},
        {"exchange_witness", optional_json(c.exchange_witness, el)},
    };
}

Json to_json(const FiniteRing& ring, const RingProfile& p)
{
    auto el = [&](Elem x) { return element(ring, x); };
    auto pair = [&](const std::pair<Elem, Elem>& ab) { return Json::array({el(ab.first), el(ab.second)}); };
    return Json{
        {"order", p.order},
        {"flags",
         {{"commutative", p.commutative},
          {"local", p.local},
          {"regular", p.regular},
          {"clean", p.clean},
          {"r_clean", p.r_clean},
          {"exchange", p.exchange},
          {"directly_finite", p.directly_finite},
          {"semiperfect", p.semiperfect}}},
        {"first_failures",
         {{"not_regular", optional_json(p.not_regular, el)},
          {"not_clean", optional_json(p.not_clean, el)},
          {"not_r_clean", optional_json(p.not_r_clean, el)},
          {"not_exchange", optional_json(p.not_exchange, el)},
          {"not_directly_finite", optional_json(p.not_directly_finite, pair)},
          {"not_commutative", optional_json(p.not_commutative, pair)}}},
        {"idempotents", elements(ring, p.idempotents)},
        {"central_idempotents", elements(ring, p.central_idempotents)},
        {"units", elements(ring, p.units)},
        {"jacobson_radical", elements(ring, p.jacobson_radical)},
        {"notes", p.notes},
    };
}

Json to_json(const SuiteResult& s)
{
    Json rings = Json::array();
    for (const auto& r : s.rings)
        rings.push_back({{"ring", r.ring},
                         {"order", r.order},
                         {"clean", r.clean},
                         {"r_clean", r.r_clean},
                         {"error", r.error ? Json(*r.error) : Json(nullptr)}});
    Json reports = Json::array();
    for (const auto& r : s.reports)
        reports.push_back(to_json(r));
    return Json{
        {"summary",
         {{"verified", s.count(Verdict::Verified)},
          {"not_applicable", s.count(Verdict::NotApplicable)},
          {"counterexample", s.count(Verdict::Counterexample)},
          {"skipped", s.count(Verdict::Skipped)},
          {"failures", s.failures()}}},
        {"rings", rings},
        {"reports", reports},
    };
}

SuiteResult suite_from_json(const Json& j)
{
    SuiteResult s;
    for (const auto& r : j.at("rings")) {
        RingSummary rs;
        rs.ring = r.at("ring").get<std::string>();
        rs.order = r.at("order").get<std::size_t>();
        rs.clean = r.at("clean").get<bool>();
        rs.r_clean = r.at("r_clean").get<bool>();
        if (!r.at("error").is_null())
            rs.error = r.at("error").get<std::string>();
        s.rings.push_back(std::move(rs));
    }
    for (const auto& r : j.at("reports"))
        s.reports.push_back(report_from_json(r));
    return s;
}

Json document(std::string_view command, std::string_view ring, Json results)
{
    return Json{
        {"schema_version", kSchemaVersion},
        {"tool_version", kToolVersion},
        {"command", command},
        {"ring", ring},
        {"results", std::move(results)},
    };
}

} // namespace ringlab::cli
