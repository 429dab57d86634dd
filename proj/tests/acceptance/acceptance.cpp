// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/ringspec.hpp"

using namespace ringlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string run_cli(std::vector<std::string> args, int* code = nullptr)
{
    args.insert(args.begin(), "ringlab");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (code)
        *code = rc;
    return out.str() + err.str();
}

// Plain modular arithmetic, independent of the ring engine.
bool z4_r_clean(unsigned x, unsigned r, unsigned e, unsigned y)
{
    return (r + e) % 4 == x && (r * y * r) % 4 == r && (e * e) % 4 == e;
}

Outcome criterion1()
{
    Outcome o;
    auto start = Clock::now();
    auto z4 = elaborate("Z4");
    auto two = classify_element(z4, 2);
    o.require(!two.regular, "2 reported regular");
    for (unsigned y = 0; y < 4; ++y)
        o.require((2 * y * 2) % 4 != 2, "2 regular by integer arithmetic");
    auto p = ring_profile(z4);
    o.require(p.r_clean && p.clean, "Z4 not reported clean and r-clean");
    o.require(!p.regular && p.not_regular == Elem{2}, "Z4 regularity misreported");
    for (Elem x = 0; x < 4; ++x) {
        auto c = classify_element(z4, x);
        if (!c.r_clean_witness || !c.clean_witness) {
            o.require(false, "missing witness for " + std::to_string(x));
            continue;
        }
        auto w = *c.r_clean_witness;
        o.require(z4_r_clean(x, w.r, w.e, w.y), "r-clean witness of " + std::to_string(x) + " fails mod 4");
        auto cw = *c.clean_witness;
        bool unit = false;
        for (unsigned v = 0; v < 4; ++v)
            unit = unit || (cw.u * v) % 4 == 1;
        o.require((cw.u + cw.e) % 4 == x && unit && (cw.e * cw.e) % 4 == cw.e,
                  "clean witness of " + std::to_string(x) + " fails mod 4");
    }
    auto w2 = *two.r_clean_witness;
    o.require(w2 == RCleanWitness{1, 1, 1}, "witness of 2 is not r = 1, e = 1, y = 1");
    auto t = seconds_since(start);
    o.require(t < 1.0, "took " + std::to_string(t) + " s");
    std::ostringstream d;
    d << "2 not regular, Z4 clean and r-clean, witnesses rechecked mod 4, " << t << " s";
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome criterion2(const cli::SuiteResult& s, double seconds)
{
    Outcome o;
    o.require(s.count(Verdict::Counterexample) == 0, std::to_string(s.count(Verdict::Counterexample)) + " counterexamples");
    o.require(s.count(Verdict::Skipped) == 0, std::to_string(s.count(Verdict::Skipped)) + " skipped");
    for (const auto& r : s.rings)
        o.require(!r.error, r.ring + " not built");
    o.require(s.failures() == 0, "suite failures");
    o.require(seconds < 300, "took " + std::to_string(seconds) + " s");
    std::ostringstream d;
    d << s.rings.size() << " rings, " << s.count(Verdict::Verified) << " verified, "
      << s.count(Verdict::NotApplicable) << " not applicable, 0 counterexamples, " << seconds << " s";
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome criterion3(const cli::SuiteResult& s, const std::vector<std::string>& corpus)
{
    Outcome o;
    std::uint64_t compared = 0;
    for (const auto& r : s.reports) {
        compared += r.stats.elements_checked;
        o.require(r.stats.discrepancies == 0, r.theorem + " on " + r.ring + " has discrepancies");
    }
    // Independent recheck of the transforms against definitional scans.
    std::uint64_t rechecked = 0;
    for (const auto& spec : corpus) {
        auto ring = elaborate(spec);
        auto mask = oracle::r_clean_mask(ring);
        auto one = ring.one();
        std::vector<char> transferred(ring.order(), 0);
        for (Elem x = 0; x < ring.order(); ++x) {
            auto w = r_clean_witness(ring, x);
            if (!w)
                continue;
            auto y = ring.sub(one, x);
            auto t = transfer_one_minus_x(ring, x, *w);
            if (ring.add(t.r, t.e) == y && ring.mul(ring.mul(t.r, t.y), t.r) == t.r && ring.mul(t.e, t.e) == t.e)
                transferred[y] = 1;
        }
        o.require(transferred == mask, "1 - x transfer on " + spec);
        auto two_inv = oracle::unit(ring, ring.from_int(2));
        if (two_inv && ring.order() > 1) {
            for (Elem x = 0; x < ring.order(); ++x) {
                auto w = sqrt_decompose(ring, x);
                bool ok = w && ring.mul(w->t, w->t) == one && ring.add(w->t, w->r) == x &&
                          ring.mul(ring.mul(w->r, w->y), w->r) == w->r;
                o.require(ok == (mask[(ring.mul(*is_unit(ring, ring.from_int(2)), ring.add(x, one)))] != 0),
                          "square root decomposition on " + spec);
            }
        }
        for (auto e : central_idempotents(ring)) {
            auto rep = assemble_pierce(ring, e);
            if (rep.verdict != Verdict::Verified)
                continue;
            std::uint64_t n = 0;
            for (auto m : mask)
                n += m;
            o.require(rep.stats.constructive_certified == n, "Pierce assembly on " + spec);
        }
        rechecked += ring.order();
    }
    for (auto spec : {"T2(Z2)", "T2(Z3)", "T2(Z2)^upper"}) {
        auto rep = project_triangular(elaborate(spec));
        o.require(rep.verified() && rep.stats.discrepancies == 0, std::string("triangular projection on ") + spec);
    }
    for (auto spec : {"Z3", "Z5", "Z9", "Z7", "Z11"}) {
        auto rep = group_ring_c2_iso(elaborate(spec));
        auto rg = elaborate(std::string(spec) + "[C2]");
        std::uint64_t n = 0;
        for (auto m : oracle::r_clean_mask(rg))
            n += m;
        o.require(rep.verified() && rep.stats.discrepancies == 0 && n == rg.order(),
                  std::string("C2 transport on ") + spec);
    }
    if (o.pass)
        o.detail = "0 discrepancies over " + std::to_string(compared) + " suite comparisons; " +
                   std::to_string(rechecked) + " elements rechecked against definitional scans";
    return o;
}

Outcome criterion4(const std::vector<std::string>& corpus)
{
    Outcome o;
    std::uint64_t n = 0;
    for (const auto& spec : corpus) {
        auto ring = elaborate(spec);
        for (Elem x = 0; x < ring.order(); ++x, ++n) {
            auto c = classify_element(ring, x);
            auto at = spec + " at " + ring.label(x);
            o.require(!c.unit || c.clean, "unit not clean: " + at);
            o.require(!c.clean || c.r_clean, "clean not r-clean: " + at);
            o.require(!c.regular || c.r_clean, "regular not r-clean: " + at);
            o.require(!c.unit_regular || c.regular, "unit-regular not regular: " + at);
            o.require(!c.clean || c.exchange, "clean not exchange: " + at);
            o.require(c.r_clean == oracle::r_clean(ring, x), "r-clean flag disagrees with oracle: " + at);
        }
    }
    if (o.pass)
        o.detail = "all implications hold on " + std::to_string(n) + " elements";
    return o;
}

bool has_note(const VerifyReport& r, const std::string& text)
{
    for (const auto& n : r.notes)
        if (n.find(text) != std::string::npos)
            return true;
    return false;
}

Outcome criterion5(const std::vector<std::string>& corpus)
{
    Outcome o;
    auto start = Clock::now();
    for (auto spec : {"Z4", "Z6", "Z8", "Z9"}) {
        auto rep = verify_poly_lemma(elaborate(spec), 2, 4);
        o.require(rep.verified() && rep.stats.discrepancies == 0, std::string("lemma violation on ") + spec);
        o.require(has_note(rep, "bounded evidence"), std::string("evidence label missing on ") + spec);
    }
    auto z4 = elaborate("Z4");
    BoundedPolynomial f(z4, {1, 2});
    auto g = poly_regular_witness_search(f, 4);
    o.require(g && poly_mul(poly_mul(f, *g), f) == f, "1+2x not found regular over Z4");
    auto z4rep = verify_poly_lemma(z4, 2, 4);
    o.require(!has_note(z4rep, ", 0 nonconstant"), "no nonconstant regular polynomial over Z4");
    std::size_t rings = 0;
    for (const auto& spec : corpus) {
        auto ring = elaborate(spec);
        if (!is_commutative(ring) || ring.order() < 2)
            continue;
        ++rings;
        auto rep = verify_x_not_rclean(ring, 6);
        o.require(rep.verified() && rep.stats.constructive_certified == 0, "x - e regular on " + spec);
        o.require(has_note(rep, "complete: 1 is not nilpotent"), "nilpotency route missing on " + spec);
    }
    auto t = seconds_since(start);
    o.require(t < 120, "took " + std::to_string(t) + " s");
    if (o.pass) {
        std::ostringstream d;
        d << "lemma holds on Z4, Z6, Z8, Z9 at (2,4), 1+2x regular over Z4; x - e not regular up to degree 6 on "
          << rings << " commutative rings; " << t << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome criterion6()
{
    Outcome o;
    auto start = Clock::now();
    std::mt19937_64 rng(20261015);
    std::size_t accepted = 0;
    for (int i = 0; i < 100000; ++i) {
        std::string s;
        if (i % 4 == 0) {
            s.resize(gen::small(rng, 0, 40));
            for (auto& c : s)
                c = static_cast<char>(gen::small(rng, 0, 255));
        } else {
            s = gen::random_text(rng);
        }
        try {
            auto e = parse_ring(s);
            ++accepted;
            o.require(parse_ring(print_expr(e)) == e, "reprint of accepted input differs: " + s);
        } catch (const ParseError& err) {
            if (err.position() > s.size())
                o.require(false, "error position past end");
        } catch (const std::exception& err) {
            o.require(false, std::string("unexpected exception: ") + err.what());
        }
    }
    for (int i = 0; i < 1000; ++i) {
        auto e = gen::random_expr(rng);
        o.require(parse_ring(print_expr(e)) == e, "round trip failed: " + print_expr(e));
    }
    auto t = seconds_since(start);
    if (o.pass) {
        std::ostringstream d;
        d << "100000 fuzz inputs (" << accepted << " accepted), 1000 round trips, " << t << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome criterion7(const std::string& serial, std::size_t threads)
{
    Outcome o;
    auto parallel = run_cli({"--json", "--parallel", std::to_string(threads), "suite"});
    o.require(serial == parallel, "JSON differs between --parallel 1 and --parallel " + std::to_string(threads));
    if (o.pass)
        o.detail = "--parallel 1 and --parallel " + std::to_string(threads) + " give identical JSON (" +
                   std::to_string(serial.size()) + " bytes)";
    return o;
}

Outcome criterion8()
{
    Outcome o;
    int code = 0;
    auto out = run_cli({"--json", "search", "--r-clean=true", "--clean=false"}, &code);
    o.require(code == 0, "search exit code " + std::to_string(code));
    auto j = cli::Json::parse(out)["results"];
    o.require(j["total_matches"] == 0, "r-clean but not clean elements found");
    o.require(j["rings"].size() == cli::default_corpus_rings().size(), "search did not cover the corpus");
    o.require(j.contains("footnote") &&
                  j["footnote"].get<std::string>().find("semiperfect if and only if it is clean") != std::string::npos,
              "footnote missing");
    std::ifstream readme(RINGLAB_README);
    std::stringstream buf;
    buf << readme.rdbuf();
    auto doc = buf.str();
    for (auto phrase : {"Bergman", "R[[x]]", "semiperfect if and only if it is clean and has no infinite orthogonal family of idempotents"})
        o.require(doc.find(phrase) != std::string::npos, std::string("README lacks '") + phrase + "'");
    if (o.pass)
        o.detail = "0 r-clean but not clean elements in " + std::to_string(j["rings"].size()) +
                   " corpus rings; footnote and README explanation present";
    return o;
}

} // namespace

int main()
{
    auto corpus = cli::default_corpus_rings();
    int failures = 0;
    auto report = [&](int n, const std::string& title, const Outcome& o) {
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << "  " << title << ": " << o.detail << std::endl;
    };
    auto guarded = [](const std::function<Outcome()>& f) {
        try {
            return f();
        } catch (const std::exception& e) {
            return Outcome{false, std::string("exception: ") + e.what()};
        }
    };

    report(1, "Z4 facts", guarded(criterion1));

    std::string serial;
    cli::SuiteResult suite;
    auto o2 = guarded([&] {
        auto start = Clock::now();
        int code = 0;
        serial = run_cli({"--json", "--parallel", "1", "suite"}, &code);
        auto t = seconds_since(start);
        suite = cli::suite_from_json(cli::Json::parse(serial)["results"]);
        auto o = criterion2(suite, t);
        o.require(code == 0, "suite exit code " + std::to_string(code));
        return o;
    });
    report(2, "full suite", o2);
    report(3, "oracle equivalence", guarded([&] { return criterion3(suite, corpus); }));
    report(4, "implication chain", guarded([&] { return criterion4(corpus); }));
    report(5, "bounded polynomial checks", guarded([&] { return criterion5(corpus); }));
    report(6, "parser robustness", guarded(criterion6));
    report(7, "determinism", guarded([&] { return criterion7(serial, 4); }));
    report(8, "r-clean but not clean is empty at finite scale", guarded(criterion8));
    return failures ? 1 : 0;
}
