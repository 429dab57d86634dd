#include "ringlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "ringlab/ringspec.hpp"

namespace ringlab::cli {

namespace {

template <typename F>
void parallel_for(std::size_t n, std::size_t threads, F&& body)
{
    threads = std::max<std::size_t>(1, std::min(threads, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= n || failed)
                return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

VerifyReport skipped(TheoremId id, const std::string& ring, const std::string& why)
{
    VerifyReport r;
    r.theorem = std::string(theorem_name(id));
    r.ring = ring;
    r.verdict = Verdict::Skipped;
    r.notes.push_back(why);
    return r;
}

} // namespace

std::size_t SuiteResult::count(Verdict v) const
{
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [v](const VerifyReport& r) { return r.verdict == v; }));
}

std::size_t SuiteResult::failures() const
{
    auto n = count(Verdict::Counterexample);
    for (const auto& r : rings)
        if (!r.error && !(r.clean && r.r_clean))
            ++n;
    return n;
}

SuiteResult run_suite(const CorpusConfig& config)
{
    std::vector<TheoremId> theorems = config.theorems;
    if (theorems.empty())
        theorems.assign(all_theorems().begin(), all_theorems().end());
    std::size_t threads = config.parallel ? config.parallel : std::max(1u, std::thread::hardware_concurrency());

    const auto& specs = config.rings;
    std::vector<std::optional<FiniteRing>> built(specs.size());
    SuiteResult out;
    out.rings.resize(specs.size());
    parallel_for(specs.size(), threads, [&](std::size_t i) {
        auto& summary = out.rings[i];
        summary.ring = specs[i];
        try {
            auto ring = elaborate(specs[i], config.options.size_cap);
            summary.ring = print_expr(ring.construction());
            summary.order = ring.order();
            RingFacts facts(ring);
            summary.clean = summary.r_clean = true;
            for (Elem x = 0; x < ring.order(); ++x) {
                summary.clean &= facts.clean_witness(x).has_value();
                summary.r_clean &= facts.r_clean_witness(x).has_value();
            }
            built[i] = ring;
        } catch (const SizeCapError& e) {
            summary.error = std::string("refused by size cap: ") + e.what();
        } catch (const std::exception& e) {
            summary.error = e.what();
        }
    });

    std::vector<std::pair<std::size_t, TheoremId>> tasks;
    for (std::size_t i = 0; i < specs.size(); ++i)
        for (auto id : theorems)
            tasks.emplace_back(i, id);
    out.reports.resize(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t k) {
        auto [i, id] = tasks[k];
        const auto& name = out.rings[i].ring;
        if (!built[i]) {
            out.reports[k] = skipped(id, name, *out.rings[i].error);
            return;
        }
        try {
            out.reports[k] = run_theorem(id, *built[i], config.options);
        } catch (const SizeCapError& e) {
            out.reports[k] = skipped(id, name, std::string("refused by size cap: ") + e.what());
        } catch (const BudgetExceeded& e) {
            out.reports[k] = skipped(id, name, std::string("search budget exhausted: ") + e.what());
        } catch (const std::exception& e) {
            out.reports[k] = skipped(id, name, std::string("error: ") + e.what());
        }
    });

    auto ring_key = [](const RingSummary& a, const RingSummary& b) { return a.ring < b.ring; };
    std::stable_sort(out.rings.begin(), out.rings.end(), ring_key);
    std::stable_sort(out.reports.begin(), out.reports.end(), [](const VerifyReport& a, const VerifyReport& b) {
        return std::tie(a.ring, a.theorem) < std::tie(b.ring, b.theorem);
    });
    return out;
}

} // namespace ringlab::cli
