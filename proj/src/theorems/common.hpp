#pragma once

// Shared plumbing for the verifiers. Not installed.

#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ringspec.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab::detail {

inline std::string ring_name(const FiniteRing& ring) { return print_expr(ring.construction()); }

/// Elements as a membership mask.
using Mask = std::vector<char>;

class ReportBuilder {
public:
    ReportBuilder(std::string_view theorem, std::string ring);
    ReportBuilder(std::string_view theorem, const FiniteRing& ring) : ReportBuilder(theorem, ring_name(ring)) {}

    /// Records a hypothesis and returns whether it passed.
    bool require(std::string name, bool ok, std::string detail = {});
    void hypothesis(std::string name, CheckStatus status, std::string detail = {});

    /// Keeps the first counterexample; later ones only count.
    void counterexample(std::string what);
    bool failed() const { return failed_; }

    /// Counts both routes and every element on which they disagree.
    void compare(const FiniteRing& ring, const Mask& constructive, const Mask& brute, std::string_view what);

    WitnessStats& stats() { return report_.stats; }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    VerifyReport finish();

private:
    VerifyReport report_;
    bool failed_ = false;
};

} // namespace ringlab::detail
