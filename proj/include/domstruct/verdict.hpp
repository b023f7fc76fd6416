#pragma once

#include <string>

namespace domstruct {

/// Outcome of one checked claim on one graph.
enum class Verdict {
    HOLDS,
    REFUTED,
    SKIPPED,              // hypothesis not met, or an error was reported in-band
    STRUCTURE_VIOLATION,  // an expected structural property of a derived graph failed
    BUDGET_EXCEEDED,
};

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

}  // namespace domstruct
