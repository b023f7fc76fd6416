#include "domstruct/verdict.hpp"

#include "domstruct/errors.hpp"

namespace domstruct {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::HOLDS: return "HOLDS";
        case Verdict::REFUTED: return "REFUTED";
        case Verdict::SKIPPED: return "SKIPPED";
        case Verdict::STRUCTURE_VIOLATION: return "STRUCTURE_VIOLATION";
        case Verdict::BUDGET_EXCEEDED: return "BUDGET_EXCEEDED";
    }
    return "SKIPPED";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "HOLDS") return Verdict::HOLDS;
    if (s == "REFUTED") return Verdict::REFUTED;
    if (s == "SKIPPED") return Verdict::SKIPPED;
    if (s == "STRUCTURE_VIOLATION") return Verdict::STRUCTURE_VIOLATION;
    if (s == "BUDGET_EXCEEDED") return Verdict::BUDGET_EXCEEDED;
    throw input_error("unknown verdict: " + s);
}

}  // namespace domstruct
