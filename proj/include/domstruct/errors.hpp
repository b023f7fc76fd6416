#pragma once

#include <stdexcept>
#include <string>

namespace domstruct {

// Violated operation precondition (bad vertex id, wrong residue, loop edge, ...).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text. `offset` is a byte offset for graph6 and a
// 1-based line number for edge lists; the message says which.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, long long offset_)
        : std::runtime_error(what + " (offset " + std::to_string(offset_) + ")"),
          offset(offset_) {}
    long long offset;
};

// A configured enumeration or search cap was exceeded.
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, long long cap_)
        : std::runtime_error(what + " (cap " + std::to_string(cap_) + ")"), cap(cap_) {}
    long long cap;
};

// Random generation could not satisfy its constraints within the retry cap.
struct generation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace domstruct
