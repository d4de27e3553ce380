#pragma once

#include <stdexcept>
#include <string>

namespace minorforge {

struct OutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SelfLoopError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAnEdgeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotBipartiteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct XNotProperError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDecompositionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InfeasibleParametersError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search hit its configured cap. Signals a desk-scale limit, never a
// negative answer.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bug sentinel: a Hall-type matching that the preconditions promise to exist
// was not found.
struct HallFailureError : std::logic_error {
    using std::logic_error::logic_error;
};

struct SlotAllocationError : std::logic_error {
    using std::logic_error::logic_error;
};

struct StuckNoUnusedNeighbourError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PathViolationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSeparatorSmallEnoughError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace minorforge
