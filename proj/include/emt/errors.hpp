#pragma once

#include <stdexcept>
#include <string>

namespace emt {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Declaration errors.
struct DuplicateName : Error {
    explicit DuplicateName(const std::string& name)
        : Error("duplicate name: " + name) {}
};
struct UnknownSort : Error {
    explicit UnknownSort(const std::string& name)
        : Error("unknown sort: " + name) {}
};

// Term elaboration errors.
struct SortError : Error {
    explicit SortError(const std::string& msg) : Error(msg) {}
};
struct ArityError : Error {
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

// A theory was asked to accept an impossible equation (42 = 43, x = x+1, 0 = 1,
// nil = cons(...)). Fatal for the current run; there is no backtracking.
struct TheoryInconsistency : Error {
    explicit TheoryInconsistency(const std::string& msg) : Error(msg) {}
};

// Linear solver: an asserted affine equation reduced to 0 = c with c != 0.
struct InconsistentConstant : TheoryInconsistency {
    explicit InconsistentConstant(const std::string& msg) : TheoryInconsistency(msg) {}
};

// Primitive solver: unification would equate a generator with a constructor
// term containing it.
struct OccursViolation : TheoryInconsistency {
    explicit OccursViolation(const std::string& msg) : TheoryInconsistency(msg) {}
};

// Polynomial completion exceeded its step budget. Never silent truncation.
struct CompletionBudget : Error {
    explicit CompletionBudget(const std::string& msg) : Error(msg) {}
};

// Extraction: a theory value references a generator with no defining e-node.
struct NoRepresentative : Error {
    explicit NoRepresentative(const std::string& msg) : Error(msg) {}
};

// Script front end.
struct ParseError : Error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) +
                ": " + msg),
          line(line_), col(col_) {}
};
struct ScriptError : Error {
    explicit ScriptError(const std::string& msg) : Error(msg) {}
};

} // namespace emt
