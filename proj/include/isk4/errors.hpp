#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isk4 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph6 / edge-list input.
struct FormatError : Error {
    using Error::Error;
};

// An operation was called outside its stated domain.
struct PreconditionError : Error {
    std::string predicate;
    explicit PreconditionError(std::string pred, const std::string& msg = "")
        : Error("precondition failed: " + pred + (msg.empty() ? "" : " (" + msg + ")")),
          predicate(std::move(pred)) {}
};

// Exact search ran out of its node budget; distinct from a negative answer.
struct BudgetExceededError : Error {
    long long budget;
    explicit BudgetExceededError(long long b)
        : Error("search node budget exceeded (" + std::to_string(b) + ")"), budget(b) {}
};

// Input graph is outside the class an operation requires; carries a witness
// (vertex list) for the violated membership predicate when one exists.
struct OutOfClassError : Error {
    std::string predicate;
    std::vector<int> witness;
    OutOfClassError(std::string pred, std::vector<int> wit)
        : Error("out of class: " + pred), predicate(std::move(pred)), witness(std::move(wit)) {}
};

// A machine-checked theorem failed to produce its guaranteed outcome.  This
// firing is a refutation event: it must be surfaced, never swallowed.
struct TheoremViolationError : Error {
    using Error::Error;
};

// The structural recovery of a bad triple did not materialize as predicted.
struct RecoveryFailureError : Error {
    using Error::Error;
};

// A vertex of degree <= 2 was guaranteed but missing: a conjecture
// counterexample candidate.  Carries the offending graph's certificate.
struct MissingLowDegreeVertexError : Error {
    std::string graph6;
    explicit MissingLowDegreeVertexError(std::string cert)
        : Error("no vertex of degree <= 2 in a K_{3,3}-free in-class graph"),
          graph6(std::move(cert)) {}
};

// A bad-triple construction recipe violated one of its four conditions.
struct RecipeError : Error {
    int failed_condition;  // 1..4, or 0 for structural problems
    RecipeError(int cond, const std::string& msg)
        : Error("invalid recipe (condition " + std::to_string(cond) + "): " + msg),
          failed_condition(cond) {}
};

struct CapExceededError : Error {
    using Error::Error;
};

}  // namespace isk4
