#ifndef LIKEJUDGE_ERRORS_HPP
#define LIKEJUDGE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace likejudge {

// LP feasibility acceptance (phase-1 residual) and the comparison slack used
// at API boundaries (finality checks, implied-bound reporting, score ties).
inline constexpr double kFeasEps = 1e-9;
inline constexpr double kCmpEps = 1e-7;
inline constexpr double kScoreEps = 1e-9;

// Truth tables are enumerated exhaustively; this caps the blow-up.
inline constexpr int kDefaultAtomLimit = 24;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Formula text that does not conform to the grammar. `position` is a 0-based
// character offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UndeclaredAtomError : public ParseError {
public:
    UndeclaredAtomError(const std::string& name, std::size_t position)
        : ParseError("undeclared atom '" + name + "'", position), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class AtomLimitError : public Error {
public:
    AtomLimitError(int atoms, int limit)
        : Error("atom count " + std::to_string(atoms) +
                " exceeds enumeration limit " + std::to_string(limit)) {}
};

// Malformed judgment lists: the same signed issue stated twice.
class DuplicateJudgmentError : public Error {
public:
    using Error::Error;
};

// A stated judgment clashes with another statement or with the
// equality-completion rule (l(phi)=a forces l(~phi)=1-a).
class JudgmentConflictError : public Error {
public:
    using Error::Error;
};

// minimize() called on an infeasible problem.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

// The solver could not certify feasibility either way.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Structurally invalid documents (missing fields, bad types, unknown issues).
class SchemaError : public Error {
public:
    using Error::Error;
};

// Rejection sampling exhausted its retry budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Contract violations: invalid crisp vectors, quota out of range,
// incomplete inputs where completeness is required, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace likejudge

#endif
