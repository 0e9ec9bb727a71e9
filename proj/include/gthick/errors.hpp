#pragma once

#include <stdexcept>
#include <string>

namespace gthick {

// Error categories used across the toolkit. The CLI maps each category to
// exactly one exit code; see tools/main.cpp.
enum class ErrorKind {
    CollinearOverlap,
    DuplicatePoint,
    ApexQuery,
    DegenerateGeometry,
    TooLarge,
    NotCloneable,
    LiftFailed,
    OracleBudgetExceeded,
    VerticesMissing,
    ParameterOutOfRange,
    DegenerateScaling,
    MalformedClause,
    MalformedInput,
    SolverUnavailable,
    ModelRejected,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct CollinearOverlapError : Error {
    explicit CollinearOverlapError(const std::string& what)
        : Error(ErrorKind::CollinearOverlap, what) {}
};

struct DuplicatePointError : Error {
    explicit DuplicatePointError(const std::string& what)
        : Error(ErrorKind::DuplicatePoint, what) {}
};

struct ApexQueryError : Error {
    explicit ApexQueryError(const std::string& what)
        : Error(ErrorKind::ApexQuery, what) {}
};

struct DegenerateGeometryError : Error {
    explicit DegenerateGeometryError(const std::string& what)
        : Error(ErrorKind::DegenerateGeometry, what) {}
};

struct TooLargeError : Error {
    explicit TooLargeError(const std::string& what)
        : Error(ErrorKind::TooLarge, what) {}
};

struct NotCloneableError : Error {
    explicit NotCloneableError(const std::string& what)
        : Error(ErrorKind::NotCloneable, what) {}
};

struct LiftFailedError : Error {
    explicit LiftFailedError(const std::string& what)
        : Error(ErrorKind::LiftFailed, what) {}
};

struct OracleBudgetExceededError : Error {
    explicit OracleBudgetExceededError(const std::string& what)
        : Error(ErrorKind::OracleBudgetExceeded, what) {}
};

struct VerticesMissingError : Error {
    explicit VerticesMissingError(const std::string& what)
        : Error(ErrorKind::VerticesMissing, what) {}
};

struct ParameterOutOfRangeError : Error {
    explicit ParameterOutOfRangeError(const std::string& what)
        : Error(ErrorKind::ParameterOutOfRange, what) {}
};

struct DegenerateScalingError : Error {
    explicit DegenerateScalingError(const std::string& what)
        : Error(ErrorKind::DegenerateScaling, what) {}
};

struct MalformedClauseError : Error {
    explicit MalformedClauseError(const std::string& what)
        : Error(ErrorKind::MalformedClause, what) {}
};

struct MalformedInputError : Error {
    MalformedInputError(int line, const std::string& what)
        : Error(ErrorKind::MalformedInput,
                "line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

struct SolverUnavailableError : Error {
    explicit SolverUnavailableError(const std::string& what)
        : Error(ErrorKind::SolverUnavailable, what) {}
};

struct ModelRejectedError : Error {
    explicit ModelRejectedError(const std::string& what)
        : Error(ErrorKind::ModelRejected, what) {}
};

}  // namespace gthick
