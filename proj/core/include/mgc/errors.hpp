#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mgc {

/// Failure taxonomy shared by the whole library. Input-shaped failures
/// (bad syntax, unknown names, malformed files) are distinguished from
/// numerical failures (degeneracies, non-convergence) so the CLI can map
/// them to distinct exit codes.
enum class ErrorCode {
    // input / parse
    SyntaxError,
    UnknownIdentifier,
    InvalidInput,
    // expression / curve evaluation
    DomainError,
    // arc length & quadrature
    NullSegment,
    NonConvergence,
    OutOfRange,
    NullTangent,
    // Frenet construction
    NotSpacelike,
    DegenerateK1,
    DegenerateK2,
    DegenerateK3,
    InconsistentFrame,
    // Mannheim machinery
    CaseChange,
    DegenerateDenominator,
    MateIrregular,
    MateNotFrenet,
    HypothesisNotMet,
    // parametric family
    SingularInner,
    DegenerateMember,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Whether an error is caused by malformed input rather than by the
/// numerics of a well-formed problem.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace mgc
