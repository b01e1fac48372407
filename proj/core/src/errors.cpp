#include "mgc/errors.hpp"

namespace mgc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SyntaxError:           return "syntax_error";
        case ErrorCode::UnknownIdentifier:     return "unknown_identifier";
        case ErrorCode::InvalidInput:          return "invalid_input";
        case ErrorCode::DomainError:           return "domain_error";
        case ErrorCode::NullSegment:           return "null_segment";
        case ErrorCode::NonConvergence:        return "non_convergence";
        case ErrorCode::OutOfRange:            return "out_of_range";
        case ErrorCode::NullTangent:           return "null_tangent";
        case ErrorCode::NotSpacelike:          return "not_spacelike";
        case ErrorCode::DegenerateK1:          return "degenerate_k1";
        case ErrorCode::DegenerateK2:          return "degenerate_k2";
        case ErrorCode::DegenerateK3:          return "degenerate_k3";
        case ErrorCode::InconsistentFrame:     return "inconsistent_frame";
        case ErrorCode::CaseChange:            return "case_change";
        case ErrorCode::DegenerateDenominator: return "degenerate_denominator";
        case ErrorCode::MateIrregular:         return "mate_irregular";
        case ErrorCode::MateNotFrenet:         return "mate_not_frenet";
        case ErrorCode::HypothesisNotMet:      return "hypothesis_not_met";
        case ErrorCode::SingularInner:         return "singular_inner";
        case ErrorCode::DegenerateMember:      return "degenerate_member";
    }
    return "unknown_error";
}

bool is_input_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::UnknownIdentifier:
        case ErrorCode::InvalidInput:
            return true;
        default:
            return false;
    }
}

} // namespace mgc
