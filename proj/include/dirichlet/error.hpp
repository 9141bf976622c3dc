#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

enum class Errc {
    VertexOutOfRange,
    DuplicateEdge,
    SelfLoop,
    BoundaryEdge,
    DanglingBoundary,
    EmptyBoundary,
    DisconnectedInterior,
    EmptyInterior,
    Disconnected,
    NoConvergence,
    PerronViolation,
    ZeroFunction,
    DimensionMismatch,
    NotATree,
    DiameterRadiusMismatch,
    TooSmall,
    ParamOutOfRange,
    DegenerateInterior,
    NoRootInInterval,
    InvalidPath,
    TooLarge,
    Infeasible,
    Mismatch,
    ParseError,
};

constexpr std::string_view to_string(Errc e) noexcept {
    switch (e) {
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::BoundaryEdge: return "BoundaryEdge";
    case Errc::DanglingBoundary: return "DanglingBoundary";
    case Errc::EmptyBoundary: return "EmptyBoundary";
    case Errc::DisconnectedInterior: return "DisconnectedInterior";
    case Errc::EmptyInterior: return "EmptyInterior";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::PerronViolation: return "PerronViolation";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotATree: return "NotATree";
    case Errc::DiameterRadiusMismatch: return "DiameterRadiusMismatch";
    case Errc::TooSmall: return "TooSmall";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::DegenerateInterior: return "DegenerateInterior";
    case Errc::NoRootInInterval: return "NoRootInInterval";
    case Errc::InvalidPath: return "InvalidPath";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Mismatch: return "Mismatch";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Validation errors are the ones caused by malformed input graphs or
/// parameters, as opposed to numerical or verification failures.
constexpr bool is_validation_error(Errc e) noexcept {
    switch (e) {
    case Errc::NoConvergence:
    case Errc::PerronViolation:
    case Errc::Mismatch:
    case Errc::NoRootInInterval:
        return false;
    default:
        return true;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace dirichlet
