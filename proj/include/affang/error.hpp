#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affang {

enum class ErrorKind {
    InvalidArgument,
    ParallelLines,
    SingularMap,
    DegenerateConfiguration,
    LambdaParallel,
    CoincidentIntersection,
    UndefinedCrossRatio,
    SingularRay,
    ComponentMismatch,
    ThetaTooSmall,
    SingularPosition,
    NoRealIntersection,
    NotOnCurve,
    CoincidentParameters,
    ParallelChords,
    IdenticalCurves,
    ConcentricCurves,
    NonLinearDifference,
    ParallelAxes,
    InvalidPosition,
    DegenerateIntersection,
    PoleAtT,
    EmptyLocus,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid argument";
        case ErrorKind::ParallelLines: return "parallel lines";
        case ErrorKind::SingularMap: return "singular map";
        case ErrorKind::DegenerateConfiguration: return "degenerate configuration";
        case ErrorKind::LambdaParallel: return "auxiliary line parallel";
        case ErrorKind::CoincidentIntersection: return "coincident intersection";
        case ErrorKind::UndefinedCrossRatio: return "undefined cross ratio";
        case ErrorKind::SingularRay: return "singular ray";
        case ErrorKind::ComponentMismatch: return "component mismatch";
        case ErrorKind::ThetaTooSmall: return "theta too small";
        case ErrorKind::SingularPosition: return "singular position";
        case ErrorKind::NoRealIntersection: return "no real intersection";
        case ErrorKind::NotOnCurve: return "not on curve";
        case ErrorKind::CoincidentParameters: return "coincident parameters";
        case ErrorKind::ParallelChords: return "parallel chords";
        case ErrorKind::IdenticalCurves: return "identical curves";
        case ErrorKind::ConcentricCurves: return "concentric curves";
        case ErrorKind::NonLinearDifference: return "non-linear difference";
        case ErrorKind::ParallelAxes: return "parallel axes";
        case ErrorKind::InvalidPosition: return "invalid position";
        case ErrorKind::DegenerateIntersection: return "degenerate intersection";
        case ErrorKind::PoleAtT: return "pole at t";
        case ErrorKind::EmptyLocus: return "empty locus";
    }
    return "unknown";
}

/// Domain error raised by every operation in the library. The kind is the
/// machine-readable part; what() carries a human-readable detail.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
    throw GeometryError(kind, detail);
}

}  // namespace affang
