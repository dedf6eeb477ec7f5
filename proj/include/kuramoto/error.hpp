#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kuramoto {

enum class ErrorCode {
    SelfLoop,
    VertexOutOfRange,
    Disconnected,
    EmptyGraph,
    PartitionMismatch,
    TooLarge,
    BadParameter,
    DimensionMismatch,
    StepUnderflow,
    NonFiniteState,
    EmptyTrajectory,
    TooShort,
    NotBipartition,
    InfeasibleMu,
    NoCertificate,
    ParseError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::EmptyTrajectory: return "EmptyTrajectory";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotBipartition: return "NotBipartition";
    case ErrorCode::InfeasibleMu: return "InfeasibleMu";
    case ErrorCode::NoCertificate: return "NoCertificate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace kuramoto
