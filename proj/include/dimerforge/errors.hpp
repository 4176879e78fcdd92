#pragma once

#include <stdexcept>
#include <string>

namespace dimerforge {

enum class ErrorKind {
    ParseError,
    EmbeddingError,
    NotSimple,
    Disconnected,
    DualNotSimple,
    NotOnInfiniteFace,
    BadDegree,
    NotAPath,
    NotSymmetric,
    WeightMismatch,
    PreconditionViolated,
    ReembeddingFailed,
    NotDegreeTwo,
    SharedFace,
    NotAPeak,
    BelowDiagonal,
    PrecisionExhausted,
    CycleDetected,
    NotAlternating,
    RootNotOnInfiniteFace,
    ConstraintPathMismatch,
    ConditionViolated,
    NotOnAxis,
    NotBanded,
    ClassificationFailed,
    BandPairingViolated,
    ChannelPairingViolated,
    HypothesisViolated,
    LiftFailed,
    NotACycle,
    ConfigError,
    GenerationExhausted,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dimerforge
