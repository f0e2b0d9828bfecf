#pragma once

#include <stdexcept>
#include <string>

namespace glmep {

struct EmptyPreimage : std::runtime_error {
    explicit EmptyPreimage(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericalUnderflow : std::runtime_error {
    explicit NumericalUnderflow(const std::string& msg) : std::runtime_error(msg) {}
};

struct BisectionFailure : std::runtime_error {
    explicit BisectionFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct MeanMismatch : std::runtime_error {
    explicit MeanMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegenerateDivergence : std::runtime_error {
    explicit DegenerateDivergence(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPositiveVariance : std::runtime_error {
    explicit NonPositiveVariance(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoRecovery : std::runtime_error {
    explicit NoRecovery(const std::string& msg) : std::runtime_error(msg) {}
};

struct InformativeWithoutTruth : std::runtime_error {
    explicit InformativeWithoutTruth(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace glmep
