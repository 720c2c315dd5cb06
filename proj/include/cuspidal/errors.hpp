#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuspidal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A modularity criterion or group computation whose hypotheses fail at this level.
struct HypothesisNotMet : Error {
    using Error::Error;
};

struct UnsupportedCusp : Error {
    using Error::Error;
};

struct PrecisionTooSmall : Error {
    using Error::Error;
};

struct NonIntegral : Error {
    using Error::Error;
};

struct NonZeroDegree : Error {
    using Error::Error;
};

struct NotGaloisStable : Error {
    using Error::Error;
};

struct BadOrder : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t col)
        : Error(what + " at column " + std::to_string(col)), column(col) {}
    std::size_t column;  // 1-based
};

struct BindError : Error {
    using Error::Error;
};

}  // namespace cuspidal
