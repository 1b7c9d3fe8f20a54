#pragma once

#include <stdexcept>
#include <string>

namespace hyperball {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linalg
struct DimError : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};

// ball
struct OutOfBall : Error {
    using Error::Error;
};
struct NearSingular : Error {
    using Error::Error;
};

// group
struct NotUnitary : Error {
    using Error::Error;
};
struct FormViolation : Error {
    using Error::Error;
};
struct ReconstructionError : Error {
    using Error::Error;
};

// classify
struct NotReducing : Error {
    using Error::Error;
};
struct BadBasis : Error {
    using Error::Error;
};

// I/O
struct ParseError : Error {
    using Error::Error;
};

} // namespace hyperball
