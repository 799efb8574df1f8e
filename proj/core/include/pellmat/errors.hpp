#pragma once

#include <stdexcept>
#include <string>

namespace pellmat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
    using Error::Error;
};

struct ZeroDimension : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct UnequalSelection : Error {
    using Error::Error;
};

struct FullSelection : Error {
    using Error::Error;
};

struct NotSquare : Error {
    using Error::Error;
};

struct TooLargeForOracle : Error {
    using Error::Error;
};

struct ExpansionTooLarge : Error {
    using Error::Error;
};

struct BadK : Error {
    using Error::Error;
};

struct TableUndefined : Error {
    using Error::Error;
};

struct NonRealResult : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace pellmat
