#pragma once

#include <stdexcept>
#include <string>

namespace triqmc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateTriangle : public Error {
public:
    using Error::Error;
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class BadDigit : public Error {
public:
    using Error::Error;
};

class DepthTooSmall : public Error {
public:
    using Error::Error;
};

class InvalidTangent : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class EmptySampleSet : public Error {
public:
    using Error::Error;
};

class WrongDomain : public Error {
public:
    using Error::Error;
};

class MissingExactIntegral : public Error {
public:
    using Error::Error;
};

class UnknownIntegrand : public Error {
public:
    using Error::Error;
};

/// Malformed external input (CSV, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace triqmc
