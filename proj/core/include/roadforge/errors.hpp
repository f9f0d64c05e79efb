#pragma once

#include <stdexcept>
#include <string>

namespace roadforge {

/// Base class of everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Polyline violates a structural requirement (too short, coincident neighbors).
class InvalidPolylineError : public Error {
    using Error::Error;
};

/// A windowed fit has no usable solution (singular normal matrix).
class DegenerateWindowError : public Error {
    using Error::Error;
};

/// Fewer points than the operation needs.
class TooFewPointsError : public Error {
    using Error::Error;
};

/// Parameter outside its documented range.
class InvalidParameterError : public Error {
    using Error::Error;
};

/// Regression matrix without full column rank.
class RankDeficiencyError : public Error {
    using Error::Error;
};

/// Input file could not be parsed.
class ParseError : public Error {
    using Error::Error;
};

/// Query outside the model's parameter domain.
class ModelDomainError : public Error {
    using Error::Error;
};

/// Failure reading or writing a file.
class IoError : public Error {
    using Error::Error;
};

}  // namespace roadforge
