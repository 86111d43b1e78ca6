#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kamknob {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Homological solver hit an (effectively) resonant wavevector.
class ZeroDivisor : public Error {
public:
    ZeroDivisor(const std::string& msg, std::vector<int> k)
        : Error(msg), wavevector(std::move(k)) {}
    std::vector<int> wavevector;
};

class AverageNotRemoved : public Error {
public:
    using Error::Error;
};

class TruncationOverflow : public Error {
public:
    using Error::Error;
};

class OuterDiverged : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class ScheduleInvalid : public Error {
public:
    using Error::Error;
};

class StepRejected : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// Violated internal invariant (e.g. a series lost Hermitian symmetry).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace kamknob
