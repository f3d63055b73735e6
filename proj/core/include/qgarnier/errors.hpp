#pragma once

#include <stdexcept>
#include <string>

namespace qgarnier {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A denominator vanished; the message names the offending expression.
class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what)
        : Error("division by zero: " + what) {}
};

// limit at eps = 0 does not exist.
class PoleAtZero : public Error {
public:
    explicit PoleAtZero(const std::string& what) : Error("pole at eps=0: " + what) {}
};

class NonConvergent : public Error {
public:
    explicit NonConvergent(const std::string& what) : Error("non-convergent: " + what) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

class ConstraintViolated : public Error {
public:
    explicit ConstraintViolated(const std::string& what)
        : Error("constraint violated: " + what) {}
};

class SamplerExhausted : public Error {
public:
    explicit SamplerExhausted(const std::string& what)
        : Error("sampler exhausted: " + what) {}
};

// Perturbation polynomial grew past the configured degree cap.
class DegreeCapExceeded : public Error {
public:
    explicit DegreeCapExceeded(const std::string& what)
        : Error("degree cap exceeded: " + what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config error: " + what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

}  // namespace qgarnier
