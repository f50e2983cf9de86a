#pragma once

#include <stdexcept>
#include <string>

namespace quboml {

// Raised when an exact method is asked to exceed its enumeration cap.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when stored bytes do not match their recorded size or digest.
class CorruptionError : public std::runtime_error {
public:
    explicit CorruptionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for unknown container versions or architectures.
class UnsupportedFormatError : public std::runtime_error {
public:
    explicit UnsupportedFormatError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a stored sample violates a dataset invariant; the message
// names the offending sample id.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quboml
