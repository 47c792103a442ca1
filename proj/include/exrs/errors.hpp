#pragma once

#include <stdexcept>
#include <string>

namespace exrs {

// Error taxonomy shared by the library and the CLI. The CLI maps
// categories to exit codes: validation -> 2, size-guard -> 3, io -> 4.
enum class ErrorCode {
    validation,
    size_guard,
    io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    const char* code_name() const noexcept {
        switch (code_) {
            case ErrorCode::validation: return "validation";
            case ErrorCode::size_guard: return "size-guard";
            case ErrorCode::io: return "io";
        }
        return "unknown";
    }

private:
    ErrorCode code_;
};

// Bad input values: out-of-range entries, asymmetric grids, invalid
// parameters, non-canonical keys, coordinates outside [0,1].
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what)
        : Error(ErrorCode::validation, what) {}
};

// Request exceeds an enumeration guard (cut-norm block count,
// motif blowup, refinement overflow).
class SizeError : public Error {
public:
    explicit SizeError(const std::string& what)
        : Error(ErrorCode::size_guard, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what)
        : Error(ErrorCode::io, what) {}
};

} // namespace exrs
