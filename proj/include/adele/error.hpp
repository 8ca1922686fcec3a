#pragma once

#include <stdexcept>
#include <string>

namespace adele {

/// Machine-readable category of a failure. The CLI maps these onto exit codes.
enum class ErrorCode {
    Domain,  ///< mathematically invalid input (zero divisor, off-curve point, ...)
    Schema,  ///< malformed configuration document
    Audit,   ///< sign audit found the configured conventions inconsistent
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    explicit Error(const std::string& what) : Error(ErrorCode::Domain, what) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace adele
