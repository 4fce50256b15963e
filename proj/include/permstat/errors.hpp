#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

// Stable machine-readable error codes, mirrored 1:1 by the CLI's JSON output
// and its exit-code contract.
enum class Errc {
    domain_error,      // malformed or out-of-range argument
    empty_class,       // the conditioned class D_{n;k} is empty (k = n-1, or d_{n,k} = 0)
    unsupported_size,  // n below the closed forms' range (n < 3)
    size_cap,          // exhaustive enumeration requested beyond the hard cap
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

    const char* code_name() const noexcept {
        switch (code_) {
        case Errc::domain_error: return "DomainError";
        case Errc::empty_class: return "EmptyClass";
        case Errc::unsupported_size: return "UnsupportedSize";
        case Errc::size_cap: return "SizeCap";
        }
        return "Error";
    }

private:
    Errc code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& message) : Error(Errc::domain_error, message) {}
};

struct EmptyClassError : Error {
    explicit EmptyClassError(const std::string& message) : Error(Errc::empty_class, message) {}
};

struct UnsupportedSizeError : Error {
    explicit UnsupportedSizeError(const std::string& message) : Error(Errc::unsupported_size, message) {}
};

struct SizeCapError : Error {
    explicit SizeCapError(const std::string& message) : Error(Errc::size_cap, message) {}
};

} // namespace permstat
