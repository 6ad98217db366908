#pragma once

#include <stdexcept>
#include <string>

namespace homcut {

enum class errc {
    malformed_input, // bad raw data (duplicate vertices, parse-level)
    domain,          // precondition on values violated (A not a subset, zero class, ...)
    filtration,      // face-before-coface or grade order violated
    unsupported,     // operation not defined for this input (infinite bar)
    config,          // strategy/input-kind mismatch
    geometry,        // embedding validation failed
    internal,        // invariant that should be unreachable
};

class error : public std::runtime_error {
public:
    error(errc c, const std::string& what) : std::runtime_error(what), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

} // namespace homcut
