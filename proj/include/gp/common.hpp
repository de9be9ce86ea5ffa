#pragma once

#include <stdexcept>
#include <string>

namespace gp {

enum class errc {
    invalid_argument,
    parse,
    cap_exceeded,
};

// Single exception type for all recoverable failures; errc keeps the C API
// and the CLI exit codes in one-to-one correspondence with the cause.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gp
