#pragma once

#include <stdexcept>
#include <string>

namespace tandiv {

enum class errc {
    invalid_argument,
    domain,
    tolerance_not_met,
    infeasible,
    no_bracket,
    parse,
    io,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace tandiv
