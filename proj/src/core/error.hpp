#pragma once

#include <stdexcept>
#include <string>

namespace shiftlat {

enum class Errc {
    parse = 1,
    dim_mismatch = 2,
    domain = 3,
    not_invariant = 4,
    pattern = 5,
    internal = 99,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace shiftlat
