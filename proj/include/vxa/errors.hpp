#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vxa {

// All library failures carry a short machine-readable code ("NotLocal",
// "DivisionByZero", ...) next to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, code + ": " + msg);
}

} // namespace vxa
