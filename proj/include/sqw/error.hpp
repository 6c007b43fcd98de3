#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sqw {

// Domain error carrying a stable machine-readable code ("SelfLoop",
// "TooLarge", ...). The CLI maps these to exit code 1 and prints the code
// as the first token of the reason line.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail = "") {
    throw Error(std::move(code), detail);
}

} // namespace sqw
