#pragma once

#include <stdexcept>
#include <string>

namespace epoint {

enum class ErrorKind {
    invalid_argument,
    degenerate_model,
    precondition,
    path_degeneracy,
    tracking_failure,
    config,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace epoint
