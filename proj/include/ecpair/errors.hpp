#pragma once

#include <stdexcept>
#include <string>

namespace ecp {

// Mathematical precondition failure. `kind` is a stable machine-readable tag
// (e.g. "NonTorsion", "FactorTooHard"); `detail` is free text.
class MathError : public std::runtime_error {
public:
    MathError(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(std::move(detail)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
    throw MathError(kind, detail);
}

} // namespace ecp
