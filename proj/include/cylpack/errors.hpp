#pragma once
#include <stdexcept>
#include <string>

namespace cylpack {

struct DegenerateAxis : std::runtime_error {
    explicit DegenerateAxis(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonFiniteValue : std::runtime_error {
    explicit NonFiniteValue(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContainerTooSmall : std::runtime_error {
    explicit ContainerTooSmall(const std::string& msg) : std::runtime_error(msg) {}
};

struct AngleExceedsAlpha0 : std::runtime_error {
    explicit AngleExceedsAlpha0(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cylpack
