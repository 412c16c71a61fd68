#pragma once

#include <stdexcept>
#include <string>

namespace repstab {

// Engine failures carry a stable class name so the CLI can report it on the
// diagnostic stream and map it to exit code 1.
class EngineError : public std::runtime_error {
public:
    EngineError(std::string cls, const std::string& msg)
        : std::runtime_error(cls + ": " + msg), class_(std::move(cls)) {}
    const std::string& error_class() const { return class_; }

private:
    std::string class_;
};

struct OverflowError : EngineError {
    explicit OverflowError(const std::string& m) : EngineError("Overflow", m) {}
};

struct NonInvariantError : EngineError {
    explicit NonInvariantError(const std::string& m) : EngineError("NonInvariant", m) {}
};

struct FractionalCoefficientError : EngineError {
    explicit FractionalCoefficientError(const std::string& m)
        : EngineError("FractionalCoefficient", m) {}
};

struct VirtualInputError : EngineError {
    explicit VirtualInputError(const std::string& m) : EngineError("VirtualInput", m) {}
};

struct RankCapExceededError : EngineError {
    explicit RankCapExceededError(const std::string& m) : EngineError("RankCapExceeded", m) {}
};

struct WindowTooSmallError : EngineError {
    explicit WindowTooSmallError(const std::string& m) : EngineError("WindowTooSmall", m) {}
};

}  // namespace repstab
