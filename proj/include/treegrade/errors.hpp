#pragma once

#include <stdexcept>
#include <string>

namespace treegrade {

// Rejected input or violated operation precondition. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant. Indicates a bug, never bad input. CLI exit code 1.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool condition, const std::string& message) {
    if (!condition) throw input_error(message);
}

inline void ensure(bool condition, const std::string& message) {
    if (!condition) throw invariant_error(message);
}

}  // namespace treegrade
