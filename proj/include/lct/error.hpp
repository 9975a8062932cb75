#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lct {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input rejected by validation. Carries one message per violation so a bad
// file reports everything wrong with it in a single pass.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> diagnostics)
        : Error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}

    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    static std::string join(const std::vector<std::string>& diagnostics) {
        std::string out;
        for (const auto& d : diagnostics) {
            if (!out.empty()) out += "; ";
            out += d;
        }
        return out.empty() ? std::string("invalid input") : out;
    }

    std::vector<std::string> diagnostics_;
};

// A computation hit its configured resource cap. Thrown instead of ever
// returning a partial or wrong answer.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace lct
