#pragma once

#include <stdexcept>
#include <string>

namespace parma {

/// Broad failure class; the command line tool maps each one to an exit code.
enum class ErrorCategory {
    Config,     // bad user parameters
    Data,       // malformed or incomplete input data
    Numerical,  // a computation left its domain of validity
};

/// Library error carrying a stable short name (e.g. "NonPositivePredictionVariance").
///
/// Precondition violations that indicate a programming mistake are reported
/// with std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string name, const std::string& message)
        : std::runtime_error(message), category_(category), name_(std::move(name)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& name() const noexcept { return name_; }

private:
    ErrorCategory category_;
    std::string name_;
};

inline Error numerical_error(std::string name, const std::string& message) {
    return Error(ErrorCategory::Numerical, std::move(name), message);
}

inline Error data_error(std::string name, const std::string& message) {
    return Error(ErrorCategory::Data, std::move(name), message);
}

inline Error config_error(std::string name, const std::string& message) {
    return Error(ErrorCategory::Config, std::move(name), message);
}

}  // namespace parma
