#pragma once

#include <stdexcept>
#include <string>

namespace qecnn {

// Error taxonomy shared by the library and the CLI. Each class maps to a
// fixed process exit code so scripts can distinguish failure modes.
//   validation -> 2, format -> 3, configuration -> 4, io -> 5
// Plain std::invalid_argument from deep library code is treated as a
// validation error by the CLI.

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

enum ExitCode {
    kExitOk = 0,
    kExitValidation = 2,
    kExitFormat = 3,
    kExitConfig = 4,
    kExitIo = 5,
};

} // namespace qecnn
