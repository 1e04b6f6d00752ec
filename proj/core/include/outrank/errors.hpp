#pragma once

#include <stdexcept>
#include <string>

namespace outrank {

// Error categories map onto CLI exit codes: config=2, data=3, privacy=4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct PrivacyError : Error {
    using Error::Error;
};

} // namespace outrank
