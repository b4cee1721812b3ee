#pragma once

#include <stdexcept>

namespace neo {

// Error taxonomy mirrors the process exit codes: config=1, data=2, runtime=3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class RuntimeError : public Error {
public:
    using Error::Error;
};

}  // namespace neo
