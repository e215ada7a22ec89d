#pragma once

#include <stdexcept>
#include <string>

namespace dlinear {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Invalid configuration: bad flag values, unknown keys, missing files.
class ConfigError : public Error {
public:
	using Error::Error;
};

/// The data cannot support the requested experiment (too short, unparseable, ...).
class DataError : public Error {
public:
	using Error::Error;
};

/// Training or evaluation produced non-finite values.
class NumericalError : public Error {
public:
	using Error::Error;
};

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
	success = 0,
	failure = 1,
	config_error = 2,
	infeasible_data = 3,
	numerical_failure = 4,
};

} // namespace dlinear
