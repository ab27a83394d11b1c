#pragma once

#include <stdexcept>
#include <string>

namespace tvg {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Geometric configuration too degenerate to proceed (zero baselines,
// rank-deficient point clouds, near-epipole transfers, ...).
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& msg) : Error(msg) {}
};

// Malformed input files (match files, trajectories, configs, dumps).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Bad or inconsistent configuration values.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// The tracker lost all usable constraints; the pipeline aborts on this.
class TrackingFailure : public Error {
public:
    explicit TrackingFailure(const std::string& msg) : Error(msg) {}
};

} // namespace tvg
