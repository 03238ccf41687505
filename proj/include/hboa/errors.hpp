#pragma once

#include <stdexcept>
#include <string>

namespace hboa {

/// Argument values outside an operation's domain (bad sizes, ranges, shapes).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation applied to an object in a state that cannot serve it.
class invalid_state : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file; carries the 1-based line number of the offence.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, long line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

/// File carries a format version this build does not understand.
class version_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact oracle asked for an instance beyond its size cap.
class oracle_refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inconsistent run configuration (e.g. bias table incompatible with the instance).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hboa
