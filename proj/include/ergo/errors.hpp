#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

// Error taxonomy mapped onto CLI exit codes (see tools/ergo_main.cpp):
//   input_error/config  -> 2, capacity_error -> 3, oracle_error -> 4,
//   io_error -> 5, numeric_error -> 2 (bad parameters) unless wrapped.

class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

class oracle_error : public std::runtime_error {
public:
    explicit oracle_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejection sampler gave up; carries the simple-fraction observed so far.
class rejection_error : public std::runtime_error {
public:
    rejection_error(const std::string& msg, double observed_fraction)
        : std::runtime_error(msg), observed_fraction_(observed_fraction) {}
    double observed_fraction() const { return observed_fraction_; }

private:
    double observed_fraction_;
};

}  // namespace ergo
