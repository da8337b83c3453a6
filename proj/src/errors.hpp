#pragma once

#include <stdexcept>
#include <string>

namespace qch {

// Exceeded a configured enumeration / subset / norm bound.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: files, ideal specs, dimension mismatches.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Interpolation produced a non-integer coefficient or busted its degree
// bound. Signals a wrong period or an internal inconsistency, never data
// to be rounded.
class interpolation_error : public std::runtime_error {
public:
    explicit interpolation_error(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
    long long max_enumeration = 10'000'000;  // brute-force point enumerations
    int max_vectors = 20;                    // 2^n subset expansions
    long long max_divisor_norm = 1'000'000;  // divisor enumeration
};

}  // namespace qch
