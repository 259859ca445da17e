#pragma once

#include <stdexcept>
#include <string>

namespace affinelab {

// Base for all library-level failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Geometric degeneracy in the input: collinear triples, tied distances,
// cocircular quadruples, points on a test boundary. Callers that generate
// inputs randomly are expected to resample on this.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

// Covariance matrix is (near-)singular, i.e. the point set is collinear.
class ModelDegenerate : public DegenerateInput {
public:
    explicit ModelDegenerate(const std::string& what) : DegenerateInput(what) {}
};

// Structurally valid input outside an operation's supported domain
// (odd hull for quadrangulation, size over an exhaustive-search limit).
class UnsupportedInput : public Error {
public:
    explicit UnsupportedInput(const std::string& what) : Error(what) {}
};

// Input file could not be parsed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace affinelab
