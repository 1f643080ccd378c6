#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwres {

// Base for all typed failures. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected),
          offset(offset),
          expected(expected) {}
    std::size_t offset;
    std::string expected;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(std::size_t offset, const std::string& name)
        : Error("unknown variable '" + name + "' at byte " + std::to_string(offset)),
          offset(offset),
          name(name) {}
    std::size_t offset;
    std::string name;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SizeMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class NotSL : public Error {
public:
    using Error::Error;
};

class NotUnimodular : public Error {
public:
    using Error::Error;
};

class NotExact : public Error {
public:
    using Error::Error;
};

class GradingViolation : public Error {
public:
    using Error::Error;
};

class NotMinimalResolution : public Error {
public:
    using Error::Error;
};

class SearchExhausted : public Error {
public:
    SearchExhausted(int degree, std::vector<int> mdeg, long bound)
        : Error("minimal-support search exhausted at degree " + std::to_string(degree) +
                " (bound " + std::to_string(bound) + ")"),
          degree(degree),
          mdeg(std::move(mdeg)),
          bound(bound) {}
    int degree;
    std::vector<int> mdeg;
    long bound;
};

}  // namespace cwres
