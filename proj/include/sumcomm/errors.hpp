#pragma once

#include <stdexcept>
#include <string>

namespace sumcomm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error {
    ZeroInverse() : Error("mod_inverse: element is zero") {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error("out of range: " + what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error("length mismatch: " + what) {}
};

struct BadDifference : Error {
    explicit BadDifference(const std::string& what) : Error("bad difference: " + what) {}
};

struct MixedParameters : Error {
    explicit MixedParameters(const std::string& what) : Error("mixed parameters: " + what) {}
};

struct EmptySet : Error {
    explicit EmptySet(const std::string& what) : Error("empty set: " + what) {}
};

struct TrivialRegime : Error {
    explicit TrivialRegime(const std::string& what) : Error("trivial regime: " + what) {}
};

struct EqualTargets : Error {
    EqualTargets() : Error("targets g0 and g1 must be distinct") {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& what) : Error("arity mismatch: " + what) {}
};

struct OnPromise : Error {
    OnPromise() : Error("inputs sum to g: exact error is identically zero") {}
};

struct NotSquareFree : Error {
    explicit NotSquareFree(const std::string& what) : Error("not square-free: " + what) {}
};

struct DegenerateTargets : Error {
    DegenerateTargets() : Error("counterexample targets must be distinct") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace sumcomm
