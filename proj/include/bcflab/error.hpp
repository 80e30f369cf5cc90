#pragma once

#include <stdexcept>
#include <string>

namespace bcflab {

// Base for all library errors; what() carries the detail message.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonInvertibleConstantTerm : Error {
    explicit NonInvertibleConstantTerm(const std::string& msg) : Error(msg) {}
};

struct NotSquare : Error {
    explicit NotSquare(const std::string& msg) : Error(msg) {}
};

// Raised internally when exact polynomial division does not terminate cleanly.
struct DivisionFailed : Error {
    explicit DivisionFailed(const std::string& msg) : Error(msg) {}
};

struct MissingWeight : Error {
    MissingWeight(const std::string& which, long index)
        : Error("missing weight " + which + " at index " + std::to_string(index)),
          kind(which), idx(index) {}
    std::string kind;
    long idx;
};

struct BadGoodSet : Error {
    explicit BadGoodSet(const std::string& msg) : Error(msg) {}
};

struct ConstantTermNotOne : Error {
    explicit ConstantTermNotOne(const std::string& msg) : Error(msg) {}
};

struct InsufficientMatrixSize : Error {
    explicit InsufficientMatrixSize(const std::string& msg) : Error(msg) {}
};

struct TruncationUnsafe : Error {
    explicit TruncationUnsafe(const std::string& msg) : Error(msg) {}
};

struct NotAZShape : Error {
    explicit NotAZShape(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct PoleWithinTruncation : Error {
    PoleWithinTruncation(const std::string& which, long order)
        : Error("pole in " + which + " within truncation at n=" + std::to_string(order)) {}
};

struct DenominatorVanished : Error {
    explicit DenominatorVanished(long k)
        : Error("weight denominator vanished at k=" + std::to_string(k)), idx(k) {}
    long idx;
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& msg) : Error(msg) {}
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& msg) : Error(msg) {}
};

}  // namespace bcflab
