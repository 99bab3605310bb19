#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace altiset {

// Base of every domain error raised by the library. The CLI maps ParseError
// to exit code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

#define ALTISET_DEFINE_ERROR(Name, Kind)                                   \
    class Name : public Error {                                            \
    public:                                                                \
        using Error::Error;                                                \
        const char* kind() const noexcept override { return Kind; }        \
    };

ALTISET_DEFINE_ERROR(DimensionError, "dimension")
ALTISET_DEFINE_ERROR(IndexError, "index")
ALTISET_DEFINE_ERROR(OrderError, "order")
ALTISET_DEFINE_ERROR(LengthError, "length")
ALTISET_DEFINE_ERROR(OracleSizeError, "oracle-size")
ALTISET_DEFINE_ERROR(InjectivityError, "injectivity")
ALTISET_DEFINE_ERROR(DegenerateInputError, "degenerate-input")
ALTISET_DEFINE_ERROR(MembershipError, "membership")
ALTISET_DEFINE_ERROR(PartitionError, "partition")
ALTISET_DEFINE_ERROR(SpaceError, "space")
ALTISET_DEFINE_ERROR(GridError, "grid")
ALTISET_DEFINE_ERROR(ArgumentError, "argument")
ALTISET_DEFINE_ERROR(NonterminationError, "nontermination")

#undef ALTISET_DEFINE_ERROR

// Raised when an operation needs the AA-property. Carries one witness cycle
// of the asymmetric interior, listed in traversal order.
class CyclicRelationError : public Error {
public:
    CyclicRelationError(const std::string& what, std::vector<std::size_t> cycle)
        : Error(what), cycle_(std::move(cycle)) {}

    const char* kind() const noexcept override { return "cyclic-relation"; }
    const std::vector<std::size_t>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::size_t> cycle_;
};

// Dataset ingestion failure. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line), field_(std::move(field)) {}

    const char* kind() const noexcept override { return "parse"; }
    std::size_t line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

} // namespace altiset
