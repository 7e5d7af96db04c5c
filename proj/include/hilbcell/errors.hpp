#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbcell {

/// Brute-force enumeration refused because the working set is too large.
class OracleBoundError : public std::runtime_error {
public:
    OracleBoundError(std::string msg, std::int64_t members, std::int64_t cap)
        : std::runtime_error(std::move(msg)), members(members), cap(cap) {}
    std::int64_t members;
    std::int64_t cap;
};

/// A series computation ran out of exact terms before the result was
/// decidable; retry with a larger truncation order.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(std::string msg, std::int64_t needed_trunc)
        : std::runtime_error(std::move(msg)), needed_trunc(needed_trunc) {}
    std::int64_t needed_trunc;
};

} // namespace hilbcell
