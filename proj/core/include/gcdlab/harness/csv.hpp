#pragma once

#include "gcdlab/rational.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace gcdlab::harness {

/// Minimal RFC 4180 writer: fields with commas, quotes or newlines are quoted.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

/// Decimal rendering of a rational with the given significant digits.
std::string decimal(const Rational& q, int digits = 12);

inline std::string bool_field(bool b) { return b ? "true" : "false"; }

}  // namespace gcdlab::harness
