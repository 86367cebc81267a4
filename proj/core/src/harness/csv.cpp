#include "gcdlab/harness/csv.hpp"

#include "gcdlab/interval.hpp"

namespace gcdlab::harness {

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") == std::string::npos) {
            out_ << f;
            continue;
        }
        out_ << '"';
        for (char c : f) {
            if (c == '"') out_ << '"';
            out_ << c;
        }
        out_ << '"';
    }
    out_ << '\n';
}

std::string decimal(const Rational& q, int digits) {
    if (q == 0) return "0";
    return Interval::exact(q, kDefaultPrecision).midpoint_string(digits);
}

}  // namespace gcdlab::harness
