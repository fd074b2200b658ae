#pragma once

#include <padic/number.hpp>

#include <string>

namespace padic {

/// One self-describing machine-readable record per result line:
/// {command, p, method, valuation, digits[], precision, converged, levels}.
/// Zeros are encoded with empty digits, precision 0, and the absolute
/// precision in the valuation slot.
struct ResultRecord {
    std::string command;
    long p;
    std::string method;
    PadicNumber value;
    bool converged = true;
    long levels = 0;
};

std::string encode_record(const ResultRecord& r);
ResultRecord decode_record(const std::string& line);

}  // namespace padic
