#pragma once

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>

#include "golay24/gf2.hpp"
#include "golay24/sc.hpp"

namespace golay24 {

// One frame of soft input: 24 whitespace-separated finite reals.
inline LlrVector parse_llr_line(const std::string& line) {
    std::istringstream in(line);
    LlrVector y;
    for (std::size_t j = 0; j < 24; ++j) {
        double v;
        if (!(in >> v)) throw std::invalid_argument("expected 24 values, got " + std::to_string(j));
        if (!std::isfinite(v)) throw std::invalid_argument("value " + std::to_string(j) + " is not finite");
        y[j] = v;
    }
    std::string rest;
    if (in >> rest) throw std::invalid_argument("trailing content after 24 values");
    return y;
}

inline std::string format_bits(const BitVector& v) {
    std::string s(v.size(), '0');
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) s[j] = '1';
    return s;
}

inline BitVector parse_bits(const std::string& s) {
    BitVector v(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] != '0' && s[j] != '1') throw std::invalid_argument("bit string must be 0/1");
        v[j] = s[j] == '1';
    }
    return v;
}

}  // namespace golay24
