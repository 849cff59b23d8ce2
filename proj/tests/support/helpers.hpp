#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "farkas/types.hpp"

namespace farkas::testing {

inline IntegerCoeffs ints(std::initializer_list<long> v) { return make_vector(v); }

inline RationalCoeffs rats(std::initializer_list<std::pair<long, long>> v) {
    RationalCoeffs out;
    for (auto [p, q] : v) {
        Rational r(p, q);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

inline std::string str(const std::vector<Integer>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

inline std::string str(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

}  // namespace farkas::testing
