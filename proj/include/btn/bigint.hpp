#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace btn {

// All gate weights, thresholds and key values are exact integers;
// rationals appear only in the separability checker and the binomial bounds.
using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline bigint binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    bigint result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

}  // namespace btn
