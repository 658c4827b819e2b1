#ifndef GENBEAM_SUMMATION_HPP
#define GENBEAM_SUMMATION_HPP

#include <cstddef>
#include <span>

namespace genbeam {

/// Pairwise (cascade) summation with a fixed association order, so results
/// do not depend on how the terms were produced.
template <class T>
T pairwise_sum(std::span<const T> terms)
{
    const std::size_t n = terms.size();
    if (n == 0)
        return T{};
    if (n <= 8) {
        T acc = terms[0];
        for (std::size_t i = 1; i < n; ++i)
            acc += terms[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

} // namespace genbeam

#endif // GENBEAM_SUMMATION_HPP
