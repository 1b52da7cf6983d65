#pragma once

#include <cstddef>
#include <span>

namespace qgrover {

// Fixed-order pairwise reduction. Every mean/trace/norm in the toolkit funnels
// through here so results are bit-identical regardless of how work is chunked.
template <typename T, typename F>
T pairwise_map_sum(std::size_t lo, std::size_t hi, F&& f) {
    std::size_t count = hi - lo;
    if (count <= 8) {
        T acc{};
        for (std::size_t i = lo; i < hi; ++i) acc += f(i);
        return acc;
    }
    std::size_t mid = lo + count / 2;
    return pairwise_map_sum<T>(lo, mid, f) + pairwise_map_sum<T>(mid, hi, f);
}

template <typename T>
T pairwise_sum(std::span<const T> xs) {
    return pairwise_map_sum<T>(0, xs.size(), [&](std::size_t i) { return xs[i]; });
}

}  // namespace qgrover
