#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace htype::parallel {

/// Worker count used by node-parallel loops (default 1). Results never depend on it:
/// parallel loops only fill disjoint slots, reductions run serially in index order.
void set_thread_count(int threads);
int thread_count();

/// Calls body(begin, end) over a partition of [0, count).
void for_ranges(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

/// Pairwise summation in a fixed order.
double pairwise_sum(std::span<const double> values);

}  // namespace htype::parallel
