#pragma once

#include <vector>

#include "w22/rational.hpp"

namespace w22 {

using Partition = std::vector<int>;

/// All partitions of n (parts weakly decreasing, every part >= min_part),
/// in lexicographically decreasing order: (4), (3,1), (2,2), ...
std::vector<Partition> partitions(int n, int min_part = 1);

/// Number of partitions of each k <= n with parts >= min_part.
std::vector<BigInt> partition_counts(int n, int min_part = 1);

int partition_sum(const Partition& p);

}  // namespace w22
