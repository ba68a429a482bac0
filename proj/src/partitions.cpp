#include "w22/partitions.hpp"

#include <numeric>

namespace w22 {

namespace {

void extend(int remaining, int max_part, int min_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= min_part; --part) {
    cur.push_back(part);
    extend(remaining - part, part, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, int min_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  Partition cur;
  extend(n, n, std::max(min_part, 1), cur, out);
  return out;
}

std::vector<BigInt> partition_counts(int n, int min_part) {
  std::vector<BigInt> a(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  a[0] = 1;
  for (int part = std::max(min_part, 1); part <= n; ++part) {
    for (int k = part; k <= n; ++k) a[k] += a[k - part];
  }
  return a;
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

}  // namespace w22
