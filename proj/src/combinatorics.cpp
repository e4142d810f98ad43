#include "lieclass/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace lieclass {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void grow(std::size_t d, std::size_t p, std::size_t start, bool strict, IndexTuple& cur,
          std::vector<IndexTuple>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    cur.push_back(i);
    grow(d, p, strict ? i + 1 : i, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexTuple> increasing_tuples(std::size_t d, std::size_t p) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  grow(d, p, 0, true, cur, out);
  return out;
}

std::vector<IndexTuple> nondecreasing_tuples(std::size_t d, std::size_t p) {
  std::vector<IndexTuple> out;
  IndexTuple cur;
  grow(d, p, 0, false, cur, out);
  return out;
}

std::size_t increasing_rank(const IndexTuple& t, std::size_t d) {
  const std::size_t p = t.size();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t v = next; v < t[i]; ++v) rank += binomial(d - 1 - v, p - 1 - i);
    next = t[i] + 1;
  }
  return rank;
}

std::size_t nondecreasing_rank(const IndexTuple& t, std::size_t d) {
  // non-decreasing tuples of length p over d letters correspond to strictly
  // increasing tuples over d + p - 1 letters via t_i -> t_i + i
  IndexTuple shifted(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) shifted[i] = t[i] + i;
  return increasing_rank(shifted, d + t.size() - (t.empty() ? 0 : 1));
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

std::optional<SortedTuple> sort_alternating(IndexTuple t) {
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return std::nullopt;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return SortedTuple{std::move(t), sign};
}

std::vector<BlockPartition> block_partitions(const std::vector<std::size_t>& sizes) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<BlockPartition> out;
  std::vector<IndexTuple> blocks(sizes.size());
  std::vector<bool> used(n, false);

  // choose block b as an increasing subset of the unused positions
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == sizes.size()) {
      std::vector<std::size_t> perm;
      perm.reserve(n);
      for (const auto& blk : blocks) perm.insert(perm.end(), blk.begin(), blk.end());
      out.push_back({blocks, permutation_sign(perm)});
      return;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) free.push_back(i);
    for (const auto& choice : increasing_tuples(free.size(), sizes[b])) {
      IndexTuple blk;
      for (std::size_t c : choice) blk.push_back(free[c]);
      for (std::size_t i : blk) used[i] = true;
      blocks[b] = blk;
      self(self, b + 1);
      for (std::size_t i : blk) used[i] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace lieclass
