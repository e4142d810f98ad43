#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace lieclass {

using IndexTuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing p-tuples from {0..d-1}, in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t d, std::size_t p);

/// All non-decreasing p-tuples from {0..d-1}, in lexicographic order.
std::vector<IndexTuple> nondecreasing_tuples(std::size_t d, std::size_t p);

/// Position of a strictly increasing tuple within increasing_tuples(d, p).
std::size_t increasing_rank(const IndexTuple& t, std::size_t d);

/// Position of a non-decreasing tuple within nondecreasing_tuples(d, p).
std::size_t nondecreasing_rank(const IndexTuple& t, std::size_t d);

/// Sign of the permutation given as a sequence of distinct integers.
int permutation_sign(const std::vector<std::size_t>& perm);

struct SortedTuple {
  IndexTuple sorted;
  int sign;  ///< sign of the sorting permutation
};

/// Sorts an index tuple; nullopt if it has a repeated entry (alternating value 0).
std::optional<SortedTuple> sort_alternating(IndexTuple t);

/// Signed ordered partitions of positions {0..n-1} into consecutive blocks of
/// the given sizes, each block increasing. For sizes (p, q) these are the
/// (p, q)-shuffles.
struct BlockPartition {
  std::vector<IndexTuple> blocks;
  int sign;
};
std::vector<BlockPartition> block_partitions(const std::vector<std::size_t>& sizes);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> permutations(std::size_t n);

}  // namespace lieclass
