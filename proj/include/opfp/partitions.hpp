#ifndef OPFP_PARTITIONS_HPP
#define OPFP_PARTITIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "opfp/errors.hpp"

namespace opfp {

// Word over {1,2}. For *-words the letter 1 stands for a (or u) and 2 for
// the adjoint.
using Word = std::vector<std::uint8_t>;

Word word_from_string(const std::string& s); // accepts '1','2','*' (with * = 2)
std::string word_str(const Word& w);

// Noncrossing set partition of {1..n}; blocks sorted ascending and listed by
// least element.
struct NCPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  bool is_full() const { return blocks.size() == 1; }
  std::string str() const;
};

inline constexpr int kEnumerationGuard = 12;

std::uint64_t catalan(int n);

// All of NC(n) in lexicographic order of the block-leader sequence
// (1 <= n <= 12; C(12) = 208012).
std::vector<NCPartition> enumerate_noncrossing(int n);

// Noncrossing partitions with all blocks of size two; n even, count C(n/2).
std::vector<NCPartition> enumerate_noncrossing_pairings(int n);

// Blocks must cover {1..n} disjointly (throws otherwise); true iff there is
// no a<b<c<d with {a,c} and {b,d} split across two blocks.
bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks);

// Maximal alternating interval partition sigma(eps): ordered interval blocks,
// consecutive letters differ inside a block, equal letters meet at block
// boundaries.
std::vector<std::vector<int>> max_alt_interval_partition(const Word& eps);

// Subword of j along a sorted 1-based index block.
Word restrict_word(const Word& j, const std::vector<int>& block);

} // namespace opfp

#endif
