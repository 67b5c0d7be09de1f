#include "opfp/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace opfp {

Word word_from_string(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == '1')
      w.push_back(1);
    else if (c == '2' || c == '*')
      w.push_back(2);
    else if (!isspace(static_cast<unsigned char>(c)))
      throw ParseError(std::string("bad word letter '") + c + "'");
  }
  if (w.empty()) throw ParseError("empty word");
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (auto l : w) s += (l == 1 ? '1' : '*');
  return s;
}

std::string NCPartition::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << ",";
    os << "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ",";
      os << blocks[b][i];
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

std::uint64_t catalan(int n) {
  if (n < 0) throw DomainError("catalan: negative index");
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    // C(i+1) = C(i) * 2(2i+1)/(i+2), exact at every step
    c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  }
  return c;
}

namespace {

// All noncrossing partitions of the 1-based window [lo, hi].
void enumerate_segment(int lo, int hi, std::vector<std::vector<std::vector<int>>>& out);

// Extends the block opened at the segment's least element by members of
// (last, hi]; each gap between chosen members is partitioned independently.
void extend_first_block(int hi, int last, std::vector<int>& block,
                        const std::vector<std::vector<int>>& done,
                        std::vector<std::vector<std::vector<int>>>& out) {
  {
    // Close the block here: the remaining tail (last, hi] is independent.
    std::vector<std::vector<std::vector<int>>> tails;
    enumerate_segment(last + 1, hi, tails);
    for (const auto& tail : tails) {
      std::vector<std::vector<int>> blocks = done;
      blocks.push_back(block);
      for (const auto& b : tail) blocks.push_back(b);
      out.push_back(std::move(blocks));
    }
  }
  for (int next = last + 1; next <= hi; ++next) {
    // The gap (last, next) must be partitioned among itself.
    std::vector<std::vector<std::vector<int>>> gaps;
    enumerate_segment(last + 1, next - 1, gaps);
    block.push_back(next);
    for (const auto& gap : gaps) {
      std::vector<std::vector<int>> done2 = done;
      for (const auto& b : gap) done2.push_back(b);
      extend_first_block(hi, next, block, done2, out);
    }
    block.pop_back();
  }
}

void enumerate_segment(int lo, int hi, std::vector<std::vector<std::vector<int>>>& out) {
  out.clear();
  if (lo > hi) {
    out.push_back({});
    return;
  }
  std::vector<int> block{lo};
  extend_first_block(hi, lo, block, {}, out);
}

std::vector<std::vector<int>> sorted_by_leader(std::vector<std::vector<int>> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return blocks;
}

} // namespace

std::vector<NCPartition> enumerate_noncrossing(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw GuardExceeded("enumerate_noncrossing: n = " + std::to_string(n) + " outside 1.." +
                        std::to_string(kEnumerationGuard));
  std::vector<std::vector<std::vector<int>>> raw;
  enumerate_segment(1, n, raw);
  std::vector<NCPartition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.push_back(NCPartition{n, sorted_by_leader(std::move(blocks))});
  std::sort(out.begin(), out.end(),
            [](const NCPartition& a, const NCPartition& b) { return a.blocks < b.blocks; });
  return out;
}

namespace {

void enumerate_pairings_segment(int lo, int hi, std::vector<std::vector<std::vector<int>>>& out) {
  out.clear();
  if (lo > hi) {
    out.push_back({});
    return;
  }
  // Pair lo with a partner leaving an even inner gap; inner and outer parts
  // are independent.
  for (int mate = lo + 1; mate <= hi; mate += 2) {
    std::vector<std::vector<std::vector<int>>> inner, outer;
    enumerate_pairings_segment(lo + 1, mate - 1, inner);
    enumerate_pairings_segment(mate + 1, hi, outer);
    for (const auto& in : inner)
      for (const auto& outp : outer) {
        std::vector<std::vector<int>> blocks;
        blocks.push_back({lo, mate});
        for (const auto& b : in) blocks.push_back(b);
        for (const auto& b : outp) blocks.push_back(b);
        out.push_back(std::move(blocks));
      }
  }
}

} // namespace

std::vector<NCPartition> enumerate_noncrossing_pairings(int n) {
  if (n < 1 || n > kEnumerationGuard)
    throw GuardExceeded("enumerate_noncrossing_pairings: n outside guard");
  if (n % 2 != 0) throw DomainError("enumerate_noncrossing_pairings: n must be even");
  std::vector<std::vector<std::vector<int>>> raw;
  enumerate_pairings_segment(1, n, raw);
  std::vector<NCPartition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.push_back(NCPartition{n, sorted_by_leader(std::move(blocks))});
  std::sort(out.begin(), out.end(),
            [](const NCPartition& a, const NCPartition& b) { return a.blocks < b.blocks; });
  return out;
}

bool is_noncrossing(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> block_of(n + 1, -1);
  int covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("is_noncrossing: empty block");
    for (int x : blocks[b]) {
      if (x < 1 || x > n || block_of[x] != -1)
        throw DomainError("is_noncrossing: blocks must cover {1..n} disjointly");
      block_of[x] = static_cast<int>(b);
      ++covered;
    }
  }
  if (covered != n) throw DomainError("is_noncrossing: blocks must cover {1..n}");

  std::vector<int> last(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    last[b] = *std::max_element(blocks[b].begin(), blocks[b].end());

  // Stack scan: a partition is noncrossing iff every revisited block is the
  // innermost open one.
  std::vector<int> stack;
  std::vector<bool> open(blocks.size(), false);
  for (int p = 1; p <= n; ++p) {
    const int b = block_of[p];
    if (!open[b]) {
      open[b] = true;
      stack.push_back(b);
    } else if (stack.back() != b) {
      return false;
    }
    if (p == last[b]) stack.pop_back();
  }
  return true;
}

std::vector<std::vector<int>> max_alt_interval_partition(const Word& eps) {
  if (eps.empty()) throw DomainError("max_alt_interval_partition: empty word");
  std::vector<std::vector<int>> blocks;
  std::vector<int> cur{1};
  for (int i = 1; i < static_cast<int>(eps.size()); ++i) {
    if (eps[i] != eps[i - 1]) {
      cur.push_back(i + 1);
    } else {
      blocks.push_back(cur);
      cur = {i + 1};
    }
  }
  blocks.push_back(cur);
  return blocks;
}

Word restrict_word(const Word& j, const std::vector<int>& block) {
  Word out;
  out.reserve(block.size());
  for (int idx : block) {
    if (idx < 1 || idx > static_cast<int>(j.size()))
      throw DomainError("restrict_word: index out of range");
    out.push_back(j[idx - 1]);
  }
  return out;
}

} // namespace opfp
