#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace persuasion {

// Thrown when an operation would exceed a documented size cap; the CLI maps
// it to its own exit code.
class SizeRefusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Receiver subsets are bitmasks with bit (i-1) <=> receiver i (0-based
// internally: bit i <=> receiver index i).
using SubsetMask = std::uint64_t;

inline int popcount(SubsetMask m) { return __builtin_popcountll(m); }

// Longest prefix {0,...,L-1} fully contained in the subset.
inline int longest_prefix(SubsetMask m, int n) {
  int len = 0;
  while (len < n && (m >> len & 1)) ++len;
  return len;
}

inline SubsetMask prefix_mask(int len) {
  return len == 0 ? 0 : (~SubsetMask{0} >> (64 - len));
}

// Joint signal profiles over per-receiver finite alphabets. A profile is
// identified by its lexicographic rank with receiver 1 as the most
// significant digit, which is also the LP variable order.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    place_.assign(sizes_.size(), 1);
    total_ = 1;
    for (int i = static_cast<int>(sizes_.size()) - 1; i >= 0; --i) {
      if (sizes_[i] < 1) throw std::invalid_argument("alphabet size < 1");
      place_[i] = total_;
      if (total_ > (std::uint64_t{1} << 40) / static_cast<std::uint64_t>(sizes_[i]))
        throw SizeRefusal("profile space too large to enumerate");
      total_ *= static_cast<std::uint64_t>(sizes_[i]);
    }
  }

  static ProfileSpace binary(int n) {
    return ProfileSpace(std::vector<int>(static_cast<std::size_t>(n), 2));
  }

  int n() const { return static_cast<int>(sizes_.size()); }
  std::uint64_t total() const { return total_; }
  int size(int receiver) const { return sizes_[static_cast<std::size_t>(receiver)]; }
  const std::vector<int>& sizes() const { return sizes_; }
  bool is_binary() const {
    for (int s : sizes_)
      if (s != 2) return false;
    return true;
  }

  int symbol_at(std::uint64_t rank, int receiver) const {
    return static_cast<int>(rank / place_[static_cast<std::size_t>(receiver)]) %
           sizes_[static_cast<std::size_t>(receiver)];
  }

  std::uint64_t rank(const std::vector<int>& symbols) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n(); ++i) {
      if (symbols[static_cast<std::size_t>(i)] < 0 ||
          symbols[static_cast<std::size_t>(i)] >= sizes_[static_cast<std::size_t>(i)])
        throw std::invalid_argument("symbol outside its alphabet");
      r += static_cast<std::uint64_t>(symbols[static_cast<std::size_t>(i)]) *
           place_[static_cast<std::size_t>(i)];
    }
    return r;
  }

  std::vector<int> unrank(std::uint64_t rank) const {
    std::vector<int> symbols(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) symbols[static_cast<std::size_t>(i)] = symbol_at(rank, i);
    return symbols;
  }

  // Binary spaces only: subset-mask view of a profile (bit i = s_{i+1}).
  SubsetMask rank_to_mask(std::uint64_t rank) const {
    SubsetMask m = 0;
    for (int i = 0; i < n(); ++i)
      if (symbol_at(rank, i) == 1) m |= SubsetMask{1} << i;
    return m;
  }
  std::uint64_t mask_to_rank(SubsetMask mask) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n(); ++i)
      if (mask >> i & 1) r += place_[static_cast<std::size_t>(i)];
    return r;
  }

  friend bool operator==(const ProfileSpace& a, const ProfileSpace& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
  std::vector<std::uint64_t> place_;
  std::uint64_t total_ = 1;
};

// Lexicographic combination enumeration: all size-k subsets of {0..n-1}\{skip}
// in lexicographic order of the sorted index tuple.
inline std::vector<std::vector<int>> combinations_excluding(int n, int k, int skip) {
  std::vector<int> pool;
  for (int i = 0; i < n; ++i)
    if (i != skip) pool.push_back(i);
  std::vector<std::vector<int>> out;
  if (k > static_cast<int>(pool.size())) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(pool.size());
  while (true) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    out.push_back(std::move(combo));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace persuasion
