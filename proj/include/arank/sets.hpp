#ifndef ARANK_SETS_HPP
#define ARANK_SETS_HPP

// Small finite universes of named points, subsets as bitmasks, and ordered
// layerings. Everything in this library works over universes of at most
// 32 points (in practice far fewer).

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace arank {

using PointSet = std::uint32_t;

inline bool contains(PointSet s, int i) { return (s >> i) & 1u; }
inline PointSet single(int i) { return PointSet{1} << i; }
inline PointSet with(PointSet s, int i) { return s | single(i); }
inline PointSet without(PointSet s, int i) { return s & ~single(i); }
inline bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }
inline int set_size(PointSet s) { return std::popcount(s); }

// Lowest set bit, -1 on empty. Used for deterministic first-element picks.
inline int first_point(PointSet s) {
  return s == 0 ? -1 : std::countr_zero(s);
}

// Members of s in increasing index order.
inline std::vector<int> members(PointSet s) {
  std::vector<int> out;
  for (PointSet t = s; t != 0; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

// A fixed ordered list of point names; index doubles as the bit position.
struct PointUniverse {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }

  PointSet full() const {
    if (names.size() >= 32) throw std::invalid_argument("universe too large");
    return (PointSet{1} << names.size()) - 1;
  }

  // Index of a name, -1 if absent.
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  int require(const std::string& name) const {
    int i = index_of(name);
    if (i < 0) throw std::invalid_argument("unknown point: " + name);
    return i;
  }

  std::string render(PointSet s) const {
    std::string out = "{";
    bool first = true;
    for (int i : members(s)) {
      if (!first) out += ",";
      out += names[static_cast<std::size_t>(i)];
      first = false;
    }
    return out + "}";
  }
};

// An ordered disjoint cover A_1 < ... < A_n of a carrier set by non-empty
// blocks. Ranks are 1-based block indices.
struct Layering {
  std::vector<PointSet> blocks;

  PointSet carrier() const {
    PointSet c = 0;
    for (PointSet b : blocks) c |= b;
    return c;
  }

  // Pre: blocks pairwise disjoint and non-empty.
  void validate() const {
    PointSet seen = 0;
    for (PointSet b : blocks) {
      if (b == 0) throw std::invalid_argument("layering: empty block");
      if ((b & seen) != 0) throw std::invalid_argument("layering: overlapping blocks");
      seen |= b;
    }
  }

  // 1-based rank of the block containing x.
  int rank_of(int x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (contains(blocks[i], x)) return static_cast<int>(i) + 1;
    throw std::invalid_argument("point outside the layering carrier");
  }

  int rank_count() const { return static_cast<int>(blocks.size()); }
};

}  // namespace arank

#endif  // ARANK_SETS_HPP
