#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace affsym {

// Weakly decreasing positive parts.  The empty partition is allowed.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline int num_parts_geq(const Partition& p, int n) {
  return (int)std::count_if(p.begin(), p.end(), [n](int x) { return x >= n; });
}

inline bool is_strict(const Partition& p) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] >= p[i - 1]) return false;
  return is_partition(p);
}

inline bool has_distinct_small_parts(const Partition& p, int n) {
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] < n && p[i] == p[i - 1]) return false;
  return true;
}

inline Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return parts;
}

// All partitions of d with parts <= maxpart, largest-part-first within each,
// listed in descending lexicographic order.
inline std::vector<Partition> partitions_of(int d, int maxpart) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rem, mx); part >= 1; --part) {
      cur.push_back(part);
      rec(rem - part, part);
      cur.pop_back();
    }
  };
  rec(d, maxpart);
  return out;
}

inline std::vector<Partition> strict_partitions_of(int d, int maxpart) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(d, maxpart))
    if (is_strict(p)) out.push_back(p);
  return out;
}

inline std::string partition_str(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

// lexicographic comparison, larger first part wins; used for triangularity
inline bool lex_less(const Partition& a, const Partition& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace affsym
