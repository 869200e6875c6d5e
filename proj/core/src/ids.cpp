#include "qbafx/ids.hpp"

#include <cctype>

namespace qbafx {

namespace {

inline bool is_digit(char c) {
  return c >= '0' && c <= '9';
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ia = i, jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;
      // Compare runs by numeric value: strip leading zeros, then by length,
      // then lexicographically.
      std::size_t sa = i, sb = j;
      while (sa + 1 < ia && a[sa] == '0') ++sa;
      while (sb + 1 < jb && b[sb] == '0') ++sb;
      const std::size_t la = ia - sa, lb = jb - sb;
      if (la != lb) return la < lb;
      const int cmp = a.compare(sa, la, b, sb, lb);
      if (cmp != 0) return cmp < 0;
      // Equal value: shorter run (fewer leading zeros) first.
      if (ia - i != jb - j) return ia - i < jb - j;
      i = ia;
      j = jb;
    } else {
      if (a[i] != b[j]) {
        return static_cast<unsigned char>(a[i]) <
               static_cast<unsigned char>(b[j]);
      }
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

bool natural_edge_less(const EdgeKey& a, const EdgeKey& b) {
  if (a.first != b.first) return natural_less(a.first, b.first);
  return natural_less(a.second, b.second);
}

}  // namespace qbafx
