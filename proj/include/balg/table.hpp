#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace balg {

// Dense n-by-n integer table. Doubles as a 0/1 order relation.
class Table {
 public:
  Table() = default;
  explicit Table(int n, int fill = 0)
      : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  int size() const { return n_; }
  int operator()(int x, int y) const { return d_[idx(x, y)]; }
  int& operator()(int x, int y) { return d_[idx(x, y)]; }

  bool in_range() const {
    for (int v : d_)
      if (v < 0 || v >= n_) return false;
    return true;
  }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t idx(int x, int y) const {
    assert(x >= 0 && x < n_ && y >= 0 && y < n_);
    return static_cast<std::size_t>(x) * n_ + y;
  }

  int n_ = 0;
  std::vector<int> d_;
};

}  // namespace balg
