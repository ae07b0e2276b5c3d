#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace gridrig {

// Union-find where every element carries a parity (+1/-1) relative to its
// root. Used to test whether a signing s with s(u)s(v) = gain exists.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), rank_(n, 0), parity_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // Returns the root and writes the parity of x relative to it.
  std::size_t find(std::size_t x, int& parity) {
    int acc = 1;
    std::size_t root = x;
    while (parent_[root] != root) {
      acc *= parity_[root];
      root = parent_[root];
    }
    // compress: re-point every node on the path directly at the root
    int remaining = acc;
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      const int own = parity_[x];
      parent_[x] = root;
      parity_[x] = remaining;
      remaining *= own;
      x = next;
    }
    parity = acc;
    return root;
  }

  // Imposes s(a)s(b) = gain. Returns false if that contradicts earlier constraints.
  bool unite(std::size_t a, std::size_t b, int gain) {
    int pa = 1;
    int pb = 1;
    std::size_t ra = find(a, pa);
    std::size_t rb = find(b, pb);
    if (ra == rb) return pa * pb == gain;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = pa * pb * gain;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

  bool same(std::size_t a, std::size_t b) {
    int p = 1;
    return find(a, p) == find(b, p);
  }

  // Signing relative to each component's root.
  int parity_of(std::size_t x) {
    int p = 1;
    find(x, p);
    return p;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
  std::vector<int> parity_;
};

}  // namespace gridrig
