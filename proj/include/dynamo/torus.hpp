#pragma once

// Torus geometry, vertex indexing, and the canonical vertex set families
// the constructions are built from: parity classes, level sets, corner
// distance classes, the frame H, border strips, sub-tori and their unions.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <vector>

namespace dynamo {

using VertexId = std::uint32_t;

// 1-based components (x_1, ..., x_d), each in [1, n].
using Coord = std::vector<int>;

std::uint64_t default_cell_budget();  // 2^24 cells

// T_n^d: vertex set [1,n]^d, two vertices adjacent iff they differ by +-1
// (mod n) in exactly one coordinate. 2d-regular with n^d vertices.
// Internally a vertex is a mixed-radix index: v = sum_j (x_j - 1) * n^(j-1).
class TorusShape {
 public:
  static TorusShape make(int n, int d, std::uint64_t max_cells = default_cell_budget());

  int side() const { return n_; }
  int dim() const { return d_; }
  int degree() const { return 2 * d_; }
  std::uint64_t vertex_count() const { return count_; }
  std::uint64_t stride(int axis) const { return strides_[axis]; }

  VertexId vertex_index(const Coord& c) const;
  Coord coords_of(VertexId v) const;

  // 1-based value of coordinate axis+1.
  int coordinate(VertexId v, int axis) const {
    return static_cast<int>((v / strides_[axis]) % n_) + 1;
  }

  VertexId step_up(VertexId v, int axis) const {
    const std::uint64_t digit = (v / strides_[axis]) % n_;
    return digit + 1 == static_cast<std::uint64_t>(n_)
               ? static_cast<VertexId>(v - digit * strides_[axis])
               : static_cast<VertexId>(v + strides_[axis]);
  }

  VertexId step_down(VertexId v, int axis) const {
    const std::uint64_t digit = (v / strides_[axis]) % n_;
    return digit == 0 ? static_cast<VertexId>(v + (n_ - 1) * strides_[axis])
                      : static_cast<VertexId>(v - strides_[axis]);
  }

  // The 2d neighbors, no duplicates (n >= 3 guarantees distinctness).
  std::vector<VertexId> neighbors(VertexId v) const;

  // |x| = x_1 + ... + x_d.
  int coord_sum(VertexId v) const;

  friend bool operator==(const TorusShape& a, const TorusShape& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  TorusShape(int n, int d, std::uint64_t count);

  int n_ = 0;
  int d_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> strides_;
};

// Dense bit-vector over the n^d vertices of one shape.
class VertexSet {
 public:
  explicit VertexSet(const TorusShape& shape)
      : shape_(shape), bits_(shape.vertex_count()) {}

  static VertexSet all(const TorusShape& shape) {
    VertexSet s(shape);
    s.bits_.set();
    return s;
  }

  const TorusShape& shape() const { return shape_; }

  bool test(VertexId v) const { return bits_.test(v); }
  void set(VertexId v, bool value = true) { bits_.set(v, value); }

  std::uint64_t cardinality() const { return bits_.count(); }
  bool none() const { return bits_.none(); }
  bool is_all() const { return bits_.all(); }
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(shape_);
    s.bits_ = ~bits_;
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.shape_ == b.shape_ && a.bits_ == b.bits_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto v = bits_.find_first(); v != boost::dynamic_bitset<std::uint64_t>::npos;
         v = bits_.find_next(v)) {
      f(static_cast<VertexId>(v));
    }
  }

  std::vector<std::uint64_t> blocks() const;

  const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

 private:
  TorusShape shape_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

// A_i: vertices whose coordinate sum is congruent to i mod 2 (i in {0,1}).
VertexSet parity_class(const TorusShape& shape, int i);

// B_j: vertices whose coordinates sum to exactly j, d <= j <= d*n.
VertexSet level_set(const TorusShape& shape, int j);

// C(l): vertices at non-wrapping L1 distance exactly l from the nearest
// corner in {1,n}^d, 0 <= l <= d*floor(n/2).
VertexSet corner_distance_class(const TorusShape& shape, int l);

// H: union over axes of { x : x_j <= 2 }. Requires n >= 5 so H is proper.
VertexSet build_h(const TorusShape& shape);

// Width-1 border { x : some x_j = n } or width-2 border { x : some x_j > n-2 }.
VertexSet border_set(const TorusShape& shape, int width);

// K(r): all strictly increasing (d-r+1)-tuples over [1,d]; 2 <= r <= d.
std::vector<std::vector<int>> index_family(int d, int r);

// T(k): vertices with x_j = 1 for every axis j in k (1-based axes).
VertexSet sub_torus(const TorusShape& shape, const std::vector<int>& fixed_axes);

// D(r): union of T(k) over k in K(r).
VertexSet union_d_r(const TorusShape& shape, int r);

// Number of v's neighbors that lie inside the set.
int members_among_neighbors(const VertexSet& set, VertexId v);

// Minimum over members of the induced degree; returns 2d+1 for the empty set.
int min_internal_degree(const VertexSet& set);

}  // namespace dynamo
