#include "dynamo/torus.hpp"

#include "dynamo/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dynamo {

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (std::numeric_limits<long long>::max)() / base) {
      throw std::overflow_error("ipow overflow");
    }
    out *= base;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

long long floor_of(const Rational& q) {
  long long div = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --div;
  return div;
}

long long ceil_of(const Rational& q) {
  long long div = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q.numerator() > 0) ++div;
  return div;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::uint64_t default_cell_budget() { return std::uint64_t{1} << 24; }

TorusShape::TorusShape(int n, int d, std::uint64_t count) : n_(n), d_(d), count_(count) {
  strides_.resize(d_);
  std::uint64_t s = 1;
  for (int axis = 0; axis < d_; ++axis) {
    strides_[axis] = s;
    s *= static_cast<std::uint64_t>(n_);
  }
}

TorusShape TorusShape::make(int n, int d, std::uint64_t max_cells) {
  if (n < 3) {
    throw std::invalid_argument("torus side must be at least 3, got n=" + std::to_string(n));
  }
  if (d < 1) {
    throw std::invalid_argument("torus dimension must be at least 1, got d=" + std::to_string(d));
  }
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    if (count > max_cells / static_cast<std::uint64_t>(n)) {
      throw std::overflow_error("n^d exceeds the cell budget of " + std::to_string(max_cells));
    }
    count *= static_cast<std::uint64_t>(n);
  }
  if (count > max_cells) {
    throw std::overflow_error("n^d exceeds the cell budget of " + std::to_string(max_cells));
  }
  return TorusShape(n, d, count);
}

VertexId TorusShape::vertex_index(const Coord& c) const {
  if (static_cast<int>(c.size()) != d_) {
    throw std::invalid_argument("coordinate arity does not match the torus dimension");
  }
  std::uint64_t v = 0;
  for (int axis = 0; axis < d_; ++axis) {
    if (c[axis] < 1 || c[axis] > n_) {
      throw std::invalid_argument("coordinate out of [1, n]");
    }
    v += static_cast<std::uint64_t>(c[axis] - 1) * strides_[axis];
  }
  return static_cast<VertexId>(v);
}

Coord TorusShape::coords_of(VertexId v) const {
  Coord c(d_);
  for (int axis = 0; axis < d_; ++axis) {
    c[axis] = coordinate(v, axis);
  }
  return c;
}

std::vector<VertexId> TorusShape::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(2 * d_);
  for (int axis = 0; axis < d_; ++axis) {
    out.push_back(step_up(v, axis));
    out.push_back(step_down(v, axis));
  }
  return out;
}

int TorusShape::coord_sum(VertexId v) const {
  int sum = 0;
  for (int axis = 0; axis < d_; ++axis) sum += coordinate(v, axis);
  return sum;
}

std::vector<std::uint64_t> VertexSet::blocks() const {
  std::vector<std::uint64_t> out(bits_.num_blocks());
  boost::to_block_range(bits_, out.begin());
  return out;
}

VertexSet parity_class(const TorusShape& shape, int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("parity class index must be 0 or 1");
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (shape.coord_sum(v) % 2 == i) out.set(v);
  }
  return out;
}

VertexSet level_set(const TorusShape& shape, int j) {
  if (j < shape.dim() || j > shape.dim() * shape.side()) {
    throw std::invalid_argument("level j must lie in [d, d*n]");
  }
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (shape.coord_sum(v) == j) out.set(v);
  }
  return out;
}

VertexSet corner_distance_class(const TorusShape& shape, int l) {
  const int n = shape.side();
  if (l < 0 || l > shape.dim() * (n / 2)) {
    throw std::invalid_argument("corner distance out of [0, d*floor(n/2)]");
  }
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    int dist = 0;
    for (int axis = 0; axis < shape.dim(); ++axis) {
      const int x = shape.coordinate(v, axis);
      dist += std::min(x - 1, n - x);
    }
    if (dist == l) out.set(v);
  }
  return out;
}

VertexSet build_h(const TorusShape& shape) {
  if (shape.side() < 5) {
    throw std::invalid_argument("H requires n >= 5");
  }
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    for (int axis = 0; axis < shape.dim(); ++axis) {
      if (shape.coordinate(v, axis) <= 2) {
        out.set(v);
        break;
      }
    }
  }
  return out;
}

VertexSet border_set(const TorusShape& shape, int width) {
  if (width != 1 && width != 2) throw std::invalid_argument("border width must be 1 or 2");
  if (shape.side() < 2 * width + 1) {
    throw std::invalid_argument("border width too large for this side length");
  }
  VertexSet out(shape);
  const int lo = shape.side() - width;  // members have some coordinate > lo
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    for (int axis = 0; axis < shape.dim(); ++axis) {
      if (shape.coordinate(v, axis) > lo) {
        out.set(v);
        break;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> index_family(int d, int r) {
  if (r < 2 || r > d) throw std::invalid_argument("index family requires 2 <= r <= d");
  const int len = d - r + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(len);
  std::iota(tuple.begin(), tuple.end(), 1);
  while (true) {
    out.push_back(tuple);
    int i = len - 1;
    while (i >= 0 && tuple[i] == d - (len - 1 - i)) --i;
    if (i < 0) break;
    ++tuple[i];
    for (int j = i + 1; j < len; ++j) tuple[j] = tuple[j - 1] + 1;
  }
  return out;
}

VertexSet sub_torus(const TorusShape& shape, const std::vector<int>& fixed_axes) {
  if (fixed_axes.empty() || static_cast<int>(fixed_axes.size()) >= shape.dim()) {
    throw std::invalid_argument("fixed axis tuple must leave at least one free axis");
  }
  for (std::size_t i = 0; i < fixed_axes.size(); ++i) {
    if (fixed_axes[i] < 1 || fixed_axes[i] > shape.dim()) {
      throw std::invalid_argument("fixed axis out of [1, d]");
    }
    if (i > 0 && fixed_axes[i] <= fixed_axes[i - 1]) {
      throw std::invalid_argument("fixed axes must be strictly increasing");
    }
  }
  VertexSet out(shape);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    bool member = true;
    for (int axis : fixed_axes) {
      if (shape.coordinate(v, axis - 1) != 1) {
        member = false;
        break;
      }
    }
    if (member) out.set(v);
  }
  return out;
}

VertexSet union_d_r(const TorusShape& shape, int r) {
  VertexSet out(shape);
  for (const auto& k : index_family(shape.dim(), r)) {
    out |= sub_torus(shape, k);
  }
  return out;
}

int members_among_neighbors(const VertexSet& set, VertexId v) {
  const TorusShape& shape = set.shape();
  int count = 0;
  for (int axis = 0; axis < shape.dim(); ++axis) {
    count += set.test(shape.step_up(v, axis));
    count += set.test(shape.step_down(v, axis));
  }
  return count;
}

int min_internal_degree(const VertexSet& set) {
  int best = set.shape().degree() + 1;
  set.for_each([&](VertexId v) { best = std::min(best, members_among_neighbors(set, v)); });
  return best;
}

}  // namespace dynamo
