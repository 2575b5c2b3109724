#pragma once

// The weak product K_r^n on vertex set Z_r^n: two vertices are adjacent iff
// they differ in every coordinate, so an independent set is a family of
// points that pairwise agree somewhere. The maximum independent sets are the
// dictator sets {x : x_i = j} of measure 1/r; everything here exists to
// build, enumerate, perturb, and measure sets against them.

#include <cstdint>
#include <vector>

#include "dictatorlab/grid.hpp"
#include "dictatorlab/rational.hpp"

namespace dictatorlab {

/// Sorted, duplicate-free set of vertex indices of Z_r^n.
class VertexSet {
public:
    VertexSet(GridShape shape, std::vector<std::int64_t> members);

    const GridShape& shape() const { return shape_; }
    const std::vector<std::int64_t>& members() const { return members_; }
    std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
    bool contains(std::int64_t index) const;

private:
    GridShape shape_;
    std::vector<std::int64_t> members_;
};

/// VertexSet validated to be pairwise non-adjacent. Construction scans all
/// pairs and reports the first adjacent pair it finds.
class IndependentSet : public VertexSet {
public:
    explicit IndependentSet(VertexSet vs);

    /// For callers that already hold a proof of independence (subsets of an
    /// independent set, enumeration output); skips the quadratic check.
    struct Unchecked {};
    IndependentSet(VertexSet vs, Unchecked) : VertexSet(std::move(vs)) {}
};

/// The maximum independent set {x : x_coord = value}; coord is 1-based.
class DictatorSet : public IndependentSet {
public:
    DictatorSet(const GridShape& shape, int coord, int value);

    int coord() const { return coord_; }
    int value() const { return value_; }

private:
    int coord_;
    int value_;
};

/// Adjacency in K_r^n: u and v differ in every coordinate.
bool adjacent(const Point& u, const Point& v, const GridShape& shape);
bool adjacent(std::int64_t u, std::int64_t v, const GridShape& shape);

bool is_independent(const VertexSet& vs);

DictatorSet dictator_set(const GridShape& shape, int coord, int value);

/// Deficiency of a near-maximum set: eps with |J|/r^n = (1-eps)/r, exact.
Rational epsilon_of(const IndependentSet& j);

/// |A triangle B| / r^n.
double sym_diff_measure(const VertexSet& a, const VertexSet& b);
std::int64_t sym_diff_count(const VertexSet& a, const VertexSet& b);
Rational sym_diff_rational(const VertexSet& a, const VertexSet& b);

struct EnumerationResult {
    std::vector<IndependentSet> sets;
    bool truncated = false;
};

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

/// All independent sets of exactly the target size (default r^(n-1)), in
/// lexicographic order of their sorted member lists. Branch-and-bound over
/// per-vertex agreement masks; refuses grids too large to search.
EnumerationResult max_independent_sets(const GridShape& shape, std::int64_t size_target = -1,
                                       std::int64_t cap = kDefaultEnumerationCap);

/// Remove k members of the dictator uniformly at random (deterministic per
/// seed). The result is independent by inclusion.
IndependentSet perturb(const DictatorSet& d, std::int64_t k, std::uint64_t seed);

/// 0/1 characteristic function of the set.
BooleanFunction indicator(const VertexSet& vs);

}  // namespace dictatorlab
