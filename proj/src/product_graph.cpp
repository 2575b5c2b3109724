#include "dictatorlab/product_graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <string>

namespace dictatorlab {

namespace {

constexpr std::int64_t kEnumerationVertexLimit = 4096;

std::string format_point(std::int64_t index, const GridShape& shape) {
    const Point p = point_of(index, shape);
    std::string s = "(";
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.coords[i]);
    }
    s += ")";
    return s;
}

// Dense bitset over vertex indices; enumeration grids are small.
struct VertexMask {
    std::vector<std::uint64_t> words;

    explicit VertexMask(std::int64_t bits) : words(static_cast<std::size_t>((bits + 63) / 64)) {}

    void set(std::int64_t i) { words[static_cast<std::size_t>(i >> 6)] |= 1ULL << (i & 63); }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (std::uint64_t w : words) c += std::popcount(w);
        return c;
    }

    void intersect(const VertexMask& other) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other.words[i];
    }

    // Clear bits <= i.
    void clear_through(std::int64_t i) {
        const std::size_t word = static_cast<std::size_t>(i >> 6);
        for (std::size_t k = 0; k < word; ++k) words[k] = 0;
        const int bit = static_cast<int>(i & 63);
        if (bit == 63)
            words[word] = 0;
        else
            words[word] &= ~((2ULL << bit) - 1);
    }

    template <typename Fn>
    bool for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            std::uint64_t bits = words[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                if (!fn(static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(b)))) return false;
            }
        }
        return true;
    }
};

struct CliqueSearch {
    const std::vector<VertexMask>& agree;
    std::int64_t target;
    std::int64_t cap;
    std::vector<std::int64_t> current;
    std::vector<std::vector<std::int64_t>> found;
    bool truncated = false;

    // Depth-first over candidates in ascending index order, so the output
    // is lexicographic and needs no dedup.
    bool extend(const VertexMask& candidates) {
        if (static_cast<std::int64_t>(current.size()) == target) {
            if (static_cast<std::int64_t>(found.size()) >= cap) {
                truncated = true;
                return false;
            }
            found.push_back(current);
            return true;
        }
        if (static_cast<std::int64_t>(current.size()) + candidates.count() < target) return true;
        return candidates.for_each([&](std::int64_t v) {
            VertexMask next = candidates;
            next.intersect(agree[static_cast<std::size_t>(v)]);
            next.clear_through(v);
            current.push_back(v);
            const bool keep_going = extend(next);
            current.pop_back();
            return keep_going;
        });
    }
};

std::uint64_t bounded_uniform(std::mt19937_64& rng, std::uint64_t bound) {
    // Rejection sampling keeps draws unbiased and identical on every
    // platform (mt19937_64 output is pinned by the standard).
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

VertexSet::VertexSet(GridShape shape, std::vector<std::int64_t> members)
    : shape_(std::move(shape)), members_(std::move(members)) {
    for (std::int64_t m : members_) {
        if (m < 0 || m >= shape_.size())
            throw ValidationError("vertex index " + std::to_string(m) + " outside [0," +
                                  std::to_string(shape_.size() - 1) + "]");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(std::int64_t index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

IndependentSet::IndependentSet(VertexSet vs) : VertexSet(std::move(vs)) {
    const auto& m = members();
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (adjacent(m[i], m[j], shape()))
                throw ValidationError("not an independent set: vertices " +
                                      format_point(m[i], shape()) + " and " +
                                      format_point(m[j], shape()) +
                                      " are adjacent (they differ in every coordinate)");
        }
    }
}

DictatorSet::DictatorSet(const GridShape& shape, int coord, int value)
    : IndependentSet(
          [&] {
              if (coord < 1 || coord > shape.n())
                  throw ValidationError("dictator coordinate " + std::to_string(coord) +
                                        " outside [1," + std::to_string(shape.n()) + "]");
              if (value < 0 || value >= shape.r())
                  throw ValidationError("dictator value " + std::to_string(value) + " outside [0," +
                                        std::to_string(shape.r() - 1) + "]");
              std::int64_t stride = 1;
              for (int i = 1; i < coord; ++i) stride *= shape.r();
              std::vector<std::int64_t> members;
              members.reserve(static_cast<std::size_t>(shape.size() / shape.r()));
              for (std::int64_t idx = 0; idx < shape.size(); ++idx)
                  if ((idx / stride) % shape.r() == value) members.push_back(idx);
              return VertexSet(shape, std::move(members));
          }(),
          Unchecked{}),
      coord_(coord),
      value_(value) {}

bool adjacent(const Point& u, const Point& v, const GridShape& shape) {
    return adjacent(index_of(u, shape), index_of(v, shape), shape);
}

bool adjacent(std::int64_t u, std::int64_t v, const GridShape& shape) {
    if (u < 0 || u >= shape.size() || v < 0 || v >= shape.size())
        throw ValidationError("vertex index outside grid");
    for (int i = 0; i < shape.n(); ++i) {
        if (u % shape.r() == v % shape.r()) return false;
        u /= shape.r();
        v /= shape.r();
    }
    return true;
}

bool is_independent(const VertexSet& vs) {
    const auto& m = vs.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (adjacent(m[i], m[j], vs.shape())) return false;
    return true;
}

DictatorSet dictator_set(const GridShape& shape, int coord, int value) {
    return DictatorSet(shape, coord, value);
}

Rational epsilon_of(const IndependentSet& j) {
    const std::int64_t total = j.shape().size();
    return Rational(total - j.shape().r() * j.size(), total);
}

std::int64_t sym_diff_count(const VertexSet& a, const VertexSet& b) {
    if (!(a.shape() == b.shape()))
        throw ValidationError("symmetric difference of sets on different grids");
    std::int64_t in_both = 0;
    const auto& ma = a.members();
    const auto& mb = b.members();
    std::size_t i = 0, k = 0;
    while (i < ma.size() && k < mb.size()) {
        if (ma[i] == mb[k]) {
            ++in_both;
            ++i;
            ++k;
        } else if (ma[i] < mb[k]) {
            ++i;
        } else {
            ++k;
        }
    }
    return a.size() + b.size() - 2 * in_both;
}

Rational sym_diff_rational(const VertexSet& a, const VertexSet& b) {
    return Rational(sym_diff_count(a, b), a.shape().size());
}

double sym_diff_measure(const VertexSet& a, const VertexSet& b) {
    return sym_diff_rational(a, b).value();
}

EnumerationResult max_independent_sets(const GridShape& shape, std::int64_t size_target,
                                       std::int64_t cap) {
    const std::int64_t n_total = shape.size();
    if (n_total > kEnumerationVertexLimit)
        throw ValidationError("grid with " + std::to_string(n_total) +
                              " vertices is too large for exhaustive enumeration (limit " +
                              std::to_string(kEnumerationVertexLimit) + ")");
    if (size_target < 0) size_target = n_total / shape.r();  // r^(n-1)
    if (cap < 1) throw ValidationError("enumeration cap must be positive");

    std::vector<VertexMask> agree(static_cast<std::size_t>(n_total), VertexMask(n_total));
    for (std::int64_t u = 0; u < n_total; ++u)
        for (std::int64_t v = u + 1; v < n_total; ++v)
            if (!adjacent(u, v, shape)) {
                agree[static_cast<std::size_t>(u)].set(v);
                agree[static_cast<std::size_t>(v)].set(u);
            }

    CliqueSearch search{agree, size_target, cap, {}, {}, false};
    if (size_target == 0) {
        search.found.push_back({});
    } else {
        VertexMask all(n_total);
        for (std::int64_t v = 0; v < n_total; ++v) all.set(v);
        search.extend(all);
    }

    EnumerationResult result;
    result.truncated = search.truncated;
    result.sets.reserve(search.found.size());
    for (auto& members : search.found)
        result.sets.emplace_back(VertexSet(shape, std::move(members)), IndependentSet::Unchecked{});
    return result;
}

IndependentSet perturb(const DictatorSet& d, std::int64_t k, std::uint64_t seed) {
    if (k < 0 || k > d.size())
        throw ValidationError("perturbation count " + std::to_string(k) + " outside [0," +
                              std::to_string(d.size()) + "]");
    std::vector<std::int64_t> members = d.members();
    std::mt19937_64 rng(seed);
    // Partial Fisher-Yates: the first k slots become the removed members.
    for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t j =
            i + static_cast<std::int64_t>(bounded_uniform(rng, static_cast<std::uint64_t>(d.size() - i)));
        std::swap(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
    }
    members.erase(members.begin(), members.begin() + k);
    return IndependentSet(VertexSet(d.shape(), std::move(members)), IndependentSet::Unchecked{});
}

BooleanFunction indicator(const VertexSet& vs) {
    std::vector<Complex> values(static_cast<std::size_t>(vs.shape().size()), Complex{0.0, 0.0});
    for (std::int64_t m : vs.members()) values[static_cast<std::size_t>(m)] = Complex{1.0, 0.0};
    return BooleanFunction(GridFunction(vs.shape(), std::move(values)));
}

}  // namespace dictatorlab
