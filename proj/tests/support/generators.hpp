#pragma once

// Random test data: integer matrices, unimodular changes of basis, scalars,
// and pure Hodge structures assembled from elementary blocks.

#include <random>
#include <vector>

#include "hodge1/mhs.hpp"

namespace gen {

using namespace hodge1;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline Rational small_rational(Rng& rng, long num = 6, long den = 4)
{
    Rational q(rng.uniform(-num, num), rng.uniform(1, den));
    q.canonicalize();
    return q;
}

inline Scalar random_scalar(Rng& rng, std::int64_t d)
{
    if (d == 1) return {small_rational(rng), small_rational(rng), 0, 0, 1};
    return {small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng), d};
}

/// Element of Q(i) with non-zero imaginary part.
inline Scalar non_real_gaussian(Rng& rng)
{
    Rational b = 0;
    while (b == 0) b = small_rational(rng, 4, 3);
    return {small_rational(rng, 4, 3), b, 0, 0, 1};
}

inline IntMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long bound)
{
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.uniform(-bound, bound);
    return m;
}

/// Product of elementary transvections, swaps and sign changes.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 0)
{
    IntMatrix g = IntMatrix::identity(n);
    if (n < 2) {
        if (n == 1 && rng.coin()) g(0, 0) = -1;
        return g;
    }
    if (steps == 0) steps = static_cast<int>(2 * n);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = rng.index(n), b = rng.index(n);
        if (a == b) continue;
        long f = rng.uniform(-2, 2);
        for (std::size_t j = 0; j < n; ++j) g(a, j) += f * g(b, j);
        if (rng.uniform(0, 5) == 0)
            for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    }
    return g;
}

/// Rank-2 pure block of types (p, q), (q, p) with p > q: F^p = span(1, tau).
inline MixedHodgeStructure pair_block(int p, int q, const Scalar& tau)
{
    ExactMatrix v{{Scalar(1)}, {tau}};
    std::vector<HodgeStep> fs{{q, ExactMatrix::identity(2)}, {p, v}};
    return {2, {{p + q, RatMatrix::identity(2)}}, std::move(fs)};
}

/// Rank-1 block of type (p, p).
inline MixedHodgeStructure tate_block(int p) { return tate(-p, 1); }

struct PureShape {
    int weight = 0;
    std::vector<int> pair_levels;  // each entry p > weight - p gives a block of types (p, w-p), (w-p, p)
    int tate_count = 0;            // only for even weight
};

inline MixedHodgeStructure random_pure(Rng& rng, const PureShape& shape, bool scramble = true)
{
    MixedHodgeStructure h(0, {}, {});
    for (int p : shape.pair_levels) h = direct_sum(h, pair_block(p, shape.weight - p, non_real_gaussian(rng)));
    for (int j = 0; j < shape.tate_count; ++j) h = direct_sum(h, tate_block(shape.weight / 2));
    if (h.rank() == 0) h = MixedHodgeStructure(0, {{shape.weight, RatMatrix(0, 0)}}, {});
    if (scramble && h.rank() > 0) h = change_basis(h, random_unimodular(rng, h.rank()));
    return h;
}

/// Random shape of a pure odd-weight piece 2p-1 mixing level-one and higher-level pairs.
inline PureShape random_odd_shape(Rng& rng, int p, int max_pairs)
{
    PureShape s;
    s.weight = 2 * p - 1;
    int pairs = static_cast<int>(rng.uniform(0, max_pairs));
    for (int j = 0; j < pairs; ++j) {
        int top = static_cast<int>(rng.uniform(p, 2 * p - 1));
        s.pair_levels.push_back(top);
    }
    return s;
}

/// Direct sum of random pure pieces of assorted weights, scrambled.
inline MixedHodgeStructure random_split(Rng& rng)
{
    MixedHodgeStructure h(0, {}, {});
    int pieces = static_cast<int>(rng.uniform(1, 3));
    for (int j = 0; j < pieces; ++j) {
        PureShape shape;
        shape.weight = static_cast<int>(rng.uniform(-1, 4));
        int pairs = static_cast<int>(rng.uniform(0, 2));
        for (int a = 0; a < pairs; ++a) {
            int lo = shape.weight / 2 + 1;
            int top = static_cast<int>(rng.uniform(lo, lo + 2));
            shape.pair_levels.push_back(top);
        }
        if (shape.weight % 2 == 0) shape.tate_count = static_cast<int>(rng.uniform(0, 2));
        h = direct_sum(h, random_pure(rng, shape, false));
    }
    return change_basis(h, random_unimodular(rng, h.rank()));
}

}  // namespace gen
