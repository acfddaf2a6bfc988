#pragma once

// Random lattice complexes and short exact sequences of them.

#include "hodge1/complexes.hpp"
#include "support/generators.hpp"

namespace gen {

using namespace hodge1;

/// Random lattice complex with d∘d = 0: each differential is a random
/// combination of rows annihilating the previous one.
inline LatticeComplex random_complex(Rng& rng, int first, std::size_t length, std::size_t max_rank)
{
    LatticeComplex c;
    c.first = first;
    for (std::size_t k = 0; k < length; ++k) c.ranks.push_back(static_cast<std::size_t>(rng.uniform(0, max_rank)));
    IntMatrix prev(c.ranks[0], 0);
    for (std::size_t k = 0; k + 1 < length; ++k) {
        const std::size_t n = c.ranks[k], m = c.ranks[k + 1];
        // Rows of the next differential lie in the left kernel of prev.
        IntMatrix left = prev.cols() == 0 ? IntMatrix::identity(n) : integer_kernel(prev.transpose());
        IntMatrix d(m, n);
        if (left.cols() > 0) {
            IntMatrix coeff = random_int_matrix(rng, m, left.cols(), 2);
            if (rng.uniform(0, 3) == 0) coeff = IntMatrix(m, left.cols());
            d = coeff * left.transpose();
        }
        c.differentials.push_back(d);
        prev = d;
    }
    return c;
}

/// 0 -> A -> B -> C -> 0 with B = A ⊕ C twisted by h : C -> A[1] and scrambled.
inline LatticeSES random_ses(Rng& rng)
{
    const int first = static_cast<int>(rng.uniform(-1, 1));
    const std::size_t len = static_cast<std::size_t>(rng.uniform(2, 4));
    LatticeSES s;
    s.a = random_complex(rng, first, len, 3);
    s.c = random_complex(rng, first, len, 3);
    s.b.first = first;
    std::vector<IntMatrix> scramble;
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t na = s.a.ranks[k], nc = s.c.ranks[k];
        s.b.ranks.push_back(na + nc);
        scramble.push_back(random_unimodular(rng, na + nc));
    }
    // Homotopy K^k : C^k -> A^k, shared by the two differentials touching degree k.
    std::vector<IntMatrix> homotopy;
    for (std::size_t k = 0; k < len; ++k) homotopy.push_back(random_int_matrix(rng, s.a.ranks[k], s.c.ranks[k], 1));
    for (std::size_t k = 0; k + 1 < len; ++k) {
        const int i = first + static_cast<int>(k);
        const std::size_t na = s.a.ranks[k];
        // h = dA K - K dC + u v^T with dA u = 0 and v^T dC = 0.
        IntMatrix h = s.a.differential(i) * homotopy[k] - homotopy[k + 1] * s.c.differential(i);
        IntMatrix cyc = integer_kernel(s.a.differential(i + 1));
        IntMatrix cocyc = integer_kernel(s.c.differential(i - 1).transpose());
        if (cyc.cols() > 0 && cocyc.cols() > 0)
            h += cyc * random_int_matrix(rng, cyc.cols(), cocyc.cols(), 2) * cocyc.transpose();
        IntMatrix d = vcat(hcat(s.a.differential(i), h), hcat(IntMatrix(s.c.ranks[k + 1], na), s.c.differential(i)));
        IntMatrix inv = to_integer(*inverse(to_rational(scramble[k])), "inverse");
        s.b.differentials.push_back(scramble[k + 1] * d * inv);
    }
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t na = s.a.ranks[k], nc = s.c.ranks[k];
        IntMatrix f = vcat(IntMatrix::identity(na), IntMatrix(nc, na));
        IntMatrix g = hcat(IntMatrix(nc, na), IntMatrix::identity(nc));
        IntMatrix inv = to_integer(*inverse(to_rational(scramble[k])), "inverse");
        s.f.push_back(scramble[k] * f);
        s.g.push_back(g * inv);
    }
    return s;
}

}  // namespace gen
