#pragma once

// Hand-built triples (lattice, W, F): twenty that satisfy the axioms and
// twenty that break them in different ways.

#include <string>
#include <vector>

#include "hodge1/mhs.hpp"

namespace corpus {

using namespace hodge1;

struct Entry {
    std::string name;
    MixedHodgeStructure h;
};

inline Scalar I() { return Scalar::imaginary_unit(); }
inline Scalar S(long v) { return Scalar(v); }
inline ExactMatrix vec(std::vector<Scalar> v) { return ExactMatrix::column_vector(v); }
inline RatMatrix rvec(std::vector<Rational> v) { return RatMatrix::column_vector(v); }

/// Rank-2 weight-w structure with F^top = span(1, tau) and F^{w-top} full.
inline MixedHodgeStructure curve_like(int top, int w, const Scalar& tau)
{
    return {2, {{w, RatMatrix::identity(2)}}, {{w - top, ExactMatrix::identity(2)}, {top, vec({S(1), tau})}}};
}

inline MixedHodgeStructure elliptic() { return curve_like(1, 1, I()); }
inline MixedHodgeStructure s3() { return curve_like(3, 3, I()); }

inline std::vector<Entry> valid_entries()
{
    std::vector<Entry> out;
    out.push_back({"Z(0)", tate(0)});
    out.push_back({"Z(-1)", tate(-1)});
    out.push_back({"Z(2)^3", tate(2, 3)});
    out.push_back({"elliptic", elliptic()});
    out.push_back({"S3", s3()});
    out.push_back({"elliptic + Z(-1)", direct_sum(elliptic(), tate(-1))});
    out.push_back({"genus two", direct_sum(curve_like(1, 1, I()), curve_like(1, 1, S(2) * I() + S(1)))});
    out.push_back({"weight two (2,0)+(1,1)+(0,2)", direct_sum(curve_like(2, 2, I()), tate(-1))});
    out.push_back({"scrambled elliptic", change_basis(elliptic(), IntMatrix{{2, 1}, {1, 1}})});
    out.push_back({"Z(0) + Z(-1)", direct_sum(tate(0), tate(-1))});
    {
        // Non-split extension of Z(-1) by an elliptic piece.
        ExactMatrix f1 = hcat(vec({S(1), I(), S(0)}), vec({Scalar(Rational(1, 3)) * I(), S(2), S(1)}));
        MixedHodgeStructure h(3, {{1, RatMatrix::identity(3).columns(0, 2)}, {2, RatMatrix::identity(3)}},
                              {{0, ExactMatrix::identity(3)}, {1, f1}});
        out.push_back({"elliptic-by-Tate extension", h});
    }
    {
        // Kummer-type extension of Z(0) by Z(1).
        MixedHodgeStructure h(2, {{-2, rvec({1, 0})}, {0, RatMatrix::identity(2)}},
                              {{-1, ExactMatrix::identity(2)}, {0, vec({Scalar::sqrt_of(2), S(1)})}});
        out.push_back({"Kummer extension", h});
    }
    out.push_back({"level-one weight three", curve_like(2, 3, I() + S(1))});
    out.push_back({"weight three full diamond", direct_sum(s3(), curve_like(2, 3, S(3) * I()))});
    out.push_back({"rank zero", MixedHodgeStructure(0, {}, {})});
    out.push_back({"weight two with (1,1)^2", direct_sum(curve_like(2, 2, I()), tate(-1, 2))});
    out.push_back({"elliptic with radical period", curve_like(1, 1, I() * Scalar::sqrt_of(2))});
    out.push_back({"twisted elliptic", tate_twist(elliptic(), 1)});
    out.push_back({"three weights scrambled",
                   change_basis(direct_sum(direct_sum(tate(0), elliptic()), tate(-1)),
                                IntMatrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 1, 0}, {1, 0, 1, 1}})});
    {
        MixedHodgeStructure h(2, {{0, RatMatrix(2, 0)}, {1, RatMatrix::identity(2)}, {2, RatMatrix::identity(2)}},
                              {{-1, ExactMatrix::identity(2)}, {0, ExactMatrix::identity(2)},
                               {1, vec({S(1), I()})}, {2, ExactMatrix(2, 0)}});
        out.push_back({"redundant jumps", h});
    }
    return out;
}

inline std::vector<Entry> invalid_entries()
{
    std::vector<Entry> out;
    auto w1 = [](ExactMatrix f1) {
        return MixedHodgeStructure(2, {{1, RatMatrix::identity(2)}}, {{0, ExactMatrix::identity(2)}, {1, f1}});
    };
    out.push_back({"F^1 real line", w1(vec({S(1), S(0)}))});
    out.push_back({"F^1 zero", w1(ExactMatrix(2, 0))});
    out.push_back({"F^1 full", w1(ExactMatrix::identity(2))});
    out.push_back({"W not nested", MixedHodgeStructure(2, {{0, rvec({1, 0})}, {1, rvec({0, 1})}, {2, RatMatrix::identity(2)}},
                                                       {{0, ExactMatrix::identity(2)}})});
    out.push_back({"W not exhaustive",
                   MixedHodgeStructure(2, {{0, rvec({1, 0})}}, {{0, ExactMatrix::identity(2)}})});
    out.push_back({"F not nested", MixedHodgeStructure(2, {{2, RatMatrix::identity(2)}},
                                                       {{0, ExactMatrix::identity(2)}, {1, vec({S(1), I()})},
                                                        {2, vec({S(1), -I()})}})});
    out.push_back({"F bottom not full", MixedHodgeStructure(2, {{1, RatMatrix::identity(2)}},
                                                            {{1, vec({S(1), I()})}})});
    out.push_back({"Z(0) with F^1 full",
                   MixedHodgeStructure(1, {{0, RatMatrix::identity(1)}}, {{1, ExactMatrix::identity(1)}, {2, ExactMatrix(1, 0)}})});
    out.push_back({"weight two of type (0,2) only",
                   MixedHodgeStructure(1, {{2, RatMatrix::identity(1)}}, {{0, ExactMatrix::identity(1)}, {1, ExactMatrix(1, 0)}})});
    out.push_back({"duplicate weight", MixedHodgeStructure(1, {{0, RatMatrix::identity(1)}, {0, RatMatrix::identity(1)}},
                                                           {{0, ExactMatrix::identity(1)}})});
    out.push_back({"duplicate level", MixedHodgeStructure(1, {{0, RatMatrix::identity(1)}},
                                                          {{0, ExactMatrix::identity(1)}, {0, ExactMatrix::identity(1)}})});
    out.push_back({"bad piece in a sum", direct_sum(tate(0), w1(vec({S(1), S(0)})))});
    out.push_back({"no Hodge filtration", MixedHodgeStructure(1, {{0, RatMatrix::identity(1)}}, {})});
    out.push_back({"no weight filtration", MixedHodgeStructure(1, {}, {{0, ExactMatrix::identity(1)}})});
    out.push_back({"F^1 rational diagonal", w1(vec({S(1), S(1)}))});
    out.push_back({"weight three with F^2 full",
                   MixedHodgeStructure(2, {{3, RatMatrix::identity(2)}},
                                       {{0, ExactMatrix::identity(2)}, {2, ExactMatrix::identity(2)}, {3, vec({S(1), I()})}})});
    {
        MixedHodgeStructure h(4, {{1, RatMatrix::identity(4)}},
                              {{0, ExactMatrix::identity(4)}, {1, vec({S(1), I(), S(0), S(0)})}});
        out.push_back({"rank four weight one, F^1 too small", h});
    }
    {
        ExactMatrix f1 = hcat(vec({S(1), I(), S(0), S(0)}), vec({S(0), S(0), S(1), S(1)}));
        MixedHodgeStructure h(4, {{1, RatMatrix::identity(4)}}, {{0, ExactMatrix::identity(4)}, {1, f1}});
        out.push_back({"rank four weight one, real vector in F^1", h});
    }
    out.push_back({"F^1 meets W_0", MixedHodgeStructure(2, {{0, rvec({1, 0})}, {2, RatMatrix::identity(2)}},
                                                        {{0, ExactMatrix::identity(2)}, {1, vec({S(1), S(0)})}})});
    out.push_back({"S3 with a real radical line", curve_like(3, 3, Scalar::sqrt_of(2))});
    return out;
}

}  // namespace corpus
