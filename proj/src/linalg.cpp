#include "hodge1/linalg.hpp"

namespace hodge1 {

bool is_integral(const ExactMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer()) return false;
    return true;
}

bool is_integral(const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1) return false;
    return true;
}

IntMatrix to_integer(const ExactMatrix& m, const std::string& what)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer())
                throw InvalidInput(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + m(i, j).str() + " is not an integer");
            out(i, j) = m(i, j).a().get_num();
        }
    return out;
}

IntMatrix to_integer(const RatMatrix& m, const std::string& what)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw InvalidInput(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + to_string(m(i, j)) + " is not an integer");
            out(i, j) = m(i, j).get_num();
        }
    return out;
}

RatMatrix to_rational(const ExactMatrix& m, const std::string& what)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational())
                throw InvalidInput(what + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") = " + m(i, j).str() + " is not rational");
            out(i, j) = m(i, j).a();
        }
    return out;
}

std::int64_t common_radicand(std::int64_t d1, std::int64_t d2)
{
    if (d1 <= 1) return d2;
    if (d2 <= 1 || d1 == d2) return d1;
    throw InvalidInput("scalars from different fields: sqrt(" + std::to_string(d1) + ") and sqrt(" +
                       std::to_string(d2) + ")");
}

std::int64_t common_radicand(const ExactMatrix& m)
{
    std::int64_t d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).has_radical()) d = common_radicand(d, m(i, j).radicand());
    return d;
}

namespace {

std::vector<Scalar> field_basis(std::int64_t d)
{
    if (expansion_degree(d) == 2) return {Scalar(1), Scalar::imaginary_unit()};
    Scalar r = Scalar::sqrt_of(d);
    return {Scalar(1), Scalar::imaginary_unit(), r, Scalar::imaginary_unit() * r};
}

}  // namespace

RatMatrix expand_matrix(const ExactMatrix& m, std::int64_t d)
{
    d = common_radicand(d, common_radicand(m));
    const int deg = expansion_degree(d);
    auto basis = field_basis(d);
    RatMatrix out(deg * m.rows(), deg * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            for (int t = 0; t < deg; ++t) {
                auto coords = (m(i, j) * basis[t]).coordinates();
                for (int u = 0; u < deg; ++u) out(deg * i + u, deg * j + t) = coords[u];
            }
        }
    return out;
}

std::vector<Rational> expand_vector(const std::vector<Scalar>& v, std::int64_t d)
{
    for (const auto& x : v)
        if (x.has_radical()) d = common_radicand(d, x.radicand());
    const int deg = expansion_degree(d);
    std::vector<Rational> out(deg * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto coords = v[i].coordinates();
        for (int u = 0; u < deg; ++u) out[deg * i + u] = coords[u];
    }
    return out;
}

RatMatrix embed_rational(const RatMatrix& m, std::int64_t d)
{
    const int deg = expansion_degree(d);
    RatMatrix out(deg * m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(deg * i, j) = m(i, j);
    return out;
}

std::vector<Scalar> collapse_vector(const std::vector<Rational>& coords, std::int64_t d)
{
    const int deg = expansion_degree(d);
    std::vector<Scalar> out(coords.size() / deg);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = collapse(&coords[deg * i], deg, d);
    return out;
}

RatMatrix rational_points(const ExactMatrix& v)
{
    const std::size_t n = v.rows();
    if (v.cols() == 0) return RatMatrix(n, 0);
    const std::int64_t d = common_radicand(v);
    RatMatrix e = expand_matrix(v, d);
    RatMatrix p = embed_rational(RatMatrix::identity(n), d);
    RatMatrix k = kernel(hcat(e, -p));
    return column_basis(k.row_block(e.cols(), n));
}

}  // namespace hodge1
