#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace aon {

// Characteristic polynomial det(xI - A) by the Samuelson-Berkowitz
// iteration: division-free, works verbatim over any of our fields.
// Coefficients are returned ascending; the leading coefficient is 1.
inline std::vector<Scalar> char_poly(const Matrix& a) {
    a.require_square();
    const FieldSpec& spec = a.spec();
    const std::size_t n = a.rows();
    // poly of the leading r x r principal submatrix, highest degree first
    std::vector<Scalar> poly{Scalar::one(spec)};
    for (std::size_t r = 1; r <= n; ++r) {
        // Toeplitz column: t_0 = 1, t_1 = -a_{r-1,r-1},
        // t_s = -(row_{r-1} . M^{s-2} . col_{r-1}) for the (r-1)x(r-1) block M
        std::vector<Scalar> t;
        t.push_back(Scalar::one(spec));
        t.push_back(-a.at(r - 1, r - 1));
        std::vector<Scalar> vec(r - 1, Scalar::zero(spec));
        for (std::size_t i = 0; i + 1 < r; ++i)
            vec[i] = a.at(i, r - 1);
        for (std::size_t s = 2; s <= r; ++s) {
            Scalar dot = Scalar::zero(spec);
            for (std::size_t i = 0; i + 1 < r; ++i)
                dot = dot + a.at(r - 1, i) * vec[i];
            t.push_back(-dot);
            if (s == r)
                break;
            std::vector<Scalar> next(r - 1, Scalar::zero(spec));
            for (std::size_t i = 0; i + 1 < r; ++i)
                for (std::size_t j = 0; j + 1 < r; ++j)
                    next[i] = next[i] + a.at(i, j) * vec[j];
            vec = std::move(next);
        }
        std::vector<Scalar> next_poly(r + 1, Scalar::zero(spec));
        for (std::size_t u = 0; u <= r; ++u)
            for (std::size_t v = 0; v < poly.size(); ++v)
                if (u >= v && u - v < t.size())
                    next_poly[u] = next_poly[u] + t[u - v] * poly[v];
        poly = std::move(next_poly);
    }
    std::reverse(poly.begin(), poly.end());
    return poly;
}

inline Scalar poly_eval(const std::vector<Scalar>& ascending, const Scalar& x) {
    Scalar acc = Scalar::zero(x.spec());
    for (std::size_t i = ascending.size(); i-- > 0;)
        acc = acc * x + ascending[i];
    return acc;
}

namespace detail {

inline Int int_poly_eval(const std::vector<Int>& ascending, const Int& x) {
    Int acc = 0;
    for (std::size_t i = ascending.size(); i-- > 0;)
        acc = acc * x + ascending[i];
    return acc;
}

// All integer roots of a monic integer polynomial, provided they are simple
// and account for the whole degree; otherwise nullopt. Search: zero roots
// stripped, then a small scan, then divisors of the constant term with a
// capped trial-division budget (bounded search, documented).
inline std::optional<std::vector<Int>> monic_integer_roots(std::vector<Int> c) {
    const std::size_t degree = c.size() - 1;
    std::vector<Int> roots;
    std::size_t zero_roots = 0;
    while (c.size() > 1 && c[0] == 0) {
        c.erase(c.begin());
        ++zero_roots;
    }
    if (zero_roots > 1)
        return std::nullopt;
    if (zero_roots == 1)
        roots.push_back(Int(0));
    auto try_root = [&](const Int& r) {
        if (int_poly_eval(c, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
            roots.push_back(r);
    };
    for (long long r = 1; r <= 512 && roots.size() < degree; ++r) {
        try_root(Int(r));
        try_root(Int(-r));
    }
    if (roots.size() < degree && c.size() > 1) {
        Int n = abs(c[0]);
        Int i = 1;
        long long budget = 1000000;
        while (i * i <= n && budget-- > 0 && roots.size() < degree) {
            if (n % i == 0) {
                for (const Int& dvs : {Int(i), Int(n / i)}) {
                    try_root(dvs);
                    try_root(-dvs);
                }
            }
            ++i;
        }
    }
    if (roots.size() != degree)
        return std::nullopt;
    return roots;
}

} // namespace detail

// Eigenvalues of m in its own field, provided the characteristic polynomial
// splits into distinct linear factors over that field; nullopt otherwise.
// Returned sorted ascending in the canonical scalar order.
inline std::optional<std::vector<Scalar>> split_distinct_eigenvalues(const Matrix& m) {
    m.require_square();
    const FieldSpec& spec = m.spec();
    const std::size_t n = m.rows();
    std::vector<Scalar> roots;
    if (spec.is_prime()) {
        const std::vector<Scalar> poly = char_poly(m);
        for (std::int64_t r = 0; r < spec.modulus(); ++r) {
            const Scalar x = Scalar::of_int(spec, r);
            if (poly_eval(poly, x).is_zero())
                roots.push_back(x);
        }
        if (roots.size() != n)
            return std::nullopt;
    } else {
        // clear denominators so the characteristic polynomial is monic
        // integer and every rational eigenvalue is an integer root over D
        Int den = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                den = lcm(den, denominator(m.at(i, j).rat()));
        const Scalar d_scalar = Scalar::of_rat(spec, Rat(den));
        const std::vector<Scalar> poly = char_poly(scale(d_scalar, m));
        std::vector<Int> c;
        for (const Scalar& s : poly)
            c.push_back(numerator(s.rat()));
        const auto int_roots = detail::monic_integer_roots(c);
        if (!int_roots)
            return std::nullopt;
        for (const Int& r : *int_roots)
            roots.push_back(Scalar::of_rat(spec, Rat(r, den)));
    }
    std::sort(roots.begin(), roots.end(), Scalar::less);
    return roots;
}

} // namespace aon
