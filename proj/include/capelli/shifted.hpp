#pragma once
// Shifted symmetric polynomials: e*, h*, shifted Schur polynomials as
// determinant ratios, the Harish-Chandra image chi_n of central specs by
// interpolation on highest weights, the omega involution and the projection
// that drops the last variable.

#include "capelli/central.hpp"
#include "capelli/linalg.hpp"
#include "capelli/partitions.hpp"
#include "capelli/polynomial.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// A polynomial in x_1..x_n expected to be invariant under (x_i, x_{i+1}) -> (x_{i+1}-1, x_i+1).
using ShiftedPolynomial = Polynomial;

/// A highest weight point (the padded conjugate of mu) with an eigenvalue.
struct EigRecord {
    std::vector<int> point;
    Rational value;
};

inline std::vector<std::string> variable_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

/// Sum over i_1 < ... < i_k of (x_{i_1}+k-1)(x_{i_2}+k-2)...(x_{i_k}).
inline ShiftedPolynomial e_star_poly(int k, int n) {
    if (k < 0 || k > n) throw DomainError("e* index k=" + std::to_string(k) + " outside 0..n=" + std::to_string(n));
    ShiftedPolynomial total(n);
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            ShiftedPolynomial t = ShiftedPolynomial::constant(1, n);
            for (int j = 0; j < k; ++j)
                t = t * (ShiftedPolynomial::variable(idx[j], n) + ShiftedPolynomial::constant(k - 1 - j, n));
            total += t;
            return;
        }
        for (int i = from; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return total;
}

/// Sum over i_1 <= ... <= i_k of (x_{i_1}-k+1)(x_{i_2}-k+2)...(x_{i_k}).
inline ShiftedPolynomial h_star_poly(int k, int n) {
    if (k < 0) throw DomainError("h* index must be nonnegative");
    ShiftedPolynomial total(n);
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            ShiftedPolynomial t = ShiftedPolynomial::constant(1, n);
            for (int j = 0; j < k; ++j)
                t = t * (ShiftedPolynomial::variable(idx[j], n) - ShiftedPolynomial::constant(k - 1 - j, n));
            total += t;
            return;
        }
        for (int i = from; i < n; ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(0);
    return total;
}

/// Classical complete homogeneous polynomial h_k(x_1..x_n).
inline Polynomial complete_homogeneous_poly(int k, int n) {
    Polynomial total(n);
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            Polynomial t = Polynomial::constant(1, n);
            for (int i : idx) t = t * Polynomial::variable(i, n);
            total += t;
            return;
        }
        for (int i = from; i < n; ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(0);
    return total;
}

/// True iff f is invariant under every adjacent shifted transposition.
inline bool is_shifted_symmetric(const ShiftedPolynomial& f) {
    const int n = f.nvars();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Polynomial> images;
        for (int j = 0; j < n; ++j) images.push_back(Polynomial::variable(j, n));
        images[i] = Polynomial::variable(i + 1, n) - Polynomial::constant(1, n);
        images[i + 1] = Polynomial::variable(i, n) + Polynomial::constant(1, n);
        if (!(f.compose(images) == f)) return false;
    }
    return true;
}

/// Falling factorial polynomial (y)(y-1)...(y-m+1) of a polynomial y.
inline Polynomial falling_factorial_poly(const Polynomial& y, int m) {
    Polynomial r = Polynomial::constant(1, y.nvars());
    for (int t = 0; t < m; ++t) r = r * (y - Polynomial::constant(t, y.nvars()));
    return r;
}

/// Determinant of a square matrix of polynomials by Laplace expansion along the first column.
inline Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& m, int nvars) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Polynomial::constant(1, nvars);
    Polynomial total(nvars);
    for (int i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (int r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Polynomial term = m[i][0] * polynomial_determinant(minor, nvars);
        if (i & 1) total -= term;
        else total += term;
    }
    return total;
}

/// Which index of the conjugate shape enters the numerator falling factorial in row i, column j.
enum class SchurConvention {
    /// (x_i + n - i)_{conj(lambda)_i + n - j}: the row-indexed display transcribed literally.
    Verbatim,
    /// (x_i + n - i)_{conj(lambda)_j + n - j}: the column-indexed Jacobi-Trudi-type ratio.
    ColumnIndexed,
};

inline const char* to_string(SchurConvention c) { return c == SchurConvention::Verbatim ? "verbatim" : "column-indexed"; }

/// The convention that reproduces chi_n(S_lambda); established by the shifted-Schur cross-check.
inline constexpr SchurConvention frozen_schur_convention = SchurConvention::ColumnIndexed;

/// det[(x_i+n-i)_{conj(lambda)_. + n - j}] / det[(x_i+n-i)_{n-j}] as an exact polynomial quotient.
inline ShiftedPolynomial s_star_poly(const Partition& lambda, int n,
                                     SchurConvention convention = frozen_schur_convention) {
    if (lambda.first() > n)
        throw DomainError("s* needs lambda_1 <= n (lambda=" + lambda.to_string() + ", n=" + std::to_string(n) + ")");
    const Partition c = conjugate(lambda);
    std::vector<std::vector<Polynomial>> num(n, std::vector<Polynomial>(n, Polynomial(n)));
    std::vector<std::vector<Polynomial>> den = num;
    for (int i = 0; i < n; ++i) {
        const Polynomial y = Polynomial::variable(i, n) + Polynomial::constant(n - 1 - i, n);
        for (int j = 0; j < n; ++j) {
            const int part = convention == SchurConvention::Verbatim ? c[i] : c[j];
            num[i][j] = falling_factorial_poly(y, part + n - 1 - j);
            den[i][j] = falling_factorial_poly(y, n - 1 - j);
        }
    }
    return polynomial_determinant(num, n).divide_exact(polynomial_determinant(den, n));
}

/// Substitutes x_{n+1} = 0 in a polynomial of n+1 variables.
inline ShiftedPolynomial olshanski_project(const ShiftedPolynomial& f) {
    const int n = f.nvars() - 1;
    if (n < 0) throw Error("projection needs at least one variable");
    std::vector<Polynomial> images;
    for (int j = 0; j < n; ++j) images.push_back(Polynomial::variable(j, n));
    images.push_back(Polynomial(n));
    return f.compose(images);
}

namespace detail {

/// Partitions with parts <= n and weight <= m: both the e*-product index set and (as mu) the node set.
inline std::vector<Partition> interpolation_index(int m, int n) { return partitions_up_to(m, n); }

inline std::vector<int> highest_weight_point(const Partition& mu, int n) { return conjugate(mu).padded(n); }

inline Rational product_eval(const Partition& nu, const std::vector<int>& point, bool complete) {
    Rational r = 1;
    for (int k : nu.parts()) r *= Rational(complete ? h_star_eval(k, point) : e_star_eval(k, point));
    return r;
}

inline Polynomial product_poly(const Partition& nu, int n, bool complete) {
    Polynomial r = Polynomial::constant(1, n);
    for (int k : nu.parts()) r = r * (complete ? h_star_poly(k, n) : e_star_poly(k, n));
    return r;
}

/// Coefficients c_nu with sum c_nu e*_nu(point) = value at every node; throws on rank deficiency.
inline std::vector<Rational> solve_in_e_star_basis(const std::vector<Partition>& basis, const std::vector<Partition>& nodes,
                                                    const std::vector<Rational>& values, int n) {
    Matrix a;
    for (const auto& mu : nodes) {
        const auto pt = highest_weight_point(mu, n);
        std::vector<Rational> row;
        for (const auto& nu : basis) row.push_back(product_eval(nu, pt, false));
        a.push_back(std::move(row));
    }
    const int cols = static_cast<int>(basis.size());
    if (matrix_rank(a) != cols) throw Error("interpolation system is rank deficient");
    auto sol = solve_linear(a, values, cols);
    if (!sol) throw Error("values are not interpolated by a shifted symmetric polynomial of this degree");
    return *sol;
}

/// Partitions with mu_1 <= n and weight above m, taken in increasing weight: held-out certification points.
inline std::vector<Partition> held_out_points(int m, int n, std::size_t count) {
    std::vector<Partition> out;
    for (int w = m + 1; out.size() < count && w <= m + 12; ++w)
        for (const auto& mu : partitions_of(w, n)) {
            if (out.size() == count) break;
            out.push_back(mu);
        }
    return out;
}

} // namespace detail

/// Result of interpolating chi_n(spec) with its certification data.
struct ChiResult {
    ShiftedPolynomial polynomial;
    std::vector<EigRecord> nodes;
    std::vector<EigRecord> held_out;
};

/// chi_n(spec): the shifted symmetric polynomial of degree <= deg(spec) whose value at conj(mu) is the
/// eigenvalue of spec on v_{conj(mu)}. Interpolated in the e*-product basis on all mu with mu_1 <= n and
/// |mu| <= deg, then certified at 10 held-out partitions of larger weight.
inline ChiResult chi_with_certificate(const CentralSpec& spec, int n, std::size_t held_out = 10) {
    spec.validate(n);
    const int m = spec.degree();
    const auto index = detail::interpolation_index(m, n);
    std::vector<EigRecord> nodes;
    std::vector<Rational> values;
    for (const auto& mu : index) {
        const Rational v = eigenvalue_action(spec, mu, n);
        nodes.push_back(EigRecord{detail::highest_weight_point(mu, n), v});
        values.push_back(v);
    }
    const auto coeffs = detail::solve_in_e_star_basis(index, index, values, n);
    Polynomial f(n);
    for (std::size_t t = 0; t < index.size(); ++t)
        if (coeffs[t] != 0) f += detail::product_poly(index[t], n, false) * coeffs[t];
    std::vector<EigRecord> checks;
    for (const auto& mu : detail::held_out_points(m, n, held_out)) {
        const auto pt = detail::highest_weight_point(mu, n);
        const Rational v = eigenvalue_action(spec, mu, n);
        if (f.evaluate(pt) != v)
            throw Error("chi(" + spec.to_string() + ") failed certification at mu=" + mu.to_string());
        checks.push_back(EigRecord{pt, v});
    }
    return ChiResult{std::move(f), std::move(nodes), std::move(checks)};
}

/// Memoized chi_n(spec).
inline ShiftedPolynomial chi(const CentralSpec& spec, int n) {
    static std::mutex mutex;
    static std::map<std::pair<std::string, int>, ShiftedPolynomial> cache;
    const auto key = std::make_pair(spec.to_string(), n);
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ShiftedPolynomial f = chi_with_certificate(spec, n).polynomial;
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(f)).first->second;
}

/// Coordinates of a shifted symmetric f in the basis of products e*_nu (parts <= n, |nu| <= deg f).
inline std::vector<std::pair<Partition, Rational>> e_star_coordinates(const ShiftedPolynomial& f) {
    const int n = f.nvars();
    const int m = std::max(0, f.degree());
    const auto index = detail::interpolation_index(m, n);
    std::vector<Rational> values;
    for (const auto& mu : index) values.push_back(f.evaluate(detail::highest_weight_point(mu, n)));
    const auto coeffs = detail::solve_in_e_star_basis(index, index, values, n);
    std::vector<std::pair<Partition, Rational>> out;
    Polynomial back(n);
    for (std::size_t t = 0; t < index.size(); ++t)
        if (coeffs[t] != 0) {
            out.emplace_back(index[t], coeffs[t]);
            back += detail::product_poly(index[t], n, false) * coeffs[t];
        }
    if (!(back == f)) throw Error("polynomial is not in the span of e* products");
    return out;
}

/// The involution e*_k -> h*_k (k <= n), applied after rewriting f in the e* generators.
inline ShiftedPolynomial omega_involution(const ShiftedPolynomial& f) {
    const int n = f.nvars();
    Polynomial r(n);
    for (const auto& [nu, c] : e_star_coordinates(f)) r += detail::product_poly(nu, n, true) * c;
    return r;
}

/// Rank of the evaluation matrix of all generator products of weight <= d; equal to their number iff the
/// products are linearly independent, i.e. the generators have no algebraic relation up to degree d.
inline std::pair<int, int> generator_independence_rank(int n, int d, bool complete) {
    const auto index = detail::interpolation_index(d, n);
    Matrix a;
    for (const auto& mu : index) {
        const auto pt = detail::highest_weight_point(mu, n);
        std::vector<Rational> row;
        for (const auto& nu : index) row.push_back(detail::product_eval(nu, pt, complete));
        a.push_back(std::move(row));
    }
    return {matrix_rank(a), static_cast<int>(index.size())};
}

} // namespace capelli
