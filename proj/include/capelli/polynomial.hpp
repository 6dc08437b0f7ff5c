#pragma once
// Commutative multivariate polynomials with exact rational coefficients.

#include "capelli/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

using Exponents = std::vector<int>;

/// Graded lexicographic order with x1 > x2 > ...; "less" puts larger terms first.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const int da = std::accumulate(a.begin(), a.end(), 0);
        const int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    }
};

class Polynomial {
public:
    using Terms = std::map<Exponents, Rational, GrlexDescending>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(const Rational& c, int nvars) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    /// The coordinate function x_{i+1} (0-based index i).
    static Polynomial variable(int i, int nvars) {
        if (i < 0 || i >= nvars) throw Error("variable index out of range");
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e[i] = 1;
        p.add_term(e, 1);
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_) throw Error("exponent length mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    /// Sum of the terms of maximal total degree.
    Polynomial top_degree_part() const {
        Polynomial r(nvars_);
        const int d = degree();
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const { return *this * Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.nvars_);
        Exponents e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(int k) const {
        Polynomial r = constant(1, nvars_);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw Error("evaluation point has wrong length");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            total += t;
        }
        return total;
    }

    Rational evaluate(const std::vector<int>& point) const {
        std::vector<Rational> q(point.begin(), point.end());
        return evaluate(q);
    }

    /// Substitutes x_i := images[i]; all images must share one variable count.
    Polynomial compose(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_) throw Error("compose needs one image per variable");
        const int m = images.empty() ? 0 : images.front().nvars();
        for (const auto& img : images)
            if (img.nvars() != m) throw Error("compose images disagree on variable count");
        std::vector<std::vector<Polynomial>> powers(nvars_);
        Polynomial r(m);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(c, m);
            for (int i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(1, m));
                while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
                if (e[i] > 0) t *= pw[e[i]];
            }
            r += t;
        }
        return r;
    }

    /// Exact division; throws if the divisor leaves a nonzero remainder.
    Polynomial divide_exact(const Polynomial& d) const {
        check(d);
        if (d.is_zero()) throw Error("division by the zero polynomial");
        const auto& [ld_e, ld_c] = *d.terms_.begin();
        Polynomial rem = *this;
        Polynomial quot(nvars_);
        while (!rem.is_zero()) {
            const auto [le, lc] = *rem.terms_.begin();
            Exponents q(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                q[i] = le[i] - ld_e[i];
                if (q[i] < 0) throw Error("polynomial division is not exact");
            }
            Polynomial mono(nvars_);
            mono.add_term(q, lc / ld_c);
            quot += mono;
            rem -= mono * d;
        }
        return quot;
    }

    /// Renders e.g. "x1^2*x2 - 2*x2 + 1/2" with graded-lex term order.
    std::string to_string(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = abs(c);
            const bool neg = c < 0;
            out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
            first = false;
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names.empty() ? "x" + std::to_string(i + 1) : names[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out << capelli::to_string(mag);
            else if (mag == 1) out << mono;
            else out << capelli::to_string(mag) << "*" << mono;
        }
        return out.str();
    }

private:
    void check(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw Error("polynomials live in different variable counts");
    }

    int nvars_;
    Terms terms_;
};

} // namespace capelli
