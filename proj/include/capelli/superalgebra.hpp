#pragma once
// The supersymmetric coordinate ring in letter-place variables (a|j), with
// Koszul-signed products and superpolarization operators.

#include "capelli/rational.hpp"

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace capelli {

/// Alphabet of a symbol. The enumerator value is also its rank in the global order.
enum class SymbolKind : std::uint8_t {
    PositiveVirtual = 0,  // alpha, Lie parity 0
    NegativeVirtual = 1,  // beta,  Lie parity 1
    Proper = 2,           // x,     Lie parity 1
    Auxiliary = 3,        // gamma, Lie parity 0, used transiently by biproducts
};

struct Symbol {
    SymbolKind kind = SymbolKind::Proper;
    int index = 1;

    static constexpr int max_index = 63;

    static Symbol alpha(int i) { return make(SymbolKind::PositiveVirtual, i); }
    static Symbol beta(int i) { return make(SymbolKind::NegativeVirtual, i); }
    static Symbol x(int i) { return make(SymbolKind::Proper, i); }
    static Symbol gamma(int i = 1) { return make(SymbolKind::Auxiliary, i); }

    static Symbol make(SymbolKind k, int i) {
        if (i < 1 || i > max_index) throw Error("symbol index out of range: " + std::to_string(i));
        return Symbol{k, i};
    }

    /// Dense code whose numeric order is (kind rank, index).
    std::uint8_t code() const { return static_cast<std::uint8_t>(static_cast<int>(kind) * 64 + index); }
    static Symbol from_code(std::uint8_t c) { return Symbol{static_cast<SymbolKind>(c / 64), c % 64}; }

    int lie_parity() const { return (kind == SymbolKind::NegativeVirtual || kind == SymbolKind::Proper) ? 1 : 0; }
    bool is_virtual() const { return kind == SymbolKind::PositiveVirtual || kind == SymbolKind::NegativeVirtual; }
    bool is_proper() const { return kind == SymbolKind::Proper; }

    /// "a1", "b2", "x3", "g1".
    std::string to_string() const {
        static const char letters[] = {'a', 'b', 'x', 'g'};
        return std::string(1, letters[static_cast<int>(kind)]) + std::to_string(index);
    }

    static Symbol parse(const std::string& text) {
        if (text.size() < 2) throw Error("malformed symbol '" + text + "'");
        SymbolKind k;
        switch (text[0]) {
            case 'a': k = SymbolKind::PositiveVirtual; break;
            case 'b': k = SymbolKind::NegativeVirtual; break;
            case 'x': k = SymbolKind::Proper; break;
            case 'g': k = SymbolKind::Auxiliary; break;
            default: throw Error("unknown alphabet in symbol '" + text + "'");
        }
        const std::string digits = text.substr(1);
        if (digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error("malformed symbol '" + text + "'");
        return make(k, std::stoi(digits));
    }

    friend bool operator==(const Symbol& a, const Symbol& b) { return a.kind == b.kind && a.index == b.index; }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
    friend bool operator<(const Symbol& a, const Symbol& b) { return a.code() < b.code(); }
};

/// A letter-place generator (a|j), packed as place*256 + symbol code.
using VarId = std::uint16_t;

inline VarId make_var(const Symbol& s, int place) {
    if (place < 1 || place > 255) throw Error("place index out of range: " + std::to_string(place));
    return static_cast<VarId>(place * 256 + s.code());
}
inline Symbol var_symbol(VarId v) { return Symbol::from_code(static_cast<std::uint8_t>(v & 0xff)); }
inline int var_place(VarId v) { return v >> 8; }
/// |(a|j)| = |a| + 1 with places odd: odd exactly for alpha and gamma.
inline bool var_odd(VarId v) { return var_symbol(v).lie_parity() == 0; }

inline std::string var_to_string(VarId v) {
    return "(" + var_symbol(v).to_string() + "|" + std::to_string(var_place(v)) + ")";
}

/// Sorted multiset of variables; odd variables occur at most once.
using SuperMonomial = boost::container::small_vector<VarId, 14>;

struct SuperMonomialHash {
    std::size_t operator()(const SuperMonomial& m) const { return boost::hash_range(m.begin(), m.end()); }
};

/// D_{a,b}: the left superderivation sending (b|j) to (a|j).
struct Polarization {
    Symbol target;  // a
    Symbol source;  // b
    int parity() const { return (target.lie_parity() + source.lie_parity()) & 1; }
};

class SuperPolynomial {
public:
    using Terms = std::unordered_map<SuperMonomial, Rational, SuperMonomialHash>;

    SuperPolynomial() = default;

    static SuperPolynomial constant(const Rational& c) {
        SuperPolynomial p;
        p.add_term(SuperMonomial{}, c);
        return p;
    }

    static SuperPolynomial variable(const Symbol& s, int place) {
        SuperPolynomial p;
        p.add_term(SuperMonomial{make_var(s, place)}, 1);
        return p;
    }

    /// Product of the given variables in the written order, Koszul sign absorbed.
    static SuperPolynomial product_of(const std::vector<VarId>& vars, const Rational& c = 1) {
        SuperPolynomial p = constant(c);
        for (VarId v : vars) {
            SuperPolynomial q;
            q.add_term(SuperMonomial{v}, 1);
            p = p * q;
        }
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const SuperMonomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const SuperMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SuperPolynomial& operator+=(const SuperPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SuperPolynomial& operator-=(const SuperPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SuperPolynomial& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    /// Adds s * o.
    void add_scaled(const SuperPolynomial& o, const Rational& s) {
        if (s == 0) return;
        for (const auto& [m, c] : o.terms_) add_term(m, c * s);
    }

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& s) { return a *= s; }
    friend SuperPolynomial operator*(const Rational& s, SuperPolynomial a) { return a *= s; }

    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
        SuperPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                SuperMonomial m;
                const int s = multiply_monomials(ma, mb, m);
                if (s != 0) r.add_term(m, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
            }
        return r;
    }

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SuperPolynomial& a, const SuperPolynomial& b) { return !(a == b); }

    /// True if some monomial involves a variable of the given kind.
    bool involves(SymbolKind kind) const {
        for (const auto& [m, c] : terms_)
            for (VarId v : m)
                if (var_symbol(v).kind == kind) return true;
        return false;
    }

    /// Terms sorted by monomial for deterministic output.
    std::vector<std::pair<SuperMonomial, Rational>> sorted_terms() const {
        std::vector<std::pair<SuperMonomial, Rational>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return v;
    }

    /// One term per line: "p/q (x1|2)(a1|1)".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : sorted_terms()) {
            if (!out.empty()) out += "\n";
            out += capelli::to_string(c) + " ";
            if (m.empty()) out += "1";
            for (VarId v : m) out += var_to_string(v);
        }
        return out;
    }

    /// Merges two sorted monomials; returns the Koszul sign, or 0 for a repeated odd variable.
    static int multiply_monomials(const SuperMonomial& a, const SuperMonomial& b, SuperMonomial& out) {
        out.clear();
        out.reserve(a.size() + b.size());
        int oddA = 0;
        for (VarId v : a)
            if (var_odd(v)) ++oddA;
        int sign = 1;
        std::size_t i = 0, j = 0;
        int oddTakenA = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] <= b[j])) {
                if (j < b.size() && a[i] == b[j] && var_odd(a[i])) return 0;
                if (var_odd(a[i])) ++oddTakenA;
                out.push_back(a[i++]);
            } else {
                // b[j] passes every odd variable of a that is still to its right.
                if (var_odd(b[j]) && ((oddA - oddTakenA) & 1)) sign = -sign;
                out.push_back(b[j++]);
            }
        }
        return sign;
    }

private:
    Terms terms_;
};

/// Applies D to a single monomial, accumulating c * D(m) into out.
inline void polarize_monomial(const Polarization& D, const SuperMonomial& m, const Rational& c, SuperPolynomial& out) {
    const int p = D.parity();
    const std::uint8_t src = D.source.code();
    int oddBefore = 0;
    for (std::size_t t = 0; t < m.size(); ++t) {
        const VarId v = m[t];
        const bool odd = var_odd(v);
        const bool run_start = odd || t == 0 || m[t - 1] != v;
        if ((v & 0xff) == src && run_start) {
            std::size_t run = 1;
            if (!odd)
                while (t + run < m.size() && m[t + run] == v) ++run;
            const VarId w = make_var(D.target, var_place(v));
            const bool wodd = var_odd(w);
            int sign = (p && (oddBefore & 1)) ? -1 : 1;
            SuperMonomial nm;
            nm.reserve(m.size());
            bool clash = false;
            int oddBelowW = 0;
            bool placed = false;
            for (std::size_t u = 0; u < m.size(); ++u) {
                if (u == t) continue;
                const VarId y = m[u];
                if (!placed && w <= y) {
                    if (w == y && wodd) {
                        clash = true;
                        break;
                    }
                    nm.push_back(w);
                    placed = true;
                }
                if (!placed && var_odd(y)) ++oddBelowW;
                nm.push_back(y);
            }
            if (!clash) {
                if (!placed) nm.push_back(w);
                if (wodd && ((oddBefore - oddBelowW) & 1)) sign = -sign;
                Rational coef = c;
                if (run > 1) coef *= static_cast<long>(run);
                if (sign < 0) coef = -coef;
                out.add_term(nm, coef);
            }
        }
        if (odd) ++oddBefore;
    }
}

inline SuperPolynomial polarize(const Polarization& D, const SuperPolynomial& p) {
    SuperPolynomial out;
    for (const auto& [m, c] : p.terms()) polarize_monomial(D, m, c, out);
    return out;
}

/// Applies ops right to left: the last operator acts first.
inline SuperPolynomial apply_word(const std::vector<Polarization>& ops, const SuperPolynomial& p) {
    SuperPolynomial cur = p;
    for (auto it = ops.rbegin(); it != ops.rend() && !cur.is_zero(); ++it) cur = polarize(*it, cur);
    return cur;
}

} // namespace capelli
