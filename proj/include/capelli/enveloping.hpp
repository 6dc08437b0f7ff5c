#pragma once
// The enveloping superalgebra on generators e_{a,b}: free words modulo
// supercommutators, PBW normal forms, adjoint action, devirtualization, and
// the module action by superpolarizations.

#include "capelli/rational.hpp"
#include "capelli/superalgebra.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace capelli {

struct UGenerator {
    Symbol row;
    Symbol col;

    int parity() const { return (row.lie_parity() + col.lie_parity()) & 1; }
    Polarization polarization() const { return Polarization{row, col}; }
    bool involves_virtual() const { return row.is_virtual() || col.is_virtual(); }

    std::string to_string() const { return "e[" + row.to_string() + "," + col.to_string() + "]"; }

    friend bool operator==(const UGenerator& a, const UGenerator& b) { return a.row == b.row && a.col == b.col; }
    friend bool operator!=(const UGenerator& a, const UGenerator& b) { return !(a == b); }
    friend bool operator<(const UGenerator& a, const UGenerator& b) {
        return std::make_pair(a.row.code(), a.col.code()) < std::make_pair(b.row.code(), b.col.code());
    }
};

/// e_{x_i,x_j} shorthand.
inline UGenerator e(int i, int j) { return UGenerator{Symbol::x(i), Symbol::x(j)}; }
inline UGenerator e(const Symbol& a, const Symbol& b) { return UGenerator{a, b}; }

using UWord = std::vector<UGenerator>;

/// Canonical word order: longer words first, then lexicographic.
struct WordOrder {
    bool operator()(const UWord& a, const UWord& b) const {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    }
};

inline std::string word_to_string(const UWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += w[i].to_string();
    }
    return s;
}

/// Parses "e[x1,a1] e[a1,x2]"; "1" or "" is the empty word.
inline UWord parse_word(const std::string& text) {
    UWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1" && w.empty()) continue;
        if (tok.size() < 6 || tok.compare(0, 2, "e[") != 0 || tok.back() != ']')
            throw Error("malformed generator '" + tok + "'");
        const std::string body = tok.substr(2, tok.size() - 3);
        const auto comma = body.find(',');
        if (comma == std::string::npos) throw Error("malformed generator '" + tok + "'");
        w.push_back(UGenerator{Symbol::parse(body.substr(0, comma)), Symbol::parse(body.substr(comma + 1))});
    }
    return w;
}

inline int word_parity(const UWord& w) {
    int p = 0;
    for (const auto& g : w) p ^= g.parity();
    return p;
}

class UElement {
public:
    using Terms = std::map<UWord, Rational, WordOrder>;

    UElement() = default;
    static UElement word(const UWord& w, const Rational& c = 1) {
        UElement u;
        u.add_term(w, c);
        return u;
    }
    static UElement generator(const UGenerator& g) { return word(UWord{g}); }
    static UElement scalar(const Rational& c) { return word(UWord{}, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const UWord& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    UElement& operator+=(const UElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    UElement& operator-=(const UElement& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    UElement& operator*=(const Rational& s) {
        if (s == 0) terms_.clear();
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }
    friend UElement operator+(UElement a, const UElement& b) { return a += b; }
    friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
    friend UElement operator*(UElement a, const Rational& s) { return a *= s; }
    friend UElement operator*(const Rational& s, UElement a) { return a *= s; }

    /// Free (concatenation) product.
    friend UElement operator*(const UElement& a, const UElement& b) {
        UElement r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                UWord w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        return r;
    }

    friend bool operator==(const UElement& a, const UElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UElement& a, const UElement& b) { return !(a == b); }

    /// Signed rational combination in canonical word order, e.g. "e[x1,x1] - 1/2 e[x1,x2] e[x2,x1] + 3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            const bool neg = c < 0;
            const Rational mag = abs(c);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            if (w.empty()) {
                out += capelli::to_string(mag);
                continue;
            }
            if (mag != 1) out += capelli::to_string(mag) + " ";
            out += word_to_string(w);
        }
        return out;
    }

private:
    Terms terms_;
};

/// [e_{a,b}, e_{c,d}] = delta_{bc} e_{a,d} - (-1)^{|e_ab||e_cd|} delta_{ad} e_{c,b}.
inline UElement supercommutator(const UGenerator& g, const UGenerator& h) {
    UElement r;
    if (g.col == h.row) r.add_term(UWord{UGenerator{g.row, h.col}}, 1);
    if (g.row == h.col) r.add_term(UWord{UGenerator{h.row, g.col}}, (g.parity() & h.parity()) ? 1 : -1);
    return r;
}

/// Strict total order on generators used by normal ordering.
using GeneratorOrder = std::function<bool(const UGenerator&, const UGenerator&)>;

namespace orders {

/// Lexicographic on (row, column) symbol codes: for proper generators, row-major (i,j).
inline bool row_major(const UGenerator& a, const UGenerator& b) { return a < b; }

/// Every generator whose column is virtual sits to the right of all others.
inline bool virtual_right(const UGenerator& a, const UGenerator& b) {
    const int va = a.col.is_virtual() ? 1 : 0, vb = b.col.is_virtual() ? 1 : 0;
    if (va != vb) return va < vb;
    return a < b;
}

/// Groups generators by the stage they occupy in virtual presentations:
/// proper-to-virtual, alpha-to-virtual, beta-to-virtual, virtual-to-proper, proper-to-proper.
inline int stage(const UGenerator& g) {
    if (g.row.is_proper() && g.col.is_virtual()) return 0;
    if (g.row.kind == SymbolKind::PositiveVirtual && g.col.is_virtual()) return 1;
    if (g.row.kind == SymbolKind::NegativeVirtual && g.col.is_virtual()) return 2;
    if (g.row.is_virtual()) return 3;
    return 4;
}
inline bool staged(const UGenerator& a, const UGenerator& b) {
    const int sa = stage(a), sb = stage(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

} // namespace orders

/// Rewrites u so every word is weakly sorted for the given order, using
/// g h = (-1)^{|g||h|} h g + [g,h] and e^2 = 0 for odd e (since [e,e] = 0 here).
inline UElement pbw_normal_form(const UElement& u, const GeneratorOrder& less = orders::row_major) {
    UElement result;
    std::map<UWord, Rational, WordOrder> work(u.terms().begin(), u.terms().end());
    auto bump = [](std::map<UWord, Rational, WordOrder>& m, UWord&& w, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = m.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) m.erase(it);
        }
    };
    std::size_t guard = 0;
    while (!work.empty()) {
        if (++guard > 1000000) throw Error("normal ordering did not terminate");
        std::map<UWord, Rational, WordOrder> next;
        for (auto& [w, c] : work) {
            std::size_t i = 0;
            bool swap = false, vanish = false;
            for (; i + 1 < w.size(); ++i) {
                if (less(w[i + 1], w[i])) {
                    swap = true;
                    break;
                }
                if (w[i] == w[i + 1] && w[i].parity() == 1 && supercommutator(w[i], w[i]).is_zero()) {
                    vanish = true;
                    break;
                }
            }
            if (vanish) continue;
            if (!swap) {
                result.add_term(w, c);
                continue;
            }
            const UGenerator g = w[i], h = w[i + 1];
            UWord swapped = w;
            std::swap(swapped[i], swapped[i + 1]);
            bump(next, std::move(swapped), (g.parity() & h.parity()) ? Rational(-c) : c);
            const UElement bracket = supercommutator(g, h);
            for (const auto& [cw, cc] : bracket.terms()) {
                UWord shorter(w.begin(), w.begin() + i);
                shorter.insert(shorter.end(), cw.begin(), cw.end());
                shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
                bump(next, std::move(shorter), c * cc);
            }
        }
        work = std::move(next);
    }
    return result;
}

/// Adjoint action ad(g)(u) = [g,u], expanded as a superderivation over each word.
inline UElement ad(const UGenerator& g, const UElement& u) {
    UElement r;
    for (const auto& [w, c] : u.terms()) {
        int passed = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const Rational sign = (g.parity() && (passed & 1)) ? -1 : 1;
            const UElement bracket = supercommutator(g, w[i]);
            for (const auto& [cw, cc] : bracket.terms()) {
                UWord nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), cw.begin(), cw.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                r.add_term(nw, c * cc * sign);
            }
            passed += w[i].parity();
        }
    }
    return r;
}

/// True iff every virtual symbol is created and annihilated equally often in w.
inline bool is_balanced(const UWord& w) {
    std::map<std::uint8_t, int> net;
    for (const auto& g : w) {
        if (g.row.is_virtual()) ++net[g.row.code()];
        if (g.col.is_virtual()) --net[g.col.code()];
    }
    for (const auto& [s, k] : net)
        if (k != 0) return false;
    return true;
}

inline bool word_is_proper(const UWord& w) {
    for (const auto& g : w)
        if (!g.row.is_proper() || !g.col.is_proper()) return false;
    return true;
}

/// Projection of a balanced element onto U(gl(n)): normal-order with virtual-column
/// generators on the right, then drop every word that still carries a virtual symbol.
inline UElement devirtualize(const UElement& u) {
    for (const auto& [w, c] : u.terms()) {
        for (const auto& g : w)
            if (g.row.kind == SymbolKind::Auxiliary || g.col.kind == SymbolKind::Auxiliary)
                throw Error("auxiliary symbols cannot appear in enveloping words");
        if (!is_balanced(w)) throw Error("word " + word_to_string(w) + " is not balanced in its virtual symbols");
    }
    const UElement sorted = pbw_normal_form(u, orders::virtual_right);
    UElement r;
    for (const auto& [w, c] : sorted.terms()) {
        if (word_is_proper(w)) {
            r.add_term(w, c);
            continue;
        }
        // Every surviving virtual word must end with a virtual-column generator,
        // so it annihilates proper forms and lies in the irregular ideal.
        if (w.empty() || !w.back().col.is_virtual())
            throw Error("normal-ordered virtual word " + word_to_string(w) + " is not irregular");
    }
    return pbw_normal_form(r, orders::row_major);
}

/// Each generator acts as its polarization; words act right to left.
inline SuperPolynomial act_on_module(const UElement& u, const SuperPolynomial& p) {
    SuperPolynomial out;
    for (const auto& [w, c] : u.terms()) {
        std::vector<Polarization> ops;
        ops.reserve(w.size());
        for (const auto& g : w) ops.push_back(g.polarization());
        out.add_scaled(apply_word(ops, p), c);
    }
    return out;
}

/// A matrix entry e_{ij} + shift (or a bare scalar when has_generator is false).
struct AffineEntry {
    bool has_generator = true;
    UGenerator gen{};
    Rational shift = 0;

    UElement element() const {
        UElement u = UElement::scalar(shift);
        if (has_generator) u += UElement::generator(gen);
        return u;
    }
};

using AffineMatrix = std::vector<std::vector<AffineEntry>>;

/// The matrix [e_{x_i,x_j} + shifts_i delta_ij].
inline AffineMatrix capelli_matrix(int n, const std::vector<Rational>& diagonal_shifts) {
    AffineMatrix m(n, std::vector<AffineEntry>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j].gen = e(i + 1, j + 1);
            m[i][j].shift = i == j ? diagonal_shifts.at(i) : Rational(0);
        }
    return m;
}

namespace detail {
inline UElement column_expand(const AffineMatrix& a, bool signed_sum) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw Error("column expansion needs a square matrix");
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    UElement total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        UElement prod = UElement::scalar(signed_sum && (inversions & 1) ? -1 : 1);
        for (int col = 0; col < n; ++col) prod = prod * a[sigma[col]][col].element();
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}
} // namespace detail

/// Column determinant: sum over sigma of sgn(sigma) a_{sigma(1),1} ... a_{sigma(n),n}.
inline UElement cdet(const AffineMatrix& a) { return detail::column_expand(a, true); }
/// Column permanent: sum over sigma of a_{sigma(1),1} ... a_{sigma(n),n}.
inline UElement cper(const AffineMatrix& a) { return detail::column_expand(a, false); }

} // namespace capelli
