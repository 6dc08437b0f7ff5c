#pragma once
// Young tableaux on the graded alphabet, biproducts and bitableaux,
// superstandard bases, straightening, and eigenvalue readout.

#include "capelli/enveloping.hpp"
#include "capelli/linalg.hpp"
#include "capelli/partitions.hpp"
#include "capelli/superalgebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

template <class Entry>
struct BasicTableau {
    std::vector<std::vector<Entry>> rows;

    Partition shape() const {
        std::vector<int> parts;
        for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
        return Partition(parts);
    }
    int size() const {
        int s = 0;
        for (const auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    friend bool operator==(const BasicTableau& a, const BasicTableau& b) { return a.rows == b.rows; }
    friend bool operator<(const BasicTableau& a, const BasicTableau& b) { return a.rows < b.rows; }
};

/// Tableau over letters.
using Tableau = BasicTableau<Symbol>;
/// Tableau over places 1..d.
using PlaceTableau = BasicTableau<int>;

inline std::string to_string(const Tableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) s += (j ? " " : "") + t.rows[i][j].to_string();
    }
    return s;
}

inline std::string to_string(const PlaceTableau& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) s += (j ? " " : "") + std::to_string(t.rows[i][j]);
    }
    return s;
}

namespace detail {
template <class Entry, class ParseEntry>
BasicTableau<Entry> parse_rows(const std::string& text, ParseEntry parse_entry) {
    BasicTableau<Entry> t;
    if (text.find_first_not_of(" \t") == std::string::npos) return t;
    std::string row;
    std::istringstream in(text);
    while (std::getline(in, row, ';')) {
        std::istringstream rs(row);
        std::string tok;
        std::vector<Entry> r;
        while (rs >> tok) r.push_back(parse_entry(tok));
        if (r.empty()) throw Error("empty row in tableau '" + text + "'");
        t.rows.push_back(std::move(r));
    }
    t.shape();  // validates the row lengths form a partition
    return t;
}
} // namespace detail

/// Parses "x1 x2; x1" (rows separated by ';'), virtual entries "a1", "b2".
inline Tableau parse_tableau(const std::string& text) {
    return detail::parse_rows<Symbol>(text, [](const std::string& s) { return Symbol::parse(s); });
}

/// Parses "1 2; 1".
inline PlaceTableau parse_place_tableau(const std::string& text) {
    return detail::parse_rows<int>(text, [](const std::string& s) {
        if (s.find_first_not_of("0123456789") != std::string::npos) throw Error("malformed place '" + s + "'");
        return std::stoi(s);
    });
}

/// D_lambda: row i is x_1 ... x_{lambda_i}.
inline Tableau deruyts(const Partition& lambda) {
    Tableau t;
    for (int p : lambda.parts()) {
        std::vector<Symbol> r;
        for (int j = 1; j <= p; ++j) r.push_back(Symbol::x(j));
        t.rows.push_back(r);
    }
    return t;
}

/// D^P_lambda: row i is 1 ... lambda_i.
inline PlaceTableau deruyts_places(const Partition& lambda) {
    PlaceTableau t;
    for (int p : lambda.parts()) {
        std::vector<int> r;
        for (int j = 1; j <= p; ++j) r.push_back(j);
        t.rows.push_back(r);
    }
    return t;
}

/// D*_lambda: row i is beta_1 ... beta_{lambda_i}.
inline Tableau deruyts_negative(const Partition& lambda) {
    Tableau t;
    for (int p : lambda.parts()) {
        std::vector<Symbol> r;
        for (int j = 1; j <= p; ++j) r.push_back(Symbol::beta(j));
        t.rows.push_back(r);
    }
    return t;
}

/// C*_lambda: row i is alpha_i repeated lambda_i times.
inline Tableau coderuyts_positive(const Partition& lambda) {
    Tableau t;
    for (int i = 0; i < lambda.length(); ++i) t.rows.push_back(std::vector<Symbol>(lambda[i], Symbol::alpha(i + 1)));
    return t;
}

inline Tableau transpose(const Tableau& t) {
    Tableau r;
    const Partition c = conjugate(t.shape());
    for (int j = 0; j < c.length(); ++j) {
        std::vector<Symbol> row;
        for (int i = 0; i < c[j]; ++i) row.push_back(t.rows[i][j]);
        r.rows.push_back(row);
    }
    return r;
}

/// (omega|varpi) = D_{z_1,gamma} ... D_{z_p,gamma}((gamma|j_1)...(gamma|j_q)), zero unless p = q.
inline SuperPolynomial biproduct(const std::vector<Symbol>& omega, const std::vector<int>& varpi) {
    if (omega.size() != varpi.size()) return SuperPolynomial{};
    const Symbol g = Symbol::gamma();
    std::vector<VarId> vars;
    for (int j : varpi) vars.push_back(make_var(g, j));
    std::vector<Polarization> ops;
    for (const auto& z : omega) {
        if (z.kind == SymbolKind::Auxiliary) throw Error("biproduct words cannot contain the auxiliary symbol");
        ops.push_back(Polarization{z, g});
    }
    SuperPolynomial r = apply_word(ops, SuperPolynomial::product_of(vars));
    if (r.involves(SymbolKind::Auxiliary)) throw Error("auxiliary symbol survived a biproduct");
    return r;
}

inline int word_lie_parity(const std::vector<Symbol>& w) {
    int p = 0;
    for (const auto& s : w) p ^= s.lie_parity();
    return p;
}

/// (S|T): signed product of row biproducts; zero when the shapes differ.
inline SuperPolynomial bitableau_value(const Tableau& s, const PlaceTableau& t) {
    if (s.rows.size() != t.rows.size()) return SuperPolynomial{};
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        if (s.rows[i].size() != t.rows[i].size()) return SuperPolynomial{};
    int exponent = 0, places_above = 0;
    SuperPolynomial value = SuperPolynomial::constant(1);
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        exponent += word_lie_parity(s.rows[i]) * places_above;
        places_above += static_cast<int>(t.rows[i].size());
        value = value * biproduct(s.rows[i], t.rows[i]);
        if (value.is_zero()) return value;
    }
    if (exponent & 1) value *= -1;
    return value;
}

/// The canonical highest weight vector (D_mu | D^P_mu) of weight conjugate(mu).
inline SuperPolynomial highest_weight_vector(const Partition& mu, int n) {
    if (mu.first() > n)
        throw Error("highest weight vector needs mu_1 <= n (mu=" + mu.to_string() + ", n=" + std::to_string(n) + ")");
    return bitableau_value(deruyts(mu), deruyts_places(mu));
}

/// Bitableau monomial e_{S,T}: one generator per cell, in row-major order.
inline UWord bitableau_monomial(const Tableau& s, const Tableau& t) {
    if (!(s.shape() == t.shape())) throw Error("bitableau monomial needs equal shapes");
    UWord w;
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (std::size_t j = 0; j < s.rows[i].size(); ++j) w.push_back(UGenerator{s.rows[i][j], t.rows[i][j]});
    return w;
}

/// Rows and columns weakly increasing; no repeated negative (beta or proper) letter in a row;
/// no repeated positive letter in a column.
inline bool is_superstandard(const Tableau& x) {
    for (std::size_t i = 0; i < x.rows.size(); ++i)
        for (std::size_t j = 0; j < x.rows[i].size(); ++j) {
            const Symbol& s = x.rows[i][j];
            if (s.kind == SymbolKind::Auxiliary) return false;
            if (j > 0) {
                const Symbol& l = x.rows[i][j - 1];
                if (s < l) return false;
                if (s == l && s.lie_parity() == 1) return false;
            }
            if (i > 0) {
                const Symbol& u = x.rows[i - 1][j];
                if (s < u) return false;
                if (s == u && s.lie_parity() == 0) return false;
            }
        }
    return true;
}

/// Places are odd, so standard place tableaux have strictly increasing rows and weakly increasing columns.
inline bool is_standard(const PlaceTableau& t) {
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            if (j > 0 && t.rows[i][j] <= t.rows[i][j - 1]) return false;
            if (i > 0 && t.rows[i][j] < t.rows[i - 1][j]) return false;
        }
    return true;
}

/// Multiplicity of each letter (resp. place).
using Content = std::map<Symbol, int>;
using PlaceContent = std::map<int, int>;

inline Content content_of(const Tableau& t) {
    Content c;
    for (const auto& r : t.rows)
        for (const auto& s : r) ++c[s];
    return c;
}
inline PlaceContent content_of(const PlaceTableau& t) {
    PlaceContent c;
    for (const auto& r : t.rows)
        for (int p : r) ++c[p];
    return c;
}

namespace detail {

/// Fills the diagram row-major with entries from the multiset `pool`, keeping those accepted by `ok`.
template <class Entry, class Accept>
void fill_tableaux(const Partition& shape, std::map<Entry, int> pool, Accept ok, std::vector<BasicTableau<Entry>>& out) {
    BasicTableau<Entry> t;
    for (int p : shape.parts()) t.rows.emplace_back(p);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [i, j] = cells[k];
        for (auto& [entry, count] : pool) {
            if (count == 0) continue;
            t.rows[i][j] = entry;
            if (!ok(t, i, j)) continue;
            --count;
            rec(k + 1);
            ++count;
        }
    };
    rec(0);
}

inline bool superstandard_cell(const Tableau& t, int i, int j) {
    const Symbol& s = t.rows[i][j];
    if (j > 0) {
        const Symbol& l = t.rows[i][j - 1];
        if (s < l || (s == l && s.lie_parity() == 1)) return false;
    }
    if (i > 0) {
        const Symbol& u = t.rows[i - 1][j];
        if (s < u || (s == u && s.lie_parity() == 0)) return false;
    }
    return true;
}

inline bool standard_place_cell(const PlaceTableau& t, int i, int j) {
    if (j > 0 && t.rows[i][j] <= t.rows[i][j - 1]) return false;
    if (i > 0 && t.rows[i][j] < t.rows[i - 1][j]) return false;
    return true;
}

} // namespace detail

/// Superstandard letter tableaux of the given shape and content.
inline std::vector<Tableau> superstandard_tableaux(const Partition& shape, const Content& content) {
    std::vector<Tableau> out;
    int total = 0;
    for (const auto& [s, k] : content) total += k;
    if (total != shape.weight()) return out;
    detail::fill_tableaux<Symbol>(shape, content, detail::superstandard_cell, out);
    return out;
}

/// Standard place tableaux of the given shape and content.
inline std::vector<PlaceTableau> standard_place_tableaux(const Partition& shape, const PlaceContent& content) {
    std::vector<PlaceTableau> out;
    int total = 0;
    for (const auto& [s, k] : content) total += k;
    if (total != shape.weight()) return out;
    detail::fill_tableaux<int>(shape, content, detail::standard_place_cell, out);
    return out;
}

struct Bitableau {
    Tableau left;
    PlaceTableau right;
    friend bool operator<(const Bitableau& a, const Bitableau& b) {
        return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    }
    friend bool operator==(const Bitableau& a, const Bitableau& b) { return a.left == b.left && a.right == b.right; }
};

inline std::string to_string(const Bitableau& b) { return "(" + to_string(b.left) + " | " + to_string(b.right) + ")"; }

/// Superstandard bitableaux of one shape with the given letter and place contents.
inline std::vector<Bitableau> standard_bitableaux(const Partition& shape, const Content& left, const PlaceContent& right) {
    std::vector<Bitableau> out;
    const auto ls = superstandard_tableaux(shape, left);
    if (ls.empty()) return out;
    for (const auto& t : standard_place_tableaux(shape, right))
        for (const auto& s : ls) out.push_back(Bitableau{s, t});
    return out;
}

/// Superstandard bitableaux of one shape over a letter alphabet and places 1..d (all contents).
inline std::vector<Bitableau> standard_bitableaux(const Partition& shape, const std::vector<Symbol>& alphabet, int d) {
    std::vector<Bitableau> out;
    const int k = shape.weight();
    std::map<Symbol, int> letters;
    for (const auto& s : alphabet) letters[s] = k;
    std::map<int, int> places;
    for (int j = 1; j <= d; ++j) places[j] = k;
    std::vector<Tableau> ls;
    detail::fill_tableaux<Symbol>(shape, letters, detail::superstandard_cell, ls);
    std::vector<PlaceTableau> ts;
    detail::fill_tableaux<int>(shape, places, detail::standard_place_cell, ts);
    for (const auto& s : ls)
        for (const auto& t : ts) out.push_back(Bitableau{s, t});
    return out;
}

/// Superstandard bitableaux of every shape with the given contents.
inline std::vector<Bitableau> standard_basis(const Content& left, const PlaceContent& right) {
    int k = 0;
    for (const auto& [s, c] : left) k += c;
    std::vector<Bitableau> out;
    for (const auto& shape : partitions_of(k))
        for (auto& b : standard_bitableaux(shape, left, right)) out.push_back(std::move(b));
    return out;
}

/// Unique expansion over superstandard bitableaux of equal content.
struct StandardExpansion {
    std::vector<std::pair<Bitableau, Rational>> terms;

    SuperPolynomial value() const {
        SuperPolynomial v;
        for (const auto& [b, c] : terms) v.add_scaled(bitableau_value(b.left, b.right), c);
        return v;
    }
};

namespace detail {
/// Columns are the values; rows are the union of their monomials (plus those of `extra`).
inline Matrix coordinate_matrix(const std::vector<SuperPolynomial>& values, const SuperPolynomial* extra,
                                std::vector<Rational>* rhs) {
    std::map<SuperMonomial, int> index;
    auto note = [&](const SuperPolynomial& p) {
        for (const auto& [m, c] : p.terms()) index.try_emplace(m, 0);
    };
    for (const auto& v : values) note(v);
    if (extra) note(*extra);
    int r = 0;
    for (auto& [m, i] : index) i = r++;
    Matrix a(r, std::vector<Rational>(values.size(), 0));
    for (std::size_t col = 0; col < values.size(); ++col)
        for (const auto& [m, c] : values[col].terms()) a[index[m]][col] = c;
    if (extra && rhs) {
        rhs->assign(r, 0);
        for (const auto& [m, c] : extra->terms()) (*rhs)[index[m]] = c;
    }
    return a;
}
} // namespace detail

/// Dimension of the span of the given values.
inline int span_rank(const std::vector<SuperPolynomial>& values) {
    return matrix_rank(detail::coordinate_matrix(values, nullptr, nullptr));
}

/// Expands p over the superstandard bitableaux with the given contents by an exact
/// linear solve, certified by re-expansion.
inline StandardExpansion straighten(const SuperPolynomial& p, const Content& left, const PlaceContent& right) {
    StandardExpansion out;
    if (p.is_zero()) return out;
    const auto basis = standard_basis(left, right);
    std::vector<SuperPolynomial> values;
    for (const auto& b : basis) values.push_back(bitableau_value(b.left, b.right));
    std::vector<Rational> rhs;
    const Matrix a = detail::coordinate_matrix(values, &p, &rhs);
    const auto x = solve_linear(a, rhs, static_cast<int>(values.size()));
    if (!x) throw Error("polynomial lies outside the span of bitableaux of the given content");
    for (std::size_t i = 0; i < basis.size(); ++i)
        if ((*x)[i] != 0) out.terms.emplace_back(basis[i], (*x)[i]);
    if (out.value() != p) throw Error("straightening re-expansion does not reproduce the input");
    return out;
}

/// Raised when a vector is not a scalar multiple of the reference.
class NotProportional : public Error {
public:
    using Error::Error;
};

/// The c with p = c * reference, checked monomial by monomial.
inline Rational extract_scalar(const SuperPolynomial& p, const SuperPolynomial& reference) {
    if (reference.is_zero()) throw Error("extract_scalar needs a nonzero reference");
    const auto& [m0, c0] = *reference.terms().begin();
    const Rational c = p.coefficient(m0) / c0;
    if (p.size() != (c == 0 ? 0 : reference.size()))
        throw NotProportional("result is not proportional to the reference vector");
    for (const auto& [m, rc] : reference.terms())
        if (p.coefficient(m) != c * rc) throw NotProportional("result is not proportional to the reference vector");
    return c;
}

} // namespace capelli
