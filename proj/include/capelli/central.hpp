#pragma once
// Virtual presentations of the central families H_k, I_k, K_lambda, J_lambda,
// S_lambda (and column bitableaux), their eigenvalues on highest weight vectors
// by module action and by closed formulas, and the duality map.

#include "capelli/enveloping.hpp"
#include "capelli/partitions.hpp"
#include "capelli/tableaux.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

enum class Family { Identity, H, I, K, J, S, Product, Column };

struct CentralSpec {
    Family family = Family::Identity;
    int k = 0;                          // H, I
    Partition lambda;                   // K, J, S
    std::vector<CentralSpec> factors;   // Product, left to right
    Permutation sigma;                  // Column: support and images

    static CentralSpec identity() { return CentralSpec{}; }
    static CentralSpec H(int k) { return make_k(Family::H, k); }
    static CentralSpec I(int k) { return make_k(Family::I, k); }
    static CentralSpec K(Partition l) { return make_shape(Family::K, std::move(l)); }
    static CentralSpec J(Partition l) { return make_shape(Family::J, std::move(l)); }
    static CentralSpec S(Partition l) { return make_shape(Family::S, std::move(l)); }
    static CentralSpec column(Permutation sigma) {
        CentralSpec s;
        s.family = Family::Column;
        s.k = sigma.size();
        s.sigma = std::move(sigma);
        return s;
    }
    static CentralSpec product(std::vector<CentralSpec> factors) {
        if (factors.empty()) return identity();
        if (factors.size() == 1) return factors.front();
        CentralSpec s;
        s.family = Family::Product;
        s.factors = std::move(factors);
        return s;
    }

    /// Parses "H:2", "I:3", "K:2,1", "J:2,2", "S:3,1", "C:1,2|2,1", "1", and products joined by '*'.
    static CentralSpec parse(const std::string& text) {
        std::vector<CentralSpec> fs;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, '*')) fs.push_back(parse_factor(item));
        if (fs.empty() || (!text.empty() && text.back() == '*')) throw Error("malformed central spec '" + text + "'");
        return product(std::move(fs));
    }

    std::string to_string() const {
        switch (family) {
            case Family::Identity: return "1";
            case Family::H: return "H:" + std::to_string(k);
            case Family::I: return "I:" + std::to_string(k);
            case Family::K: return "K:" + lambda.to_string();
            case Family::J: return "J:" + lambda.to_string();
            case Family::S: return "S:" + lambda.to_string();
            case Family::Column: {
                std::string a, b;
                for (int i = 0; i < sigma.size(); ++i) {
                    a += (i ? "," : "") + std::to_string(sigma.support()[i]);
                    b += (i ? "," : "") + std::to_string(sigma.images()[i]);
                }
                return "C:" + a + "|" + b;
            }
            case Family::Product: {
                std::string s;
                for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "*" : "") + factors[i].to_string();
                return s;
            }
        }
        return "?";
    }

    /// Filtration degree of the element.
    int degree() const {
        switch (family) {
            case Family::Identity: return 0;
            case Family::H:
            case Family::I:
            case Family::Column: return k;
            case Family::K:
            case Family::J:
            case Family::S: return lambda.weight();
            case Family::Product: {
                int d = 0;
                for (const auto& f : factors) d += f.degree();
                return d;
            }
        }
        return 0;
    }

    /// Throws unless this element is meaningful in dimension n.
    void validate(int n) const {
        if (n < 1) throw Error("dimension n must be positive");
        switch (family) {
            case Family::Identity: return;
            case Family::H:
            case Family::I:
                if (k < 1) throw Error(to_string() + ": index must be at least 1");
                return;
            case Family::K:
            case Family::J:
            case Family::S:
                if (lambda.first() > n) throw Error(to_string() + ": needs lambda_1 <= n = " + std::to_string(n));
                return;
            case Family::Column:
                for (int j : sigma.support())
                    if (j < 1 || j > n) throw Error(to_string() + ": support must lie in 1.." + std::to_string(n));
                return;
            case Family::Product:
                for (const auto& f : factors) f.validate(n);
                return;
        }
    }

    friend bool operator==(const CentralSpec& a, const CentralSpec& b) { return a.to_string() == b.to_string(); }
    friend bool operator<(const CentralSpec& a, const CentralSpec& b) { return a.to_string() < b.to_string(); }

private:
    static CentralSpec make_k(Family f, int k) {
        CentralSpec s;
        s.family = f;
        s.k = k;
        return s;
    }
    static CentralSpec make_shape(Family f, Partition l) {
        CentralSpec s;
        s.family = f;
        s.lambda = std::move(l);
        return s;
    }
    static std::vector<int> parse_ints(const std::string& t, const std::string& whole) {
        try {
            return Partition::parse(t).parts();
        } catch (const Error&) {
        }
        std::vector<int> v;
        std::string item;
        std::istringstream in(t);
        while (std::getline(in, item, ',')) {
            if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                throw Error("malformed central spec '" + whole + "'");
            v.push_back(std::stoi(item));
        }
        return v;
    }
    static CentralSpec parse_factor(const std::string& raw) {
        const auto b = raw.find_first_not_of(" \t");
        if (b == std::string::npos) throw Error("empty factor in central spec");
        const std::string t = raw.substr(b, raw.find_last_not_of(" \t") - b + 1);
        if (t == "1") return identity();
        if (t.size() < 2 || t[1] != ':') throw Error("malformed central spec '" + t + "'");
        const std::string arg = t.substr(2);
        switch (t[0]) {
            case 'H':
            case 'I': {
                if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
                    throw Error("malformed central spec '" + t + "'");
                return t[0] == 'H' ? H(std::stoi(arg)) : I(std::stoi(arg));
            }
            case 'K': return K(Partition::parse(arg));
            case 'J': return J(Partition::parse(arg));
            case 'S': return S(Partition::parse(arg));
            case 'C': {
                const auto bar = arg.find('|');
                if (bar == std::string::npos) throw Error("column spec needs 'support|images': '" + t + "'");
                return column(Permutation(parse_ints(arg.substr(0, bar), t), parse_ints(arg.substr(bar + 1), t)));
            }
            default: throw Error("unknown central family in '" + t + "'");
        }
    }
};

/// Weighted sum of balanced words presenting a central element.
struct VirtualProgram {
    std::vector<std::pair<Rational, UWord>> summands;

    UElement element() const {
        UElement u;
        for (const auto& [c, w] : summands) u.add_term(w, c);
        return u;
    }
};

namespace detail {

/// Letter tableaux of the given shape over x_1..x_n with strictly increasing rows.
inline std::vector<Tableau> row_strict_tableaux(const Partition& shape, int n) {
    std::vector<Tableau> out;
    Tableau t;
    for (int p : shape.parts()) t.rows.emplace_back(p);
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == shape.length()) {
            out.push_back(t);
            return;
        }
        if (j == shape[i]) {
            rec(i + 1, 0);
            return;
        }
        const int lo = j == 0 ? 1 : t.rows[i][j - 1].index + 1;
        for (int v = lo; v <= n - (shape[i] - j - 1); ++v) {
            t.rows[i][j] = Symbol::x(v);
            rec(i, j + 1);
        }
    };
    rec(0, 0);
    return out;
}

/// Letter tableaux of the given shape over x_1..x_n with weakly increasing columns.
inline std::vector<Tableau> column_weak_tableaux(const Partition& shape, int n) {
    std::vector<Tableau> out;
    Tableau t;
    for (int p : shape.parts()) t.rows.emplace_back(p);
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [i, j] = cells[c];
        const int lo = i == 0 ? 1 : t.rows[i - 1][j].index;
        for (int v = lo; v <= n; ++v) {
            t.rows[i][j] = Symbol::x(v);
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

/// Product over columns of the factorials of letter multiplicities.
inline Integer column_repetition_factorials(const Tableau& s) {
    const Tableau c = transpose(s);
    Integer o = 1;
    for (const auto& col : c.rows) {
        std::map<Symbol, int> mult;
        for (const auto& x : col) ++mult[x];
        for (const auto& [x, m] : mult) o *= factorial(m);
    }
    return o;
}

inline UWord concat(std::initializer_list<UWord> parts) {
    UWord w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

} // namespace detail

/// Virtual presentation of a (non-product) spec in dimension n; products concatenate.
inline VirtualProgram build_program(const CentralSpec& spec, int n) {
    spec.validate(n);
    VirtualProgram prog;
    switch (spec.family) {
        case Family::Identity: prog.summands.emplace_back(1, UWord{}); break;
        case Family::H: {
            const Symbol a = Symbol::alpha(1);
            std::vector<int> idx;
            std::function<void(int)> rec = [&](int from) {
                if (static_cast<int>(idx.size()) == spec.k) {
                    UWord w;
                    for (auto it = idx.rbegin(); it != idx.rend(); ++it) w.push_back(e(Symbol::x(*it), a));
                    for (int i : idx) w.push_back(e(a, Symbol::x(i)));
                    prog.summands.emplace_back(1, w);
                    return;
                }
                for (int i = from; i <= n; ++i) {
                    idx.push_back(i);
                    rec(i + 1);
                    idx.pop_back();
                }
            };
            rec(1);
            break;
        }
        case Family::I: {
            const Symbol b = Symbol::beta(1);
            std::vector<int> h(n, 0);
            std::function<void(int, int)> rec = [&](int i, int rest) {
                if (i == n - 1) {
                    h[i] = rest;
                    Integer denom = 1;
                    UWord w;
                    for (int j = n - 1; j >= 0; --j)
                        for (int t = 0; t < h[j]; ++t) w.push_back(e(Symbol::x(j + 1), b));
                    for (int j = 0; j < n; ++j) {
                        denom *= factorial(h[j]);
                        for (int t = 0; t < h[j]; ++t) w.push_back(e(b, Symbol::x(j + 1)));
                    }
                    prog.summands.emplace_back(Rational(1) / Rational(denom), w);
                    return;
                }
                for (int v = rest; v >= 0; --v) {
                    h[i] = v;
                    rec(i + 1, rest - v);
                }
            };
            rec(0, spec.k);
            break;
        }
        case Family::K: {
            const Tableau c = coderuyts_positive(spec.lambda);
            for (const auto& s : detail::row_strict_tableaux(spec.lambda, n))
                prog.summands.emplace_back(1, detail::concat({bitableau_monomial(s, c), bitableau_monomial(c, s)}));
            break;
        }
        case Family::J: {
            const Partition shape = conjugate(spec.lambda);
            const Tableau d = deruyts_negative(shape);
            for (const auto& s : detail::column_weak_tableaux(shape, n))
                prog.summands.emplace_back(Rational(1) / Rational(detail::column_repetition_factorials(s)),
                                           detail::concat({bitableau_monomial(s, d), bitableau_monomial(d, s)}));
            break;
        }
        case Family::S: {
            const Tableau c = coderuyts_positive(spec.lambda);
            const Tableau d = deruyts_negative(spec.lambda);
            const Rational coeff = Rational(1) / Rational(hook_number(spec.lambda));
            const UWord middle = detail::concat({bitableau_monomial(c, d), bitableau_monomial(d, c)});
            for (const auto& s : detail::row_strict_tableaux(spec.lambda, n))
                prog.summands.emplace_back(
                    coeff, detail::concat({bitableau_monomial(s, c), middle, bitableau_monomial(c, s)}));
            break;
        }
        case Family::Column: {
            const int k = spec.sigma.size();
            UWord w;
            for (int t = 0; t < k; ++t) w.push_back(e(Symbol::x(spec.sigma.support()[t]), Symbol::alpha(t + 1)));
            for (int t = 0; t < k; ++t) w.push_back(e(Symbol::alpha(t + 1), Symbol::x(spec.sigma.images()[t])));
            const int sign = ((k * (k - 1) / 2) % 2 ? -1 : 1) * spec.sigma.sign();
            prog.summands.emplace_back(sign, w);
            break;
        }
        case Family::Product: {
            prog.summands.emplace_back(1, UWord{});
            for (const auto& f : spec.factors) {
                const VirtualProgram pf = build_program(f, n);
                VirtualProgram next;
                for (const auto& [c1, w1] : prog.summands)
                    for (const auto& [c2, w2] : pf.summands) next.summands.emplace_back(c1 * c2, detail::concat({w1, w2}));
                prog = std::move(next);
            }
            break;
        }
    }
    return prog;
}

namespace detail {

/// Words stored reversed in a trie so that common acting suffixes are applied once.
class ActionTrie {
public:
    explicit ActionTrie(const VirtualProgram& prog) : nodes_(1) {
        for (const auto& [c, w] : prog.summands) {
            int node = 0;
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const auto found = nodes_[node].children.find(*it);
                if (found != nodes_[node].children.end()) {
                    node = found->second;
                    continue;
                }
                const int child = static_cast<int>(nodes_.size());
                nodes_[node].children.emplace(*it, child);
                nodes_.emplace_back();
                node = child;
            }
            nodes_[node].coeff += c;
        }
    }

    SuperPolynomial act(const SuperPolynomial& v) const {
        SuperPolynomial out;
        walk(0, v, out);
        return out;
    }

private:
    struct Node {
        std::map<UGenerator, int> children;
        Rational coeff = 0;
    };

    void walk(int node, const SuperPolynomial& p, SuperPolynomial& out) const {
        const Node& nd = nodes_[node];
        if (nd.coeff != 0) out.add_scaled(p, nd.coeff);
        for (const auto& [g, child] : nd.children) {
            const SuperPolynomial q = polarize(g.polarization(), p);
            if (!q.is_zero()) walk(child, q, out);
        }
    }

    std::vector<Node> nodes_;
};

} // namespace detail

/// Acts with the virtual presentation of spec on p (products act factor by factor, rightmost first).
inline SuperPolynomial act_spec(const CentralSpec& spec, int n, const SuperPolynomial& p) {
    if (spec.family == Family::Product) {
        SuperPolynomial cur = p;
        for (auto it = spec.factors.rbegin(); it != spec.factors.rend() && !cur.is_zero(); ++it)
            cur = act_spec(*it, n, cur);
        return cur;
    }
    return detail::ActionTrie(build_program(spec, n)).act(p);
}

/// Eigenvalue of spec on v_{conjugate(mu)} = (D_mu | D^P_mu), computed by acting on the vector.
inline Rational eigenvalue_action(const CentralSpec& spec, const Partition& mu, int n) {
    spec.validate(n);
    const SuperPolynomial v = highest_weight_vector(mu, n);
    const SuperPolynomial w = act_spec(spec, n, v);
    if (w.involves(SymbolKind::PositiveVirtual) || w.involves(SymbolKind::NegativeVirtual))
        throw Error("virtual variables survived the action of " + spec.to_string());
    return extract_scalar(w, v);
}

/// Raised for families whose eigenvalues have no closed formula here.
class NoClosedForm : public Error {
public:
    using Error::Error;
};

/// Eigenvalue of spec on v_{conjugate(mu)} from closed formulas.
inline Rational eigenvalue_closed(const CentralSpec& spec, const Partition& mu, int n) {
    spec.validate(n);
    if (mu.first() > n) throw Error("eigenvalues need mu_1 <= n");
    const std::vector<int> weight = conjugate(mu).padded(n);
    switch (spec.family) {
        case Family::Identity: return 1;
        case Family::H:
            if (spec.k > n) return 0;  // empty sum of k-subsets
            return Rational(e_star_eval(spec.k, weight));
        case Family::I: return Rational(h_star_eval(spec.k, weight));
        case Family::S: {
            const Partition& l = spec.lambda;
            if (mu.weight() < l.weight()) return 0;
            if (mu.weight() == l.weight()) return mu == l ? Rational(hook_number(l)) : Rational(0);
            if (!contained_in(l, mu)) return 0;
            throw NoClosedForm(spec.to_string() + " has no closed eigenvalue formula above its own weight");
        }
        case Family::Column: return Rational(gamma_statistic(mu, spec.sigma));
        case Family::Product: {
            Rational r = 1;
            for (const auto& f : spec.factors) r *= eigenvalue_closed(f, mu, n);
            return r;
        }
        case Family::K:
        case Family::J: throw NoClosedForm(spec.to_string() + " has no closed eigenvalue formula");
    }
    return 0;
}

/// Every available route to the eigenvalue, keyed by route name.
inline std::map<std::string, Rational> eigenvalue_routes(const CentralSpec& spec, const Partition& mu, int n) {
    std::map<std::string, Rational> r;
    r["action"] = eigenvalue_action(spec, mu, n);
    try {
        r["closed"] = eigenvalue_closed(spec, mu, n);
    } catch (const NoClosedForm&) {
    }
    if (spec.family == Family::H && spec.k <= n) {
        r["horizontal-strips"] = Rational(strip_sum(horizontal_strips(mu, spec.k)));
        r["gamma"] = Rational(gamma_double_sum(mu, spec.k, n));
    }
    if (spec.family == Family::S) r["shifted-schur"] = shifted_schur_eval(conjugate(spec.lambda), conjugate(mu).padded(n));
    if (spec.family == Family::I) r["vertical-strips"] = Rational(strip_sum(vertical_strips(mu, spec.k)));
    return r;
}

/// H_k <-> I_k and S_lambda -> S_{conjugate(lambda)}, extended multiplicatively.
inline CentralSpec duality_map(const CentralSpec& spec) {
    switch (spec.family) {
        case Family::Identity: return spec;
        case Family::H: return CentralSpec::I(spec.k);
        case Family::I: return CentralSpec::H(spec.k);
        case Family::S: return CentralSpec::S(conjugate(spec.lambda));
        case Family::Product: {
            std::vector<CentralSpec> fs;
            for (const auto& f : spec.factors) fs.push_back(duality_map(f));
            return CentralSpec::product(std::move(fs));
        }
        default: throw Error("duality is not defined on " + spec.to_string());
    }
}

} // namespace capelli
