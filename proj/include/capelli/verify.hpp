#pragma once
// Property checks over finite grids: each check counts its cases, records the
// first few counterexamples, and fails when it ran no case at all.

#include "capelli/central.hpp"
#include "capelli/enveloping.hpp"
#include "capelli/partitions.hpp"
#include "capelli/shifted.hpp"
#include "capelli/tableaux.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace capelli::verify {

struct CheckResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;
    std::string note;

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    bool passed() const { return cases > 0 && failures == 0; }

    /// Runs one case; an exception thrown by `body` counts as a failure.
    void run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
        ++cases;
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = std::string(" [error: ") + e.what() + "]";
        }
        if (ok) return;
        ++failures;
        if (counterexamples.size() < 5) counterexamples.push_back(describe() + why);
    }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        if (checks.empty()) return false;
        for (const auto& c : checks)
            if (!c.passed()) return false;
        return true;
    }
};

struct SuiteOptions {
    std::optional<int> n;
    std::optional<int> max_weight;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "triple-eigenvalue", "duality",  "schur-orthogonality", "vanishing",     "regonati",    "stability",
        "zeta2-identity",    "wilf",     "straightening",       "ad-invariance", "devirtualize"};
    return names;
}

namespace detail {

inline std::string q(const Rational& r) { return to_string(r); }

inline std::string at(const CentralSpec& s, const Partition& mu, int n) {
    return s.to_string() + " mu=(" + mu.to_string() + ") n=" + std::to_string(n);
}

/// Partitions mu with |mu| <= w and mu_1 <= n.
inline std::vector<Partition> weights_up_to(int w, int n) { return partitions_up_to(w, n); }

/// Every filling of the shape with letters from the list (no conditions).
inline std::vector<Tableau> all_fillings(const Partition& shape, const std::vector<Symbol>& letters) {
    std::vector<Tableau> out;
    Tableau t;
    for (int p : shape.parts()) t.rows.emplace_back(p, letters.front());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            out.push_back(t);
            return;
        }
        for (const auto& s : letters) {
            t.rows[cells[c].first][cells[c].second] = s;
            rec(c + 1);
        }
    };
    rec(0);
    return out;
}

inline std::vector<Symbol> proper_letters(int n) {
    std::vector<Symbol> v;
    for (int i = 1; i <= n; ++i) v.push_back(Symbol::x(i));
    return v;
}

inline UWord join(const UWord& a, const UWord& b) {
    UWord w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

inline SuperPolynomial act_word(const UWord& w, const SuperPolynomial& p) { return act_on_module(UElement::word(w), p); }

inline int binomial2_sign(int k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; }

/// Polynomial in x = x_1, y = x_2 from (coefficient, exponent of x, exponent of y) triples.
inline Polynomial poly_xy(std::initializer_list<std::tuple<int, int, int>> terms) {
    Polynomial p(2);
    for (const auto& [c, a, b] : terms) p.add_term(Exponents{a, b}, c);
    return p;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Eigenvalue routes

/// H_k: operator action, e*_k, horizontal-strip sum and Gamma double sum agree (and vanish when mu_1 < k).
inline CheckResult check_triple_eigenvalue(int n_max, int max_weight, int k_max) {
    CheckResult r{"H_k action = e*_k = horizontal strips = Gamma double sum"};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= std::min(k_max, n); ++k)
            for (const auto& mu : detail::weights_up_to(max_weight, n)) {
                const auto spec = CentralSpec::H(k);
                std::map<std::string, Rational> routes;
                r.run(
                    [&] {
                        routes = eigenvalue_routes(spec, mu, n);
                        const Rational v = routes.at("action");
                        for (const auto& [name, x] : routes)
                            if (x != v) return false;
                        if (mu.first() < k && v != 0) return false;
                        return routes.size() == 4;
                    },
                    [&] {
                        std::string s = detail::at(spec, mu, n) + ":";
                        for (const auto& [name, x] : routes) s += " " + name + "=" + detail::q(x);
                        return s;
                    });
            }
    return r;
}

/// I_k: operator action, h*_k and vertical-strip sum agree (and vanish when conj(mu)_1 < k).
inline CheckResult check_vertical_strip(int n_max, int max_weight, int k_max) {
    CheckResult r{"I_k action = h*_k = vertical strips"};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            for (const auto& mu : detail::weights_up_to(max_weight, n)) {
                const auto spec = CentralSpec::I(k);
                std::map<std::string, Rational> routes;
                r.run(
                    [&] {
                        routes = eigenvalue_routes(spec, mu, n);
                        const Rational v = routes.at("action");
                        for (const auto& [name, x] : routes)
                            if (x != v) return false;
                        if (conjugate(mu).first() < k && v != 0) return false;
                        return routes.size() == 3;
                    },
                    [&] {
                        std::string s = detail::at(spec, mu, n) + ":";
                        for (const auto& [name, x] : routes) s += " " + name + "=" + detail::q(x);
                        return s;
                    });
            }
    return r;
}

/// On v, the H_k summand of one k-subset equals the sum of its column bitableaux, each acting by Gamma_sigma.
inline CheckResult check_column_expansion(int n_max, int max_weight) {
    CheckResult r{"column bitableaux act by Gamma_sigma and sum to the H_k summand"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& mu : detail::weights_up_to(max_weight, n)) {
            const SuperPolynomial v = highest_weight_vector(mu, n);
            for (int k = 1; k <= n; ++k) {
                std::vector<int> idx;
                std::function<void(int)> rec = [&](int from) {
                    if (static_cast<int>(idx.size()) == k) {
                        UWord w;
                        for (auto it = idx.rbegin(); it != idx.rend(); ++it) w.push_back(e(Symbol::x(*it), Symbol::alpha(1)));
                        for (int i : idx) w.push_back(e(Symbol::alpha(1), Symbol::x(i)));
                        SuperPolynomial total;
                        for (const auto& sigma : all_permutations(idx)) {
                            const auto spec = CentralSpec::column(sigma);
                            r.run([&] { return eigenvalue_action(spec, mu, n) == Rational(gamma_statistic(mu, sigma)); },
                                  [&] { return detail::at(spec, mu, n) + ": action differs from Gamma_sigma"; });
                            total += act_spec(spec, n, v);
                        }
                        r.run([&] { return detail::act_word(w, v) == total; },
                              [&] { return "subset of size " + std::to_string(k) + " mu=(" + mu.to_string() + "): sum mismatch"; });
                        return;
                    }
                    for (int i = from; i <= n; ++i) {
                        idx.push_back(i);
                        rec(i + 1);
                        idx.pop_back();
                    }
                };
                rec(1);
            }
        }
    return r;
}

/// S_(k) and H_k, and S_(1^k) and I_k, have equal eigenvalues.
inline CheckResult check_basis_identities(int n_max, int max_weight, int k_max) {
    CheckResult r{"S_(k) = H_k and S_(1^k) = I_k on highest weight vectors"};
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= k_max; ++k)
            for (const auto& mu : detail::weights_up_to(max_weight, n)) {
                if (k <= n) {
                    const auto s = CentralSpec::S(Partition{k});
                    r.run([&] { return eigenvalue_action(s, mu, n) == eigenvalue_action(CentralSpec::H(k), mu, n); },
                          [&] { return detail::at(s, mu, n) + " differs from H:" + std::to_string(k); });
                }
                const auto s = CentralSpec::S(Partition(std::vector<int>(k, 1)));
                r.run([&] { return eigenvalue_action(s, mu, n) == eigenvalue_action(CentralSpec::I(k), mu, n); },
                      [&] { return detail::at(s, mu, n) + " differs from I:" + std::to_string(k); });
            }
    return r;
}

/// S_lambda(v_conj(mu)) = delta H(lambda) v on equal weights.
inline CheckResult check_schur_orthogonality(int n, int max_weight) {
    CheckResult r{"S_lambda(v) = delta_{lambda,mu} H(lambda) v for |lambda| = |mu|"};
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& l : partitions_of(w, n))
            for (const auto& mu : partitions_of(w, n)) {
                const auto s = CentralSpec::S(l);
                Rational got = -1;
                r.run(
                    [&] {
                        got = eigenvalue_action(s, mu, n);
                        return got == (l == mu ? Rational(hook_number(l)) : Rational(0));
                    },
                    [&] { return detail::at(s, mu, n) + " = " + detail::q(got); });
            }
    return r;
}

/// S_lambda(v_conj(mu)) = 0 whenever lambda is not contained in mu.
inline CheckResult check_schur_vanishing(int n, int max_weight) {
    CheckResult r{"S_lambda(v) = 0 when lambda is not contained in mu"};
    for (const auto& l : partitions_up_to(max_weight, n))
        for (const auto& mu : partitions_up_to(max_weight, n)) {
            if (contained_in(l, mu)) continue;
            const auto s = CentralSpec::S(l);
            r.run([&] { return eigenvalue_action(s, mu, n) == 0; }, [&] { return detail::at(s, mu, n) + " is nonzero"; });
        }
    return r;
}

/// K_lambda vanishes below lambda in weight and dominance; K_lambda(v_conj(lambda)) = (-1)^C(k,2) H(lambda) v.
inline CheckResult check_k_triangularity(int n_max, int max_weight) {
    CheckResult r{"K_lambda triangularity and diagonal (-1)^C(k,2) H(lambda)"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& l : partitions_up_to(max_weight, n)) {
            if (l.empty()) continue;
            const auto s = CentralSpec::K(l);
            for (const auto& mu : detail::weights_up_to(max_weight, n)) {
                std::optional<Rational> expected;
                if (mu.weight() < l.weight() || (mu.weight() == l.weight() && !dominance_leq(l, mu))) expected = 0;
                if (mu == l) expected = Rational(detail::binomial2_sign(l.weight())) * Rational(hook_number(l));
                Rational got;
                r.run(
                    [&] {
                        got = eigenvalue_action(s, mu, n);
                        return !expected || got == *expected;
                    },
                    [&] { return detail::at(s, mu, n) + " = " + detail::q(got) + ", expected " + detail::q(*expected); });
            }
        }
    return r;
}

/// J_lambda vanishes when |mu| < |lambda| or when |mu| = |lambda| and conj(mu) does not dominate lambda.
inline CheckResult check_j_triangularity(int n_max, int max_weight) {
    CheckResult r{"J_lambda triangularity"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& l : partitions_up_to(max_weight, n)) {
            if (l.empty()) continue;
            const auto s = CentralSpec::J(l);
            for (const auto& mu : detail::weights_up_to(max_weight, n)) {
                const bool zero = mu.weight() < l.weight() || (mu.weight() == l.weight() && !dominance_leq(l, conjugate(mu)));
                Rational got;
                r.run(
                    [&] {
                        got = eigenvalue_action(s, mu, n);
                        return !zero || got == 0;
                    },
                    [&] { return detail::at(s, mu, n) + " = " + detail::q(got) + ", expected 0"; });
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Duality

/// e*_k(conj(mu)) = h*_k(mu) for mu_1, conj(mu)_1 <= n.
inline CheckResult check_star_duality(int n, int max_weight) {
    CheckResult r{"e*_k(conj(mu)) = h*_k(mu)"};
    for (const auto& mu : partitions_up_to(max_weight, n)) {
        if (mu.length() > n) continue;
        for (int k = 0; k <= n; ++k)
            r.run([&] { return e_star_eval(k, conjugate(mu).padded(n)) == h_star_eval(k, mu.padded(n)); },
                  [&] { return "k=" + std::to_string(k) + " mu=(" + mu.to_string() + ")"; });
    }
    return r;
}

inline std::vector<CentralSpec> duality_sample(int n) {
    std::vector<CentralSpec> out;
    for (int k = 1; k <= 3; ++k) {
        out.push_back(CentralSpec::H(k));
        out.push_back(CentralSpec::I(k));
    }
    for (const auto& l : partitions_up_to(3, n)) {
        if (l.empty() || l.length() > n) continue;
        out.push_back(CentralSpec::S(l));
    }
    out.push_back(CentralSpec::product({CentralSpec::H(2), CentralSpec::I(1)}));
    if (n >= 2) out.push_back(CentralSpec::product({CentralSpec::H(1), CentralSpec::S(Partition{2, 1})}));
    return out;
}

/// The eigenvalue of a spec at mu equals the eigenvalue of its dual at conj(mu).
inline CheckResult check_duality_map(int n_max, int max_weight) {
    CheckResult r{"eigenvalue of F at mu = eigenvalue of its dual at conj(mu)"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& spec : duality_sample(n))
            for (const auto& mu : partitions_up_to(max_weight, n)) {
                if (mu.length() > n) continue;
                const auto dual = duality_map(spec);
                Rational a, b;
                r.run(
                    [&] {
                        a = eigenvalue_action(spec, mu, n);
                        b = eigenvalue_action(dual, conjugate(mu), n);
                        return a == b;
                    },
                    [&] { return detail::at(spec, mu, n) + " = " + detail::q(a) + " vs dual " + detail::q(b); });
            }
    return r;
}

/// omega(e*_k) = h*_k, omega is an involution, and omega(chi(F)) = chi(dual F) when deg F <= n. The degree
/// bound matters: the e*-expansion of chi(F) may use e*_k with k up to deg F, and e*_k vanishes in n < k
/// variables while h*_k does not (S_(2,1) at n = 2 is the smallest case).
inline CheckResult check_omega_involution(int n_max) {
    CheckResult r{"omega(e*_k) = h*_k, omega^2 = id, omega(chi(F)) = chi(dual F) for deg F <= n"};
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            r.run([&] { return omega_involution(e_star_poly(k, n)) == h_star_poly(k, n); },
                  [&] { return "omega(e*_" + std::to_string(k) + ") n=" + std::to_string(n); });
            r.run([&] { return omega_involution(h_star_poly(k, n)) == e_star_poly(k, n); },
                  [&] { return "omega(h*_" + std::to_string(k) + ") n=" + std::to_string(n); });
        }
        for (const auto& spec : duality_sample(n)) {
            if (spec.degree() > n) continue;
            r.run([&] { return omega_involution(omega_involution(chi(spec, n))) == chi(spec, n); },
                  [&] { return "omega^2 on chi(" + spec.to_string() + ") n=" + std::to_string(n); });
            r.run([&] { return omega_involution(chi(spec, n)) == chi(duality_map(spec), n); },
                  [&] { return spec.to_string() + " n=" + std::to_string(n); });
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Vanishing lemmas and the hook lemma

/// The seven vanishing statements for the operators e_{X,S} with S ranging over all proper fillings.
inline std::vector<CheckResult> check_vanishing_lemmas(int max_weight) {
    CheckResult uno{"D*_lambda S (v) = 0 for |mu| < |lambda|"};
    CheckResult due{"C*_lambda S (v) = 0 for |mu| < |lambda|"};
    CheckResult duebis{"C*_lambda S (v) = 0 for |mu| = |lambda|, mu not dominating lambda"};
    CheckResult unobis{"D*_conj(lambda) S (v) = 0 for |mu| = |lambda|, conj(mu) not dominating lambda"};
    CheckResult tre{"D*C* C*S (v) = 0 for |mu| = |lambda|, mu != lambda"};
    CheckResult quattro{"C*D* D*S (v) = 0 for |mu| = |lambda|, mu != lambda"};
    CheckResult cinque{"D*C* C*S (v) = 0 for lambda not contained in mu"};
    for (const auto& mu : partitions_up_to(max_weight)) {
        const int n = std::max(1, mu.first());
        const auto letters = detail::proper_letters(n);
        const SuperPolynomial v = highest_weight_vector(mu, n);
        const auto tag = [&](const Partition& l, const Tableau& s) {
            return "lambda=(" + l.to_string() + ") mu=(" + mu.to_string() + ") S=" + to_string(s);
        };
        for (const auto& l : partitions_up_to(max_weight)) {
            if (l.empty()) continue;
            const Tableau cs = coderuyts_positive(l), ds = deruyts_negative(l);
            const UWord dc = bitableau_monomial(ds, cs), cd = bitableau_monomial(cs, ds);
            const bool lighter = mu.weight() < l.weight(), equal = mu.weight() == l.weight();
            for (const auto& s : detail::all_fillings(l, letters)) {
                const UWord c_s = bitableau_monomial(cs, s), d_s = bitableau_monomial(ds, s);
                if (lighter) {
                    uno.run([&] { return detail::act_word(d_s, v).is_zero(); }, [&] { return tag(l, s); });
                    due.run([&] { return detail::act_word(c_s, v).is_zero(); }, [&] { return tag(l, s); });
                }
                if (equal && !dominance_leq(l, mu))
                    duebis.run([&] { return detail::act_word(c_s, v).is_zero(); }, [&] { return tag(l, s); });
                if (equal && !(mu == l)) {
                    tre.run([&] { return detail::act_word(detail::join(dc, c_s), v).is_zero(); }, [&] { return tag(l, s); });
                    quattro.run([&] { return detail::act_word(detail::join(cd, d_s), v).is_zero(); },
                                [&] { return tag(l, s); });
                }
                if (!contained_in(l, mu))
                    cinque.run([&] { return detail::act_word(detail::join(dc, c_s), v).is_zero(); },
                               [&] { return tag(l, s); });
            }
            if (equal && !dominance_leq(l, conjugate(mu))) {
                const Partition lc = conjugate(l);
                const Tableau dsc = deruyts_negative(lc);
                for (const auto& s : detail::all_fillings(lc, letters))
                    unobis.run([&] { return detail::act_word(bitableau_monomial(dsc, s), v).is_zero(); },
                               [&] { return tag(l, s); });
            }
        }
    }
    return {uno, due, duebis, unobis, tre, quattro, cinque};
}

/// The hook lemma in its proper, virtual and trivial forms.
inline std::vector<CheckResult> check_hook_lemma(int max_weight) {
    CheckResult proper{"C*_lambda D_lambda (v_conj(lambda)) = (-1)^C(k,2) H(lambda) (C*_lambda|D^P_lambda) / lambda!"};
    CheckResult virt{"C*_lambda D*_lambda ((D*_lambda|D^P_lambda)) = (-1)^C(k,2) H(lambda) (C*_lambda|D^P_lambda) / lambda!"};
    CheckResult trivial{"D*_lambda C*_lambda ((C*_lambda|D^P_lambda) / lambda!) = (D*_lambda|D^P_lambda)"};
    for (const auto& l : partitions_up_to(max_weight)) {
        if (l.empty()) continue;
        const int k = l.weight();
        const Tableau cs = coderuyts_positive(l), ds = deruyts_negative(l), d = deruyts(l);
        const PlaceTableau dp = deruyts_places(l);
        const SuperPolynomial c_val = bitableau_value(cs, dp), d_val = bitableau_value(ds, dp);
        SuperPolynomial rhs = c_val;
        rhs *= Rational(detail::binomial2_sign(k)) * Rational(hook_number(l)) / Rational(partition_factorial(l));
        const auto tag = [&] { return "lambda=(" + l.to_string() + ")"; };
        proper.run([&] { return detail::act_word(bitableau_monomial(cs, d), highest_weight_vector(l, l.first())) == rhs; },
                   tag);
        virt.run([&] { return detail::act_word(bitableau_monomial(cs, ds), d_val) == rhs; }, tag);
        trivial.run(
            [&] {
                SuperPolynomial src = c_val;
                src *= Rational(1) / Rational(partition_factorial(l));
                return detail::act_word(bitableau_monomial(ds, cs), src) == d_val;
            },
            tag);
    }
    return {proper, virt, trivial};
}

// ---------------------------------------------------------------------------
// Shifted symmetric side

inline std::vector<CentralSpec> stability_family(int max_degree) {
    std::vector<CentralSpec> out;
    for (int k = 1; k <= max_degree; ++k) {
        out.push_back(CentralSpec::H(k));
        out.push_back(CentralSpec::I(k));
    }
    for (const auto& l : partitions_up_to(max_degree)) {
        if (l.empty()) continue;
        out.push_back(CentralSpec::K(l));
        out.push_back(CentralSpec::J(l));
        out.push_back(CentralSpec::S(l));
    }
    return out;
}

inline bool valid_in(const CentralSpec& spec, int n) {
    try {
        spec.validate(n);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// Dropping the last variable of chi_{n+1}(F) gives chi_n(F). Where F(n) lies outside the family's
/// domain (lambda_1 > n), K and S must project to zero and J is skipped.
inline CheckResult check_stability(const std::vector<int>& ns, int max_degree) {
    CheckResult r{"olshanski_project(chi_{n+1}(F)) = chi_n(F)"};
    for (int n : ns)
        for (const auto& spec : stability_family(max_degree)) {
            if (!valid_in(spec, n + 1)) continue;
            if (!valid_in(spec, n) && spec.family == Family::J) continue;
            r.run(
                [&] {
                    const auto projected = olshanski_project(chi(spec, n + 1));
                    return valid_in(spec, n) ? projected == chi(spec, n) : projected.is_zero();
                },
                [&] { return spec.to_string() + " n=" + std::to_string(n); });
        }
    return r;
}

/// chi images, e*, h* and s* all pass the shifted-symmetry substitution test.
inline CheckResult check_shifted_symmetry(int n_max, int max_degree) {
    CheckResult r{"shifted symmetry of chi images, e*_k, h*_k and s*_lambda"};
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 0; k <= max_degree; ++k) {
            if (k <= n)
                r.run([&] { return is_shifted_symmetric(e_star_poly(k, n)); }, [&] { return "e*_" + std::to_string(k); });
            r.run([&] { return is_shifted_symmetric(h_star_poly(k, n)); }, [&] { return "h*_" + std::to_string(k); });
        }
        for (const auto& l : partitions_up_to(max_degree, n))
            r.run([&] { return is_shifted_symmetric(s_star_poly(l, n)); }, [&] { return "s*_(" + l.to_string() + ")"; });
        for (const auto& spec : stability_family(max_degree)) {
            if (!valid_in(spec, n)) continue;
            r.run([&] { return is_shifted_symmetric(chi(spec, n)); },
                  [&] { return "chi(" + spec.to_string() + ") n=" + std::to_string(n); });
        }
    }
    return r;
}

/// chi(H_k) = e*_k and chi(I_k) = h*_k; the e* and h* generators have no relation up to the tested degree;
/// the top-degree part of h*_k is h_k.
inline CheckResult check_generators(int n_max, int max_degree) {
    CheckResult r{"chi(H_k) = e*_k, chi(I_k) = h*_k, independence, top degree of h*_k"};
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= max_degree; ++k) {
            if (k <= n)
                r.run([&] { return chi(CentralSpec::H(k), n) == e_star_poly(k, n); },
                      [&] { return "chi(H:" + std::to_string(k) + ") n=" + std::to_string(n); });
            else
                r.run([&] { return chi(CentralSpec::H(k), n).is_zero(); },
                      [&] { return "chi(H:" + std::to_string(k) + ") n=" + std::to_string(n) + " nonzero"; });
            r.run([&] { return chi(CentralSpec::I(k), n) == h_star_poly(k, n); },
                  [&] { return "chi(I:" + std::to_string(k) + ") n=" + std::to_string(n); });
            r.run([&] { return h_star_poly(k, n).top_degree_part() == complete_homogeneous_poly(k, n); },
                  [&] { return "top degree of h*_" + std::to_string(k); });
        }
        for (bool complete : {false, true})
            r.run(
                [&] {
                    const auto [rank, size] = generator_independence_rank(n, max_degree + 1, complete);
                    return rank == size;
                },
                [&] { return std::string(complete ? "h*" : "e*") + " products dependent at n=" + std::to_string(n); });
    }
    return r;
}

/// chi_n(S_lambda) against the determinant ratio under one index convention.
inline CheckResult check_shifted_schur(SchurConvention convention, int n_max, int max_weight) {
    CheckResult r{std::string("chi_n(S_lambda) = s* ratio, ") + to_string(convention) + " convention"};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& l : partitions_up_to(max_weight, n))
            r.run([&] { return chi(CentralSpec::S(l), n) == s_star_poly(l, n, convention); },
                  [&] { return "lambda=(" + l.to_string() + ") n=" + std::to_string(n); });
    return r;
}

/// Exactly one index convention reproduces chi_n(S_lambda), and it is the frozen one.
inline CheckResult check_schur_convention(int n_max, int max_weight) {
    CheckResult r{"exactly one s* convention matches chi_n(S_lambda); it is the frozen one"};
    const auto verbatim = check_shifted_schur(SchurConvention::Verbatim, n_max, max_weight);
    const auto column = check_shifted_schur(SchurConvention::ColumnIndexed, n_max, max_weight);
    const auto& frozen = frozen_schur_convention == SchurConvention::Verbatim ? verbatim : column;
    r.run([&] { return verbatim.passed() != column.passed() && frozen.passed(); },
          [&] {
              return std::string("verbatim ") + (verbatim.passed() ? "passes" : "fails") + ", column-indexed " +
                     (column.passed() ? "passes" : "fails");
          });
    r.note = std::string("verbatim: ") + std::to_string(verbatim.failures) + "/" + std::to_string(verbatim.cases) +
             " mismatches; column-indexed: " + std::to_string(column.failures) + "/" + std::to_string(column.cases) +
             " mismatches";
    if (!verbatim.counterexamples.empty()) r.note += "; first verbatim mismatch " + verbatim.counterexamples.front();
    return r;
}

// ---------------------------------------------------------------------------
// The J example in two variables

/// The chi_2 images of J_(2,2), J_(2,1), J_(2) = I_2, J_(1,1,1) and I_1, coefficient by coefficient (x = x_1, y = x_2).
inline CheckResult check_printed_chi2() {
    using detail::poly_xy;
    CheckResult r{"chi_2 images of J_(2,2), J_(2,1), J_(2), J_(1,1,1), I_1"};
    const std::vector<std::pair<CentralSpec, Polynomial>> table = {
        {CentralSpec::J(Partition{2, 2}),
         poly_xy({{1, 0, 4}, {2, 1, 3}, {-8, 0, 3}, {3, 2, 2}, {-11, 1, 2}, {21, 0, 2}, {2, 3, 1}, {-11, 2, 1}, {19, 1, 1},
                  {-18, 0, 1}, {1, 4, 0}, {-6, 3, 0}, {11, 2, 0}, {-6, 1, 0}})},
        {CentralSpec::J(Partition{2, 1}),
         poly_xy({{1, 0, 3}, {2, 1, 2}, {-4, 0, 2}, {2, 2, 1}, {-5, 1, 1}, {4, 0, 1}, {1, 3, 0}, {-3, 2, 0}, {2, 1, 0}})},
        {CentralSpec::J(Partition{2}), poly_xy({{1, 0, 2}, {1, 1, 1}, {-2, 0, 1}, {1, 2, 0}, {-1, 1, 0}})},
        {CentralSpec::I(2), poly_xy({{1, 0, 2}, {1, 1, 1}, {-2, 0, 1}, {1, 2, 0}, {-1, 1, 0}})},
        {CentralSpec::J(Partition{1, 1, 1}),
         poly_xy({{1, 0, 3}, {3, 1, 2}, {-3, 0, 2}, {3, 2, 1}, {-6, 1, 1}, {2, 0, 1}, {1, 3, 0}, {-3, 2, 0}, {2, 1, 0}})},
        {CentralSpec::I(1), poly_xy({{1, 0, 1}, {1, 1, 0}})},
    };
    for (const auto& [spec, expected] : table) {
        Polynomial got(2);
        r.run(
            [&] {
                got = chi(spec, 2);
                return got == expected;
            },
            [&] { return spec.to_string() + ": got " + got.to_string({"x", "y"}); });
    }
    return r;
}

/// J_(2,2)(2) as a polynomial in I_1, I_2 (and in J_(2,1), J_(2), J_(1,1,1)).
inline std::vector<std::pair<Rational, CentralSpec>> zeta2_right_hand_side() {
    const auto I1 = CentralSpec::I(1), I2 = CentralSpec::I(2);
    using P = CentralSpec;
    return {{1, P::product({I2, I2})},     {-7, P::product({I2, I1})}, {3, P::product({I1, I1, I1})},
            {12, I2},                      {-9, P::product({I1, I1})}, {6, I1}};
}

inline std::vector<std::pair<Rational, CentralSpec>> zeta2_j_form() {
    const auto I2 = CentralSpec::I(2);
    return {{1, CentralSpec::product({I2, I2})},
            {-7, CentralSpec::J(Partition{2, 1})},
            {-2, CentralSpec::J(Partition{2})},
            {3, CentralSpec::J(Partition{1, 1, 1})}};
}

inline Polynomial chi_combination(const std::vector<std::pair<Rational, CentralSpec>>& combo, int n) {
    Polynomial p(n);
    for (const auto& [c, s] : combo) p += chi(s, n) * c;
    return p;
}

/// The identity for J_(2,2)(2) as equality of chi_2 images (both printed forms).
inline CheckResult check_zeta2_chi() {
    CheckResult r{"chi_2(J_(2,2)) = chi_2(I2^2 - 7 I2 I1 + 3 I1^3 + 12 I2 - 9 I1^2 + 6 I1)"};
    const auto lhs = CentralSpec::J(Partition{2, 2});
    r.run([&] { return chi(lhs, 2) == chi_combination(zeta2_right_hand_side(), 2); }, [] { return "I-form"; });
    r.run([&] { return chi(lhs, 2) == chi_combination(zeta2_j_form(), 2); }, [] { return "J-form"; });
    return r;
}

/// The same identity as eigenvalue equality on every mu with mu_1 <= 2.
inline CheckResult check_zeta2_eigenvalues(int max_weight) {
    CheckResult r{"J_(2,2)(2) eigenvalues = eigenvalues of the I_1, I_2 polynomial"};
    const auto lhs = CentralSpec::J(Partition{2, 2});
    for (const auto& mu : partitions_up_to(max_weight, 2)) {
        Rational a, b;
        r.run(
            [&] {
                a = eigenvalue_action(lhs, mu, 2);
                b = 0;
                for (const auto& [c, s] : zeta2_right_hand_side()) b += c * eigenvalue_action(s, mu, 2);
                return a == b;
            },
            [&] { return "mu=(" + mu.to_string() + "): " + detail::q(a) + " vs " + detail::q(b); });
    }
    return r;
}

/// The cycle-maximum generating polynomial of S_n equals e*_n.
inline CheckResult check_wilf(int n_max) {
    CheckResult r{"wilf_polynomial(n) = e*_n"};
    for (int n = 1; n <= n_max; ++n)
        r.run([&] { return wilf_polynomial(n) == e_star_poly(n, n); }, [&] { return "n=" + std::to_string(n); });
    return r;
}

// ---------------------------------------------------------------------------
// Straightening

/// Re-expanding straighten(p) reproduces p for random nonzero bitableaux; the standard basis is independent.
inline CheckResult check_straightening(int samples, int max_cells, unsigned seed = 20240601u) {
    CheckResult r{"straighten re-expansion reproduces random bitableaux"};
    std::mt19937 rng(seed);
    const std::vector<Symbol> letters = {Symbol::x(1), Symbol::x(2), Symbol::x(3), Symbol::alpha(1), Symbol::alpha(2),
                                         Symbol::beta(1)};
    std::vector<Partition> shapes;
    for (const auto& s : partitions_up_to(max_cells))
        if (!s.empty()) shapes.push_back(s);
    int produced = 0, attempts = 0;
    while (produced < samples && attempts < 100000) {
        ++attempts;
        const Partition& shape = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
        Tableau s;
        PlaceTableau t;
        for (int p : shape.parts()) {
            std::vector<Symbol> row;
            std::vector<int> prow;
            for (int j = 0; j < p; ++j) {
                row.push_back(letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]);
                prow.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
            }
            s.rows.push_back(row);
            t.rows.push_back(prow);
        }
        const SuperPolynomial p = bitableau_value(s, t);
        if (p.is_zero()) continue;
        ++produced;
        r.run(
            [&] {
                const auto left = content_of(s);
                const auto right = content_of(t);
                const auto expansion = straighten(p, left, right);
                if (expansion.value() != p) return false;
                std::vector<SuperPolynomial> values;
                for (const auto& b : standard_basis(left, right)) values.push_back(bitableau_value(b.left, b.right));
                return span_rank(values) == static_cast<int>(values.size());
            },
            [&] { return to_string(Bitableau{s, t}); });
    }
    return r;
}

/// Per shape, the number of standard bitableaux equals the dimension gained by adding that shape's
/// bitableaux to those of all strictly dominating shapes.
inline CheckResult check_standard_count(int max_cells) {
    CheckResult r{"standard bitableaux count = rank of the spanned component"};
    const std::vector<std::vector<Symbol>> alphabets = {
        {Symbol::x(1), Symbol::x(2)}, {Symbol::x(1), Symbol::x(2), Symbol::x(3)}, {Symbol::alpha(1), Symbol::x(1)},
        {Symbol::beta(1), Symbol::x(1)}};
    for (const auto& alphabet : alphabets)
        for (int d = 1; d <= 2; ++d)
            for (int k = 1; k <= max_cells; ++k) {
                if (std::pow(static_cast<double>(alphabet.size() * d), k) > 1500) continue;
                std::vector<int> places;
                for (int j = 1; j <= d; ++j) places.push_back(j);
                std::map<Partition, std::vector<SuperPolynomial>> values;
                for (const auto& shape : partitions_of(k)) {
                    auto& vs = values[shape];
                    std::vector<PlaceTableau> rights;
                    {
                        PlaceTableau t;
                        for (int p : shape.parts()) t.rows.emplace_back(p, 1);
                        std::vector<std::pair<int, int>> cells;
                        for (int i = 0; i < shape.length(); ++i)
                            for (int j = 0; j < shape[i]; ++j) cells.emplace_back(i, j);
                        std::function<void(std::size_t)> rec = [&](std::size_t c) {
                            if (c == cells.size()) {
                                rights.push_back(t);
                                return;
                            }
                            for (int pl : places) {
                                t.rows[cells[c].first][cells[c].second] = pl;
                                rec(c + 1);
                            }
                        };
                        rec(0);
                    }
                    for (const auto& s : detail::all_fillings(shape, alphabet))
                        for (const auto& t : rights) vs.push_back(bitableau_value(s, t));
                }
                for (const auto& shape : partitions_of(k)) {
                    std::vector<SuperPolynomial> above, with;
                    for (const auto& [other, vs] : values)
                        if (!(other == shape) && dominance_leq(shape, other)) above.insert(above.end(), vs.begin(), vs.end());
                    with = above;
                    with.insert(with.end(), values[shape].begin(), values[shape].end());
                    const std::size_t count = standard_bitableaux(shape, alphabet, d).size();
                    int gained = -1;
                    r.run(
                        [&] {
                            gained = span_rank(with) - span_rank(above);
                            return static_cast<int>(count) == gained;
                        },
                        [&] {
                            std::string a;
                            for (const auto& s : alphabet) a += s.to_string() + " ";
                            return "shape (" + shape.to_string() + ") alphabet " + a + "d=" + std::to_string(d) +
                                   ": count " + std::to_string(count) + " vs rank " + std::to_string(gained);
                        });
                }
            }
    return r;
}

// ---------------------------------------------------------------------------
// Enveloping algebra

/// ad(e_ij) of each virtual presentation normal-orders to zero.
inline CheckResult check_ad_invariance() {
    CheckResult r{"PBW normal form of ad(e_ij)(virtual presentation) is 0"};
    std::vector<std::pair<CentralSpec, int>> cases;
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) cases.emplace_back(CentralSpec::H(k), n);
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k) cases.emplace_back(CentralSpec::I(k), n);
    for (const auto& l : partitions_up_to(3, 2)) {
        if (l.empty()) continue;
        cases.emplace_back(CentralSpec::K(l), 2);
        cases.emplace_back(CentralSpec::S(l), 2);
    }
    for (const auto& [spec, n] : cases) {
        const UElement u = build_program(spec, n).element();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                r.run([&] { return pbw_normal_form(ad(e(i, j), u), orders::staged).is_zero(); },
                      [&] { return spec.to_string() + " n=" + std::to_string(n) + " ad(e_" + std::to_string(i) + std::to_string(j) + ")"; });
    }
    return r;
}

struct GoldenCase {
    std::string name;
    UElement virtual_element;
    UElement expected;
    int n;
};

inline std::vector<GoldenCase> devirtualize_golden() {
    std::vector<GoldenCase> out;
    const Symbol a1 = Symbol::alpha(1), a2 = Symbol::alpha(2), b1 = Symbol::beta(1);
    for (int n = 1; n <= 3; ++n) {
        std::vector<Rational> shifts;
        for (int i = 0; i < n; ++i) shifts.push_back(n - 1 - i);
        out.push_back({"H_" + std::to_string(n) + "(" + std::to_string(n) + ") = cdet",
                       build_program(CentralSpec::H(n), n).element(), pbw_normal_form(cdet(capelli_matrix(n, shifts))), n});
    }
    out.push_back({"odd virtual 3x3 = cper with shifts -2,-1,0",
                   UElement::word({e(Symbol::x(3), b1), e(Symbol::x(2), b1), e(Symbol::x(1), b1), e(b1, Symbol::x(1)),
                                   e(b1, Symbol::x(2)), e(b1, Symbol::x(3))}),
                   pbw_normal_form(cper(capelli_matrix(3, {-2, -1, 0}))), 3});
    out.push_back({"two positive virtuals = -e12 e21 + e11",
                   UElement::word({e(Symbol::x(1), a1), e(Symbol::x(2), a2), e(a1, Symbol::x(2)), e(a2, Symbol::x(1))}),
                   UElement::word({e(1, 1)}) - UElement::word({e(1, 2), e(2, 1)}), 2});
    return out;
}

/// Devirtualized golden elements match their closed forms exactly.
inline CheckResult check_devirtualize_golden() {
    CheckResult r{"devirtualization golden images"};
    for (const auto& g : devirtualize_golden()) {
        UElement got;
        r.run(
            [&] {
                got = devirtualize(g.virtual_element);
                return got == g.expected;
            },
            [&] { return g.name + ": got " + got.to_string(); });
    }
    return r;
}

/// A virtual element and its devirtualization act identically on every standard bitableau of proper letters.
inline CheckResult check_devirtualize_action(int max_cells, int places) {
    CheckResult r{"virtual element and its image act equally on Schur-module bases"};
    std::vector<GoldenCase> elements = devirtualize_golden();
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            elements.push_back({"H:" + std::to_string(k), build_program(CentralSpec::H(k), n).element(), {}, n});
            elements.push_back({"I:" + std::to_string(k), build_program(CentralSpec::I(k), n).element(), {}, n});
        }
    elements.push_back({"S:2,1", build_program(CentralSpec::S(Partition{2, 1}), 2).element(), {}, 2});
    elements.push_back({"J:2,1", build_program(CentralSpec::J(Partition{2, 1}), 2).element(), {}, 2});
    for (const auto& g : elements) {
        const UElement image = devirtualize(g.virtual_element);
        const auto letters = detail::proper_letters(g.n);
        for (const auto& shape : partitions_up_to(max_cells)) {
            if (shape.empty()) continue;
            for (const auto& b : standard_bitableaux(shape, letters, places)) {
                const SuperPolynomial v = bitableau_value(b.left, b.right);
                r.run([&] { return act_on_module(g.virtual_element, v) == act_on_module(image, v); },
                      [&] { return g.name + " n=" + std::to_string(g.n) + " on " + to_string(b); });
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Suites

inline int pick(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& o = {}) {
    SuiteReport rep{name, {}};
    auto add = [&](CheckResult c) { rep.checks.push_back(std::move(c)); };
    if (name == "triple-eigenvalue") {
        const int n = pick(o.n, 3), w = pick(o.max_weight, 6);
        add(check_triple_eigenvalue(n, w, 3));
        add(check_vertical_strip(n, w, 3));
        add(check_column_expansion(n, std::min(w, 5)));
    } else if (name == "duality") {
        const int n = pick(o.n, 4), w = pick(o.max_weight, 6);
        add(check_star_duality(n, w));
        add(check_duality_map(n, w));
        add(check_omega_involution(std::min(n, 4)));
    } else if (name == "schur-orthogonality") {
        const int n = pick(o.n, 3), w = pick(o.max_weight, 5);
        add(check_schur_orthogonality(n, w));
        add(check_schur_vanishing(n, w));
        add(check_basis_identities(n, w + 1, 3));
        add(check_schur_convention(n, std::min(w, 4)));
    } else if (name == "vanishing") {
        const int n = pick(o.n, 3), w = pick(o.max_weight, 4);
        for (auto& c : check_vanishing_lemmas(w)) add(std::move(c));
        add(check_k_triangularity(n, w));
        add(check_j_triangularity(n, w));
    } else if (name == "regonati") {
        for (auto& c : check_hook_lemma(pick(o.max_weight, 4))) add(std::move(c));
    } else if (name == "stability") {
        std::vector<int> ns;
        for (int n = 2; n <= pick(o.n, 3); ++n) ns.push_back(n);
        const int w = pick(o.max_weight, 3);
        add(check_stability(ns, w));
        add(check_shifted_symmetry(pick(o.n, 3), w));
        add(check_generators(pick(o.n, 3), w));
    } else if (name == "zeta2-identity") {
        add(check_printed_chi2());
        add(check_zeta2_chi());
        add(check_zeta2_eigenvalues(pick(o.max_weight, 8)));
    } else if (name == "wilf") {
        add(check_wilf(pick(o.n, 5)));
    } else if (name == "straightening") {
        const int w = pick(o.max_weight, 4);
        add(check_straightening(50, w));
        add(check_standard_count(std::min(w, 3)));
    } else if (name == "ad-invariance") {
        add(check_ad_invariance());
    } else if (name == "devirtualize") {
        add(check_devirtualize_golden());
        add(check_devirtualize_action(pick(o.max_weight, 3), 3));
    } else {
        throw Error("unknown suite '" + name + "'");
    }
    return rep;
}

} // namespace capelli::verify
