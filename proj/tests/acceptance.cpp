// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Exits nonzero if any criterion fails.

#include "capelli/central.hpp"
#include "capelli/shifted.hpp"
#include "capelli/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <iostream>
#include <string>
#include <vector>

using namespace capelli;
using verify::CheckResult;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<CheckResult>()> checks;
};

/// Every named route of spec on mu equals expected, and exactly the listed routes exist.
CheckResult routes_equal(const CentralSpec& spec, const Partition& mu, int n, const std::vector<std::string>& names,
                         const Rational& expected) {
    CheckResult r{spec.to_string() + " on mu=(" + mu.to_string() + "), n=" + std::to_string(n) + " equals " +
                  to_string(expected) + " by every route"};
    std::map<std::string, Rational> routes;
    r.run(
        [&] {
            routes = eigenvalue_routes(spec, mu, n);
            if (routes.size() != names.size()) return false;
            for (const auto& name : names)
                if (!routes.count(name) || routes.at(name) != expected) return false;
            return true;
        },
        [&] {
            std::string s;
            for (const auto& [name, v] : routes) s += name + "=" + to_string(v) + " ";
            return s;
        });
    return r;
}

std::vector<Criterion> criteria() {
    using namespace verify;
    return {
        {1, "H_2 on mu=(3,2) is 12 by action, e*_2, horizontal strips and Gamma double sum",
         [] {
             return std::vector<CheckResult>{
                 routes_equal(CentralSpec::H(2), Partition{3, 2}, 3, {"action", "closed", "horizontal-strips", "gamma"}, 12),
                 check_triple_eigenvalue(3, 6, 3)};
         }},
        {2, "I_2 on mu=(2,2,1) is 12 by action, h*_2 and vertical strips",
         [] {
             return std::vector<CheckResult>{
                 routes_equal(CentralSpec::I(2), Partition{2, 2, 1}, 3, {"action", "closed", "vertical-strips"}, 12),
                 check_vertical_strip(3, 6, 3)};
         }},
        {3, "printed chi_2 images of the J family", [] { return std::vector<CheckResult>{check_printed_chi2()}; }},
        {4, "zeta(2) identity for J_(2,2) as chi_2 images and eigenvalues on |mu| <= 8",
         [] { return std::vector<CheckResult>{check_zeta2_chi(), check_zeta2_eigenvalues(8)}; }},
        {5, "S_(k) = H_k and S_(1^k) = I_k on |mu| <= 6, n <= 3, k <= 3",
         [] { return std::vector<CheckResult>{check_basis_identities(3, 6, 3)}; }},
        {6, "Schur orthogonality and vanishing, |lambda|, |mu| <= 5, n = 3",
         [] { return std::vector<CheckResult>{check_schur_orthogonality(3, 5), check_schur_vanishing(3, 5)}; }},
        {7, "K and J triangularity, |lambda|, |mu| <= 4, n <= 3",
         [] { return std::vector<CheckResult>{check_k_triangularity(3, 4), check_j_triangularity(3, 4)}; }},
        {8, "e*_k(conj mu) = h*_k(mu) for mu_1, conj(mu)_1 <= 4, |mu| <= 6; duality map compatibility",
         [] { return std::vector<CheckResult>{check_star_duality(4, 6), check_duality_map(4, 6)}; }},
        {9, "devirtualization golden cases and action equality on Schur-module bases",
         [] { return std::vector<CheckResult>{check_devirtualize_golden(), check_devirtualize_action(3, 3)}; }},
        {10, "ad-invariance of the virtual presentations", [] { return std::vector<CheckResult>{check_ad_invariance()}; }},
        {11, "Wilf polynomial equals e*_n for n <= 5", [] { return std::vector<CheckResult>{check_wilf(5)}; }},
        {12, "straightening round trip on 50 random bitableaux, standard-basis count",
         [] { return std::vector<CheckResult>{check_straightening(50, 4), check_standard_count(3)}; }},
        {13, "hook lemma and vanishing lemmas for |lambda|, |mu| <= 4",
         [] {
             auto v = check_hook_lemma(4);
             for (auto& c : check_vanishing_lemmas(4)) v.push_back(std::move(c));
             return v;
         }},
        {14, "stability of chi under projection, n = 2, 3, degree <= 3",
         [] { return std::vector<CheckResult>{check_stability({2, 3}, 3)}; }},
        {15, "shifted-Schur determinant ratio matches chi_n(S_lambda) under exactly one convention",
         [] { return std::vector<CheckResult>{check_schur_convention(3, 4)}; }},
    };
}

} // namespace

int main() {
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria()) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<CheckResult> results;
        std::string error;
        try {
            results = c.checks();
        } catch (const std::exception& e) {
            error = e.what();
        }
        bool ok = error.empty() && !results.empty();
        std::size_t cases = 0, failures = 0;
        for (const auto& r : results) {
            ok = ok && r.passed();
            cases += r.cases;
            failures += r.failures;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %2d: %s [%zu cases, %zu failures, %.2fs]\n", ok ? "PASS" : "FAIL", c.id,
                    c.title.c_str(), cases, failures, secs);
        for (const auto& r : results) {
            if (!r.passed()) {
                std::printf("    failed check: %s (%zu/%zu)\n", r.name.c_str(), r.failures, r.cases);
                for (const auto& ce : r.counterexamples) std::printf("      %s\n", ce.c_str());
            }
            if (!r.note.empty()) std::printf("    note: %s\n", r.note.c_str());
        }
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!ok) ++failed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of 15 criteria passed in %.2fs; s* convention: %s\n", 15 - failed, total,
                to_string(frozen_schur_convention));
    return failed == 0 ? 0 : 1;
}
