#pragma once
// Partitions, permutations on explicit supports, strips, and the closed-form
// shifted evaluations used as eigenvalue oracles.

#include "capelli/linalg.hpp"
#include "capelli/polynomial.hpp"
#include "capelli/rational.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

/// Raised when an evaluation is requested outside its index range.
class DomainError : public Error {
public:
    using Error::Error;
};

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw Error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
    }

    /// Parses "3,2"; the empty string is the empty partition.
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::string item;
        std::istringstream in(text);
        while (std::getline(in, item, ',')) {
            const auto b = item.find_first_not_of(" \t");
            const auto e = item.find_last_not_of(" \t");
            if (b == std::string::npos) throw Error("empty part in partition '" + text + "'");
            item = item.substr(b, e - b + 1);
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw Error("malformed partition '" + text + "'");
            }
            if (used != item.size()) throw Error("malformed partition '" + text + "'");
            parts.push_back(v);
        }
        if (!text.empty() && text.back() == ',') throw Error("malformed partition '" + text + "'");
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }
    /// i-th part (0-based); zero beyond the length.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    int first() const { return empty() ? 0 : parts_[0]; }

    /// Parts padded with zeros to exactly n entries.
    std::vector<int> padded(int n) const {
        if (length() > n) throw Error("partition " + to_string() + " has more than " + std::to_string(n) + " parts");
        std::vector<int> v(parts_);
        v.resize(n, 0);
        return v;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> c;
    for (int j = 0; j < lambda.first(); ++j) {
        int count = 0;
        while (count < lambda.length() && lambda[count] > j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

/// True iff every partial sum of lambda is at most the matching partial sum of mu.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    const int len = std::max(lambda.length(), mu.length());
    int sl = 0, sm = 0;
    for (int i = 0; i < len; ++i) {
        sl += lambda[i];
        sm += mu[i];
        if (sl > sm) return false;
    }
    return true;
}

/// Diagram containment lambda ⊆ mu.
inline bool contained_in(const Partition& lambda, const Partition& mu) {
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda[i] > mu[i]) return false;
    return true;
}

inline Integer hook_number(const Partition& lambda) {
    const Partition c = conjugate(lambda);
    Integer h = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) h *= (lambda[i] - j - 1) + (c[j] - i - 1) + 1;
    return h;
}

/// Product of row factorials, prod_i lambda_i!.
inline Integer partition_factorial(const Partition& lambda) {
    Integer r = 1;
    for (int p : lambda.parts()) r *= factorial(p);
    return r;
}

/// All partitions of w with parts <= max_part and at most max_len parts,
/// in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int w, int max_part = INT_MAX, int max_len = INT_MAX) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (w >= 0) rec(w, std::min(w, max_part));
    return out;
}

/// All partitions of weight at most w, ordered by weight then decreasing lex.
inline std::vector<Partition> partitions_up_to(int w, int max_part = INT_MAX, int max_len = INT_MAX) {
    std::vector<Partition> out;
    for (int k = 0; k <= w; ++k)
        for (auto& p : partitions_of(k, max_part, max_len)) out.push_back(std::move(p));
    return out;
}

/// A bijection of an explicit finite support {i_1 < ... < i_k}.
class Permutation {
public:
    Permutation() = default;
    /// images[t] is the image of support[t].
    Permutation(std::vector<int> support, std::vector<int> images)
        : support_(std::move(support)), images_(std::move(images)) {
        if (support_.size() != images_.size()) throw Error("permutation support and images differ in size");
        if (!std::is_sorted(support_.begin(), support_.end()) ||
            std::adjacent_find(support_.begin(), support_.end()) != support_.end())
            throw Error("permutation support must be strictly increasing");
        std::vector<int> sorted = images_;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != support_) throw Error("permutation is not a bijection of its support");
    }

    static Permutation identity(const std::vector<int>& support) { return Permutation(support, support); }

    /// Builds a permutation from disjoint cycles written on the given support.
    static Permutation from_cycles(const std::vector<int>& support, const std::vector<std::vector<int>>& cycles) {
        std::map<int, int> img;
        for (int s : support) img[s] = s;
        for (const auto& cyc : cycles)
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                if (!img.count(cyc[t])) throw Error("cycle element outside the support");
                img[cyc[t]] = cyc[(t + 1) % cyc.size()];
            }
        std::vector<int> images;
        for (int s : support) images.push_back(img[s]);
        return Permutation(support, images);
    }

    const std::vector<int>& support() const { return support_; }
    const std::vector<int>& images() const { return images_; }
    int size() const { return static_cast<int>(support_.size()); }

    int operator()(int j) const {
        auto it = std::lower_bound(support_.begin(), support_.end(), j);
        if (it == support_.end() || *it != j) throw Error("element outside the permutation support");
        return images_[it - support_.begin()];
    }

    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(support_.size(), false);
        for (std::size_t t = 0; t < support_.size(); ++t) {
            if (seen[t]) continue;
            std::vector<int> cyc;
            int j = support_[t];
            while (true) {
                const auto pos = std::lower_bound(support_.begin(), support_.end(), j) - support_.begin();
                if (seen[pos]) break;
                seen[pos] = true;
                cyc.push_back(j);
                j = images_[pos];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    /// +1 or -1.
    int sign() const {
        int s = 1;
        for (const auto& c : cycles())
            if (c.size() % 2 == 0) s = -s;
        return s;
    }

    /// Elements that are the maximum of their cycle.
    std::vector<int> cycle_maxima() const {
        std::vector<int> out;
        for (const auto& c : cycles()) out.push_back(*std::max_element(c.begin(), c.end()));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<int> support_;
    std::vector<int> images_;
};

/// Every permutation of the support, in lexicographic order of images.
inline std::vector<Permutation> all_permutations(const std::vector<int>& support) {
    std::vector<Permutation> out;
    std::vector<int> images = support;
    do {
        out.emplace_back(support, images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

enum class StripKind { Horizontal, Vertical };

/// A set of cells (0-based row, column) of a Ferrers diagram.
struct Strip {
    StripKind kind;
    std::vector<std::pair<int, int>> cells;
    /// Product of factorials of the per-row (horizontal) or per-column (vertical) counts.
    Integer annotation;
};

namespace detail {

inline std::vector<Strip> strips(const Partition& mu, int k, StripKind kind) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.emplace_back(i, j);
    std::vector<Strip> out;
    if (k < 0) return out;
    std::vector<std::pair<int, int>> chosen;
    std::map<int, int> blocked;   // occupied columns (horizontal) or rows (vertical)
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(chosen.size()) == k) {
            std::map<int, int> groups;
            for (const auto& [r, c] : chosen) ++groups[kind == StripKind::Horizontal ? r : c];
            Integer ann = 1;
            for (const auto& [g, cnt] : groups) ann *= factorial(cnt);
            out.push_back(Strip{kind, chosen, ann});
            return;
        }
        for (std::size_t t = from; t < cells.size(); ++t) {
            const int key = kind == StripKind::Horizontal ? cells[t].second : cells[t].first;
            if (blocked[key]) continue;
            blocked[key] = 1;
            chosen.push_back(cells[t]);
            rec(t + 1);
            chosen.pop_back();
            blocked[key] = 0;
        }
    };
    rec(0);
    return out;
}

} // namespace detail

/// k-cell subsets with no two cells in one column, annotated by row-count factorials.
inline std::vector<Strip> horizontal_strips(const Partition& mu, int k) {
    return detail::strips(mu, k, StripKind::Horizontal);
}

/// k-cell subsets with no two cells in one row, annotated by column-count factorials.
inline std::vector<Strip> vertical_strips(const Partition& mu, int k) {
    return detail::strips(mu, k, StripKind::Vertical);
}

inline Integer strip_sum(const std::vector<Strip>& strips) {
    Integer s = 0;
    for (const auto& st : strips) s += st.annotation;
    return s;
}

/// Sum over i_1 < ... < i_k of (v_{i_1}+k-1)(v_{i_2}+k-2)...(v_{i_k}).
inline Integer e_star_eval(int k, const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (k < 0 || k > n) throw DomainError("e* index k=" + std::to_string(k) + " outside 0..n=" + std::to_string(n));
    Integer total = 0;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            Integer t = 1;
            for (int j = 0; j < k; ++j) t *= values[idx[j]] + (k - 1 - j);
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

/// Sum over i_1 <= ... <= i_k of (v_{i_1}-k+1)(v_{i_2}-k+2)...(v_{i_k}).
inline Integer h_star_eval(int k, const std::vector<int>& values) {
    if (k < 0) throw DomainError("h* index must be nonnegative");
    const int n = static_cast<int>(values.size());
    Integer total = 0;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            Integer t = 1;
            for (int j = 0; j < k; ++j) t *= values[idx[j]] - (k - 1 - j);
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

/// Product over cycle maxima j of sigma of the conjugate part mu~_j (1-based, zero past the end).
inline Integer gamma_statistic(const Partition& mu, const Permutation& sigma) {
    const Partition c = conjugate(mu);
    Integer g = 1;
    for (int j : sigma.cycle_maxima()) {
        if (j < 1) throw Error("permutation support indices are 1-based");
        g *= c[j - 1];
    }
    return g;
}

/// Double sum of gamma statistics over k-subsets of {1..n} and their permutations.
inline Integer gamma_double_sum(const Partition& mu, int k, int n) {
    Integer total = 0;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(idx.size()) == k) {
            for (const auto& sigma : all_permutations(idx)) total += gamma_statistic(mu, sigma);
            return;
        }
        for (int i = from; i <= n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(1);
    return total;
}

/// Falling factorial y (y-1) ... (y-m+1).
inline Integer falling_factorial(const Integer& y, int m) {
    Integer r = 1;
    for (int t = 0; t < m; ++t) r *= y - t;
    return r;
}

/// Shifted Schur evaluation det[(v_i+n-i)_{nu_j+n-j}] / det[(v_i+n-i)_{n-j}] at an integer point
/// whose shifted coordinates v_i + n - i are pairwise distinct (true at partitions).
inline Rational shifted_schur_eval(const Partition& nu, const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (nu.length() > n) return 0;
    Matrix num(n, std::vector<Rational>(n)), den(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Integer y = values[i] + n - 1 - i;
            num[i][j] = Rational(falling_factorial(y, nu[j] + n - 1 - j));
            den[i][j] = Rational(falling_factorial(y, n - 1 - j));
        }
    const Rational d = determinant(den);
    if (d == 0) throw DomainError("shifted coordinates are not distinct at this point");
    return determinant(num) / d;
}

/// Generating polynomial of cycle-maximum indicators over all permutations of {1..n}.
inline Polynomial wilf_polynomial(int n) {
    if (n < 1) throw Error("wilf_polynomial needs n >= 1");
    std::vector<int> support(n);
    for (int i = 0; i < n; ++i) support[i] = i + 1;
    Polynomial w(n);
    for (const auto& sigma : all_permutations(support)) {
        Exponents e(n, 0);
        for (int j : sigma.cycle_maxima()) e[j - 1] = 1;
        w.add_term(e, 1);
    }
    return w;
}

} // namespace capelli
