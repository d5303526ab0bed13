#pragma once

// Brute-force reference computations, deliberately independent of the
// library's algorithms. Plain vectors and machine integers only; the
// library types appear solely at the comparison sites in the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // one-line, 1-based images

inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int fixed(const Perm& p) {
    int f = 0;
    for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i) + 1;
    return f;
}

inline int agree(const Perm& p, const Perm& q) {
    int a = 0;
    for (std::size_t i = 0; i < p.size(); ++i) a += p[i] == q[i];
    return a;
}

inline std::int64_t derangements(int n) {
    std::int64_t c = 0;
    for (const auto& p : all_perms(n)) c += fixed(p) == 0;
    return c;
}

/// Cycle lengths, nonincreasing.
inline std::vector<int> cycle_lengths(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j] - 1) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Number of permutations of each cycle type, by enumeration.
inline std::map<std::vector<int>, std::int64_t> class_counts(int n) {
    std::map<std::vector<int>, std::int64_t> out;
    for (const auto& p : all_perms(n)) ++out[cycle_lengths(p)];
    return out;
}

/// Partitions in reverse lexicographic order, generated by a different
/// recursion from the library's (largest first part first).
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// Permutation character of S(n) on tabloids of shape mu, at a permutation
/// with the given cycle lengths: the number of ways to place whole cycles in
/// rows so that row i receives mu[i] points.
inline std::int64_t tabloid_character(const std::vector<int>& mu, const std::vector<int>& cycles) {
    std::vector<int> room = mu;
    std::function<std::int64_t(std::size_t)> rec = [&](std::size_t c) -> std::int64_t {
        if (c == cycles.size()) return 1;
        std::int64_t total = 0;
        for (auto& r : room) {
            if (r < cycles[c]) continue;
            r -= cycles[c];
            total += rec(c + 1);
            r += cycles[c];
        }
        return total;
    };
    return rec(0);
}

/// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and content mu.
inline std::int64_t kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
    const int rows = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lambda[r], 0);
    std::vector<int> left = mu;
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::function<std::int64_t(std::size_t)> rec = [&](std::size_t k) -> std::int64_t {
        if (k == cells.size()) return 1;
        const auto [r, c] = cells[k];
        std::int64_t total = 0;
        for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
            if (left[v - 1] == 0) continue;
            if (c > 0 && t[r][c - 1] > v) continue;   // rows weakly increase
            if (r > 0 && t[r - 1][c] >= v) continue;  // columns strictly increase
            t[r][c] = v;
            --left[v - 1];
            total += rec(k + 1);
            ++left[v - 1];
        }
        t[r][c] = 0;
        return total;
    };
    return rec(0);
}

/// Character table by unitriangular inversion of tabloid characters:
/// ξ^μ = Σ_λ K_{λμ} χ^λ with K_{λλ} = 1 and K_{λμ} = 0 unless λ precedes μ.
/// Rows and columns in reverse lexicographic order.
inline std::vector<std::vector<std::int64_t>> character_table(int n) {
    const auto parts = partitions(n);
    const std::size_t k = parts.size();
    std::vector<std::vector<std::int64_t>> xi(k, std::vector<std::int64_t>(k)), chi = xi;
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t c = 0; c < k; ++c) xi[m][c] = tabloid_character(parts[m], parts[c]);
    for (std::size_t m = 0; m < k; ++m)
        for (std::size_t c = 0; c < k; ++c) {
            std::int64_t v = xi[m][c];
            for (std::size_t l = 0; l < m; ++l) v -= kostka(parts[l], parts[m]) * chi[l][c];
            chi[m][c] = v;
        }
    return chi;
}

/// Standard Young tableaux of shape lambda (= χ_λ(1)).
inline std::int64_t standard_tableaux(const std::vector<int>& lambda) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    return kostka(lambda, std::vector<int>(n, 1));
}

/// Rank of p in lexicographic order by scanning all permutations.
inline std::uint64_t lex_rank(const Perm& p) {
    const auto all = all_perms(static_cast<int>(p.size()));
    return static_cast<std::uint64_t>(std::find(all.begin(), all.end(), p) - all.begin());
}

/// Maximum independent sets of a small graph by exhaustive Bron–Kerbosch
/// on the complement; returns (alpha, all maximum sets as sorted index lists).
inline std::pair<std::size_t, std::vector<std::vector<std::size_t>>> max_independent_sets(
    const std::vector<std::vector<bool>>& adj) {
    const std::size_t v = adj.size();
    std::size_t best = 0;
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> r;
    std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> bk = [&](std::vector<std::size_t> p,
                                                                                 std::vector<std::size_t> x) {
        if (p.empty() && x.empty()) {
            if (r.size() > best) {
                best = r.size();
                sets.clear();
            }
            if (r.size() == best) {
                auto s = r;
                std::sort(s.begin(), s.end());
                sets.push_back(s);
            }
            return;
        }
        if (r.size() + p.size() < best) return;
        while (!p.empty()) {
            const auto u = p.back();
            p.pop_back();
            std::vector<std::size_t> np, nx;
            for (auto w : p)
                if (!adj[u][w]) np.push_back(w);
            for (auto w : x)
                if (!adj[u][w]) nx.push_back(w);
            r.push_back(u);
            bk(np, nx);
            r.pop_back();
            x.push_back(u);
        }
    };
    std::vector<std::size_t> all(v);
    std::iota(all.begin(), all.end(), 0);
    bk(all, {});
    std::sort(sets.begin(), sets.end());
    return {best, sets};
}

}  // namespace oracle
