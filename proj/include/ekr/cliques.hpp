#pragma once

// Explicit cliques in P_t(n): rows of Latin squares, Hamiltonian
// decompositions of the complete digraph, and sharply 2-transitive affine
// groups over small finite fields.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "ekr/chartab.hpp"
#include "ekr/exact.hpp"
#include "ekr/permgroup.hpp"

namespace ekr {

enum class CliqueConstruction { latin, odd_latin, cycles, affine, user };

inline std::string to_string(CliqueConstruction c) {
    switch (c) {
        case CliqueConstruction::latin: return "latin";
        case CliqueConstruction::odd_latin: return "odd-latin";
        case CliqueConstruction::cycles: return "cycles";
        case CliqueConstruction::affine: return "affine";
        case CliqueConstruction::user: return "user";
    }
    return "user";
}

struct CliqueCertificate {
    std::vector<Permutation> members;
    CliqueConstruction construction = CliqueConstruction::user;
    int t = 0;  // members pairwise agree on at most t points
    bool validated = false;
};

inline bool is_clique(const std::vector<Permutation>& members, int t) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (agreements(members[i], members[j]) > t) return false;
    return true;
}

inline CliqueCertificate certify(std::vector<Permutation> members, CliqueConstruction how, int t) {
    CliqueCertificate c{std::move(members), how, t, false};
    c.validated = is_clique(c.members, t);
    if (!c.validated) throw InvariantViolation("clique construction '" + to_string(how) + "' produced a non-clique");
    return c;
}

/// Rows of the cyclic Latin square, r_k(i) = i + k (mod n). A subgroup of S(n).
inline CliqueCertificate latin_clique(int n) {
    if (n < 1) throw DegreeError("latin_clique: n must be positive");
    std::vector<Permutation> rows;
    for (int k = 0; k < n; ++k) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) im[i] = (i + k) % n + 1;
        rows.emplace_back(std::move(im));
    }
    return certify(std::move(rows), CliqueConstruction::latin, 0);
}

namespace detail {

// Kuhn's augmenting paths on the column → symbol availability graph.
inline bool augment(int col, const std::vector<std::vector<bool>>& allowed, std::vector<int>& symbol_owner,
                    std::vector<bool>& visited) {
    const int n = static_cast<int>(allowed.size());
    for (int s = 0; s < n; ++s) {
        if (!allowed[col][s] || visited[s]) continue;
        visited[s] = true;
        if (symbol_owner[s] < 0 || augment(symbol_owner[s], allowed, symbol_owner, visited)) {
            symbol_owner[s] = col;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Completes a k×n Latin rectangle (rows given in one-line form) to an n×n
/// Latin square, adding one row at a time as a perfect matching between
/// columns and the symbols still missing from them.
inline std::vector<std::vector<int>> complete_latin_rectangle(std::vector<std::vector<int>> rows, int n) {
    std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, true));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw InputError("complete_latin_rectangle: row of wrong length");
        for (int c = 0; c < n; ++c) {
            if (!allowed[c][row[c] - 1]) throw InputError("complete_latin_rectangle: repeated symbol in a column");
            allowed[c][row[c] - 1] = false;
        }
    }
    while (static_cast<int>(rows.size()) < n) {
        std::vector<int> owner(n, -1);
        for (int c = 0; c < n; ++c) {
            std::vector<bool> visited(n, false);
            if (!detail::augment(c, allowed, owner, visited))
                throw InvariantViolation("complete_latin_rectangle: no perfect matching");
        }
        std::vector<int> row(n);
        for (int s = 0; s < n; ++s) row[owner[s]] = s + 1;
        for (int c = 0; c < n; ++c) allowed[c][row[c] - 1] = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Latin square with rows (1,…,n) and (2,1,n,3,4,…,n-1), completed by
/// matchings; its rows form an n-clique containing one odd permutation.
inline CliqueCertificate odd_n_latin_clique(int n) {
    if (n < 5 || n % 2 == 0) throw UnsupportedConstruction("odd_n_latin_clique: requires odd n >= 5");
    std::vector<int> first(n), second(n);
    std::iota(first.begin(), first.end(), 1);
    second[0] = 2;
    second[1] = 1;
    second[2] = n;
    for (int i = 3; i < n; ++i) second[i] = i;
    std::vector<Permutation> members;
    for (auto& row : complete_latin_rectangle({first, second}, n)) members.emplace_back(std::move(row));
    return certify(std::move(members), CliqueConstruction::odd_latin, 0);
}

namespace detail {

// Permutation mapping each vertex of a directed Hamiltonian cycle (0-based
// vertex list) to its successor.
inline Permutation cycle_permutation(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> im(n);
    for (int k = 0; k < n; ++k) im[order[k]] = order[(k + 1) % n] + 1;
    return Permutation(std::move(im));
}

// Walecki: for n = 2m+1, the zigzags k, k+1, k-1, k+2, … on Z_2m closed
// through the extra vertex decompose K_n into m Hamiltonian cycles; each is
// used in both directions.
inline std::vector<Permutation> walecki_cycles(int n) {
    const int m = (n - 1) / 2;
    const int ring = 2 * m;
    std::vector<Permutation> out;
    for (int k = 0; k < m; ++k) {
        std::vector<int> order{ring};  // the extra vertex, point n
        for (int j = 0; j < ring; ++j) {
            const int off = (j % 2 == 1) ? (j + 1) / 2 : -(j / 2);
            order.push_back(((k + off) % ring + ring) % ring);
        }
        out.push_back(cycle_permutation(order));
        std::reverse(order.begin(), order.end());
        out.push_back(cycle_permutation(order));
    }
    return out;
}

class DigraphDecompositionSearch {
public:
    DigraphDecompositionSearch(int n, std::uint64_t seed) : n_(n), rng_(seed), used_(n * n, false) {}

    // Returns true and fills cycles_ when a full decomposition is found
    // within the node budget.
    bool run(long budget) {
        budget_ = budget;
        return next_cycle(0);
    }

    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

private:
    bool next_cycle(int index) {
        if (index == n_ - 2) return close_last();
        std::vector<int> path{0};
        std::vector<bool> on_path(n_, false);
        on_path[0] = true;
        return extend(index, path, on_path);
    }

    // The remaining arcs give every vertex out- and in-degree one; they form
    // the last cycle only if that permutation is a single n-cycle.
    bool close_last() {
        std::vector<int> next(n_, -1);
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (a != b && !used_[a * n_ + b]) next[a] = b;
        std::vector<int> order{0};
        for (int v = next[0]; v != 0; v = next[v]) {
            if (v < 0 || static_cast<int>(order.size()) > n_) return false;
            order.push_back(v);
        }
        if (static_cast<int>(order.size()) != n_) return false;
        cycles_.push_back(order);
        return true;
    }

    bool extend(int index, std::vector<int>& path, std::vector<bool>& on_path) {
        if (--budget_ < 0) return false;
        const int last = path.back();
        if (static_cast<int>(path.size()) == n_) {
            if (used_[last * n_ + 0]) return false;
            set_arcs(path, true);
            cycles_.push_back(path);
            if (next_cycle(index + 1)) return true;
            cycles_.pop_back();
            set_arcs(path, false);
            return false;
        }
        std::vector<int> candidates;
        for (int v = 1; v < n_; ++v)
            if (!on_path[v] && !used_[last * n_ + v]) candidates.push_back(v);
        std::shuffle(candidates.begin(), candidates.end(), rng_);
        for (int v : candidates) {
            path.push_back(v);
            on_path[v] = true;
            if (extend(index, path, on_path)) return true;
            on_path[v] = false;
            path.pop_back();
            if (budget_ < 0) return false;
        }
        return false;
    }

    void set_arcs(const std::vector<int>& cycle, bool value) {
        for (std::size_t k = 0; k < cycle.size(); ++k) used_[cycle[k] * n_ + cycle[(k + 1) % cycle.size()]] = value;
    }

    int n_;
    std::mt19937_64 rng_;
    std::vector<bool> used_;
    std::vector<std::vector<int>> cycles_;
    long budget_ = 0;
};

}  // namespace detail

inline constexpr int kMaxEvenCycleDecompositionDegree = 10;

/// True iff the non-identity members are n-cycles whose arcs i → π(i)
/// partition the n(n-1) arcs of the complete digraph.
inline bool is_hamiltonian_decomposition(const std::vector<Permutation>& cycles) {
    if (cycles.empty()) return false;
    const int n = cycles.front().degree();
    if (static_cast<int>(cycles.size()) != n - 1) return false;
    std::vector<bool> arc(n * n, false);
    for (const auto& p : cycles) {
        if (cycle_type(p).partition().parts() != std::vector<int>{n}) return false;
        for (int i = 1; i <= n; ++i) {
            auto a = arc[(i - 1) * n + (p(i) - 1)];
            if (a) return false;
            a = true;
        }
    }
    return true;
}

/// The identity together with n-1 arc-disjoint directed Hamiltonian cycles
/// of the complete digraph on n vertices, each read as an n-cycle.
inline CliqueCertificate cycle_decomposition_clique(int n) {
    if (n < 3) throw DegreeError("cycle_decomposition_clique: requires n >= 3");
    if (n == 4 || n == 6)
        throw UnsupportedConstruction("cycle_decomposition_clique: the complete digraph on " + std::to_string(n) +
                                      " vertices has no Hamiltonian decomposition");
    std::vector<Permutation> cycles;
    if (n % 2 == 1) {
        cycles = detail::walecki_cycles(n);
    } else {
        if (n > kMaxEvenCycleDecompositionDegree)
            throw UnsupportedConstruction("cycle_decomposition_clique: even n above " +
                                          std::to_string(kMaxEvenCycleDecompositionDegree) + " is not supported");
        bool found = false;
        for (std::uint64_t seed = 1; seed <= 200 && !found; ++seed) {
            detail::DigraphDecompositionSearch search(n, seed);
            if (search.run(200000)) {
                for (const auto& c : search.cycles()) cycles.push_back(detail::cycle_permutation(c));
                found = true;
            }
        }
        if (!found) throw UnsupportedConstruction("cycle_decomposition_clique: search budget exhausted");
    }
    if (!is_hamiltonian_decomposition(cycles))
        throw InvariantViolation("cycle_decomposition_clique: cycles are not an arc decomposition");
    std::vector<Permutation> members{Permutation::identity(n)};
    members.insert(members.end(), cycles.begin(), cycles.end());
    return certify(std::move(members), CliqueConstruction::cycles, 0);
}

// -- finite fields of order q ≤ 13 -----------------------------------------

/// Addition and multiplication tables of GF(q); elements 0..q-1 encode
/// polynomials over GF(p) by their base-p digits.
class SmallField {
public:
    static bool supported(int q) {
        for (int s : {2, 3, 4, 5, 7, 8, 9, 11, 13})
            if (s == q) return true;
        return false;
    }

    explicit SmallField(int q) : q_(q) {
        if (!supported(q)) throw UnsupportedConstruction("affine_clique: unsupported field order " + std::to_string(q));
        int p = q, k = 1;
        std::vector<int> modulus;  // low-to-high coefficients of the monic irreducible polynomial
        if (q == 4) { p = 2; k = 2; modulus = {1, 1, 1}; }      // x^2 + x + 1
        else if (q == 8) { p = 2; k = 3; modulus = {1, 1, 0, 1}; }  // x^3 + x + 1
        else if (q == 9) { p = 3; k = 2; modulus = {1, 0, 1}; }  // x^2 + 1
        add_.assign(q * q, 0);
        mul_.assign(q * q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                const auto da = digits(a, p, k), db = digits(b, p, k);
                std::vector<int> sum(k), prod(2 * k - 1, 0);
                for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int d = 2 * k - 2; d >= k; --d) {
                    const int c = prod[d];
                    if (c == 0) continue;
                    for (int i = 0; i <= k; ++i) prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p) % p;
                }
                prod.resize(k);
                add_[a * q + b] = undigits(sum, p);
                mul_[a * q + b] = undigits(prod, p);
            }
    }

    int order() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }

private:
    static std::vector<int> digits(int v, int p, int k) {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i, v /= p) d[i] = v % p;
        return d;
    }
    static int undigits(const std::vector<int>& d, int p) {
        int v = 0;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
        return v;
    }

    int q_;
    std::vector<int> add_, mul_;
};

/// AGL(1, q): the maps x ↦ ax + b (a ≠ 0) on the q field elements, labelled
/// 1..q. Sharply 2-transitive, so a clique of size q(q-1) in P_1(q).
inline CliqueCertificate affine_clique(int q) {
    const SmallField f(q);
    std::vector<Permutation> members;
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            std::vector<int> im(q);
            for (int x = 0; x < q; ++x) im[x] = f.add(f.mul(a, x), b) + 1;
            members.emplace_back(std::move(im));
        }
    std::sort(members.begin(), members.end());
    return certify(std::move(members), CliqueConstruction::affine, 1);
}

/// χ_λ(T) = Σ_{x ∈ T} χ_λ(x).
inline BigInt character_sum(const IntegerPartition& lambda, const std::vector<Permutation>& set) {
    BigInt s = 0;
    for (const auto& x : set) s += character_value(lambda, cycle_type(x));
    return s;
}

}  // namespace ekr
