#pragma once

// Exhaustive enumeration of maximum independent sets in P_t(n).
//
// The vertex set is covered by the right cosets Kg of a clique subgroup K
// (the cyclic Latin square for t = 0, AGL(1,n) for t = 1 when n is a
// supported prime power). An independent set meets each coset at most once,
// so the search decides coset by coset: take one surviving vertex or none.
// The number of undecided cosets that still have a candidate bounds the
// remaining gain; branches that cannot reach the incumbent size are cut.
// Cosets are chosen smallest-domain first after forward checking.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <thread>
#include <vector>

#include "ekr/cliques.hpp"
#include "ekr/graphs.hpp"

namespace ekr {

struct IndependentSetSearch {
    int n = 0;
    int t = 0;
    std::size_t alpha = 0;
    std::size_t omega = 0;         // size of the covering clique
    std::size_t cover_cliques = 0; // number of cosets, an upper bound on alpha
    bool tight = false;            // alpha · omega == n!
    std::vector<std::vector<Permutation>> sets;  // every maximum set, each sorted; list sorted
    std::uint64_t nodes = 0;
};

inline int max_search_degree(int t) { return t == 0 ? 6 : 5; }

namespace detail {

class CosetSearch {
public:
    CosetSearch(const PermutationGraph& graph, const std::vector<Permutation>& clique_group, std::size_t lower_bound)
        : graph_(graph), best_(lower_bound) {
        const auto& g = graph.group();
        const std::size_t v = g.order();
        std::vector<std::size_t> k_ranks;
        for (const auto& p : clique_group) k_ranks.push_back(g.rank_of(p));
        coset_of_.assign(v, SIZE_MAX);
        slot_of_.assign(v, 0);
        for (std::size_t r = 0; r < v; ++r) {
            if (coset_of_[r] != SIZE_MAX) continue;
            std::vector<std::size_t> members;
            for (auto k : k_ranks) members.push_back(g.product(k, r));
            std::sort(members.begin(), members.end());
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (coset_of_[members[i]] != SIZE_MAX) throw InvariantViolation("CosetSearch: clique is not a subgroup");
                coset_of_[members[i]] = cosets_.size();
                slot_of_[members[i]] = static_cast<std::uint32_t>(i);
            }
            cosets_.push_back(std::move(members));
        }
        for (const auto& c : cosets_)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    if (!graph.adjacent(c[i], c[j])) throw InvariantViolation("CosetSearch: coset is not a clique");
        neighbors_.resize(v);
        for (std::size_t r = 0; r < v; ++r) neighbors_[r] = graph.neighbors(r);
    }

    std::size_t coset_count() const { return cosets_.size(); }
    std::size_t clique_size() const { return cosets_.front().size(); }

    using Domains = std::vector<std::uint32_t>;

    Domains initial() const {
        Domains d(cosets_.size());
        for (std::size_t c = 0; c < cosets_.size(); ++c)
            d[c] = cosets_[c].size() == 32 ? ~0u : ((1u << cosets_[c].size()) - 1);
        return d;
    }

    // The root branching coset and its options (vertex slots, then -1 = skip).
    std::pair<std::size_t, std::vector<int>> root_options(const Domains& d) const {
        const std::size_t c = pick(d);
        std::vector<int> opts;
        for (int s = 0; s < 32; ++s)
            if (d[c] >> s & 1u) opts.push_back(s);
        opts.push_back(-1);
        return {c, opts};
    }

    void run_option(Domains d, std::size_t c, int slot) {
        std::vector<std::size_t> chosen;
        if (slot >= 0) {
            choose(d, c, static_cast<std::size_t>(slot), chosen);
        } else {
            d[c] = 0;
        }
        dfs(d, chosen);
    }

    std::size_t best() const { return best_; }
    std::vector<std::vector<std::size_t>>& solutions() { return solutions_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t pick(const Domains& d) const {
        std::size_t best_c = SIZE_MAX;
        int best_pop = 33;
        for (std::size_t c = 0; c < d.size(); ++c) {
            const int pop = std::popcount(d[c]);
            if (pop > 0 && pop < best_pop) {
                best_pop = pop;
                best_c = c;
            }
        }
        return best_c;
    }

    void choose(Domains& d, std::size_t c, std::size_t slot, std::vector<std::size_t>& chosen) const {
        const std::size_t v = cosets_[c][slot];
        d[c] = 0;
        for (auto u : neighbors_[v]) d[coset_of_[u]] &= ~(1u << slot_of_[u]);
        chosen.push_back(v);
    }

    void dfs(const Domains& d, std::vector<std::size_t>& chosen) {
        ++nodes_;
        std::size_t open = 0;
        for (auto m : d) open += (m != 0);
        if (chosen.size() + open < best_) return;
        if (open == 0) {
            if (chosen.size() > best_) {
                best_ = chosen.size();
                solutions_.clear();
            }
            auto s = chosen;
            std::sort(s.begin(), s.end());
            solutions_.push_back(std::move(s));
            return;
        }
        const std::size_t c = pick(d);
        for (int s = 0; s < 32; ++s) {
            if (!(d[c] >> s & 1u)) continue;
            Domains next = d;
            choose(next, c, static_cast<std::size_t>(s), chosen);
            dfs(next, chosen);
            chosen.pop_back();
        }
        if (chosen.size() + open - 1 >= best_) {
            Domains next = d;
            next[c] = 0;
            dfs(next, chosen);
        }
    }

    const PermutationGraph& graph_;
    std::vector<std::vector<std::size_t>> cosets_;
    std::vector<std::size_t> coset_of_;
    std::vector<std::uint32_t> slot_of_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::size_t best_;
    std::vector<std::vector<std::size_t>> solutions_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Clique subgroup used for the coset cover of P_t(n).
inline CliqueCertificate covering_clique(int n, int t) {
    if (t == 1 && SmallField::supported(n)) return affine_clique(n);
    return latin_clique(n);
}

/// Exact α(P_t(n)) and the complete list of maximum independent sets.
/// `workers` > 1 splits the root branches across threads; the result does
/// not depend on the worker count.
inline IndependentSetSearch max_independent_sets(int n, int t = 0, unsigned workers = 1) {
    if (n < 2 || n > max_search_degree(t))
        throw DegreeError("max_independent_sets: exhaustive search supports 2 <= n <= " +
                          std::to_string(max_search_degree(t)) + " for t = " + std::to_string(t));
    const PermutationGraph graph(SymmetricGroup::make(n), t);
    const auto cover = covering_clique(n, t);

    // S_A with |A| = t+1 is independent: a starting incumbent.
    const std::size_t lower = static_cast<std::size_t>(factorial_u64(static_cast<unsigned>(n - t - 1)));
    detail::CosetSearch prototype(graph, cover.members, lower);
    const auto root = prototype.root_options(prototype.initial());

    std::vector<detail::CosetSearch> parts(root.second.size(), prototype);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < parts.size(); i = next++)
            parts[i].run_option(parts[i].initial(), root.first, root.second[i]);
    };
    workers = std::max(1u, workers);
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    IndependentSetSearch out;
    out.n = n;
    out.t = t;
    out.omega = prototype.clique_size();
    out.cover_cliques = prototype.coset_count();
    for (auto& p : parts) {
        out.alpha = std::max(out.alpha, p.best());
        out.nodes += p.nodes();
    }
    std::vector<std::vector<std::size_t>> ranks;
    for (auto& p : parts)
        if (p.best() == out.alpha)
            for (auto& s : p.solutions())
                if (s.size() == out.alpha) ranks.push_back(s);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (const auto& s : ranks) {
        std::vector<Permutation> set;
        for (auto r : s) set.push_back(graph.group().element(r));
        out.sets.push_back(std::move(set));
    }
    out.tight = BigInt(out.alpha) * BigInt(out.omega) == factorial(static_cast<unsigned>(n));
    return out;
}

}  // namespace ekr
