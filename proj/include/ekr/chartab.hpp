#pragma once

// Irreducible characters of S(n). Values come from the Murnaghan–Nakayama
// rule on beta-sets (abacus positions), memoized on the pair
// (remaining shape, remaining cycle multiset); dimensions from hook lengths.

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ekr/exact.hpp"
#include "ekr/permgroup.hpp"

namespace ekr {

inline constexpr int kMaxCharacterDegree = 12;

inline void require_character_degree(int n) {
    if (n < 1 || n > kMaxCharacterDegree)
        throw DegreeError("character tables are supported for 1 <= n <= " + std::to_string(kMaxCharacterDegree) +
                          " (got " + std::to_string(n) + ")");
}

/// χ_λ(1) = n! / ∏ hook lengths.
inline BigInt dimension(const IntegerPartition& lambda) {
    const auto& rows = lambda.parts();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            const int arm = rows[i] - j - 1;
            int leg = 0;
            for (int k = i + 1; k < lambda.length() && rows[k] > j; ++k) ++leg;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(static_cast<unsigned>(lambda.n())) / hooks;
}

namespace detail {

// Cache of χ on (shape, cycle lengths) pairs. The cycle list is kept sorted
// nonincreasing so equal multisets share an entry.
class MurnaghanNakayama {
public:
    long long value(const std::vector<int>& shape, const std::vector<int>& cycles) {
        if (cycles.empty()) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, cycles);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int k = cycles.front();
        std::vector<int> rest(cycles.begin() + 1, cycles.end());

        // Beta-set: β_i = λ_i + (ℓ - 1 - i), strictly decreasing.
        const int len = static_cast<int>(shape.size());
        std::vector<int> beta(len);
        for (int i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);

        long long total = 0;
        for (int i = 0; i < len; ++i) {
            const int target = beta[i] - k;
            if (target < 0) continue;
            bool occupied = false;
            int between = 0;
            for (int j = 0; j < len; ++j) {
                if (beta[j] == target) occupied = true;
                if (beta[j] > target && beta[j] < beta[i]) ++between;
            }
            if (occupied) continue;
            std::vector<int> moved = beta;
            moved[i] = target;
            std::sort(moved.rbegin(), moved.rend());
            std::vector<int> smaller;
            for (int j = 0; j < len; ++j) {
                const int part = moved[j] - (len - 1 - j);
                if (part > 0) smaller.push_back(part);
            }
            const long long sub = value(smaller, rest);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo_;
};

}  // namespace detail

/// χ_λ evaluated on the class with cycle type μ.
inline BigInt character_value(const IntegerPartition& lambda, const CycleType& mu) {
    if (lambda.n() != mu.n()) throw InputError("character_value: λ and μ have different degrees");
    require_character_degree(lambda.n());
    detail::MurnaghanNakayama mn;
    return mn.value(lambda.parts(), mu.partition().parts());
}

/// χ_λ on the class of n-cycles: (-1)^(leg length) on hooks, 0 otherwise.
inline BigInt n_cycle_character(const IntegerPartition& lambda) {
    return character_value(lambda, CycleType(IntegerPartition({lambda.n()})));
}

struct CharacterTable {
    int n = 0;
    std::vector<IntegerPartition> partitions;  // rows, reverse lexicographic
    std::vector<CycleType> cycle_types;        // columns, same order; identity class last
    std::vector<std::vector<BigInt>> values;

    const BigInt& at(std::size_t row, std::size_t col) const { return values[row][col]; }

    std::size_t row_of(const IntegerPartition& lambda) const {
        for (std::size_t i = 0; i < partitions.size(); ++i)
            if (partitions[i] == lambda) return i;
        throw InputError("CharacterTable: partition " + lambda.str() + " not of degree " + std::to_string(n));
    }
    std::size_t column_of(const CycleType& mu) const {
        for (std::size_t j = 0; j < cycle_types.size(); ++j)
            if (cycle_types[j] == mu) return j;
        throw InputError("CharacterTable: cycle type " + mu.str() + " not of degree " + std::to_string(n));
    }
    std::size_t identity_column() const { return cycle_types.size() - 1; }
    const BigInt& dimension(std::size_t row) const { return values[row][identity_column()]; }
};

inline CharacterTable character_table(int n) {
    require_character_degree(n);
    CharacterTable t;
    t.n = n;
    t.partitions = partitions_of(n);
    for (const auto& p : t.partitions) t.cycle_types.emplace_back(p);
    detail::MurnaghanNakayama mn;
    t.values.resize(t.partitions.size());
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        t.values[i].reserve(t.cycle_types.size());
        for (const auto& mu : t.cycle_types)
            t.values[i].emplace_back(mn.value(t.partitions[i].parts(), mu.partition().parts()));
    }
    return t;
}

/// CSV: two comment header lines, then a header row of cycle types and one
/// row per partition. Partition labels are quoted because they contain commas.
inline void write_csv(std::ostream& os, const CharacterTable& t) {
    os << "# character table of S(" << t.n << ")\n";
    os << "# rows: partitions lambda (reverse lexicographic); columns: cycle types mu\n";
    os << "lambda\\mu";
    for (const auto& mu : t.cycle_types) os << ",\"" << mu.str() << "\"";
    os << "\n";
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
        os << "\"" << t.partitions[i].str() << "\"";
        for (const auto& v : t.values[i]) os << "," << v.str();
        os << "\n";
    }
}

}  // namespace ekr
