#pragma once

// Permutations, integer partitions, cycle types and conjugacy-class counting
// for the symmetric group S(n). Points are 1-based throughout.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ekr/exact.hpp"

namespace ekr {

class Permutation {
public:
    Permutation() = default;

    /// One-line notation: images[i-1] = π(i). Throws InputError unless the
    /// images form a bijection of {1,…,n}.
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        if (images_.empty()) throw InputError("Permutation: degree must be at least 1");
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
                throw InputError("Permutation: images are not a bijection of {1..n}");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }
    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[i] != i + 1) return false;
        return true;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

inline void require_same_degree(const Permutation& p, const Permutation& q, const char* what) {
    if (p.degree() != q.degree())
        throw InputError(std::string(what) + ": degree mismatch (" + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()) + ")");
}

/// (p∘q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    require_same_degree(p, q, "compose");
    std::vector<int> im(p.degree());
    for (int i = 1; i <= p.degree(); ++i) im[i - 1] = p(q(i));
    return Permutation(std::move(im));
}

inline Permutation inverse(const Permutation& p) {
    std::vector<int> im(p.degree());
    for (int i = 1; i <= p.degree(); ++i) im[p(i) - 1] = i;
    return Permutation(std::move(im));
}

inline int fixed_points(const Permutation& p) {
    int c = 0;
    for (int i = 1; i <= p.degree(); ++i) c += (p(i) == i);
    return c;
}

/// |{i : p(i) = q(i)}|; equals fixed_points(inverse(p)∘q).
inline int agreements(const Permutation& p, const Permutation& q) {
    require_same_degree(p, q, "agreements");
    int c = 0;
    for (int i = 1; i <= p.degree(); ++i) c += (p(i) == q(i));
    return c;
}

/// +1 for even permutations, -1 for odd.
inline int sign(const Permutation& p) {
    std::vector<bool> seen(p.degree() + 1, false);
    int s = 1;
    for (int i = 1; i <= p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

// Lexicographic rank on one-line notation via the Lehmer code.
inline std::uint64_t rank_permutation(const Permutation& p) {
    const int n = p.degree();
    if (n > 20) throw DegreeError("rank_permutation: degree above 20");
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) smaller += (p.images()[j] < p.images()[i]);
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

inline Permutation unrank_permutation(std::uint64_t r, int n) {
    if (n < 1 || n > 20) throw DegreeError("unrank_permutation: degree must be in [1, 20]");
    if (r >= factorial_u64(n)) throw DegreeError("unrank_permutation: rank out of range");
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[i] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) {
        im[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return Permutation(std::move(im));
}

class IntegerPartition {
public:
    IntegerPartition() = default;

    explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw InputError("IntegerPartition: no parts");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw InputError("IntegerPartition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw InputError("IntegerPartition: parts must be nonincreasing");
        }
        n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int depth() const { return n_ - parts_.front(); }
    int multiplicity(int part) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }
    /// [a, 1^b]
    bool is_hook() const { return parts_.size() < 2 || parts_[1] <= 1; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    bool operator==(const IntegerPartition& o) const { return parts_ == o.parts_; }
    bool operator<(const IntegerPartition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// Parses "[3,1,1]" or "3,1,1".
inline IntegerPartition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur += c;
            if (cur.size() > 9) throw InputError("parse_partition: part too large in '" + std::string(text) + "'");
        } else if (c == ',' || c == ']' || c == ' ') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (c != '[') {
            throw InputError("parse_partition: unexpected character in '" + std::string(text) + "'");
        }
    }
    if (!cur.empty()) parts.push_back(std::stoi(cur));
    return IntegerPartition(std::move(parts));
}

class CycleType {
public:
    CycleType() = default;
    explicit CycleType(IntegerPartition p) : partition_(std::move(p)) {}

    const IntegerPartition& partition() const { return partition_; }
    int n() const { return partition_.n(); }
    int fixed_points() const { return partition_.multiplicity(1); }
    bool is_derangement_class() const { return fixed_points() == 0; }
    bool is_identity_class() const { return partition_.parts().front() == 1; }
    std::string str() const { return partition_.str(); }

    bool operator==(const CycleType& o) const { return partition_ == o.partition_; }
    bool operator<(const CycleType& o) const { return partition_ < o.partition_; }

private:
    IntegerPartition partition_;
};

inline CycleType cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.degree() + 1, false);
    std::vector<int> lens;
    for (int i = 1; i <= p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return CycleType(IntegerPartition(std::move(lens)));
}

/// All partitions of n in reverse lexicographic order: [n] first, [1^n] last.
inline std::vector<IntegerPartition> partitions_of(int n) {
    if (n < 1) throw DegreeError("partitions_of: n must be positive");
    std::vector<IntegerPartition> out;
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // Next partition in reverse lex: strip trailing ones, decrement the
        // last part > 1, then refill greedily with that value.
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) break;
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > 0) {
            const int take = std::min(k, rest);
            a.push_back(take);
            rest -= take;
        }
    }
    return out;
}

/// n! / ∏_k k^{m_k} m_k!
inline BigInt class_size(const CycleType& t) {
    const auto& parts = t.partition().parts();
    BigInt centralizer = 1;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const auto m = static_cast<unsigned>(j - i);
        BigInt kpow = 1;
        for (unsigned r = 0; r < m; ++r) kpow *= parts[i];
        centralizer *= kpow * factorial(m);
        i = j;
    }
    return factorial(static_cast<unsigned>(t.n())) / centralizer;
}

/// d(n) = (n-1)(d(n-1) + d(n-2)), d(1) = 0, d(2) = 1.
inline BigInt derangement_count(int n) {
    if (n < 1) throw DegreeError("derangement_count: n must be positive");
    if (n == 1) return 0;
    BigInt prev = 0, cur = 1;  // d(1), d(2)
    for (int k = 3; k <= n; ++k) {
        BigInt next = BigInt(k - 1) * (cur + prev);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// The permutation (1,2,…,λ₁)(λ₁+1,…)… with the given cycle type.
inline Permutation class_representative(const CycleType& t) {
    std::vector<int> im(t.n());
    int start = 1;
    for (int len : t.partition().parts()) {
        for (int k = 0; k < len; ++k) im[start + k - 1] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(std::move(im));
}

struct ClassInfo {
    CycleType cycle_type;
    BigInt size;
    Permutation representative;
};

/// Conjugacy classes of S(n), ordered like partitions_of(n).
inline std::vector<ClassInfo> classes_of(int n) {
    std::vector<ClassInfo> out;
    for (auto& p : partitions_of(n)) {
        CycleType t(p);
        out.push_back({t, class_size(t), class_representative(t)});
    }
    return out;
}

// -- text formats -----------------------------------------------------------

/// "4,3,1,2"
inline std::string to_one_line(const Permutation& p) {
    std::string s;
    for (int i = 1; i <= p.degree(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(p(i));
    }
    return s;
}

/// "(1,4,2,3)"; fixed points omitted; identity prints as "()".
inline std::string to_cycle_string(const Permutation& p) {
    std::vector<bool> seen(p.degree() + 1, false);
    std::string s;
    for (int i = 1; i <= p.degree(); ++i) {
        if (seen[i] || p(i) == i) continue;
        s += "(";
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            if (j != i) s += ",";
            s += std::to_string(j);
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

inline std::vector<int> parse_int_list(std::string_view text, const char* what) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw InputError(std::string(what) + ": empty entry in '" + std::string(text) + "'");
        if (cur.size() > 9) throw InputError(std::string(what) + ": entry too large in '" + std::string(text) + "'");
        out.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            cur += c;
        } else if (c == ',') {
            flush();
        } else if (c != ' ' && c != '\t' && c != '\r') {
            throw InputError(std::string(what) + ": unexpected character in '" + std::string(text) + "'");
        }
    }
    flush();
    return out;
}

/// Comma-separated one-line images, e.g. "4,3,1,2".
inline Permutation parse_one_line(std::string_view text) {
    return Permutation(parse_int_list(text, "parse_one_line"));
}

/// Cycle notation such as "(1,4,2,3)" or "(1,2)(3,4)" for a given degree.
inline Permutation parse_cycles(std::string_view text, int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<bool> moved(n + 1, false);
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw InputError("parse_cycles: expected '(' in '" + std::string(text) + "'");
        const auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw InputError("parse_cycles: unbalanced parentheses");
        const auto body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        if (body.empty()) continue;
        const auto pts = parse_int_list(body, "parse_cycles");
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const int a = pts[k];
            if (a < 1 || a > n || moved[a]) throw InputError("parse_cycles: bad or repeated point");
            moved[a] = true;
            im[a - 1] = pts[(k + 1) % pts.size()];
        }
    }
    return Permutation(std::move(im));
}

/// Accepts either format: text starting with '(' is cycle notation.
inline Permutation parse_permutation(std::string_view text, int n_for_cycles) {
    const auto first = text.find_first_not_of(' ');
    if (first != std::string_view::npos && text[first] == '(') return parse_cycles(text, n_for_cycles);
    return parse_one_line(text);
}

}  // namespace ekr
