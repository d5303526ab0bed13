#pragma once

// Enumerated S(n): every element indexed by its lexicographic rank, with the
// conjugacy class of each element and of each quotient π⁻¹σ. This is the
// vertex set of every graph and the index set of every vector over S(n).

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "ekr/permgroup.hpp"

namespace ekr {

class SymmetricGroup {
public:
    static constexpr int kMaxDegree = 8;
    // The full n!×n! quotient-class table is cached up to this degree.
    static constexpr int kQuotientTableDegree = 7;

    explicit SymmetricGroup(int n) : n_(n) {
        if (n < 1 || n > kMaxDegree)
            throw DegreeError("SymmetricGroup: degree must be in [1, " + std::to_string(kMaxDegree) + "]");
        classes_ = classes_of(n);
        std::map<std::vector<int>, int> class_index;
        for (std::size_t c = 0; c < classes_.size(); ++c)
            class_index[classes_[c].cycle_type.partition().parts()] = static_cast<int>(c);

        order_ = factorial_u64(n);
        elements_.reserve(order_);
        class_of_.resize(order_);
        inverse_.resize(order_);
        // Lexicographic enumeration is the rank order.
        std::vector<int> im(n);
        std::iota(im.begin(), im.end(), 1);
        do {
            elements_.emplace_back(im);
        } while (std::next_permutation(im.begin(), im.end()));
        for (std::size_t i = 0; i < order_; ++i) {
            class_of_[i] = static_cast<std::uint8_t>(class_index.at(cycle_type(elements_[i]).partition().parts()));
            inverse_[i] = static_cast<std::uint32_t>(rank_permutation(inverse(elements_[i])));
        }
        class_members_.resize(classes_.size());
        for (std::size_t i = 0; i < order_; ++i) class_members_[class_of_[i]].push_back(static_cast<std::uint32_t>(i));
        identity_class_ = static_cast<int>(classes_.size()) - 1;
    }

    static std::shared_ptr<const SymmetricGroup> make(int n) { return std::make_shared<const SymmetricGroup>(n); }

    int degree() const { return n_; }
    std::size_t order() const { return order_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t rank) const { return elements_[rank]; }
    std::size_t rank_of(const Permutation& p) const {
        if (p.degree() != n_) throw InputError("SymmetricGroup::rank_of: degree mismatch");
        return static_cast<std::size_t>(rank_permutation(p));
    }

    const std::vector<ClassInfo>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    int identity_class() const { return identity_class_; }
    int class_of(std::size_t rank) const { return class_of_[rank]; }
    std::size_t inverse_of(std::size_t rank) const { return inverse_[rank]; }
    const std::vector<std::uint32_t>& class_members(int c) const { return class_members_[c]; }

    /// Rank of p∘q.
    std::size_t product(std::size_t p, std::size_t q) const {
        const auto& a = elements_[p].images();
        const auto& b = elements_[q].images();
        std::vector<int> im(n_);
        for (int i = 0; i < n_; ++i) im[i] = a[b[i] - 1];
        return static_cast<std::size_t>(rank_permutation(Permutation(std::move(im))));
    }

    /// Class index of π⁻¹σ, the relation between vertices π and σ in the
    /// conjugacy-class scheme.
    int quotient_class(std::size_t pi, std::size_t sigma) const {
        if (n_ <= kQuotientTableDegree) {
            ensure_quotient_table();
            return quotient_[pi * order_ + sigma];
        }
        return class_of_[product(inverse_[pi], sigma)];
    }

    /// Number of points where π and σ agree, read off the class of π⁻¹σ.
    int agreements(std::size_t pi, std::size_t sigma) const {
        return classes_[quotient_class(pi, sigma)].cycle_type.fixed_points();
    }

private:
    void ensure_quotient_table() const {
        std::call_once(*quotient_once_, [this] {
            // Cycle types encoded as Σ_k m_k (n+1)^(k-1), m_k = number of k-cycles.
            std::size_t codes = 1;
            for (int k = 0; k < n_; ++k) codes *= static_cast<std::size_t>(n_ + 1);
            std::vector<std::uint8_t> class_by_code(codes, 0);
            for (std::size_t c = 0; c < classes_.size(); ++c) {
                std::size_t code = 0;
                for (int len : classes_[c].cycle_type.partition().parts()) code += power(len - 1);
                class_by_code[code] = static_cast<std::uint8_t>(c);
            }
            quotient_.resize(order_ * order_);
            std::vector<int> im(n_);
            for (std::size_t p = 0; p < order_; ++p) {
                const auto& inv = elements_[inverse_[p]].images();
                for (std::size_t s = 0; s < order_; ++s) {
                    const auto& b = elements_[s].images();
                    for (int i = 0; i < n_; ++i) im[i] = inv[b[i] - 1];
                    std::uint32_t seen = 0;
                    std::size_t code = 0;
                    for (int i = 0; i < n_; ++i) {
                        if (seen & (1u << i)) continue;
                        int len = 0;
                        for (int j = i; !(seen & (1u << j)); j = im[j] - 1) {
                            seen |= 1u << j;
                            ++len;
                        }
                        code += power(len - 1);
                    }
                    quotient_[p * order_ + s] = class_by_code[code];
                }
            }
        });
    }

    std::size_t power(int e) const {
        std::size_t r = 1;
        for (int k = 0; k < e; ++k) r *= static_cast<std::size_t>(n_ + 1);
        return r;
    }

    int n_;
    std::size_t order_ = 0;
    std::vector<Permutation> elements_;
    std::vector<ClassInfo> classes_;
    std::vector<std::uint8_t> class_of_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::vector<std::uint32_t>> class_members_;
    int identity_class_ = 0;
    mutable std::vector<std::uint8_t> quotient_;
    mutable std::unique_ptr<std::once_flag> quotient_once_ = std::make_unique<std::once_flag>();
};

}  // namespace ekr
