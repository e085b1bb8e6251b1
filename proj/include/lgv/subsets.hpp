#ifndef LGV_SUBSETS_HPP
#define LGV_SUBSETS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgv {

/// A subset of [1..m] kept as a strictly increasing element list.
struct SubsetIndex {
    std::vector<int> elements; // strictly increasing, each in 1..ambient
    int ambient = 0;

    SubsetIndex() = default;
    SubsetIndex(std::vector<int> elems, int m) : elements(std::move(elems)), ambient(m) {
        if (m < 0) throw std::invalid_argument("SubsetIndex: negative ambient size");
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (elements[i] < 1 || elements[i] > m)
                throw std::invalid_argument("SubsetIndex: element " + std::to_string(elements[i]) +
                                            " outside [1.." + std::to_string(m) + "]");
            if (i > 0 && elements[i] <= elements[i - 1])
                throw std::invalid_argument("SubsetIndex: elements must be strictly increasing");
        }
    }

    int size() const { return static_cast<int>(elements.size()); }

    /// Sum of the elements; drives the reciprocity sign.
    long long sigma() const {
        long long s = 0;
        for (int e : elements) s += e;
        return s;
    }

    SubsetIndex complement() const {
        std::vector<int> rest;
        rest.reserve(static_cast<std::size_t>(ambient) - elements.size());
        std::size_t at = 0;
        for (int v = 1; v <= ambient; ++v) {
            if (at < elements.size() && elements[at] == v) { ++at; continue; }
            rest.push_back(v);
        }
        return SubsetIndex(std::move(rest), ambient);
    }

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
        return a.ambient == b.ambient && a.elements == b.elements;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(elements[i]);
        }
        return s + "}";
    }
};

/// All k-element subsets of [1..m] in lexicographic order of their
/// increasing element sequences.
inline std::vector<SubsetIndex> k_subsets_lex(int m, int k) {
    if (k < 0 || k > m) throw std::invalid_argument("k_subsets_lex: k out of range");
    std::vector<SubsetIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    // iterative lexicographic successor
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(cur, m);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Position of `s` in the lexicographic enumeration of |s|-subsets.
inline std::size_t subset_lex_rank(const SubsetIndex& s) {
    // rank = number of k-subsets lexicographically before s
    long long rank = 0;
    auto choose = [](long long n, long long r) {
        if (r < 0 || r > n) return 0LL;
        long long c = 1;
        for (long long i = 1; i <= r; ++i) c = c * (n - r + i) / i;
        return c;
    };
    int k = s.size(), prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < s.elements[static_cast<std::size_t>(i)]; ++v)
            rank += choose(s.ambient - v, k - 1 - i);
        prev = s.elements[static_cast<std::size_t>(i)];
    }
    return static_cast<std::size_t>(rank);
}

} // namespace lgv

#endif // LGV_SUBSETS_HPP
