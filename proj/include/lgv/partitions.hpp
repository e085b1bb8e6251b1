#ifndef LGV_PARTITIONS_HPP
#define LGV_PARTITIONS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgv {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// dropped at construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    /// The staircase (n-1, n-2, ..., 1); empty for n <= 1.
    static Partition staircase(int n) {
        std::vector<int> p;
        for (int v = n - 1; v >= 1; --v) p.push_back(v);
        return Partition(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }

    /// 1-based part accessor; zero beyond the length.
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("Partition: part index is 1-based");
        return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    long long size() const {
        long long s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    /// Conjugate partition (reflect the diagram across the main diagonal).
    Partition transposed() const {
        std::vector<int> t;
        if (!parts_.empty()) {
            t.resize(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++t[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(t));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const {
        if (parts_.empty()) return "()";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

/// Skew shape lambda/mu with mu contained in lambda.
struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition lambda, Partition mu) : outer(std::move(lambda)), inner(std::move(mu)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("SkewShape: inner shape not contained in outer");
    }

    long long size() const { return outer.size() - inner.size(); }

    SkewShape transposed() const { return SkewShape(outer.transposed(), inner.transposed()); }

    /// Cells (row, col), 1-based, row-major.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> cs;
        for (int i = 1; i <= outer.length(); ++i)
            for (int j = inner.part(i) + 1; j <= outer.part(i); ++j)
                cs.emplace_back(i, j);
        return cs;
    }

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }

    std::string str() const {
        return inner.empty() ? outer.str() : outer.str() + " / " + inner.str();
    }
};

} // namespace lgv

#endif // LGV_PARTITIONS_HPP
