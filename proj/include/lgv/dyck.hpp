#ifndef LGV_DYCK_HPP
#define LGV_DYCK_HPP

#include "lgv/network.hpp"
#include "lgv/partitions.hpp"
#include "lgv/rational.hpp"

#include <optional>
#include <vector>

namespace lgv {

/// Dyck path of semilength n: 2n steps of +1/-1 with nonnegative prefix
/// sums returning to 0.
class DyckPath {
public:
    explicit DyckPath(std::vector<int> steps);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    const std::vector<int>& steps() const { return steps_; }
    /// Heights y_0..y_{2n} (length 2n+1).
    const std::vector<int>& heights() const { return heights_; }
    int max_height() const { return max_height_; }
    bool bounded_by(int r) const { return max_height_ <= r; }

    friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps_ == b.steps_; }

    /// All Dyck paths of semilength n with max height <= bound (no bound
    /// when absent), in lexicographic step order with up steps first.
    static std::vector<DyckPath> all(int n, std::optional<int> bound);

private:
    std::vector<int> steps_;
    std::vector<int> heights_;
    int max_height_ = 0;
};

/// D stays weakly below D' at every position.
bool stays_weakly_below(const DyckPath& d, const DyckPath& dprime);

/// m nested Dyck paths D_1 <= ... <= D_m of a common semilength. The
/// semilength is carried explicitly so the empty 0-fan keeps its size.
struct DyckFan {
    int semilength = 0;
    std::vector<DyckPath> paths; // bottom to top

    DyckFan(int n, std::vector<DyckPath> ps);
    int fan_size() const { return static_cast<int>(paths.size()); }
};

/// Skew plane partition: filling of outer/inner that weakly decreases
/// along rows and down columns. rows[i] holds the entries of row i+1,
/// columns inner.part(i+1)+1 .. outer.part(i+1).
struct PlanePartition {
    Partition outer, inner;
    std::vector<std::vector<int>> rows;

    bool shape_matches() const;
    bool is_weakly_decreasing() const;
    int entry(int i, int j) const; // 1-based cell of the skew diagram

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.outer == b.outer && a.inner == b.inner && a.rows == b.rows;
    }
};

/// The two-layer zig-zag network with m+k sources and sinks, all weights
/// one: source i feeds middle vertices i-1 and i, middle i feeds sinks i
/// and i+1, indices outside 1..m+k dropped. Its path matrix has
/// determinant 1.
PlanarNetwork build_dyck_network(int m, int k);

/// d(m,k;n): the number of m-fans of (2k+1)-bounded Dyck paths of
/// semilength n, computed as f([m],[m];n) on the zig-zag network;
/// negative n through the inverse compound powers.
Rational d_value(int m, int k, long long n);

/// All m-fans of bound-bounded Dyck paths of semilength n (no height
/// bound when absent), deterministic order, capacity-guarded.
std::vector<DyckFan> enumerate_fans(int m, std::optional<int> bound, int n);

/// Fan -> plane partition of shape staircase(n) (or the skew staircase
/// when a finite bound r is declared): the entry of each cell counts the
/// fan paths passing strictly below that cell's position. Throws if a
/// path exceeds the declared bound.
PlanePartition fan_to_plane_partition(const DyckFan& fan, std::optional<int> bound);

/// Inverse of fan_to_plane_partition for the declared m, n and bound.
DyckFan fan_from_plane_partition(const PlanePartition& pp, int m, int n,
                                 std::optional<int> bound);

/// Entries read by increasing horizontal position of their cells; for the
/// 3-bounded skew staircase this is the alternating-sequence reading.
std::vector<int> plane_partition_reading(const PlanePartition& pp);

/// Number of plane partitions of staircase shape delta_n with entries in
/// {0..m}: the product over 1 <= i < j <= n of (2m+i+j-1)/(i+j-1).
Rational proctor_count(int n, int m);

/// Brute-force count of sequences a_1 <= a_2 >= a_3 <= ... >= a_{2n-3}
/// with entries in {0..m}; the r = 3 plane-partition reading. Equals
/// d(m,1;n).
Rational alternating_sequence_count(int m, int n);

struct DyckReciprocityRow {
    long long n;
    Rational lhs; // d(m,k;-n) via the backward recurrence
    Rational rhs; // d(k,m;n+1) via forward compound powers
    bool pass;
};

struct DyckReciprocityReport {
    int m = 0, k = 0;
    std::vector<DyckReciprocityRow> rows;
    bool all_pass = true;
};

/// d(m,k;-n) = d(k,m;n+1) for n = 1..n_max, the two sides computed by
/// independent routes (backward recurrence vs forward determinant).
DyckReciprocityReport check_dyck_reciprocity(int m, int k, int n_max);

} // namespace lgv

#endif // LGV_DYCK_HPP
