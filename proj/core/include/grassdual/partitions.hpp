#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "grassdual/numeric.hpp"

namespace grassdual {

/// The pair (k, n) with 0 < k < n fixing both sides of the correspondence:
/// planar-network charts on one side, cluster charts on the other. Young
/// diagrams live in the (n-k) x k rectangle; N = k(n-k) boxes fill it.
struct GrassmannShape {
    int k = 0;
    int n = 0;

    GrassmannShape(int k_, int n_);

    int rows() const { return n - k; }  // height of the rectangle
    int cols() const { return k; }      // width of the rectangle
    int boxes() const { return k * (n - k); }

    bool operator==(const GrassmannShape& o) const { return k == o.k && n == o.n; }
};

/// Integer partition with weakly decreasing positive parts. The empty
/// partition has no parts. No trailing zeros are stored.
class Partition {
public:
    Partition() = default;
    /// Validates: weakly decreasing, nonnegative; trailing zeros stripped.
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int height, int width);

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t num_parts() const { return parts_.size(); }
    int size() const;  // number of boxes
    bool empty() const { return parts_.empty(); }
    bool fits(const GrassmannShape& shape) const;

    /// True if this is obtained from `inner` by adding exactly one box.
    bool covers(const Partition& inner) const;

    /// E.g. "3,1"; the empty partition prints as "".
    std::string to_string() const;
    static Partition parse(const std::string& text);

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Strictly increasing subset of {1, ..., n}.
class IndexSubset {
public:
    IndexSubset() = default;
    /// Validates: elements strictly increasing and positive.
    explicit IndexSubset(std::vector<int> elems);

    const std::vector<int>& elems() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool contains(int x) const;
    IndexSubset complement(int n) const;

    /// E.g. "{2,4}".
    std::string to_string() const;

    auto operator<=>(const IndexSubset&) const = default;

private:
    std::vector<int> elems_;
};

/// Labels of the south (downward) steps of the border path of `p` drawn in
/// the shape's rectangle, path running from the northeast corner to the
/// southwest corner with steps numbered 1..n. An (n-k)-element subset.
IndexSubset south_subset(const GrassmannShape& shape, const Partition& p);

/// Labels of the west steps: the complementary k-element subset.
IndexSubset west_subset(const GrassmannShape& shape, const Partition& p);

/// Inverse of south_subset; throws if `s` is not an (n-k)-subset of [n].
Partition partition_from_south(const GrassmannShape& shape, const IndexSubset& s);

/// Inverse of west_subset; throws if `w` is not a k-subset of [n].
Partition partition_from_west(const GrassmannShape& shape, const IndexSubset& w);

/// All partitions contained in the (n-k) x k rectangle, in lexicographic
/// order of their part vectors.
std::vector<Partition> all_partitions(const GrassmannShape& shape);

/// All m-element subsets of {1..n} in lexicographic order.
std::vector<IndexSubset> all_subsets(int n, int m);

/// The cyclic interval [a, a+len-1] reduced mod n into {1..n}, as a subset.
IndexSubset cyclic_interval(int n, int a, int len);

/// The permutation (n-k+1, ..., n, 1, ..., n-k) as a 1-based vector:
/// result[i-1] is the image of i.
std::vector<int> standard_trip_permutation(const GrassmannShape& shape);

/// Frozen labels mu_1..mu_n (index i at result[i-1]): mu_i is the i x k
/// rectangle for i <= n-k and the (n-k) x (n-i) rectangle for i >= n-k;
/// mu_n is empty.
std::vector<Partition> frozen_labels(const GrassmannShape& shape);

/// The partner label mu_i^+: for i != n-k, mu_i plus one box (computed from
/// the cyclic interval [i+1, i+k-1] u {i+k+1}); for i = n-k it is the
/// (n-k-1) x (k-1) rectangle.
Partition frozen_label_plus(const GrassmannShape& shape, int i);

/// Number of semistandard fillings (rows weakly increasing, columns strictly
/// increasing, entries in {1..n}) of the rectangle with (n-k) rows and r
/// columns. Computed by brute-force chain counting at call time; this is the
/// run-time dimension oracle for lattice-point counts.
Int ssyt_count(const GrassmannShape& shape, int r);

/// Coordinate significance order used for polytope axes and valuation-table
/// columns: partitions with more parts come first; among equal part counts,
/// lexicographically larger part lists come first.
bool coordinate_less(const Partition& a, const Partition& b);

/// Sorts labels into the coordinate significance order.
std::vector<Partition> coordinate_order(std::vector<Partition> labels);

}  // namespace grassdual
