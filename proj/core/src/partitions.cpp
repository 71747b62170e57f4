#include "grassdual/partitions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "grassdual/errors.hpp"

namespace grassdual {

GrassmannShape::GrassmannShape(int k_, int n_) : k(k_), n(n_) {
    if (k <= 0 || n <= k)
        throw ShapeError("shape requires 0 < k < n, got k=" + std::to_string(k_) +
                         " n=" + std::to_string(n_));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw CombinatoricsError("partition part is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw CombinatoricsError("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int height, int width) {
    if (height < 0 || width < 0) throw CombinatoricsError("rectangle with negative side");
    if (height == 0 || width == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::fits(const GrassmannShape& shape) const {
    return num_parts() <= static_cast<std::size_t>(shape.rows()) &&
           (parts_.empty() || parts_.front() <= shape.cols());
}

bool Partition::covers(const Partition& inner) const {
    if (size() != inner.size() + 1) return false;
    const std::size_t m = std::max(num_parts(), inner.num_parts());
    for (std::size_t i = 0; i < m; ++i)
        if (part(i) != inner.part(i) && part(i) != inner.part(i) + 1) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition part '" + token + "'");
        }
        if (pos != token.size()) throw ParseError("bad partition part '" + token + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

IndexSubset::IndexSubset(std::vector<int> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1) throw CombinatoricsError("subset element below 1");
        if (i + 1 < elems_.size() && elems_[i] >= elems_[i + 1])
            throw CombinatoricsError("subset elements must be strictly increasing");
    }
}

bool IndexSubset::contains(int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

IndexSubset IndexSubset::complement(int n) const {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x)
        if (!contains(x)) rest.push_back(x);
    return IndexSubset(std::move(rest));
}

std::string IndexSubset::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(elems_[i]);
    }
    return s + "}";
}

IndexSubset south_subset(const GrassmannShape& shape, const Partition& p) {
    if (!p.fits(shape))
        throw CombinatoricsError("partition " + p.to_string() + " does not fit shape");
    // Row i of the diagram contributes the south step at position
    // (cols - lambda_i) + i along the border path.
    std::vector<int> s;
    for (int i = 1; i <= shape.rows(); ++i)
        s.push_back(shape.cols() - p.part(static_cast<std::size_t>(i - 1)) + i);
    std::sort(s.begin(), s.end());
    return IndexSubset(std::move(s));
}

IndexSubset west_subset(const GrassmannShape& shape, const Partition& p) {
    return south_subset(shape, p).complement(shape.n);
}

Partition partition_from_south(const GrassmannShape& shape, const IndexSubset& s) {
    if (s.size() != static_cast<std::size_t>(shape.rows()))
        throw CombinatoricsError("south subset must have n-k elements");
    if (!s.elems().empty() && s.elems().back() > shape.n)
        throw CombinatoricsError("south subset element exceeds n");
    std::vector<int> parts;
    for (int i = 1; i <= shape.rows(); ++i)
        parts.push_back(shape.cols() + i - s.elems()[static_cast<std::size_t>(i - 1)]);
    return Partition(std::move(parts));
}

Partition partition_from_west(const GrassmannShape& shape, const IndexSubset& w) {
    if (w.size() != static_cast<std::size_t>(shape.cols()))
        throw CombinatoricsError("west subset must have k elements");
    if (!w.elems().empty() && w.elems().back() > shape.n)
        throw CombinatoricsError("west subset element exceeds n");
    return partition_from_south(shape, w.complement(shape.n));
}

std::vector<Partition> all_partitions(const GrassmannShape& shape) {
    std::vector<Partition> out;
    std::vector<int> parts;
    // Depth-first over rows; parts are bounded by the previous part.
    auto rec = [&](auto&& self, int row, int bound) -> void {
        out.push_back(Partition(std::vector<int>(parts)));
        if (row > shape.rows()) return;
        for (int v = 1; v <= bound; ++v) {
            parts.push_back(v);
            self(self, row + 1, v);
            parts.pop_back();
        }
    };
    rec(rec, 1, shape.cols());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IndexSubset> all_subsets(int n, int m) {
    std::vector<IndexSubset> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(IndexSubset(std::vector<int>(cur)));
            return;
        }
        const int need = m - static_cast<int>(cur.size());
        for (int x = next; x + need - 1 <= n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

IndexSubset cyclic_interval(int n, int a, int len) {
    std::vector<int> e;
    for (int t = 0; t < len; ++t) {
        int v = (a + t) % n;
        if (v <= 0) v += n;
        e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    return IndexSubset(std::move(e));
}

std::vector<int> standard_trip_permutation(const GrassmannShape& shape) {
    std::vector<int> pi(static_cast<std::size_t>(shape.n));
    for (int i = 1; i <= shape.n; ++i) {
        int v = i + shape.rows();
        if (v > shape.n) v -= shape.n;
        pi[static_cast<std::size_t>(i - 1)] = v;
    }
    return pi;
}

std::vector<Partition> frozen_labels(const GrassmannShape& shape) {
    std::vector<Partition> mu;
    for (int i = 1; i <= shape.n; ++i) {
        if (i <= shape.rows())
            mu.push_back(Partition::rectangle(i, shape.cols()));
        else
            mu.push_back(Partition::rectangle(shape.rows(), shape.n - i));
    }
    return mu;
}

Partition frozen_label_plus(const GrassmannShape& shape, int i) {
    if (i < 1 || i > shape.n) throw CombinatoricsError("frozen index out of range");
    if (i == shape.rows())
        return Partition::rectangle(shape.rows() - 1, shape.cols() - 1);
    // West labels [i+1, i+k-1] u {i+k+1}, reduced cyclically.
    std::vector<int> w;
    for (int t = 1; t <= shape.cols() - 1; ++t) {
        int v = (i + t) % shape.n;
        if (v <= 0) v += shape.n;
        w.push_back(v);
    }
    int last = (i + shape.cols() + 1) % shape.n;
    if (last <= 0) last += shape.n;
    w.push_back(last);
    std::sort(w.begin(), w.end());
    return partition_from_west(shape, IndexSubset(std::move(w)));
}

Int ssyt_count(const GrassmannShape& shape, int r) {
    if (r < 0) throw CombinatoricsError("ssyt_count requires r >= 0");
    if (r == 0) return 1;
    // Columns are strictly increasing (n-k)-subsets of [n]; a filling of the
    // r-column rectangle is a chain c_1 <= ... <= c_r in the entrywise order.
    const std::vector<IndexSubset> cols = all_subsets(shape.n, shape.rows());
    auto leq = [](const IndexSubset& a, const IndexSubset& b) {
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a.elems()[t] > b.elems()[t]) return false;
        return true;
    };
    std::vector<Int> count(cols.size(), 1);
    for (int step = 2; step <= r; ++step) {
        std::vector<Int> next(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < cols.size(); ++i)
                if (leq(cols[i], cols[j])) next[j] += count[i];
        count.swap(next);
    }
    Int total = 0;
    for (const Int& c : count) total += c;
    return total;
}

bool coordinate_less(const Partition& a, const Partition& b) {
    if (a.parts().size() != b.parts().size())
        return a.parts().size() > b.parts().size();
    return a.parts() > b.parts();
}

std::vector<Partition> coordinate_order(std::vector<Partition> labels) {
    std::sort(labels.begin(), labels.end(), coordinate_less);
    return labels;
}

}  // namespace grassdual
