#include "grassdual/linalg.hpp"

#include <cassert>

#include "grassdual/errors.hpp"

namespace grassdual {

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows_in) {
    RatMatrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in.front().size());
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        assert(rows_in[i].size() == m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
}

namespace {

// Row echelon form in-place; returns pivot column per pivot row.
std::vector<std::size_t> echelon(RatMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t p = r;
        while (p < m.rows && m.at(p, c) == 0) ++p;
        if (p == m.rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

}  // namespace

std::size_t rank(RatMatrix m) { return echelon(m).size(); }

std::vector<std::size_t> independent_rows(const std::vector<RatVec>& rows) {
    std::vector<std::size_t> chosen;
    if (rows.empty()) return chosen;
    RatMatrix acc(0, rows.front().size());
    std::size_t current_rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        RatMatrix trial(chosen.size() + 1, rows.front().size());
        for (std::size_t t = 0; t < chosen.size(); ++t)
            for (std::size_t j = 0; j < trial.cols; ++j) trial.at(t, j) = rows[chosen[t]][j];
        for (std::size_t j = 0; j < trial.cols; ++j) trial.at(chosen.size(), j) = rows[i][j];
        if (rank(trial) > current_rank) {
            chosen.push_back(i);
            ++current_rank;
        }
    }
    return chosen;
}

std::optional<RatVec> solve(RatMatrix a, RatVec b) {
    if (a.rows != b.size()) throw PolytopeError("solve: dimension mismatch");
    RatMatrix aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    const std::vector<std::size_t> pivots = echelon(aug);
    for (std::size_t t = 0; t < pivots.size(); ++t)
        if (pivots[t] == a.cols) return std::nullopt;  // row (0 ... 0 | 1)
    RatVec x(a.cols, Rat(0));
    for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = aug.at(t, a.cols);
    return x;
}

std::vector<RatVec> nullspace(RatMatrix m) {
    const std::size_t n = m.cols;
    const std::vector<std::size_t> pivots = echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(n, Rat(0));
        v[f] = 1;
        for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -m.at(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(RatMatrix m) {
    if (m.rows != m.cols) throw PolytopeError("inverse: matrix not square");
    const std::size_t n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<std::size_t> pivots = echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw PolytopeError("inverse: matrix singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace grassdual
