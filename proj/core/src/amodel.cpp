#include "grassdual/amodel.hpp"

#include <algorithm>

#include "grassdual/errors.hpp"

namespace grassdual {

std::vector<Partition> chart_coordinates(const FaceLabeling& labeling) {
    return coordinate_order(labeling.chart);
}

IntVec val(const LaurentPoly& f, const std::vector<Partition>& coords,
           const std::vector<Partition>& order) {
    const std::vector<Partition>& by = order.empty() ? coords : order;
    std::vector<VarId> vars;
    vars.reserve(by.size());
    for (const Partition& p : by) vars.push_back(VarId::of(p));
    const std::vector<int> expo = lex_min_term(f, vars);

    IntVec out;
    out.reserve(coords.size());
    for (const Partition& p : coords) {
        const auto it = std::find(by.begin(), by.end(), p);
        if (it == by.end())
            throw PolynomialError("variable order is missing coordinate [" + p.to_string() + "]");
        out.emplace_back(expo[static_cast<std::size_t>(it - by.begin())]);
    }
    return out;
}

std::map<IndexSubset, IntVec> valuation_table(const PerfectOrientation& o,
                                              const FaceLabeling& labeling) {
    const GrassmannShape shape = o.graph().shape();
    const std::vector<Partition> coords = chart_coordinates(labeling);
    std::map<IndexSubset, IntVec> table;
    for (const IndexSubset& j : all_subsets(shape.n, shape.rows()))
        table.emplace(j, val(plucker_polynomial(o, j), coords));
    return table;
}

std::pair<VPolytope, HPolytope> no_polytope(const PerfectOrientation& o,
                                            const FaceLabeling& labeling, int r) {
    if (r < 1) throw PolytopeError("polytope degree must be at least 1");
    const std::vector<Partition> coords = chart_coordinates(labeling);
    const std::map<IndexSubset, IntVec> table = valuation_table(o, labeling);
    std::vector<RatVec> rows;
    rows.reserve(table.size());
    for (const auto& [j, row] : table) {
        RatVec v;
        v.reserve(row.size());
        for (const Int& z : row) v.emplace_back(z);
        rows.push_back(std::move(v));
    }

    // Valuations are additive on monomials, so degree-r monomials contribute
    // exactly the r-fold sums of table rows.
    std::vector<RatVec> sums;
    RatVec acc(coords.size(), Rat(0));
    auto build = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            sums.push_back(acc);
            return;
        }
        for (std::size_t i = from; i < rows.size(); ++i) {
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += rows[i][t];
            self(self, i, left - 1);
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] -= rows[i][t];
        }
    };
    build(build, 0, r);
    auto direct = hull(sums, coords);

    auto base = hull(rows, coords);
    const VPolytope dilated_v = dilate(base.first, r);
    const HPolytope dilated_h = dilate(base.second, r);
    const EqualityCertificate cert =
        equal_polytopes(direct.first, direct.second, dilated_v, dilated_h);
    if (!cert.equal)
        throw PolytopeError("degree-" + std::to_string(r) +
                            " hull disagrees with the dilation of the degree-1 hull: " +
                            cert.detail);
    return direct;
}

}  // namespace grassdual
