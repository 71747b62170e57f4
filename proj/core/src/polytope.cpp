#include "grassdual/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>

#include "grassdual/errors.hpp"

namespace grassdual {

namespace {

RatVec to_rat(const IntVec& v) {
    RatVec w;
    w.reserve(v.size());
    for (const Int& z : v) w.emplace_back(z);
    return w;
}

/// Scale to coprime integer entries, preserving direction.
RatVec primitive(const RatVec& v) { return to_rat(primitive_integer_vector(v)); }

/// Scale to coprime integers with the first nonzero entry positive (the sign
/// convention for equations, where both directions describe the same set).
RatVec primitive_signed(const RatVec& v) {
    RatVec w = primitive(v);
    for (const Rat& q : w) {
        if (q == 0) continue;
        if (q < 0)
            for (Rat& r : w) r = -r;
        break;
    }
    return w;
}

RatVec homogenize(const Inequality& iq) {
    RatVec row;
    row.reserve(iq.coeffs.size() + 1);
    row.push_back(iq.constant);
    row.insert(row.end(), iq.coeffs.begin(), iq.coeffs.end());
    return row;
}

Inequality dehomogenize(const RatVec& row) {
    return Inequality{row.front(), RatVec(row.begin() + 1, row.end())};
}

/// One extreme ray of the working cone together with its incidence flags over
/// the rows processed so far.
struct Ray {
    RatVec v;
    std::vector<char> tight;
};

/// Extreme rays of { y : row . y >= 0 for every row }, by exact double
/// description. Requires the cone to be pointed (the rows have full column
/// rank D); throws PolytopeError with `not_pointed_msg` otherwise. Rows are
/// deduplicated and inserted in lexicographic order, which fixes the output
/// up to the final lexicographic sort.
std::vector<RatVec> cone_rays(std::vector<RatVec> rows, std::size_t D,
                              const std::string& not_pointed_msg) {
    for (RatVec& r : rows) r = primitive(r);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const std::vector<std::size_t> basis_idx = independent_rows(rows);
    if (basis_idx.size() < D) throw PolytopeError(not_pointed_msg);

    // Initial simplicial cone from the basis rows: B r_j = e_j, so the rays
    // are the columns of B^{-1} and ray j is tight on every basis row but j.
    std::vector<RatVec> processed;
    std::vector<char> used(rows.size(), 0);
    RatMatrix b(D, D);
    for (std::size_t j = 0; j < D; ++j) {
        used[basis_idx[j]] = 1;
        processed.push_back(rows[basis_idx[j]]);
        for (std::size_t c = 0; c < D; ++c) b.at(j, c) = processed.back()[c];
    }
    const RatMatrix binv = inverse(b);
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < D; ++j) {
        RatVec col(D);
        for (std::size_t i = 0; i < D; ++i) col[i] = binv.at(i, j);
        Ray r{primitive(col), {}};
        for (const RatVec& row : processed) r.tight.push_back(dot(row, r.v) == 0 ? 1 : 0);
        rays.push_back(std::move(r));
    }

    // Two rays are adjacent iff no third ray is tight on every row both are
    // tight on; only adjacent positive/negative pairs combine to new rays.
    auto adjacent = [&](std::size_t i, std::size_t j) {
        std::vector<std::size_t> common;
        for (std::size_t t = 0; t < processed.size(); ++t)
            if (rays[i].tight[t] && rays[j].tight[t]) common.push_back(t);
        for (std::size_t o = 0; o < rays.size(); ++o) {
            if (o == i || o == j) continue;
            bool covers = true;
            for (std::size_t t : common)
                if (!rays[o].tight[t]) {
                    covers = false;
                    break;
                }
            if (covers) return false;
        }
        return true;
    };

    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        if (used[ri]) continue;
        const RatVec& row = rows[ri];
        std::vector<Rat> val;
        val.reserve(rays.size());
        for (const Ray& r : rays) val.push_back(dot(row, r.v));

        bool any_minus = false;
        for (const Rat& q : val) any_minus = any_minus || q < 0;
        if (!any_minus) {
            processed.push_back(row);
            for (std::size_t i = 0; i < rays.size(); ++i)
                rays[i].tight.push_back(val[i] == 0 ? 1 : 0);
            continue;
        }

        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (val[i] >= 0) {
                Ray kept = rays[i];
                kept.tight.push_back(val[i] == 0 ? 1 : 0);
                next.push_back(std::move(kept));
            }
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (val[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (val[j] >= 0 || !adjacent(i, j)) continue;
                RatVec combo(D);
                for (std::size_t t = 0; t < D; ++t)
                    combo[t] = val[i] * rays[j].v[t] - val[j] * rays[i].v[t];
                Ray fresh{primitive(combo), {}};
                for (const RatVec& pr : processed)
                    fresh.tight.push_back(dot(pr, fresh.v) == 0 ? 1 : 0);
                fresh.tight.push_back(1);
                next.push_back(std::move(fresh));
            }
        }
        processed.push_back(row);
        rays = std::move(next);
    }

    std::vector<RatVec> out;
    out.reserve(rays.size());
    for (Ray& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Homogenization rows of an inequality system: the t >= 0 row, each equation
/// in both directions, then the inequalities.
std::vector<RatVec> homogenization_rows(const HPolytope& h) {
    const std::size_t D = h.ambient_dim + 1;
    std::vector<RatVec> rows;
    RatVec t_row(D, Rat(0));
    t_row[0] = 1;
    rows.push_back(std::move(t_row));
    for (const Inequality& eq : h.equations) {
        RatVec r = homogenize(eq);
        rows.push_back(r);
        for (Rat& q : r) q = -q;
        rows.push_back(std::move(r));
    }
    for (const Inequality& iq : h.inequalities) rows.push_back(homogenize(iq));
    return rows;
}

void check_h(const HPolytope& h) {
    for (const Inequality& iq : h.inequalities)
        if (iq.coeffs.size() != h.ambient_dim)
            throw PolytopeError("inequality length disagrees with the ambient dimension");
    for (const Inequality& eq : h.equations)
        if (eq.coeffs.size() != h.ambient_dim)
            throw PolytopeError("equation length disagrees with the ambient dimension");
    if (!h.coords.empty() && h.coords.size() != h.ambient_dim)
        throw PolytopeError("coordinate labels disagree with the ambient dimension");
}

std::string label_of(const std::vector<Partition>& coords, std::size_t j) {
    if (j < coords.size()) return "[" + coords[j].to_string() + "]";
    return "x" + std::to_string(j + 1);
}

std::string render_condition(const Inequality& iq, const std::vector<Partition>& coords,
                             bool equation) {
    std::string lhs;
    if (iq.constant != 0) lhs = to_string(iq.constant);
    for (std::size_t j = 0; j < iq.coeffs.size(); ++j) {
        const Rat& c = iq.coeffs[j];
        if (c == 0) continue;
        if (!lhs.empty()) lhs += c > 0 ? " + " : " - ";
        else if (c < 0) lhs += "-";
        const Rat mag = c < 0 ? Rat(-c) : c;
        if (mag != 1) lhs += to_string(mag) + "*";
        lhs += label_of(coords, j);
    }
    if (lhs.empty()) lhs = "0";
    return lhs + (equation ? " == 0" : " >= 0");
}

}  // namespace

std::string to_string(const RatVec& point) {
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i) s += ", ";
        s += to_string(point[i]);
    }
    return s + ")";
}

std::string to_string(const Inequality& iq) { return render_condition(iq, {}, false); }

HPolytope normalized(HPolytope h) {
    check_h(h);
    std::vector<RatVec> rows;
    for (const Inequality& iq : h.inequalities) rows.push_back(primitive(homogenize(iq)));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    h.inequalities.clear();
    for (const RatVec& r : rows) h.inequalities.push_back(dehomogenize(r));

    rows.clear();
    for (const Inequality& eq : h.equations) rows.push_back(primitive_signed(homogenize(eq)));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    h.equations.clear();
    for (const RatVec& r : rows) h.equations.push_back(dehomogenize(r));
    return h;
}

VPolytope vertices_of(const HPolytope& h) {
    check_h(h);
    const std::size_t D = h.ambient_dim + 1;
    const std::vector<RatVec> rays =
        cone_rays(homogenization_rows(h), D,
                  "vertex enumeration failed: the system is unbounded (its homogenization "
                  "admits a line)");
    std::vector<RatVec> verts;
    for (const RatVec& r : rays) {
        if (r[0] == 0) {
            RatVec dir(r.begin() + 1, r.end());
            throw PolytopeError("vertex enumeration failed: the system is unbounded in direction " +
                                to_string(dir));
        }
        RatVec x(h.ambient_dim);
        for (std::size_t j = 0; j < h.ambient_dim; ++j) x[j] = r[j + 1] / r[0];
        verts.push_back(std::move(x));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return VPolytope{h.coords, std::move(verts)};
}

bool is_bounded(const HPolytope& h) {
    check_h(h);
    try {
        vertices_of(h);
        return true;
    } catch (const PolytopeError&) {
        return false;
    }
}

std::pair<VPolytope, HPolytope> hull(const std::vector<RatVec>& points,
                                     std::vector<Partition> coords) {
    if (points.empty()) throw PolytopeError("convex hull of an empty point list");
    const std::size_t d = points.front().size();
    for (const RatVec& p : points)
        if (p.size() != d) throw PolytopeError("hull points have mixed lengths");
    if (!coords.empty() && coords.size() != d)
        throw PolytopeError("coordinate labels disagree with the point length");

    std::vector<RatVec> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    HPolytope facets;
    facets.coords = coords;
    facets.ambient_dim = d;

    if (d == 0 || pts.size() == 1) {
        // A single point (or the unique point of a 0-dimensional space): the
        // affine hull is cut out by one equation per coordinate.
        const RatVec& p0 = pts.front();
        for (std::size_t j = 0; j < d; ++j) {
            RatVec c(d, Rat(0));
            c[j] = 1;
            facets.equations.push_back(Inequality{-p0[j], std::move(c)});
        }
        return {VPolytope{std::move(coords), {p0}}, normalized(std::move(facets))};
    }

    // Affine-hull equations: normals are the null space of the difference
    // vectors p_i - p_0.
    const RatVec& p0 = pts.front();
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = pts[i][j] - p0[j];
        diffs.push_back(std::move(v));
    }
    for (const RatVec& c : nullspace(RatMatrix::from_rows(diffs)))
        facets.equations.push_back(Inequality{-dot(c, p0), c});
    const std::size_t m = d - facets.equations.size();

    if (m == d) {
        // Full-dimensional: the irredundant facets are the extreme rays of
        // the cone of valid inequalities { (b, a) : b + a . p_i >= 0 }.
        std::vector<RatVec> rows;
        for (const RatVec& p : pts) {
            RatVec r;
            r.reserve(d + 1);
            r.push_back(Rat(1));
            r.insert(r.end(), p.begin(), p.end());
            rows.push_back(std::move(r));
        }
        for (const RatVec& ray : cone_rays(rows, d + 1, "hull points lost affine rank"))
            facets.inequalities.push_back(dehomogenize(ray));
    } else {
        // Lower-dimensional: parametrize the affine hull by m independent
        // difference directions, take the hull there, and pull the facets
        // back through s(x) = (U U^T)^{-1} U (x - p0).
        std::vector<RatVec> u_rows;
        for (std::size_t i : independent_rows(diffs)) u_rows.push_back(diffs[i]);
        RatMatrix gram(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) gram.at(i, j) = dot(u_rows[i], u_rows[j]);
        std::vector<RatVec> s_pts;
        for (const RatVec& p : pts) {
            RatVec rhs(m);
            for (std::size_t i = 0; i < m; ++i) {
                Rat s = 0;
                for (std::size_t j = 0; j < d; ++j) s += u_rows[i][j] * (p[j] - p0[j]);
                rhs[i] = s;
            }
            s_pts.push_back(solve(gram, std::move(rhs)).value());
        }
        const HPolytope sub = hull(s_pts, {}).second;
        for (const Inequality& iq : sub.inequalities) {
            const RatVec w = solve(gram, iq.coeffs).value();
            RatVec a(d, Rat(0));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < d; ++j) a[j] += w[i] * u_rows[i][j];
            facets.inequalities.push_back(Inequality{iq.constant - dot(a, p0), std::move(a)});
        }
    }

    facets = normalized(std::move(facets));
    VPolytope verts = vertices_of(facets);
    return {std::move(verts), std::move(facets)};
}

std::vector<IntVec> lattice_points(const HPolytope& h) {
    const VPolytope verts = vertices_of(h);
    if (verts.vertices.empty()) return {};
    const std::size_t d = h.ambient_dim;
    if (d == 0) return {IntVec{}};

    std::vector<Int> lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rat mn = verts.vertices.front()[j], mx = mn;
        for (const RatVec& v : verts.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil_of(mn);
        hi[j] = floor_of(mx);
        if (lo[j] > hi[j]) return {};
    }

    // Integer-scaled conditions: value(x) = c0 + coeffs . x, required >= 0
    // for inequalities and == 0 for equations.
    struct Condition {
        Int c0;
        IntVec coeffs;
        bool equation;
    };
    std::vector<Condition> conds;
    const HPolytope hn = normalized(h);
    for (const Inequality& iq : hn.inequalities) {
        IntVec row = primitive_integer_vector(homogenize(iq));
        conds.push_back({row.front(), IntVec(row.begin() + 1, row.end()), false});
    }
    for (const Inequality& eq : hn.equations) {
        IntVec row = primitive_integer_vector(homogenize(eq));
        conds.push_back({row.front(), IntVec(row.begin() + 1, row.end()), true});
    }

    // rest_min/rest_max[c][j]: extreme contributions of coordinates j..d-1 to
    // condition c over the bounding box, for pruning partial assignments.
    std::vector<std::vector<Int>> rest_min(conds.size()), rest_max(conds.size());
    for (std::size_t c = 0; c < conds.size(); ++c) {
        rest_min[c].assign(d + 1, 0);
        rest_max[c].assign(d + 1, 0);
        for (std::size_t j = d; j-- > 0;) {
            const Int a_lo = conds[c].coeffs[j] * lo[j];
            const Int a_hi = conds[c].coeffs[j] * hi[j];
            rest_min[c][j] = rest_min[c][j + 1] + std::min(a_lo, a_hi);
            rest_max[c][j] = rest_max[c][j + 1] + std::max(a_lo, a_hi);
        }
    }

    std::vector<IntVec> out;
    IntVec x(d);
    std::vector<Int> partial(conds.size());
    for (std::size_t c = 0; c < conds.size(); ++c) partial[c] = conds[c].c0;

    auto scan = [&](auto&& self, std::size_t j) -> void {
        for (std::size_t c = 0; c < conds.size(); ++c) {
            if (partial[c] + rest_max[c][j] < 0) return;
            if (conds[c].equation && partial[c] + rest_min[c][j] > 0) return;
        }
        if (j == d) {
            out.push_back(x);
            return;
        }
        for (Int v = lo[j]; v <= hi[j]; ++v) {
            x[j] = v;
            for (std::size_t c = 0; c < conds.size(); ++c) partial[c] += conds[c].coeffs[j] * v;
            self(self, j + 1);
            for (std::size_t c = 0; c < conds.size(); ++c) partial[c] -= conds[c].coeffs[j] * v;
        }
    };
    scan(scan, 0);
    return out;
}

VPolytope dilate(const VPolytope& p, const Rat& r) {
    if (r < 0) throw PolytopeError("dilation factor must be nonnegative");
    std::vector<RatVec> verts;
    for (const RatVec& v : p.vertices) {
        RatVec w(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) w[j] = r * v[j];
        verts.push_back(std::move(w));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return VPolytope{p.coords, std::move(verts)};
}

HPolytope dilate(const HPolytope& h, const Rat& r) {
    if (r <= 0)
        throw PolytopeError("dilating an inequality system requires a positive factor");
    HPolytope out = h;
    for (Inequality& iq : out.inequalities) iq.constant *= r;
    for (Inequality& eq : out.equations) eq.constant *= r;
    return out;
}

VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b) {
    if (!a.coords.empty() && !b.coords.empty() && a.coords != b.coords)
        throw PolytopeError("summands use different coordinate labels");
    if (a.dim() != b.dim()) throw PolytopeError("summands have different dimensions");
    if (a.vertices.empty() || b.vertices.empty())
        throw PolytopeError("summand has no points");
    std::vector<RatVec> sums;
    for (const RatVec& u : a.vertices)
        for (const RatVec& v : b.vertices) {
            RatVec w(u.size());
            for (std::size_t j = 0; j < u.size(); ++j) w[j] = u[j] + v[j];
            sums.push_back(std::move(w));
        }
    return hull(sums, a.coords.empty() ? b.coords : a.coords).first;
}

VPolytope pl_mutate(const VPolytope& p, const MutationMapSpec& map) {
    if (p.coords.empty())
        throw PolytopeError("the tropical exchange map needs labeled coordinates");
    std::vector<Partition> five = {map.mu1, map.ring[0], map.ring[1], map.ring[2], map.ring[3]};
    std::sort(five.begin(), five.end());
    if (std::adjacent_find(five.begin(), five.end()) != five.end())
        throw PolytopeError("the mutated label and its ring must be pairwise distinct");

    auto index_of = [&](const Partition& q) -> int {
        for (std::size_t j = 0; j < p.coords.size(); ++j)
            if (p.coords[j] == q) return static_cast<int>(j);
        return -1;
    };
    const int i1 = index_of(map.mu1);
    if (i1 < 0)
        throw PolytopeError("label [" + map.mu1.to_string() + "] is not a coordinate");
    if (index_of(map.mu1p) >= 0)
        throw PolytopeError("label [" + map.mu1p.to_string() + "] is already a coordinate");
    std::array<int, 4> ring{};
    for (int t = 0; t < 4; ++t) {
        ring[t] = map.ring[t].num_parts() == 0 ? -1 : index_of(map.ring[t]);
        if (map.ring[t].num_parts() != 0 && ring[t] < 0)
            throw PolytopeError("ring label [" + map.ring[t].to_string() +
                                "] is not a coordinate");
    }

    // New axis set, re-sorted into coordinate significance order; perm maps
    // new positions to old ones (with mu1's slot relabeled mu1p).
    std::vector<Partition> relabeled = p.coords;
    relabeled[static_cast<std::size_t>(i1)] = map.mu1p;
    std::vector<std::size_t> perm(relabeled.size());
    for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        return coordinate_less(relabeled[x], relabeled[y]);
    });

    auto at = [](const RatVec& v, int j) { return j < 0 ? Rat(0) : v[static_cast<std::size_t>(j)]; };
    VPolytope out;
    out.coords.reserve(perm.size());
    for (std::size_t j : perm) out.coords.push_back(relabeled[j]);
    for (const RatVec& v : p.vertices) {
        RatVec w = v;
        w[static_cast<std::size_t>(i1)] =
            std::min(at(v, ring[0]) + at(v, ring[2]), at(v, ring[1]) + at(v, ring[3])) -
            v[static_cast<std::size_t>(i1)];
        RatVec sorted(w.size());
        for (std::size_t j = 0; j < perm.size(); ++j) sorted[j] = w[perm[j]];
        out.vertices.push_back(std::move(sorted));
    }
    return out;
}

EqualityCertificate equal_polytopes(const VPolytope& a, const HPolytope& a_facets,
                                    const VPolytope& b, const HPolytope& b_facets) {
    if (!a.coords.empty() && !b.coords.empty() && a.coords != b.coords)
        return {false, "the two sides use different coordinate labels"};
    if (a.dim() != b.dim())
        return {false, "the two sides have different ambient dimensions"};
    if (a.vertices.empty() != b.vertices.empty())
        return {false, a.vertices.empty() ? "only the first side is empty"
                                          : "only the second side is empty"};

    auto check_side = [](const VPolytope& pts, const HPolytope& sys, const char* pts_name,
                         const char* sys_name) -> std::string {
        for (const RatVec& v : pts.vertices) {
            for (const Inequality& iq : sys.inequalities)
                if (iq.constant + dot(iq.coeffs, v) < 0)
                    return "vertex " + to_string(v) + " of the " + pts_name +
                           " side violates " + render_condition(iq, sys.coords, false) +
                           " of the " + sys_name + " side";
            for (const Inequality& eq : sys.equations)
                if (eq.constant + dot(eq.coeffs, v) != 0)
                    return "vertex " + to_string(v) + " of the " + pts_name +
                           " side violates " + render_condition(eq, sys.coords, true) +
                           " of the " + sys_name + " side";
        }
        return {};
    };
    std::string bad = check_side(a, b_facets, "first", "second");
    if (bad.empty()) bad = check_side(b, a_facets, "second", "first");
    if (!bad.empty()) return {false, std::move(bad)};
    return {true, "each side's vertices satisfy the other side's conditions"};
}

}  // namespace grassdual
