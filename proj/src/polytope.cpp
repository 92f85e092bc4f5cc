#include "bcfa/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcfa/linalg.hpp"

namespace bcfa {

namespace {

Rational dot(const RealVec& a, const RealVec& b) {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

void check_dim(const RealVec& x, std::size_t dim) {
    if (x.size() != dim) throw DimensionMismatch("point has the wrong dimension");
}

/// Scales a face so its first nonzero normal entry is +-1; keeps direction.
Halfspace normalized(Halfspace h) {
    for (const auto& v : h.a) {
        if (sgn(v) != 0) {
            const Rational s = abs(v);
            for (auto& c : h.a) c /= s;
            h.b /= s;
            break;
        }
    }
    return h;
}

/// A nonzero normal to the affine hull of `dim` points in R^dim, or zeros.
RealVec normal_of(const std::vector<const RealVec*>& pts, std::size_t dim) {
    Matrix<Rational> m(dim - 1, RealVec(dim));
    for (std::size_t r = 0; r + 1 < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m[r][c] = (*pts[r + 1])[c] - (*pts[0])[c];
    auto pivots = rref(m);
    RealVec n(dim);
    if (pivots.size() != dim - 1) return n;
    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    n[free_col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) n[pivots[r]] = -m[r][free_col];
    return n;
}

template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Halfspace> faces_from_vertices(const std::vector<RealVec>& vertices, std::size_t dim) {
    if (dim > 3) throw UnsupportedDimensionError("vertex to face conversion supports dimension <= 3");
    if (!is_full_dimensional(vertices, dim))
        throw DegenerateSetError("vertex set is not full-dimensional");
    std::vector<Halfspace> faces;
    if (dim == 1) {
        Rational lo = vertices[0][0], hi = vertices[0][0];
        for (const auto& v : vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        faces.push_back({{Rational(1)}, hi, false});
        faces.push_back({{Rational(-1)}, -lo, false});
        return faces;
    }
    const auto pts = extreme_points(vertices);
    for_each_combination(pts.size(), dim, [&](const std::vector<std::size_t>& idx) {
        std::vector<const RealVec*> sel;
        for (auto i : idx) sel.push_back(&pts[i]);
        RealVec n = normal_of(sel, dim);
        if (std::all_of(n.begin(), n.end(), [](const Rational& v) { return sgn(v) == 0; })) return;
        const Rational b = dot(n, pts[idx[0]]);
        bool below = true, above = true;
        for (const auto& p : pts) {
            const int s = sgn(dot(n, p) - b);
            if (s > 0) below = false;
            if (s < 0) above = false;
        }
        if (!below && !above) return;
        Halfspace h{n, b, false};
        if (!below) {
            for (auto& c : h.a) c = -c;
            h.b = -h.b;
        }
        h = normalized(std::move(h));
        if (std::find(faces.begin(), faces.end(), h) == faces.end()) faces.push_back(std::move(h));
    });
    return faces;
}

bool satisfies_closed(const std::vector<Halfspace>& faces, const RealVec& x) {
    return std::all_of(faces.begin(), faces.end(), [&](const Halfspace& h) { return dot(h.a, x) <= h.b; });
}

std::vector<RealVec> vertices_from_faces(const std::vector<Halfspace>& faces, std::size_t dim) {
    if (dim > 3) throw UnsupportedDimensionError("face to vertex conversion supports dimension <= 3");
    auto p = RealPolytope::from_halfspaces(dim, faces);
    for (std::size_t k = 0; k < dim; ++k) {
        RealVec c(dim);
        c[k] = 1;
        const auto r = linear_range(p, c);
        if (!r.min || !r.max) throw DegenerateSetError("half-space system is unbounded");
    }
    std::vector<RealVec> out;
    for_each_combination(faces.size(), dim, [&](const std::vector<std::size_t>& idx) {
        Matrix<Rational> a(dim, RealVec(dim));
        std::vector<Rational> b(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) a[r][c] = faces[idx[r]].a[c];
            b[r] = faces[idx[r]].b;
        }
        if (rank(a) != dim) return;
        auto x = solve(a, b);
        if (!x || !satisfies_closed(faces, *x)) return;
        if (std::find(out.begin(), out.end(), *x) == out.end()) out.push_back(std::move(*x));
    });
    if (out.empty()) throw EmptySetError("half-space system is empty");
    return out;
}

}  // namespace

RealPolytope RealPolytope::from_vertices(std::vector<RealVec> vertices, bool open) {
    if (vertices.empty()) throw EmptyInputError("polytope needs at least one vertex");
    RealPolytope p;
    p.dim_ = vertices[0].size();
    if (p.dim_ == 0) throw DimensionMismatch("polytope dimension must be positive");
    for (const auto& v : vertices) check_dim(v, p.dim_);
    p.open_ = open;
    p.vertices_ = std::move(vertices);
    return p;
}

RealPolytope RealPolytope::from_halfspaces(std::size_t dim, std::vector<Halfspace> faces, bool open) {
    if (dim == 0) throw DimensionMismatch("polytope dimension must be positive");
    for (const auto& h : faces) check_dim(h.a, dim);
    RealPolytope p;
    p.dim_ = dim;
    p.open_ = open;
    p.faces_ = std::move(faces);
    return p;
}

RealPolytope RealPolytope::box(std::size_t dim, const Rational& lo, const Rational& hi, bool open) {
    std::vector<Halfspace> faces;
    for (std::size_t k = 0; k < dim; ++k) {
        RealVec a(dim);
        a[k] = 1;
        faces.push_back({a, hi, false});
        a[k] = -1;
        faces.push_back({a, -lo, false});
    }
    return from_halfspaces(dim, std::move(faces), open);
}

const std::vector<RealVec>& RealPolytope::vertices() const {
    if (!vertices_) throw std::logic_error("polytope has no vertex representation");
    return *vertices_;
}

const std::vector<Halfspace>& RealPolytope::halfspaces() const {
    if (!faces_) throw std::logic_error("polytope has no half-space representation");
    return *faces_;
}

RealPolytope with_both_representations(const RealPolytope& p) {
    RealPolytope q(p);
    if (!q.faces_) q.faces_ = faces_from_vertices(*q.vertices_, q.dim_);
    if (!q.vertices_) q.vertices_ = vertices_from_faces(*q.faces_, q.dim_);
    return q;
}

// -- point sets --------------------------------------------------------------

bool in_hull(std::span<const RealVec> points, const RealVec& x) {
    if (points.empty()) return false;
    const std::size_t n = points.size(), d = x.size();
    lp::Program prog(n);
    for (std::size_t k = 0; k < d; ++k) {
        lp::Terms t;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(points[j][k]) != 0) t.emplace_back(j, points[j][k]);
        prog.add_constraint(std::move(t), lp::Relation::eq, x[k]);
    }
    lp::Terms sum;
    for (std::size_t j = 0; j < n; ++j) sum.emplace_back(j, 1);
    prog.add_constraint(sum, lp::Relation::eq, 1);
    prog.set_objective({}, lp::Sense::minimize);
    return prog.solve().optimal();
}

bool in_relative_interior(std::span<const RealVec> points, const RealVec& x) {
    if (points.empty()) return false;
    const std::size_t n = points.size(), d = x.size();
    lp::Program prog(n);
    const std::size_t t = prog.add_variable(true);
    for (std::size_t k = 0; k < d; ++k) {
        lp::Terms terms;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(points[j][k]) != 0) terms.emplace_back(j, points[j][k]);
        prog.add_constraint(std::move(terms), lp::Relation::eq, x[k]);
    }
    lp::Terms sum;
    for (std::size_t j = 0; j < n; ++j) {
        sum.emplace_back(j, 1);
        prog.add_constraint({{j, 1}, {t, -1}}, lp::Relation::ge, 0);
    }
    prog.add_constraint(sum, lp::Relation::eq, 1);
    prog.set_objective({{t, 1}}, lp::Sense::maximize);
    const auto r = prog.solve();
    return r.optimal() && sgn(r.value) > 0;
}

bool is_full_dimensional(std::span<const RealVec> points, std::size_t dim) {
    if (points.size() < dim + 1) return false;
    Matrix<Rational> m(points.size() - 1, RealVec(dim));
    for (std::size_t r = 1; r < points.size(); ++r)
        for (std::size_t c = 0; c < dim; ++c) m[r - 1][c] = points[r][c] - points[0][c];
    return rank(m) == dim;
}

std::vector<RealVec> extreme_points(std::span<const RealVec> points) {
    std::vector<RealVec> uniq;
    for (const auto& p : points)
        if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
    std::vector<RealVec> out;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        std::vector<RealVec> others;
        for (std::size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(uniq[j]);
        if (!in_hull(others, uniq[i])) out.push_back(uniq[i]);
    }
    return out;
}

RealVec centroid(std::span<const RealVec> points) {
    if (points.empty()) throw EmptyInputError("centroid of no points");
    RealVec c(points[0].size());
    for (const auto& p : points)
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += p[k];
    for (auto& v : c) v /= static_cast<long>(points.size());
    return c;
}

// -- polytope queries --------------------------------------------------------

bool contains(const RealPolytope& p, const RealVec& x) {
    check_dim(x, p.dim());
    if (p.has_halfspaces()) {
        for (const auto& h : p.halfspaces()) {
            const Rational v = dot(h.a, x);
            if ((h.strict || p.open()) ? !(v < h.b) : !(v <= h.b)) return false;
        }
        return true;
    }
    if (!p.open()) return in_hull(p.vertices(), x);
    return is_full_dimensional(p.vertices(), p.dim()) && in_relative_interior(p.vertices(), x);
}

bool contains_closure(const RealPolytope& p, const RealVec& x) {
    check_dim(x, p.dim());
    if (p.has_vertices()) return in_hull(p.vertices(), x);
    return satisfies_closed(p.halfspaces(), x);
}

bool zero_in_interior(const RealPolytope& p) {
    if (p.has_halfspaces()) {
        for (const auto& h : p.halfspaces()) {
            const bool trivial = std::all_of(h.a.begin(), h.a.end(), [](const Rational& v) { return sgn(v) == 0; });
            if (trivial ? (sgn(h.b) < 0 || (sgn(h.b) == 0 && (h.strict || p.open()))) : sgn(h.b) <= 0) return false;
        }
        return true;
    }
    for (std::size_t k = 0; k < p.dim(); ++k) {
        for (int s : {1, -1}) {
            RealVec e(p.dim());
            e[k] = s;
            if (!gauge_from_vertices(p.vertices(), e)) return false;
        }
    }
    return true;
}

LinearRange linear_range(const RealPolytope& p, const RealVec& c) {
    check_dim(c, p.dim());
    LinearRange r;
    if (p.has_vertices()) {
        for (const auto& v : p.vertices()) {
            const Rational val = dot(c, v);
            if (!r.min || val < *r.min) {
                r.min = val;
                r.argmin = v;
            }
            if (!r.max || val > *r.max) {
                r.max = val;
                r.argmax = v;
            }
        }
        return r;
    }
    const std::size_t d = p.dim();
    for (auto sense : {lp::Sense::minimize, lp::Sense::maximize}) {
        lp::Program prog(d);
        lp::Terms obj;
        for (std::size_t k = 0; k < d; ++k) {
            prog.set_free(k);
            if (sgn(c[k]) != 0) obj.emplace_back(k, c[k]);
        }
        for (const auto& h : p.halfspaces()) prog.add_dense_constraint(h.a, lp::Relation::le, h.b);
        prog.set_objective(obj, sense);
        const auto res = prog.solve();
        if (res.status == lp::Status::infeasible) throw EmptySetError("polytope is empty");
        if (!res.optimal()) continue;
        if (sense == lp::Sense::minimize) {
            r.min = res.value;
            r.argmin = res.x;
        } else {
            r.max = res.value;
            r.argmax = res.x;
        }
    }
    return r;
}

Rational gauge_from_faces(std::span<const Halfspace> faces, const RealVec& x) {
    Rational best(0);
    for (const auto& h : faces) {
        if (sgn(h.b) <= 0) throw NotAbsorbingError("face with nonpositive offset");
        const Rational v = dot(h.a, x) / h.b;
        if (v > best) best = v;
    }
    return best;
}

double gauge_from_faces(std::span<const Halfspace> faces, const std::vector<double>& x) {
    double best = 0.0;
    for (const auto& h : faces) {
        const double b = h.b.get_d();
        if (b <= 0.0) throw NotAbsorbingError("face with nonpositive offset");
        double s = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) s += h.a[k].get_d() * x[k];
        best = std::max(best, s / b);
    }
    return best;
}

std::optional<Rational> gauge_from_vertices(std::span<const RealVec> vertices, const RealVec& x) {
    const std::size_t n = vertices.size(), d = x.size();
    lp::Program prog(n);
    for (std::size_t k = 0; k < d; ++k) {
        lp::Terms t;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(vertices[j][k]) != 0) t.emplace_back(j, vertices[j][k]);
        prog.add_constraint(std::move(t), lp::Relation::eq, x[k]);
    }
    lp::Terms obj;
    for (std::size_t j = 0; j < n; ++j) obj.emplace_back(j, 1);
    prog.set_objective(obj, lp::Sense::minimize);
    const auto r = prog.solve();
    if (!r.optimal()) return std::nullopt;
    return r.value;
}

std::optional<Rational> gauge(const RealPolytope& p, const RealVec& x) {
    check_dim(x, p.dim());
    if (p.has_halfspaces()) {
        if (!zero_in_interior(p)) throw NotAbsorbingError("0 is not an interior point");
        std::vector<Halfspace> nontrivial;
        for (const auto& h : p.halfspaces())
            if (std::any_of(h.a.begin(), h.a.end(), [](const Rational& v) { return sgn(v) != 0; }))
                nontrivial.push_back(h);
        return gauge_from_faces(nontrivial, x);
    }
    return gauge_from_vertices(p.vertices(), x);
}

void add_gauge_epigraph(lp::Program& prog, const RealPolytope& p, std::span<const AffineExpr> y, std::size_t s) {
    if (y.size() != p.dim()) throw DimensionMismatch("gauge argument has the wrong dimension");
    if (p.has_halfspaces()) {
        // b_i s - a_i . y >= 0 for every face.
        for (const auto& h : p.halfspaces()) {
            if (std::all_of(h.a.begin(), h.a.end(), [](const Rational& v) { return sgn(v) == 0; })) continue;
            if (sgn(h.b) <= 0) throw NotAbsorbingError("face with nonpositive offset");
            lp::Terms t{{s, h.b}};
            Rational rhs;
            for (std::size_t k = 0; k < y.size(); ++k) {
                if (sgn(h.a[k]) == 0) continue;
                for (const auto& [v, c] : y[k].terms) t.emplace_back(v, -h.a[k] * c);
                rhs += h.a[k] * y[k].constant;
            }
            prog.add_constraint(std::move(t), lp::Relation::ge, rhs);
        }
        return;
    }
    // y = sum lambda_j v_j, s = sum lambda_j.
    const auto& verts = p.vertices();
    std::vector<std::size_t> lambda;
    for (std::size_t j = 0; j < verts.size(); ++j) lambda.push_back(prog.add_variable());
    for (std::size_t k = 0; k < y.size(); ++k) {
        lp::Terms t;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (sgn(verts[j][k]) != 0) t.emplace_back(lambda[j], verts[j][k]);
        for (const auto& [v, c] : y[k].terms) t.emplace_back(v, -c);
        prog.add_constraint(std::move(t), lp::Relation::eq, y[k].constant);
    }
    lp::Terms sum{{s, 1}};
    for (auto l : lambda) sum.emplace_back(l, -1);
    prog.add_constraint(std::move(sum), lp::Relation::eq, 0);
}

std::optional<RealVec> common_point(const RealPolytope& a, const RealPolytope& b, bool a_open) {
    if (a.dim() != b.dim()) throw DimensionMismatch("polytopes of different dimension");
    const std::size_t d = a.dim();
    lp::Program prog(d);
    for (std::size_t k = 0; k < d; ++k) prog.set_free(k);
    const std::size_t t = prog.add_variable(true);
    prog.add_constraint({{t, 1}}, lp::Relation::le, 1);

    // Membership of x in P (slack t on every inequality when `slack`).
    auto constrain = [&](const RealPolytope& p, bool slack) {
        if (p.has_halfspaces()) {
            for (const auto& h : p.halfspaces()) {
                lp::Terms terms;
                for (std::size_t k = 0; k < d; ++k)
                    if (sgn(h.a[k]) != 0) terms.emplace_back(k, h.a[k]);
                if (slack) terms.emplace_back(t, 1);
                prog.add_constraint(std::move(terms), lp::Relation::le, h.b);
            }
            return;
        }
        const auto& verts = p.vertices();
        std::vector<std::size_t> lam;
        lp::Terms sum;
        for (std::size_t j = 0; j < verts.size(); ++j) {
            lam.push_back(prog.add_variable());
            sum.emplace_back(lam.back(), 1);
            if (slack) prog.add_constraint({{lam.back(), 1}, {t, -1}}, lp::Relation::ge, 0);
        }
        prog.add_constraint(std::move(sum), lp::Relation::eq, 1);
        for (std::size_t k = 0; k < d; ++k) {
            lp::Terms terms{{k, -1}};
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (sgn(verts[j][k]) != 0) terms.emplace_back(lam[j], verts[j][k]);
            prog.add_constraint(std::move(terms), lp::Relation::eq, 0);
        }
    };
    if (a_open && a.has_vertices() && !is_full_dimensional(a.vertices(), d)) return std::nullopt;
    constrain(a, a_open);
    constrain(b, false);
    prog.set_objective({{t, 1}}, lp::Sense::maximize);
    const auto r = prog.solve();
    if (!r.optimal()) return std::nullopt;
    if (a_open && sgn(r.value) <= 0) return std::nullopt;
    if (!a_open && sgn(r.value) < 0) return std::nullopt;
    return RealVec(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(d));
}

}  // namespace bcfa
