#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcfa/analysis.hpp"
#include "bcfa/linalg.hpp"

namespace bcfa {

namespace {

Rational rdot(const RealVec& a, const RealVec& b) {
    Rational s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

bool all_zero(const RealVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/// y_k = sum_i t_i w_i[k] + sign * x[k], with t_i the variables t0 + i.
std::vector<AffineExpr> combination(const std::vector<RealVec>& w, std::size_t t0, const RealVec& x, int sign,
                                    std::size_t n) {
    std::vector<AffineExpr> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (sgn(w[i][k]) != 0) y[k].terms.emplace_back(t0 + i, w[i][k]);
        if (!x.empty()) y[k].constant = sign * x[k];
    }
    return y;
}

/// Optimum of g(y) - q(y - x) (sign -1, maximized) or q(y + x) - g(y)
/// (sign +1, minimized) over y in span(w); with `boxed`, t in [-1, 1].
Rational extension_bound(const std::vector<RealVec>& w, const std::vector<Rational>& v, const RealPolytope& p,
                         const RealVec& x, int sign, bool boxed) {
    const std::size_t n = p.dim();
    lp::Program prog;
    for (std::size_t i = 0; i < w.size(); ++i) {
        prog.add_variable(true);
        if (boxed) {
            prog.add_constraint({{i, 1}}, lp::Relation::le, 1);
            prog.add_constraint({{i, 1}}, lp::Relation::ge, -1);
        }
    }
    const std::size_t s = prog.add_variable();
    const auto y = combination(w, 0, x, sign, n);
    add_gauge_epigraph(prog, p, y, s);
    lp::Terms obj;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (sgn(v[i]) != 0) obj.emplace_back(i, sign < 0 ? v[i] : Rational(-v[i]));
    obj.emplace_back(s, sign < 0 ? -1 : 1);
    prog.set_objective(std::move(obj), sign < 0 ? lp::Sense::maximize : lp::Sense::minimize);
    const auto r = prog.solve();
    if (!r.optimal()) throw std::logic_error("extension bound LP has no finite optimum");
    return r.value;
}

const std::vector<RealVec>& vertex_list(const RealPolytope& p, std::optional<RealPolytope>& storage) {
    if (p.has_vertices()) return p.vertices();
    storage = with_both_representations(p);
    return storage->vertices();
}

/// The polytope with a face description when one is cheaply available.
RealPolytope for_gauge(const RealPolytope& p) {
    if (p.has_halfspaces() || p.dim() > 3) return p;
    return with_both_representations(p);
}

}  // namespace

// ---------------------------------------------------------------------------
// Dominated extension

Rational domination_gap(const RealVec& f, const RealPolytope& p) {
    const std::size_t n = p.dim();
    if (f.size() != n) throw DimensionMismatch("functional and polytope of different dimension");
    std::vector<RealVec> unit(n, RealVec(n));
    for (std::size_t k = 0; k < n; ++k) unit[k][k] = 1;
    return extension_bound(unit, f, p, {}, -1, true);
}

RealVec extend_component(const std::vector<RealVec>& basis, const std::vector<Rational>& values,
                         const RealPolytope& p, int component) {
    const std::size_t n = p.dim();
    if (basis.size() != values.size()) throw DimensionMismatch("basis and values differ in length");
    for (const auto& b : basis)
        if (b.size() != n) throw DimensionMismatch("basis vector has the wrong dimension");
    if (!zero_in_interior(p)) throw NotAbsorbingError("dominating set does not absorb");
    if (rank(Matrix<Rational>(basis)) != basis.size())
        throw DegenerateBasisError("basis is dependent in component e" + std::to_string(component));

    std::vector<RealVec> w = basis;
    std::vector<Rational> v = values;
    if (!w.empty() && sgn(extension_bound(w, v, p, {}, -1, true)) > 0)
        throw DominationError("g exceeds the gauge on Y in component e" + std::to_string(component));

    for (std::size_t k = 0; k < n && w.size() < n; ++k) {
        RealVec x(n);
        x[k] = 1;
        auto trial = w;
        trial.push_back(x);
        if (rank(trial) == w.size()) continue;
        const Rational lo = extension_bound(w, v, p, x, -1, false);
        const Rational hi = extension_bound(w, v, p, x, +1, false);
        if (lo > hi) throw std::logic_error("empty extension interval");
        w.push_back(std::move(x));
        v.push_back((lo + hi) / 2);
    }
    auto f = solve(Matrix<Rational>(w), v);
    if (!f) throw std::logic_error("extended basis is singular");
    if (sgn(domination_gap(*f, p)) > 0) throw std::logic_error("extension is not dominated by the gauge");
    return *f;
}

DFunctionalQ extend_dominated(const SubspaceFunctional& g, const DConvexSet& b, std::size_t n) {
    if (b.dim() != n) throw DimensionMismatch("dominating set has the wrong dimension");
    if (g.basis.size() != g.values.size()) throw DimensionMismatch("basis and values differ in length");
    RealVec comp[2];
    for (int l = 1; l <= 2; ++l) {
        std::vector<RealVec> basis;
        std::vector<Rational> values;
        for (std::size_t i = 0; i < g.basis.size(); ++i) {
            if (g.basis[i].dim() != n) throw DimensionMismatch("basis vector has the wrong dimension");
            basis.push_back(g.basis[i].component(l));
            values.push_back(g.values[i].component(l));
        }
        comp[l - 1] = extend_component(basis, values, for_gauge(b.component(l)), l);
    }
    return DFunctionalQ(DVectorQ::from_components(comp[0], comp[1]));
}

// ---------------------------------------------------------------------------
// Separation

std::vector<DVectorQ> paired_vertices(const DConvexSet& s) {
    std::optional<RealPolytope> s1, s2;
    const auto& v1 = vertex_list(s.p1, s1);
    const auto& v2 = vertex_list(s.p2, s2);
    std::vector<DVectorQ> out;
    const std::size_t count = std::max(v1.size(), v2.size());
    for (std::size_t i = 0; i < count; ++i) out.push_back(DVectorQ::from_components(v1[i % v1.size()], v2[i % v2.size()]));
    return out;
}

SeparationCertificate separate_hyperbolic(const DConvexSet& a, const DConvexSet& b) {
    if (!a.open) throw NotOpenError("A must be open");
    if (a.dim() != b.dim()) throw DimensionMismatch("A and B of different dimension");
    const std::size_t n = a.dim();

    RealVec ca[2], cb[2];
    for (int l = 1; l <= 2; ++l) {
        std::optional<RealPolytope> sa, sb;
        const auto& va = vertex_list(a.component(l), sa);
        if (!is_full_dimensional(va, n)) throw NotOpenError("A has empty interior in component e" + std::to_string(l));
        if (auto w = common_point(a.component(l), b.component(l), true))
            throw NotDisjointError(l, *w, "A and B meet");
        ca[l - 1] = centroid(va);
        cb[l - 1] = centroid(vertex_list(b.component(l), sb));
    }

    SeparationCertificate cert;
    auto& tr = cert.trace;
    tr.a0 = DVectorQ::from_components(ca[0], ca[1]);
    tr.b0 = DVectorQ::from_components(cb[0], cb[1]);
    tr.x0 = tr.b0 - tr.a0;
    tr.g = minkowski_diff_translate(a, b, tr.a0, tr.b0);

    cert.f = extend_dominated({{tr.x0}, {HyperbolicQ(1, 1)}}, tr.g, n);

    Rational gamma[2];
    for (int l = 1; l <= 2; ++l) {
        std::optional<RealPolytope> sb;
        const RealVec fl = cert.f.coeffs.component(l);
        bool first = true;
        for (const auto& v : vertex_list(b.component(l), sb)) {
            const Rational val = rdot(fl, v);
            if (first || val < gamma[l - 1]) gamma[l - 1] = val;
            first = false;
        }
    }
    cert.gamma = HyperbolicQ(gamma[0], gamma[1]);

    for (const auto& v : paired_vertices(a)) {
        cert.checks.push_back({v, true, eval_d(cert.f, v)});
        tr.gauge_values.push_back(minkowski_gauge(tr.g, v - tr.a0).value());
    }
    for (const auto& v : paired_vertices(b)) cert.checks.push_back({v, false, eval_d(cert.f, v)});
    return cert;
}

CertificateVerdict verify_certificate(const SeparationCertificate& cert, const DConvexSet& a, const DConvexSet& b) {
    CertificateVerdict out;
    if (cert.f.dim() != a.dim() || a.dim() != b.dim()) {
        out.reason = "dimension mismatch";
        return out;
    }
    for (int l = 1; l <= 2; ++l) {
        if (all_zero(cert.f.coeffs.component(l))) {
            out.reason = "f vanishes in a component";
            return out;
        }
    }
    for (const auto& c : cert.checks) {
        if (!(eval_d(cert.f, c.vertex) == c.value)) {
            out.reason = "recorded check value differs from f(vertex)";
            return out;
        }
        if (!contains_closure(c.side_a ? a : b, c.vertex)) {
            out.reason = "check vertex is not in its set";
            return out;
        }
    }
    bool strict = true;
    for (const auto& v : paired_vertices(a)) {
        const auto fv = eval_d(cert.f, v);
        if (!le(fv, cert.gamma)) {
            out.reason = "f(a) exceeds gamma at a vertex of A";
            return out;
        }
        if (!lt_strict(fv, cert.gamma)) strict = false;
    }
    for (const auto& v : paired_vertices(b)) {
        if (!le(cert.gamma, eval_d(cert.f, v))) {
            out.reason = "f(b) is below gamma at a vertex of B";
            return out;
        }
    }
    out.valid = true;
    out.strict_at_vertices = strict;
    return out;
}

OracleVerdict lp_separation_oracle(const DConvexSet& a, const DConvexSet& b) {
    const std::size_t n = a.dim();
    bool sep[2];
    for (int l = 1; l <= 2; ++l) {
        std::optional<RealPolytope> sa, sb;
        const auto& va = vertex_list(a.component(l), sa);
        const auto& vb = vertex_list(b.component(l), sb);
        lp::Program prog(n + 2);
        const std::size_t c = n, t = n + 1;
        for (std::size_t k = 0; k < n + 2; ++k) prog.set_free(k);
        for (std::size_t k = 0; k < n; ++k) {
            prog.add_constraint({{k, 1}}, lp::Relation::le, 1);
            prog.add_constraint({{k, 1}}, lp::Relation::ge, -1);
        }
        prog.add_constraint({{t, 1}}, lp::Relation::le, 1);
        for (const auto& p : va) {
            lp::Terms terms{{c, -1}, {t, 1}};
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(p[k]) != 0) terms.emplace_back(k, p[k]);
            prog.add_constraint(std::move(terms), lp::Relation::le, 0);
        }
        for (const auto& p : vb) {
            lp::Terms terms{{c, -1}};
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(p[k]) != 0) terms.emplace_back(k, p[k]);
            prog.add_constraint(std::move(terms), lp::Relation::ge, 0);
        }
        prog.set_objective({{t, 1}}, lp::Sense::maximize);
        const auto r = prog.solve();
        sep[l - 1] = r.optimal() && sgn(r.value) > 0;
    }
    return {sep[0], sep[1]};
}

BicomplexSeparation separate_bicomplex(const DConvexSet& a, const DConvexSet& b) {
    if (a.dim() % 2 != 0) throw DimensionMismatch("sets must live in the realification D^{2n}");
    BicomplexSeparation out;
    out.certificate = separate_hyperbolic(a, b);
    out.gamma = out.certificate.gamma;
    out.h = reconstruct(out.certificate.f, ReconstructAxis::i);
    if (!(hyperbolic_part(out.h) == out.certificate.f) || !(reconstruct(out.certificate.f, ReconstructAxis::j) == out.h))
        throw std::logic_error("bicomplex reconstruction does not reproduce f");
    return out;
}

// ---------------------------------------------------------------------------
// Hyperplanes

DHyperplane hyperplane_normalize(const DFunctionalQ& g, const HyperbolicQ& c) {
    for (int l = 1; l <= 2; ++l)
        if (all_zero(g.coeffs.component(l)))
            throw DegenerateFunctionalError("functional vanishes in component e" + std::to_string(l));
    if (!c.is_invertible()) throw ZeroDivisorLevelError("level is a zero divisor");
    return {DFunctionalQ(c.inverse() * g.coeffs), HyperbolicQ(1, 1)};
}

std::vector<DVectorQ> sample_grid(const DConvexSet& s, std::size_t target) {
    const std::size_t n = s.dim();
    const std::size_t axes = 2 * n;
    std::size_t m = 2;
    while (static_cast<double>(std::pow(static_cast<double>(m + 1), static_cast<double>(axes))) <=
           static_cast<double>(target))
        ++m;
    // Axis values span 3/2 times the closure's bounding box.
    std::vector<std::vector<Rational>> ticks(axes);
    for (int l = 1; l <= 2; ++l) {
        for (std::size_t k = 0; k < n; ++k) {
            RealVec e(n);
            e[k] = 1;
            const auto r = linear_range(s.component(l), e);
            if (!r.min || !r.max) throw DegenerateSetError("set is unbounded");
            const Rational lo = *r.min * Rational(3, 2), hi = *r.max * Rational(3, 2);
            auto& t = ticks[(l - 1) * n + k];
            for (std::size_t i = 0; i < m; ++i) t.push_back(lo + (hi - lo) * Rational(static_cast<long>(i), static_cast<long>(m - 1)));
        }
    }
    std::vector<DVectorQ> out = paired_vertices(s);
    std::vector<std::size_t> idx(axes, 0);
    for (;;) {
        RealVec x1(n), x2(n);
        for (std::size_t k = 0; k < n; ++k) {
            x1[k] = ticks[k][idx[k]];
            x2[k] = ticks[n + k][idx[n + k]];
        }
        out.push_back(DVectorQ::from_components(x1, x2));
        std::size_t a = 0;
        while (a < axes && ++idx[a] == m) idx[a++] = 0;
        if (a == axes) break;
    }
    return out;
}

DFunctionalQ hyperplane_gauge_bound(const DConvexSet& b, const DHyperplane& l) {
    if (!is_dabsorbing(b)) throw NotAbsorbingError("B does not absorb");
    const DHyperplane h = hyperplane_normalize(l.f, l.c);
    for (int c = 1; c <= 2; ++c) {
        const RealVec fl = h.f.coeffs.component(c);
        const auto r = linear_range(b.component(c), fl);
        if (!r.min || !r.max) throw DegenerateSetError("B is unbounded");
        const bool hits = b.open ? *r.max > 1 : *r.max >= 1;
        if (!hits) continue;
        const Rational span = *r.max - *r.min;
        const Rational t = sgn(span) == 0 ? Rational(0) : Rational((1 - *r.min) / span);
        RealVec w(fl.size());
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = r.argmin[k] + t * (r.argmax[k] - r.argmin[k]);
        throw NotDisjointError(c, w, "hyperplane meets B");
    }
    return h.f;
}

DHyperplane variety_extend_hyperplane(const DVectorQ& x0, const std::vector<DVectorQ>& basis_m, const DConvexSet& b) {
    const std::size_t n = b.dim();
    if (x0.dim() != n) throw DimensionMismatch("x0 has the wrong dimension");
    if (!is_dabsorbing(b)) throw NotAbsorbingError("B does not absorb");
    RealVec comp[2];
    for (int l = 1; l <= 2; ++l) {
        const RealVec xl = x0.component(l);
        std::vector<RealVec> ml;
        for (const auto& m : basis_m) {
            if (m.dim() != n) throw DimensionMismatch("variety direction has the wrong dimension");
            ml.push_back(m.component(l));
        }
        // Independent directions: pivot columns of the transposed stack.
        std::vector<RealVec> indep;
        if (!ml.empty()) {
            auto t = transpose(Matrix<Rational>(ml));
            for (auto p : rref(t)) indep.push_back(ml[p]);
        }
        auto with_x0 = indep;
        with_x0.push_back(xl);
        if (rank(with_x0) == indep.size())
            throw DegenerateVarietyError("x0 lies in the span of the directions in component e" + std::to_string(l));

        // Does x0 + span(indep) meet the component set?
        const RealPolytope& p = b.component(l);
        lp::Program prog;
        for (std::size_t i = 0; i < indep.size(); ++i) prog.add_variable(true);
        const std::size_t u = prog.add_variable(true);
        prog.add_constraint({{u, 1}}, lp::Relation::le, 1);
        const auto y = combination(indep, 0, xl, +1, n);
        bool strict = b.open;
        if (p.has_halfspaces()) {
            for (const auto& h : p.halfspaces()) {
                lp::Terms terms;
                Rational rhs = h.b;
                for (std::size_t k = 0; k < n; ++k) {
                    for (const auto& [v, c] : y[k].terms) terms.emplace_back(v, h.a[k] * c);
                    rhs -= h.a[k] * y[k].constant;
                }
                if (b.open || h.strict) {
                    terms.emplace_back(u, 1);
                    strict = true;
                }
                prog.add_constraint(std::move(terms), lp::Relation::le, rhs);
            }
        } else {
            const auto& verts = p.vertices();
            lp::Terms sum;
            std::vector<std::size_t> lam;
            for (std::size_t j = 0; j < verts.size(); ++j) {
                lam.push_back(prog.add_variable());
                sum.emplace_back(lam.back(), 1);
                if (b.open) prog.add_constraint({{lam.back(), 1}, {u, -1}}, lp::Relation::ge, 0);
            }
            prog.add_constraint(std::move(sum), lp::Relation::eq, 1);
            for (std::size_t k = 0; k < n; ++k) {
                lp::Terms terms;
                for (std::size_t j = 0; j < verts.size(); ++j)
                    if (sgn(verts[j][k]) != 0) terms.emplace_back(lam[j], verts[j][k]);
                for (const auto& [v, c] : y[k].terms) terms.emplace_back(v, -c);
                prog.add_constraint(std::move(terms), lp::Relation::eq, y[k].constant);
            }
        }
        prog.set_objective({{u, 1}}, lp::Sense::maximize);
        const auto r = prog.solve();
        if (r.optimal() && (strict ? sgn(r.value) > 0 : sgn(r.value) >= 0)) {
            RealVec w = xl;
            for (std::size_t i = 0; i < indep.size(); ++i)
                for (std::size_t k = 0; k < n; ++k) w[k] += r.x[i] * indep[i][k];
            throw NotDisjointError(l, w, "variety meets B");
        }

        std::vector<Rational> values(indep.size(), Rational(0));
        values.push_back(1);
        comp[l - 1] = extend_component(with_x0, values, for_gauge(p), l);
    }
    DHyperplane h{DFunctionalQ(DVectorQ::from_components(comp[0], comp[1])), HyperbolicQ(1, 1)};
    if (!h.contains(x0)) throw std::logic_error("hyperplane misses x0");
    for (const auto& m : basis_m)
        if (!(eval_d(h.f, m) == HyperbolicQ(0, 0))) throw std::logic_error("hyperplane is not parallel to the variety");
    return h;
}

}  // namespace bcfa
