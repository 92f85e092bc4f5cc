#include "bcfa/metric.hpp"

#include <algorithm>
#include <array>

namespace bcfa {

RectSet::RectSet(Rational l1, Rational h1, Rational l2, Rational h2)
    : lo1(std::move(l1)), hi1(std::move(h1)), lo2(std::move(l2)), hi2(std::move(h2)) {
    if (lo1 > hi1 || lo2 > hi2) throw DegenerateSetError("rectangle with lo > hi");
}

bool RectSet::contains(const HyperbolicQ& p) const {
    return lo1 <= p.a1() && p.a1() <= hi1 && lo2 <= p.a2() && p.a2() <= hi2;
}

bool RectSet::contains_ball(const HyperbolicQ& c, const HyperbolicQ& r) const {
    // The open ball is (c1 - r1, c1 + r1) x (c2 - r2, c2 + r2); a closed
    // rectangle contains it iff it contains its closure.
    return lo1 <= c.a1() - r.a1() && c.a1() + r.a1() <= hi1 && lo2 <= c.a2() - r.a2() && c.a2() + r.a2() <= hi2;
}

HyperbolicQ RectSet::center() const {
    return {(lo1 + hi1) / 2, (lo2 + hi2) / 2};
}

namespace {

std::vector<Rational> candidate_coords(std::vector<Rational> breaks, const Rational& lo, const Rational& hi) {
    breaks.push_back(lo);
    breaks.push_back(hi);
    std::vector<Rational> clipped;
    for (auto& b : breaks)
        if (lo <= b && b <= hi) clipped.push_back(b);
    std::sort(clipped.begin(), clipped.end());
    clipped.erase(std::unique(clipped.begin(), clipped.end()), clipped.end());
    std::vector<Rational> out;
    for (std::size_t i = 0; i < clipped.size(); ++i) {
        out.push_back(clipped[i]);
        if (i + 1 < clipped.size()) out.push_back((clipped[i] + clipped[i + 1]) / 2);
    }
    return out;
}

Rational distance_to_interval(const Rational& x, const Rational& lo, const Rational& hi) {
    if (x < lo) return lo - x;
    if (x > hi) return x - hi;
    return 0;
}

/// A point of the open ball B(c, h) outside the closed rectangle F: the
/// centre, then the eight compass points at half radius, then an exact
/// interval difference.
std::optional<HyperbolicQ> point_outside(const HyperbolicQ& c, const HyperbolicQ& h, const RectSet& f) {
    if (!f.contains(c)) return c;
    for (int s1 = -1; s1 <= 1; ++s1) {
        for (int s2 = -1; s2 <= 1; ++s2) {
            if (s1 == 0 && s2 == 0) continue;
            HyperbolicQ p(c.a1() + Rational(s1) * h.a1() / 2, c.a2() + Rational(s2) * h.a2() / 2);
            if (!f.contains(p)) return p;
        }
    }
    const std::array<std::array<const Rational*, 2>, 2> bounds = {{{&f.lo1, &f.hi1}, {&f.lo2, &f.hi2}}};
    for (int l = 1; l <= 2; ++l) {
        const Rational& cl = c.component(l);
        const Rational& hl = h.component(l);
        const Rational& lo = *bounds[l - 1][0];
        const Rational& hi = *bounds[l - 1][1];
        std::optional<Rational> coord;
        if (cl - hl < lo) {
            coord = (cl - hl + std::min<Rational>(lo, cl + hl)) / 2;
        } else if (hi < cl + hl) {
            coord = (std::max<Rational>(hi, cl - hl) + cl + hl) / 2;
        }
        if (coord) return l == 1 ? HyperbolicQ(*coord, c.a2()) : HyperbolicQ(c.a1(), *coord);
    }
    return std::nullopt;
}

}  // namespace

std::optional<HyperbolicQ> find_uncovered(std::span<const RectSet> cover, const RectSet& box) {
    std::vector<Rational> b1, b2;
    for (const auto& r : cover) {
        b1.push_back(r.lo1);
        b1.push_back(r.hi1);
        b2.push_back(r.lo2);
        b2.push_back(r.hi2);
    }
    const auto c1 = candidate_coords(std::move(b1), box.lo1, box.hi1);
    const auto c2 = candidate_coords(std::move(b2), box.lo2, box.hi2);
    for (const auto& x1 : c1) {
        for (const auto& x2 : c2) {
            const HyperbolicQ p(x1, x2);
            const bool covered = std::any_of(cover.begin(), cover.end(), [&](const RectSet& r) { return r.contains(p); });
            if (!covered) return p;
        }
    }
    return std::nullopt;
}

BaireWitness baire_witness(std::span<const RectSet> cover, const RectSet& box) {
    if (box.is_degenerate()) throw DegenerateSetError("bounding box has empty interior");
    if (auto gap = find_uncovered(cover, box))
        throw NotACoverError(gap->a1(), gap->a2(), "rectangles do not cover the bounding box");

    HyperbolicQ center = box.center();
    HyperbolicQ half((box.hi1 - box.lo1) / 2, (box.hi2 - box.lo2) / 2);
    std::vector<BaireStep> steps;
    Rational scale(1, 2);  // eps_m <' 1/2^m for 1-based m
    for (std::size_t m = 0; m < cover.size(); ++m, scale /= 2) {
        const RectSet& f = cover[m];
        if (f.contains_ball(center, half)) return {m, center, half, std::move(steps)};

        auto x = point_outside(center, half, f);
        if (!x) throw std::logic_error("half ball neither inside nor outside the closed set");

        // Radius per component: inside the current half ball, below the
        // schedule 1/2^m, and in one separating component below the gap to F.
        std::array<Rational, 2> eps;
        for (int l = 1; l <= 2; ++l) {
            Rational room = half.component(l) - ::abs(x->component(l) - center.component(l));
            eps[l - 1] = std::min<Rational>(room, scale / 2);
        }
        const Rational gap1 = distance_to_interval(x->a1(), f.lo1, f.hi1);
        const Rational gap2 = distance_to_interval(x->a2(), f.lo2, f.hi2);
        if (sgn(gap1) > 0)
            eps[0] = std::min(eps[0], gap1);
        else
            eps[1] = std::min(eps[1], gap2);

        HyperbolicQ radius(eps[0], eps[1]);
        steps.push_back({m, *x, radius});
        center = *x;
        half = HyperbolicQ(eps[0] / 2, eps[1] / 2);
    }
    // The nested balls avoid every F_m, so their last centre is uncovered.
    throw NotACoverError(center.a1(), center.a2(), "nested balls escaped every set of the cover");
}

}  // namespace bcfa
