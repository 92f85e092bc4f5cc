#include "bcfa/suites.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "bcfa/random.hpp"

namespace bcfa {

namespace {

using io::json;

// Failure records kept per report; further failures are only counted.
constexpr std::size_t kMaxRecords = 50;

// -- conversions from generated exact values to the backend ------------------

template <typename R>
R cv(const Rational& q) {
    if constexpr (std::is_same_v<R, Rational>) return q;
    else return q.get_d();
}
template <typename R>
Complex<R> cv(const ComplexQ& z) { return {cv<R>(z.re), cv<R>(z.im)}; }
template <typename R>
Hyperbolic<R> cv(const HyperbolicQ& h) { return {cv<R>(h.a1()), cv<R>(h.a2())}; }
template <typename R>
Bicomplex<R> cv(const BicomplexQ& z) { return {cv<R>(z.z1()), cv<R>(z.z2())}; }
template <typename R>
DVector<R> cv(const DVectorQ& v) {
    DVector<R> out(v.dim());
    for (std::size_t m = 0; m < v.dim(); ++m) out.coords[m] = cv<R>(v.coords[m]);
    return out;
}
template <typename R>
BCVector<R> cv(const BCVectorQ& v) {
    BCVector<R> out(v.dim());
    for (std::size_t m = 0; m < v.dim(); ++m) out.coords[m] = cv<R>(v.coords[m]);
    return out;
}

// -- encoders for failure records --------------------------------------------

json enc(const Rational& q) { return io::to_json(q); }
json enc(double v) { return v; }
template <typename R>
json enc(const Complex<R>& z) { return {{"re", enc(z.re)}, {"im", enc(z.im)}}; }
template <typename R>
json enc(const Hyperbolic<R>& h) { return {{"e1", enc(h.a1())}, {"e2", enc(h.a2())}}; }
template <typename R>
json enc(const Bicomplex<R>& z) { return {{"z1", enc(z.z1())}, {"z2", enc(z.z2())}}; }
template <typename R>
json enc(const DNorm<R>& n) { return {{"squared", enc(n.squared())}}; }
template <typename R>
json enc(const DVector<R>& v) {
    json out = json::array();
    for (const auto& c : v.coords) out.push_back(enc(c));
    return out;
}
template <typename R>
json enc(const BCVector<R>& v) {
    json out = json::array();
    for (const auto& c : v.coords) out.push_back(enc(c));
    return out;
}
template <typename R>
json enc(const DLinearFunctional<R>& f) { return {{"coeffs", enc(f.coeffs)}}; }
template <typename R>
json enc(const BCLinearFunctional<R>& h) { return {{"coeffs", enc(h.coeffs)}}; }
json enc(const BCMapQ& t) { return io::to_json(t); }
json enc(const DConvexSet& s) { return io::to_json(s); }

// -- recording ----------------------------------------------------------------

class Recorder {
public:
    Recorder(SuiteReport& report, std::string suite, std::size_t& failure_count)
        : report_(report), suite_(std::move(suite)), count_(failure_count) {}

    void begin_case(std::size_t index) {
        index_ = index;
        ++report_.cases_run;
    }

    /// Records a failure when !ok; `details` builds {inputs, observed} lazily.
    void expect(bool ok, const char* check, const char* expected, const std::function<std::pair<json, json>()>& details) {
        if (ok) return;
        ++count_;
        if (report_.failures.size() >= kMaxRecords) return;
        auto [inputs, observed] = details();
        report_.failures.push_back({suite_, check, index_, std::move(inputs), expected, std::move(observed)});
    }

    template <typename T>
    void expect_eq(const char* check, const char* expected, const T& lhs, const T& rhs, const std::function<json()>& inputs) {
        expect(lhs == rhs, check, expected, [&] { return std::pair{inputs(), json{{"lhs", enc(lhs)}, {"rhs", enc(rhs)}}}; });
    }

    /// Runs `body`; an escaping exception becomes a failure of `check`.
    void guard(const char* check, const std::function<json()>& inputs, const std::function<void()>& body) {
        try {
            body();
        } catch (const Error& e) {
            expect(false, check, "no error", [&] { return std::pair{inputs(), io::to_json(e)}; });
        } catch (const std::exception& e) {
            expect(false, check, "no error", [&] { return std::pair{inputs(), json{{"error", e.what()}}}; });
        }
    }

    /// Expects `body` to throw E.
    template <typename E>
    void expect_throw(const char* check, const char* expected, const std::function<json()>& inputs,
                      const std::function<void()>& body) {
        std::string observed = "no error";
        bool ok = false;
        try {
            body();
        } catch (const E&) {
            ok = true;
        } catch (const Error& e) {
            observed = e.kind();
        } catch (const std::exception& e) {
            observed = e.what();
        }
        expect(ok, check, expected, [&] { return std::pair{inputs(), json{{"error", observed}}}; });
    }

private:
    SuiteReport& report_;
    std::string suite_;
    std::size_t& count_;
    std::size_t index_ = 0;
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite) {
    // FNV-1a of the suite name mixed with the user seed.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : suite) h = (h ^ c) * 1099511628211ull;
    return h ^ (seed * 0x9E3779B97F4A7C15ull);
}

std::size_t lp_instances(std::size_t cases) { return std::max<std::size_t>(1, cases / 20); }

// -- algebra ------------------------------------------------------------------

template <typename R>
void algebra_suite(Recorder& rec, Gen& gen, std::size_t cases) {
    using B = Bicomplex<R>;
    const B one = B::one();
    for (std::size_t t = 0; t < cases; ++t) {
        rec.begin_case(t);
        const B z = cv<R>(gen.bicomplex()), w = cv<R>(gen.bicomplex()), v = cv<R>(gen.bicomplex());
        auto in = [&] { return json{{"Z", enc(z)}, {"W", enc(w)}, {"V", enc(v)}}; };

        rec.expect_eq("mul-associative", "(ZW)V = Z(WV)", B((z * w) * v), B(z * (w * v)), in);
        rec.expect_eq("mul-commutative", "ZW = WZ", B(z * w), B(w * z), in);
        rec.expect_eq("distributive", "Z(W+V) = ZW+ZV", B(z * (w + v)), B(z * w + z * v), in);
        rec.expect_eq("mul-identity", "1Z = Z", B(one * z), z, in);
        rec.expect_eq("add-inverse", "Z + (-Z) = 0", B(z + (-z)), B::zero(), in);

        // Product through w-coordinates: (w1 + j w2)(u1 + j u2) = (w1 u1 - w2 u2) + j (w1 u2 + w2 u1).
        const auto w1 = z.w1(), w2 = z.w2(), u1 = w.w1(), u2 = w.w2();
        rec.expect_eq("w-product", "ZW agrees with the w-coordinate product", B(z * w),
                      B::from_w(w1 * u1 - w2 * u2, w1 * u2 + w2 * u1), in);
        rec.expect_eq("w-roundtrip", "Z = w1 + j w2", B::from_w(w1, w2), z, in);

        const B d1 = conjugate(z, Conjugation::dagger1), d2 = conjugate(z, Conjugation::dagger2),
                d3 = conjugate(z, Conjugation::dagger3);
        rec.expect_eq("dagger1-definition", "Z^dagger1 = conj w1 + j conj w2", d1, B::from_w(w1.conj(), w2.conj()), in);
        rec.expect_eq("dagger2-definition", "Z^dagger2 = w1 - j w2", d2, B::from_w(w1, -w2), in);
        rec.expect_eq("dagger3-definition", "Z^dagger3 = conj w1 - j conj w2", d3, B::from_w(w1.conj(), -w2.conj()), in);
        rec.expect_eq("dagger-composition", "(Z^dagger2)^dagger1 = Z^dagger3", conjugate(d2, Conjugation::dagger1), d3, in);
        rec.expect_eq("dagger-composition", "(Z^dagger1)^dagger2 = Z^dagger3", conjugate(d1, Conjugation::dagger2), d3, in);
        rec.expect_eq("dagger-involution", "dagger1 twice is the identity", conjugate(d1, Conjugation::dagger1), z, in);
        rec.expect_eq("dagger-involution", "dagger2 twice is the identity", conjugate(d2, Conjugation::dagger2), z, in);
        rec.expect_eq("dagger-involution", "dagger3 twice is the identity", conjugate(d3, Conjugation::dagger3), z, in);
        rec.expect_eq("dagger-multiplicative", "(ZW)^dagger3 = Z^dagger3 W^dagger3", conjugate(B(z * w), Conjugation::dagger3),
                      B(d3 * conjugate(w, Conjugation::dagger3)), in);

        const B k_mod(Hyperbolic<R>(z.z1().norm2(), z.z2().norm2()));
        rec.expect_eq("modulus-k", "Z Z^dagger3 = |Z|_k^2", B(z * d3), k_mod, in);
        rec.expect_eq("modulus-k", "modulus(Z, k) = |Z|_k^2", modulus(z, ModulusKind::k), k_mod, in);
        rec.expect_eq("dnorm-multiplicative", "|ZW|_k = |Z|_k |W|_k", dnorm_k(B(z * w)), DNorm<R>(dnorm_k(z) * dnorm_k(w)), in);

        if (t == 0) {
            rec.expect_eq("k-idempotent", "k = e1 - e2", B::unit_k(), B(B::e1() - B::e2()), in);
            rec.expect_eq("k-idempotent", "ij = k", B(B::unit_i() * B::unit_j()), B::unit_k(), in);
            rec.expect_eq("k-idempotent", "k^2 = 1", B(B::unit_k() * B::unit_k()), one, in);
            rec.expect_eq("k-idempotent", "e1 e2 = 0", B(B::e1() * B::e2()), B::zero(), in);
            rec.expect_eq("k-idempotent", "e1 + e2 = 1", B(B::e1() + B::e2()), one, in);
        }

        if (z.is_invertible()) {
            rec.guard("inverse-law", in, [&] { rec.expect_eq("inverse-law", "Z Z^-1 = 1", B(z * bc_inverse(z)), one, in); });
        } else if (z.is_zero()) {
            rec.expect_throw<ZeroError>("inverse-zero", "ZeroError", in, [&] { (void)bc_inverse(z); });
        } else {
            rec.expect_throw<NullConeError>("inverse-null-cone", "NullConeError", in, [&] { (void)bc_inverse(z); });
        }
    }
}

// -- order --------------------------------------------------------------------

template <typename R>
OrderResult component_order(const Hyperbolic<R>& a, const Hyperbolic<R>& b) {
    using T = RealTraits<R>;
    const bool eq = T::eq(a.a1(), b.a1()) && T::eq(a.a2(), b.a2());
    if (eq) return OrderResult::equal;
    if (T::le(a.a1(), b.a1()) && T::le(a.a2(), b.a2())) return OrderResult::less;
    if (T::le(b.a1(), a.a1()) && T::le(b.a2(), a.a2())) return OrderResult::greater;
    return OrderResult::incomparable;
}

template <typename R>
void order_suite(Recorder& rec, Gen& gen, std::size_t cases) {
    using H = Hyperbolic<R>;
    using T = RealTraits<R>;
    for (std::size_t t = 0; t < cases; ++t) {
        rec.begin_case(t);
        const H a = cv<R>(gen.hyperbolic());
        const H b = gen.integer(0, 4) == 0 ? a : cv<R>(gen.hyperbolic());
        const H c = cv<R>(gen.hyperbolic());
        auto in = [&] { return json{{"alpha", enc(a)}, {"beta", enc(b)}, {"gamma", enc(c)}}; };

        const auto ab = compare(a, b);
        rec.expect(ab == component_order(a, b), "compare-components", "compare agrees with the component order",
                   [&] { return std::pair{in(), json{{"compare", to_string(ab)}}}; });
        const auto ba = compare(b, a);
        const bool mirrored = (ab == OrderResult::less) == (ba == OrderResult::greater) &&
                              (ab == OrderResult::equal) == (ba == OrderResult::equal) &&
                              (ab == OrderResult::incomparable) == (ba == OrderResult::incomparable);
        rec.expect(mirrored, "compare-mirror", "compare(b, a) mirrors compare(a, b)",
                   [&] { return std::pair{in(), json{{"ab", to_string(ab)}, {"ba", to_string(ba)}}}; });
        rec.expect(le(a, a), "le-reflexive", "a <=' a", [&] { return std::pair{in(), json{}}; });
        rec.expect(!(le(a, b) && le(b, a)) || a == b, "le-antisymmetric", "a <=' b <=' a implies a = b",
                   [&] { return std::pair{in(), json{}}; });
        rec.expect(!(le(a, b) && le(b, c)) || le(a, c), "le-transitive", "a <=' b <=' c implies a <=' c",
                   [&] { return std::pair{in(), json{}}; });
        rec.expect(!lt_strict(a, b) || (le(a, b) && !(a == b)), "lt-implies-le", "a <' b implies a <=' b, a != b",
                   [&] { return std::pair{in(), json{}}; });

        std::vector<H> set{a, b, c};
        for (int extra = static_cast<int>(gen.integer(0, 2)); extra > 0; --extra) set.push_back(cv<R>(gen.hyperbolic()));
        auto set_in = [&] {
            json s = json::array();
            for (const auto& x : set) s.push_back(enc(x));
            return json{{"set", s}};
        };
        const H s = sup_d(set), i = inf_d(set);
        bool upper = true, lower = true, attained_s1 = false, attained_s2 = false, attained_i1 = false, attained_i2 = false;
        for (const auto& x : set) {
            upper = upper && le(x, s);
            lower = lower && le(i, x);
            attained_s1 = attained_s1 || T::eq(x.a1(), s.a1());
            attained_s2 = attained_s2 || T::eq(x.a2(), s.a2());
            attained_i1 = attained_i1 || T::eq(x.a1(), i.a1());
            attained_i2 = attained_i2 || T::eq(x.a2(), i.a2());
        }
        rec.expect(upper && attained_s1 && attained_s2, "sup-least-upper-bound", "sup_D is the least upper bound",
                   [&] { return std::pair{set_in(), json{{"sup", enc(s)}}}; });
        rec.expect(lower && attained_i1 && attained_i2, "inf-greatest-lower-bound", "inf_D is the greatest lower bound",
                   [&] { return std::pair{set_in(), json{{"inf", enc(i)}}}; });

        const H m = cv<R>(gen.positive_hyperbolic());
        bool direct = true;
        for (const auto& x : set)
            direct = direct && T::lt(T::abs(x.a1()), m.a1()) && T::lt(T::abs(x.a2()), m.a2());
        const bool bounded = is_d_bounded(set, m);
        rec.expect(bounded == direct, "d-bounded", "is_d_bounded agrees with the component check",
                   [&] { return std::pair{set_in(), json{{"M", enc(m)}, {"bounded", bounded}}}; });
    }
}

// -- metric -------------------------------------------------------------------

template <typename R>
void metric_suite(Recorder& rec, Gen& gen, std::size_t cases) {
    using T = RealTraits<R>;
    for (std::size_t t = 0; t < cases; ++t) {
        rec.begin_case(t);
        const std::size_t n = 1 + gen.index(3);
        const auto x = cv<R>(gen.bcvector(n)), y = cv<R>(gen.bcvector(n)), z = cv<R>(gen.bcvector(n));
        const auto lam = cv<R>(gen.bicomplex()), lam0 = cv<R>(gen.bicomplex());
        auto in = [&] {
            return json{{"x", enc(x)}, {"y", enc(y)}, {"z", enc(z)}, {"lambda", enc(lam)}, {"lambda0", enc(lam0)}};
        };
        const BCVector<R> zero(n);

        rec.expect(le_sum(dmetric(x, z), dmetric(x, y), dmetric(y, z)), "triangle", "d(x,z) <=' d(x,y) + d(y,z)",
                   [&] { return std::pair{in(), json{{"d_xz", enc(dmetric(x, z))}}}; });
        rec.expect_eq("symmetric", "d(x,y) = d(y,x)", dmetric(x, y), dmetric(y, x), in);
        rec.expect_eq("translation-invariant", "d(x+z, y+z) = d(x,y)", dmetric(x + z, y + z), dmetric(x, y), in);
        rec.expect_eq("norm-from-metric", "||x||_D = d(x, 0)", dnorm(x), dmetric(x, zero), in);
        const bool is_zero_norm = dnorm(x).squared().is_zero();
        rec.expect(is_zero_norm == x.is_zero(), "norm-zero", "||x||_D = 0 iff x = 0",
                   [&] { return std::pair{in(), json{{"norm", enc(dnorm(x))}}}; });
        rec.expect(le_sum(dnorm(x + y), dnorm(x), dnorm(y)), "norm-triangle", "||x+y||_D <=' ||x||_D + ||y||_D",
                   [&] { return std::pair{in(), json{{"norm", enc(dnorm(x + y))}}}; });
        rec.expect_eq("norm-negation", "||-x||_D = ||x||_D", dnorm(Bicomplex<R>(R(-1)) * x), dnorm(x), in);
        const auto lhs = dnorm(lam * x - lam0 * y);
        rec.expect(le_sum(lhs, DNorm<R>(dnorm_k(lam) * dnorm(x - y)), DNorm<R>(dnorm_k(lam - lam0) * dnorm(y))),
                   "scalar-continuity", "||lx - l0 y|| <=' |l|_k ||x - y|| + |l - l0|_k ||y||",
                   [&] { return std::pair{in(), json{{"lhs", enc(lhs)}}}; });

        const auto center = cv<R>(gen.dvector(n)), point = cv<R>(gen.dvector(n));
        const auto radius = cv<R>(gen.positive_hyperbolic());
        R s1(0), s2(0);
        for (std::size_t m = 0; m < n; ++m) {
            const auto d = point.coords[m] - center.coords[m];
            s1 += d.a1() * d.a1();
            s2 += d.a2() * d.a2();
        }
        const bool direct = T::lt(s1, radius.a1() * radius.a1()) && T::lt(s2, radius.a2() * radius.a2());
        const bool inside = ball_contains(DBall<R>(center, radius), point);
        rec.expect(inside == direct, "ball-membership", "y in B(c, r) iff d(c, y) <' r componentwise", [&] {
            return std::pair{json{{"center", enc(center)}, {"radius", enc(radius)}, {"y", enc(point)}},
                             json{{"contains", inside}}};
        });
    }

    // The nested-ball procedure runs on exact rectangles in D.
    const RectSet box(-2, 3, -1, 4);
    for (std::size_t t = 0; t < lp_instances(cases); ++t) {
        rec.begin_case(cases + t);
        auto cover = gen.rectangle_cover(box, 1 + gen.index(4), 1 + gen.index(4));
        auto in = [&] {
            json sets = json::array();
            for (const auto& r : cover) sets.push_back(io::to_json(r));
            return json{{"box", io::to_json(box)}, {"sets", sets}};
        };
        rec.guard("baire-witness", in, [&] {
            const auto w = baire_witness(cover, box);
            rec.expect(w.index < cover.size() && w.radius.is_positive() && cover[w.index].contains_ball(w.center, w.radius),
                       "baire-witness", "returned ball lies in the returned rectangle", [&] {
                           return std::pair{in(), json{{"index", w.index}, {"center", enc(w.center)}, {"radius", enc(w.radius)}}};
                       });
        });
        cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(gen.index(cover.size())));
        rec.expect_throw<NotACoverError>("baire-not-a-cover", "NotACoverError", in, [&] { (void)baire_witness(cover, box); });
    }
}

// -- linear -------------------------------------------------------------------

template <typename R>
void linear_suite(Recorder& rec, Gen& gen, std::size_t cases) {
    using B = Bicomplex<R>;
    for (std::size_t t = 0; t < cases; ++t) {
        rec.begin_case(t);
        const std::size_t n = 1 + gen.index(4);
        const BCLinearFunctional<R> h(cv<R>(gen.bcvector(n)));
        const auto x = cv<R>(gen.bcvector(n));
        const DLinearFunctional<R> f(cv<R>(gen.dvector(2 * n)));
        auto in = [&] { return json{{"h", enc(h)}, {"x", enc(x)}, {"f", enc(f)}}; };

        const auto hd = hyperbolic_part(h);
        const auto expected = eval_d(hd, x.realify());
        for (auto form : kAllFunctionalForms) {
            rec.expect_eq("hyperbolic-part-forms", "every derivation of h_D(x) agrees", eval_hyperbolic_part(h, x, form),
                          expected, in);
            rec.expect_eq("hyperbolic-part-forms", "every derivation of h_D agrees coefficientwise",
                          hyperbolic_part_via(h, form).coeffs, hd.coeffs, in);
        }
        rec.expect_eq("reconstruct-i", "h = h_D(x) - i h_D(ix)", reconstruct(hd, ReconstructAxis::i).coeffs, h.coeffs, in);
        rec.expect_eq("reconstruct-j", "h = h_D(x) - j h_D(jx)", reconstruct(hd, ReconstructAxis::j).coeffs, h.coeffs, in);

        const auto hr = reconstruct(f, ReconstructAxis::i);
        rec.expect_eq("reconstruct-axes", "i-form equals j-form", hr.coeffs, reconstruct(f, ReconstructAxis::j).coeffs, in);
        rec.expect_eq("reconstruct-part", "hyperbolic part of the reconstruction is f", hyperbolic_part(hr).coeffs, f.coeffs, in);
        rec.expect_eq("reconstruct-pointwise", "coefficients evaluate like the formula", eval_bc(hr, x),
                      eval_reconstructed(f, ReconstructAxis::j, x), in);
        const B units[] = {B::unit_i(), B::unit_j(), B::unit_k(), cv<R>(gen.bicomplex())};
        for (const auto& u : units)
            rec.expect_eq("bc-linearity", "h(lambda x) = lambda h(x)", eval_bc(hr, u * x), B(u * eval_bc(hr, x)), in);

        const auto g = DLinearFunctional<R>(cv<R>(gen.dvector(n)));
        const auto p = cv<R>(gen.dvector(n)), q = cv<R>(gen.dvector(n));
        const auto alpha = cv<R>(gen.hyperbolic());
        DVector<R> combo(n);
        for (std::size_t m = 0; m < n; ++m) combo.coords[m] = alpha * p.coords[m] + q.coords[m];
        rec.expect_eq("d-linearity", "f(alpha x + y) = alpha f(x) + f(y)", eval_d(g, combo),
                      Hyperbolic<R>(alpha * eval_d(g, p) + eval_d(g, q)), in);
        rec.expect_eq("split", "e1 f1(x1) + e2 f2(x2) = f(x)", eval_split(split_functional(g), p), eval_d(g, p), in);
    }
}

// -- convex (exact LP) ----------------------------------------------------------

void convex_suite(Recorder& rec, Gen& gen, std::size_t cases) {
    for (std::size_t t = 0; t < cases; ++t) {
        rec.begin_case(t);
        const std::size_t n = 1 + gen.index(3);
        const auto b = gen.absorbing_set(n);
        const auto x = DVectorQ::from_components(gen.real_vector(n, 6, 2), gen.real_vector(n, 6, 2));
        const auto y = DVectorQ::from_components(gen.real_vector(n, 6, 2), gen.real_vector(n, 6, 2));
        const auto lam = gen.positive_hyperbolic();
        auto in = [&] { return json{{"B", enc(b)}, {"x", enc(x)}, {"y", enc(y)}, {"lambda", enc(lam)}}; };

        rec.guard("gauge", in, [&] {
            for (int l = 1; l <= 2; ++l) {
                const auto p = with_both_representations(b.component(l));
                const auto xl = x.component(l);
                const auto faces = gauge_from_faces(p.halfspaces(), xl);
                const auto verts = gauge_from_vertices(p.vertices(), xl);
                rec.expect(verts && *verts == faces, "gauge-faces-vertices", "face formula equals the vertex LP", [&] {
                    return std::pair{in(), json{{"component", l}, {"faces", enc(faces)}, {"vertices", verts ? enc(*verts) : json()}}};
                });
            }
            const auto qx = minkowski_gauge(b, x).value(), qy = minkowski_gauge(b, y).value();
            const auto qxy = minkowski_gauge(b, x + y).value();
            rec.expect(le(qxy, HyperbolicQ(qx + qy)), "gauge-subadditive", "q(x+y) <=' q(x) + q(y)",
                       [&] { return std::pair{in(), json{{"q_x", enc(qx)}, {"q_y", enc(qy)}, {"q_xy", enc(qxy)}}}; });
            DVectorQ lx(n);
            for (std::size_t m = 0; m < n; ++m) lx.coords[m] = lam * x.coords[m];
            rec.expect_eq("gauge-homogeneous", "q(lambda x) = lambda q(x)", minkowski_gauge(b, lx).value(), HyperbolicQ(lam * qx), in);
            rec.expect(contains_closure(b, x) == le(qx, HyperbolicQ(1, 1)), "gauge-membership", "x in closed B iff q(x) <=' 1",
                       [&] { return std::pair{in(), json{{"q_x", enc(qx)}}}; });

            const auto a = gen.absorbing_set(n);
            const DVectorQ zero(n);
            const auto g = minkowski_diff_translate(a, b, zero, zero);
            rec.expect(contains(g, zero), "difference-contains-zero", "0 in A - B", [&] { return std::pair{in(), enc(g)}; });

            const auto f = gen.nondegenerate_dfunctional(n);
            const auto img = image_convex(f, b);
            for (int l = 1; l <= 2; ++l) {
                const auto fl = f.coeffs.component(l);
                std::optional<Rational> lo, hi;
                for (const auto& v : b.component(l).vertices()) {
                    Rational s;
                    for (std::size_t k = 0; k < n; ++k) s += fl[k] * v[k];
                    if (!lo || s < *lo) lo = s;
                    if (!hi || s > *hi) hi = s;
                }
                const bool ok = l == 1 ? (img.lo1 == *lo && img.hi1 == *hi) : (img.lo2 == *lo && img.hi2 == *hi);
                rec.expect(ok, "image-interval", "f(B) spans the vertex values", [&] {
                    return std::pair{in(), json{{"f", enc(f)}, {"component", l}}};
                });
            }

            std::vector<DVectorQ> pts;
            for (int k = static_cast<int>(gen.integer(1, 5)); k > 0; --k) pts.push_back(gen.dvector(n));
            const auto hull = dconvex_hull(pts);
            bool inside = true;
            for (const auto& p : pts) inside = inside && contains_closure(hull, p);
            rec.expect(inside, "hull-contains", "the D-convex hull contains its points", [&] { return std::pair{in(), enc(hull)}; });
            rec.expect(is_dabsorbing(b), "absorbing", "generated set absorbs", [&] { return std::pair{in(), json{}}; });
        });
    }
}

// -- separation (exact LP) --------------------------------------------------------

void separation_suite(Recorder& rec, Gen& gen, std::size_t instances) {
    for (std::size_t t = 0; t < instances; ++t) {
        rec.begin_case(t);
        const std::size_t n = 1 + gen.index(3);
        const auto [a, b] = gen.separated_pair(n);
        auto in = [&] { return json{{"A", enc(a)}, {"B", enc(b)}}; };
        rec.guard("separate", in, [&] {
            const auto cert = separate_hyperbolic(a, b);
            const auto verdict = verify_certificate(cert, a, b);
            rec.expect(verdict.valid && verdict.strict_at_vertices, "certificate", "f(a) <' gamma <=' f(b) at every vertex",
                       [&] { return std::pair{in(), json{{"certificate", io::to_json(cert)}, {"reason", verdict.reason}}}; });
            rec.expect(lp_separation_oracle(a, b).separable(), "oracle-agrees", "LP oracle finds the pair separable",
                       [&] { return std::pair{in(), json{}}; });
            if (n == 2) {
                const auto bs = separate_bicomplex(a, b);
                rec.expect(hyperbolic_part(bs.h) == bs.certificate.f, "bicomplex-part", "hyperbolic part of h is f",
                           [&] { return std::pair{in(), json{{"h", io::to_json(bs.h)}}}; });
            }
        });

        const auto [oa, ob] = gen.overlapping_pair(n);
        auto oin = [&] { return json{{"A", enc(oa)}, {"B", enc(ob)}}; };
        rec.expect_throw<NotDisjointError>("overlap-rejected", "NotDisjointError", oin, [&] { (void)separate_hyperbolic(oa, ob); });
        rec.expect(!lp_separation_oracle(oa, ob).separable(), "oracle-agrees", "LP oracle finds the pair inseparable",
                   [&] { return std::pair{oin(), json{}}; });
    }
}

// -- theorems ---------------------------------------------------------------------

void theorems_suite(Recorder& rec, Gen& gen, std::size_t instances) {
    auto& rng = gen.engine();
    for (std::size_t t = 0; t < instances; ++t) {
        rec.begin_case(t);
        const std::size_t n = 1 + gen.index(3), m = 1 + gen.index(3);

        MapFamily family;
        for (int k = static_cast<int>(gen.integer(1, 4)); k > 0; --k) family.push_back(gen.map(m, n));
        const HyperbolicD eps = to_double(gen.positive_hyperbolic());
        auto fam_in = [&] {
            json maps = json::array();
            for (const auto& f : family) maps.push_back(enc(f));
            return json{{"family", maps}, {"eps", enc(eps)}};
        };
        rec.guard("ubp", fam_in, [&] {
            const auto bound = ubp_bound(family, eps);
            const auto bad = ubp_failures(family, bound, eps, 200, rng);
            rec.expect(bad == 0, "ubp", "||x|| <' delta implies ||T x|| <' eps for every T",
                       [&] { return std::pair{fam_in(), json{{"M", enc(bound.m)}, {"delta", enc(bound.delta)}, {"failures", bad}}}; });
        });

        const auto tmap = gen.invertible_map(n);
        auto t_in = [&] { return json{{"T", enc(tmap)}}; };
        rec.guard("omt", t_in, [&] {
            const auto d = omt_delta(tmap).delta;
            const auto bad = omt_failures(tmap, d, 200, rng);
            rec.expect(bad == 0, "omt", "B(0, delta) inside T(B(0, 1))",
                       [&] { return std::pair{t_in(), json{{"delta", enc(d)}, {"failures", bad}}}; });
            const auto tight = omt_extremal_preimage_norm(tmap, d, 1.0);
            rec.expect(std::fabs(tight.a1() - 1.0) <= 1e-6 && std::fabs(tight.a2() - 1.0) <= 1e-6, "omt-tight",
                       "delta is attained along the weakest direction",
                       [&] { return std::pair{t_in(), json{{"preimage_norm", enc(tight)}}}; });
            const auto inv = inverse_map(tmap);
            rec.expect(inv.inverse * tmap == BCMapQ::identity(n) && tmap * inv.inverse == BCMapQ::identity(n), "imt",
                       "T T^-1 = T^-1 T = I", [&] { return std::pair{t_in(), json{{"inverse", enc(inv.inverse)}}}; });
        });

        const auto gmap = gen.map(m, n);
        const auto basis = gen.graph_basis(gmap);
        auto g_in = [&] {
            json vs = json::array();
            for (const auto& v : basis) vs.push_back(enc(v));
            return json{{"basis", vs}, {"n", n}};
        };
        rec.guard("cgt", g_in, [&] {
            const auto rebuilt = map_from_graph(basis, n);
            rec.expect(rebuilt == gmap, "cgt", "map_from_graph recovers T", [&] {
                return std::pair{g_in(), json{{"T", enc(gmap)}, {"rebuilt", enc(rebuilt)}}};
            });
        });
        const auto bad_basis = gen.non_graph_basis(n, m);
        rec.expect_throw<NotAGraphError>("cgt-reject", "NotAGraphError",
                                         [&] {
                                             json vs = json::array();
                                             for (const auto& v : bad_basis) vs.push_back(enc(v));
                                             return json{{"basis", vs}, {"n", n}};
                                         },
                                         [&] { (void)map_from_graph(bad_basis, n); });

        const auto g = gen.nondegenerate_dfunctional(n);
        const auto c = gen.invertible_hyperbolic(), gamma = gen.invertible_hyperbolic();
        auto h_in = [&] { return json{{"g", enc(g)}, {"c", enc(c)}, {"gamma", enc(gamma)}}; };
        rec.guard("hyperplane", h_in, [&] {
            const auto h1 = hyperplane_normalize(g, c);
            const auto h2 = hyperplane_normalize(DFunctionalQ(gamma * g.coeffs), HyperbolicQ(gamma * c));
            bool same = h1.f == h2.f && h1.c == h2.c;
            for (int s = 0; s < 10; ++s) {
                const auto x = gen.dvector(n);
                same = same && h1.contains(x) == h2.contains(x) && h1.contains(x) == (eval_d(g, x) == c);
            }
            rec.expect(same, "hyperplane-rescaling", "{g = c} and {gamma g = gamma c} coincide",
                       [&] { return std::pair{h_in(), json{{"f1", enc(h1.f)}, {"f2", enc(h2.f)}}}; });
        });
        rec.expect_throw<ZeroDivisorLevelError>("hyperplane-zero-divisor", "ZeroDivisorLevelError", h_in,
                                                [&] { (void)hyperplane_normalize(g, HyperbolicQ(c.a1(), 0)); });

        const auto bset = gen.absorbing_set(n, gen.coin());
        const auto plane = gen.disjoint_hyperplane(bset);
        auto b_in = [&] { return json{{"B", enc(bset)}, {"f", enc(plane.f)}, {"c", enc(plane.c)}}; };
        rec.guard("hyperplane-gauge-bound", b_in, [&] {
            const auto f = hyperplane_gauge_bound(bset, plane);
            bool ok = true;
            for (const auto& x : sample_grid(bset, 200)) {
                DVectorQ neg(n);
                for (std::size_t k = 0; k < n; ++k) neg.coords[k] = -x.coords[k];
                const auto fx = eval_d(f, x);
                ok = ok && le(HyperbolicQ(-minkowski_gauge(bset, neg).value()), fx) && le(fx, minkowski_gauge(bset, x).value());
            }
            rec.expect(ok, "hyperplane-gauge-bound", "-q(-x) <=' f(x) <=' q(x) on the grid",
                       [&] { return std::pair{b_in(), json{{"f", enc(f)}}}; });
        });
    }
}

void run_one(const std::string& name, std::uint64_t seed, std::size_t cases, Backend backend, SuiteReport& report,
             std::size_t& failure_count) {
    Recorder rec(report, name, failure_count);
    Gen gen(suite_seed(seed, name));
    const bool exact = backend == Backend::exact;
    if (name == "algebra") {
        exact ? algebra_suite<Rational>(rec, gen, cases) : algebra_suite<double>(rec, gen, cases);
    } else if (name == "order") {
        exact ? order_suite<Rational>(rec, gen, cases) : order_suite<double>(rec, gen, cases);
    } else if (name == "metric") {
        exact ? metric_suite<Rational>(rec, gen, cases) : metric_suite<double>(rec, gen, cases);
    } else if (name == "linear") {
        exact ? linear_suite<Rational>(rec, gen, cases) : linear_suite<double>(rec, gen, cases);
    } else if (name == "convex") {
        convex_suite(rec, gen, std::max<std::size_t>(1, cases / 5));
    } else if (name == "separation") {
        separation_suite(rec, gen, lp_instances(cases));
    } else if (name == "theorems") {
        theorems_suite(rec, gen, lp_instances(cases));
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"algebra", "order", "metric", "linear", "convex", "separation", "theorems"};
    return names;
}

bool is_suite_name(const std::string& name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t cases, Backend backend) {
    if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.seed = seed;
    report.backend = backend;
    std::size_t failure_count = 0;
    if (name == "all") {
        for (const auto& s : suite_names()) run_one(s, seed, cases, backend, report, failure_count);
    } else {
        run_one(name, seed, cases, backend, report, failure_count);
    }
    report.failure_count = failure_count;
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

io::json to_json(const SuiteReport& report) {
    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"suite", f.suite},
                            {"check", f.check},
                            {"case", f.case_index},
                            {"inputs", f.inputs},
                            {"expected", f.expected},
                            {"observed", f.observed}});
    const std::time_t now = std::time(nullptr);
    std::ostringstream utc;
    utc << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    return {{"suite", report.suite},
            {"seed", report.seed},
            {"backend", report.backend == Backend::exact ? "exact" : "float"},
            {"cases_run", report.cases_run},
            {"failure_count", report.failure_count},
            {"failures", std::move(failures)},
            {"passed", report.passed()},
            {"timestamp", {{"utc", utc.str()}, {"wall_ms", report.wall_ms}}}};
}

std::string to_text(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " seed " << report.seed << " backend "
        << (report.backend == Backend::exact ? "exact" : "float") << ": " << report.cases_run << " cases, "
        << report.failure_count << " failures " << (report.passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : report.failures)
        out << "  [" << f.suite << " #" << f.case_index << "] " << f.check << ": expected " << f.expected
            << "; observed " << f.observed.dump() << "\n";
    if (report.failures.size() < report.failure_count)
        out << "  ... " << (report.failure_count - report.failures.size()) << " more\n";
    return out.str();
}

}  // namespace bcfa
