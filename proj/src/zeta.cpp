#include "ptl/zeta.hpp"

#include <algorithm>
#include <map>

namespace ptl::zeta {

long NewtonPolygon::height() const {
    long h = 0;
    for (const auto& [s, m] : slopes) h += m;
    return h;
}

Rat NewtonPolygon::value_at(long x) const {
    Rat v(0);
    long used = 0;
    for (const auto& [s, m] : slopes) {
        if (used >= x) break;
        long take = std::min(m, x - used);
        v = v + s * Rat(take);
        used += take;
    }
    return v;
}

long NewtonPolygon::mult_of(Rat s) const {
    for (const auto& [sl, m] : slopes)
        if (sl == s) return m;
    return 0;
}

bool NewtonPolygon::is_symmetric() const {
    for (const auto& [s, m] : slopes)
        if (mult_of(Rat(1) - s) != m) return false;
    return true;
}

bool operator<(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.slopes < b.slopes;
}

NewtonPolygon polygon_from_slopes(std::vector<std::pair<Rat, long>> raw) {
    std::map<std::pair<std::int64_t, std::int64_t>, long> acc;
    for (const auto& [s, m] : raw) {
        if (m < 0) fail(errc::internal, "negative slope multiplicity");
        if (m > 0) acc[{s.num, s.den}] += m;
    }
    NewtonPolygon np;
    for (const auto& [key, m] : acc) np.slopes.push_back({Rat(key.first, key.second), m});
    std::sort(np.slopes.begin(), np.slopes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return np;
}

NewtonPolygon polygon_join(const NewtonPolygon& a, const NewtonPolygon& b) {
    std::vector<std::pair<Rat, long>> all = a.slopes;
    all.insert(all.end(), b.slopes.begin(), b.slopes.end());
    return polygon_from_slopes(std::move(all));
}

NewtonPolygon ordinary_polygon(unsigned g) {
    if (g == 0) return {};
    return polygon_from_slopes({{Rat(0), static_cast<long>(g)}, {Rat(1), static_cast<long>(g)}});
}

NewtonPolygon supersingular_polygon(unsigned g) {
    if (g == 0) return {};
    return polygon_from_slopes({{Rat(1, 2), 2L * g}});
}

LPolynomial l_polynomial(const curves::CurveModel& model) {
    curves::require_valid(model);
    const arith::Fq& F = curves::base_field(model);
    long g_signed = curves::genus(model);
    if (g_signed < 1) fail(errc::invalid_model, "genus must be positive");
    unsigned g = static_cast<unsigned>(g_signed);
    arith::u128 qg = 1;
    for (unsigned i = 0; i < g; ++i) {
        qg *= F.order();
        if (qg > enumeration_budget())
            fail(errc::budget_exceeded, "q^g exceeds the enumeration budget");
    }

    LPolynomial L;
    L.p = F.p();
    L.r = F.degree();
    L.q = F.order();
    L.g = g;

    std::vector<bigint> ps(g + 1);  // power sums, 1-indexed
    bigint qs = 1;
    for (unsigned s = 1; s <= g; ++s) {
        qs *= F.order();
        bigint Ns = curves::count_points(model, s);
        ps[s] = qs + 1 - Ns;
        // Hasse-Weil, squared to stay in integers.
        if (ps[s] * ps[s] > bigint(4) * g * g * qs)
            fail(errc::weil_bound, "point count violates the Hasse-Weil bound at s=" +
                                       std::to_string(s));
    }

    L.c.assign(2 * g + 1, 0);
    L.c[0] = 1;
    for (unsigned s = 1; s <= g; ++s) {
        bigint t = 0;
        for (unsigned i = 1; i <= s; ++i) t += ps[i] * L.c[s - i];
        t = -t;
        if (t % s != 0)
            fail(errc::non_integral,
                 "Newton identity produced a non-integral coefficient at s=" + std::to_string(s));
        L.c[s] = t / s;
    }
    bigint qpow = 1;
    for (unsigned i = g; i-- > 0;) {
        qpow *= F.order();
        L.c[2 * g - i] = qpow * L.c[i];
    }
    return L;
}

bigint point_count_from_l(const LPolynomial& L, unsigned s) {
    // p_s from the full coefficient list via Newton's identities run forward:
    // s*c_s + sum_{i=1}^{s} p_i c_{s-i} = 0 for s <= 2g, and
    // sum_{i=s-2g}^{s} ... for s > 2g the recursion uses only c_0..c_{2g}.
    std::vector<bigint> p(s + 1);
    for (unsigned n = 1; n <= s; ++n) {
        bigint t = n <= 2 * L.g ? bigint(n) * L.c[n] : bigint(0);
        for (unsigned i = 1; i < n; ++i) {
            unsigned j = n - i;
            if (j <= 2 * L.g) t += p[i] * L.c[j];
        }
        p[n] = -t;
    }
    bigint qs = 1;
    for (unsigned i = 0; i < s; ++i) qs *= L.q;
    return qs + 1 - p[s];
}

NewtonPolygon newton_polygon(const LPolynomial& L, unsigned r) {
    if (r == 0) fail(errc::invalid_model, "r must be positive");
    // Finite points (i, v_p(c_i)); zero coefficients never create vertices.
    std::vector<std::pair<long, long>> pts;
    for (std::size_t i = 0; i < L.c.size(); ++i) {
        if (L.c[i] == 0) continue;
        long v = 0;
        bigint t = L.c[i];
        while (t % L.p == 0) {
            t /= L.p;
            ++v;
        }
        pts.push_back({static_cast<long>(i), v});
    }
    // Lower convex hull, monotone scan.
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // drop b if it is on or above the segment a->pt
            if (static_cast<long long>(b.second - a.second) * (pt.first - a.first) >=
                static_cast<long long>(pt.second - a.second) * (b.first - a.first)) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    std::vector<std::pair<Rat, long>> slopes;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long dx = hull[i].first - hull[i - 1].first;
        long dv = hull[i].second - hull[i - 1].second;
        slopes.push_back({Rat(dv, dx * static_cast<long>(r)), dx});
        if (hull[i].second % static_cast<long>(r) != 0)
            fail(errc::internal, "Newton polygon breakpoint is not a lattice point");
    }
    NewtonPolygon np = polygon_from_slopes(std::move(slopes));
    if (np.height() != 2 * static_cast<long>(L.g))
        fail(errc::internal, "Newton polygon height mismatch");
    if (!np.is_symmetric()) fail(errc::internal, "Newton polygon is not symmetric");
    if (!np.slopes.empty() &&
        (np.slopes.front().first < Rat(0) || np.slopes.back().first > Rat(1)))
        fail(errc::internal, "Newton polygon slope outside [0,1]");
    if (np.end_height() != Rat(static_cast<std::int64_t>(L.g)))
        fail(errc::internal, "Newton polygon endpoint mismatch");
    return np;
}

long p_rank_from_np(const NewtonPolygon& np) { return np.mult_of(Rat(0)); }

bool is_supersingular_manin(const LPolynomial& L, unsigned r) {
    // P(T) = T^{2g} L(1/T), so a_j = c_j for 1 <= j <= g.
    for (unsigned j = 1; j <= L.g; ++j) {
        unsigned e = (j * r + 1) / 2;  // ceil(jr/2)
        bigint m = 1;
        for (unsigned i = 0; i < e; ++i) m *= L.p;
        if (L.c[j] % m != 0) return false;
    }
    return true;
}

}  // namespace ptl::zeta
