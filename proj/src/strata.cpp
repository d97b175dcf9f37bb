#include "ptl/strata.hpp"

#include <algorithm>
#include <map>

namespace ptl::strata {

using ptl::Rat;

NpOrder np_compare(const NewtonPolygon& xi1, const NewtonPolygon& xi2) {
    long h = xi1.height();
    if (h != xi2.height() || !(xi1.end_height() == xi2.end_height()))
        fail(errc::genus_mismatch, "polygons do not share endpoints");
    bool ge = true, le = true;  // as graphs
    for (long x = 1; x < h; ++x) {
        Rat a = xi1.value_at(x), b = xi2.value_at(x);
        if (a < b) ge = false;
        if (b < a) le = false;
    }
    if (ge && le) return NpOrder::equal;
    if (ge) return NpOrder::below;  // xi1 on or above xi2 => xi1 <= xi2
    if (le) return NpOrder::above;
    return NpOrder::incomparable;
}

long sdim(const NewtonPolygon& xi) {
    long h = xi.height();
    if (h % 2 != 0 || !xi.is_symmetric())
        fail(errc::invalid_model, "sdim expects a symmetric polygon");
    long g = h / 2;
    long count = 0;
    for (long x = 1; x <= g; ++x) {
        Rat v = xi.value_at(x);
        // smallest integer y with y >= v
        long ceil_v = (v.num + v.den - 1) / v.den;
        if (ceil_v < 0) ceil_v = 0;
        if (ceil_v < x) count += x - ceil_v;
    }
    return count;
}

long ss_locus_dim(unsigned g) {
    if (g < 1) fail(errc::invalid_model, "g must be positive");
    long d = static_cast<long>(g) * g / 4;
    if (d != sdim(zeta::supersingular_polygon(g)))
        fail(errc::internal, "ss locus dimension disagrees with sdim(ss^g)");
    return d;
}

void require_valid_eo(const EOType& nu) {
    if (nu.nu.empty()) fail(errc::invalid_model, "empty Ekedahl-Oort type");
    if (nu.nu[0] != 0 && nu.nu[0] != 1)
        fail(errc::invalid_model, "nu_1 must be 0 or 1");
    for (std::size_t i = 1; i < nu.nu.size(); ++i)
        if (nu.nu[i] < nu.nu[i - 1] || nu.nu[i] > nu.nu[i - 1] + 1)
            fail(errc::invalid_model, "nu_i <= nu_{i+1} <= nu_i + 1 violated");
}

std::vector<EOType> eo_enumerate(unsigned g) {
    if (g == 0 || g > 24) fail(errc::budget_exceeded, "eo_enumerate supports 1 <= g <= 24");
    std::vector<EOType> out;
    out.reserve(std::size_t(1) << g);
    EOType cur;
    cur.nu.resize(g);
    // Each step appends nu_i or nu_i + 1; recursion in lexicographic order.
    auto rec = [&](auto&& self, unsigned i) -> void {
        if (i == g) {
            out.push_back(cur);
            return;
        }
        int prev = i == 0 ? 0 : cur.nu[i - 1];
        for (int step = 0; step <= 1; ++step) {
            cur.nu[i] = prev + step;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

EOInvariants eo_invariants(const EOType& nu) {
    require_valid_eo(nu);
    unsigned g = nu.g();
    EOInvariants inv;
    int f = 0;
    for (unsigned i = 0; i < g; ++i)
        if (nu.nu[i] == static_cast<int>(i) + 1) f = static_cast<int>(i) + 1;
    inv.p_rank = f;
    inv.a_number = static_cast<int>(g) - nu.nu[g - 1];
    for (int j = 1; j <= static_cast<int>(g); ++j) {
        int mj = 0;
        for (unsigned i = 0; i < g; ++i)
            if (static_cast<int>(i) + 1 - nu.nu[i] >= j) ++mj;
        if (mj > 0) inv.young.mu.push_back(mj);
    }
    // The two p-rank formulas and the two a-number formulas must agree.
    int f_young = static_cast<int>(g) - (inv.young.mu.empty() ? 0 : inv.young.mu[0]);
    if (f_young != f) fail(errc::internal, "p-rank formulas disagree");
    int a_young = static_cast<int>(inv.young.mu.size());
    if (a_young != inv.a_number) fail(errc::internal, "a-number formulas disagree");
    for (long v : nu.nu) inv.dim += v;
    inv.codim = static_cast<long>(g) * (g + 1) / 2 - inv.dim;
    return inv;
}

EOType eo_from_young(unsigned g, const YoungType& mu) {
    // The conjugate of mu lists i - nu_i sorted descending, so read it from
    // the top: nu_i = i - #{j : mu_j >= g+1-i}.
    EOType nu;
    nu.nu.resize(g);
    for (unsigned i = 1; i <= g; ++i) {
        int cnt = 0;
        for (int mj : mu.mu)
            if (mj >= static_cast<int>(g + 1 - i)) ++cnt;
        nu.nu[i - 1] = static_cast<int>(i) - cnt;
    }
    require_valid_eo(nu);
    return nu;
}

NewtonPolygon np_add_ordinary(const NewtonPolygon& xi, unsigned e) {
    return zeta::polygon_join(xi, zeta::ordinary_polygon(e));
}

EOType eo_add_ordinary(const EOType& nu, unsigned e) {
    require_valid_eo(nu);
    EOType out;
    for (unsigned i = 1; i <= e; ++i) out.nu.push_back(static_cast<int>(i));
    for (int v : nu.nu) out.nu.push_back(v + static_cast<int>(e));
    return out;
}

UnlikelyReport unlikely_audit(unsigned g, const NewtonPolygon& xi) {
    if (xi.height() != 2L * g) fail(errc::genus_mismatch, "polygon height is not 2g");
    UnlikelyReport rep;
    rep.g = g;
    rep.dim_ag = static_cast<long>(g) * (g + 1) / 2;
    rep.dim_mg = g >= 2 ? 3L * g - 3 : 1;
    rep.sdim_xi = sdim(xi);
    rep.codim = rep.dim_ag - rep.sdim_xi;
    rep.unlikely = rep.codim > 3L * g - 3;
    return rep;
}

std::string eo_name(const EOType& nu) {
    EOInvariants inv = eo_invariants(nu);
    int f = inv.p_rank;
    std::vector<int> core(nu.nu.begin() + f, nu.nu.end());
    for (int& v : core) v -= f;
    std::string ell;
    if (f == 1) ell = "L";
    else if (f > 1) ell = "L^" + std::to_string(f);
    static const std::map<std::vector<int>, std::string> kCoreNames = {
        {{}, ""},
        {{0}, "I_{1,1}"},
        {{0, 1}, "I_{2,1}"},
        {{0, 0}, "(I_{1,1})^2"},
        {{0, 1, 2}, "I_{3,1}"},
        {{0, 1, 1}, "I_{3,2}"},
        {{0, 0, 1}, "I_{1,1}+I_{2,1}"},
        {{0, 0, 0}, "(I_{1,1})^3"},
    };
    auto it = kCoreNames.find(core);
    if (it == kCoreNames.end()) {
        std::string s = "nu=[";
        for (std::size_t i = 0; i < nu.nu.size(); ++i)
            s += (i ? "," : "") + std::to_string(nu.nu[i]);
        return s + "]";
    }
    if (ell.empty()) return it->second.empty() ? "1" : it->second;
    if (it->second.empty()) return ell;
    return ell + "+" + it->second;
}

std::vector<NewtonPolygon> enumerate_symmetric_np(unsigned g) {
    if (g == 0 || g > 8) fail(errc::budget_exceeded, "enumerate_symmetric_np supports g <= 8");
    long H = 2L * g;
    std::vector<NewtonPolygon> out;
    std::vector<std::pair<Rat, long>> segs;
    // Convex lattice chains (0,0) -> (2g,g), slopes strictly increasing in [0,1].
    auto rec = [&](auto&& self, long x, long y, Rat last) -> void {
        if (x == H) {
            if (y == static_cast<long>(g)) {
                NewtonPolygon np = zeta::polygon_from_slopes(segs);
                if (np.is_symmetric()) out.push_back(np);
            }
            return;
        }
        for (long nx = x + 1; nx <= H; ++nx) {
            for (long ny = y; ny <= static_cast<long>(g); ++ny) {
                Rat s(ny - y, nx - x);
                if (s > Rat(1) || !(last < s)) continue;
                segs.push_back({s, nx - x});
                self(self, nx, ny, s);
                segs.pop_back();
            }
        }
    };
    rec(rec, 0, 0, Rat(-1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ptl::strata
