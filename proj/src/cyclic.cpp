#include "ptl/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ptl::cyclic {

using ptl::Rat;

long Signature::at(unsigned n) const {
    n %= m;
    if (n == 0) fail(errc::internal, "signature index divisible by m");
    return f[n - 1];
}

void require_valid(const MonodromyDatum& d) {
    if (d.m < 2) fail(errc::invalid_datum, "m must be at least 2");
    if (d.N() < 3) fail(errc::invalid_datum, "need at least 3 branch points");
    unsigned g = d.m;
    unsigned sum = 0;
    for (unsigned ai : d.a) {
        if (ai == 0 || ai >= d.m) fail(errc::invalid_datum, "a_i must lie in [1, m-1]");
        g = std::gcd(g, ai);
        sum = (sum + ai) % d.m;
    }
    if (g != 1) fail(errc::invalid_datum, "gcd(m, a_1..a_N) must be 1");
    if (sum != 0) fail(errc::invalid_datum, "sum a_i must vanish mod m");
}

bool is_valid(const MonodromyDatum& d) {
    try {
        require_valid(d);
        return true;
    } catch (const Error&) {
        return false;
    }
}

long datum_genus(const MonodromyDatum& d) {
    require_valid(d);
    long sum_gcd = 0;
    for (unsigned ai : d.a) sum_gcd += std::gcd(d.m, ai);
    return 1 + ((static_cast<long>(d.N()) - 2) * d.m - sum_gcd) / 2;
}

MonodromyDatum datum_canonicalize(const MonodromyDatum& d) {
    require_valid(d);
    MonodromyDatum best;
    best.m = d.m;
    for (unsigned c = 1; c < d.m; ++c) {
        if (std::gcd(c, d.m) != 1) continue;
        std::vector<unsigned> image(d.a.size());
        for (std::size_t i = 0; i < d.a.size(); ++i)
            image[i] = static_cast<unsigned>((static_cast<std::uint64_t>(c) * d.a[i]) % d.m);
        std::sort(image.begin(), image.end());
        if (best.a.empty() || image < best.a) best.a = std::move(image);
    }
    return best;
}

Signature signature(const MonodromyDatum& d) {
    require_valid(d);
    Signature sig;
    sig.m = d.m;
    sig.f.resize(d.m - 1);
    long total = 0;
    for (unsigned n = 1; n < d.m; ++n) {
        // f_n = -1 + sum_i <-n a_i / m>, all over a common denominator m.
        std::uint64_t num = 0;
        for (unsigned ai : d.a)
            num += (d.m - (static_cast<std::uint64_t>(n) * ai) % d.m) % d.m;
        if (num % d.m != 0)
            fail(errc::inconsistent_signature, "non-integral Chevalley-Weil sum");
        sig.f[n - 1] = static_cast<long>(num / d.m) - 1;
        if (sig.f[n - 1] < 0)
            fail(errc::inconsistent_signature, "negative eigenspace dimension");
        total += sig.f[n - 1];
    }
    if (total != datum_genus(d))
        fail(errc::inconsistent_signature, "signature does not sum to the genus");
    return sig;
}

long shimura_dim(const Signature& sig) {
    unsigned m = sig.m;
    long dim = 0;
    for (unsigned n = 1; 2 * n < m; ++n) dim += sig.f[n - 1] * sig.f[m - n - 1];
    if (m % 2 == 0) {
        long fm = sig.f[m / 2 - 1];
        dim += fm * (fm + 1) / 2;
    }
    return dim;
}

bool is_special(const MonodromyDatum& d) {
    require_valid(d);
    if (d.N() < 4) fail(errc::invalid_datum, "special families need N >= 4");
    return shimura_dim(signature(d)) == static_cast<long>(d.N()) - 3;
}

std::vector<MonodromyDatum> special_scan(unsigned m_max, unsigned n_max) {
    if (m_max > 40 || n_max > 8) fail(errc::budget_exceeded, "scan bounds exceeded");
    std::set<MonodromyDatum> found;
    for (unsigned m = 2; m <= m_max; ++m) {
        for (unsigned N = 4; N <= n_max; ++N) {
            // Non-decreasing exponent tuples; the condition set is invariant
            // under permutation, so sorted tuples cover every datum once.
            std::vector<unsigned> a(N, 1);
            auto rec = [&](auto&& self, unsigned idx, unsigned lo) -> void {
                if (idx == N) {
                    MonodromyDatum d{m, a};
                    if (!is_valid(d)) return;
                    MonodromyDatum canon = datum_canonicalize(d);
                    if (found.count(canon)) return;
                    if (is_special(canon)) found.insert(canon);
                    return;
                }
                for (unsigned v = lo; v < m; ++v) {
                    a[idx] = v;
                    self(self, idx + 1, v);
                }
            };
            rec(rec, 0, 1);
        }
    }
    return {found.begin(), found.end()};
}

OrbitDecomposition orbits(unsigned m, std::uint64_t p) {
    if (m < 2) fail(errc::invalid_datum, "m must be at least 2");
    if (std::gcd(p, static_cast<std::uint64_t>(m)) != 1)
        fail(errc::not_coprime, "p must be coprime to m");
    OrbitDecomposition out;
    out.m = m;
    out.p_mod_m = p % m;
    std::vector<int> orbit_of(m, -1);
    for (unsigned t = 1; t < m; ++t) {
        if (orbit_of[t] >= 0) continue;
        Orbit o;
        unsigned cur = t;
        while (orbit_of[cur] < 0) {
            orbit_of[cur] = static_cast<int>(out.orbits.size());
            o.elems.push_back(cur);
            cur = static_cast<unsigned>((out.p_mod_m * cur) % m);
        }
        std::sort(o.elems.begin(), o.elems.end());
        out.orbits.push_back(std::move(o));
    }
    for (auto& o : out.orbits) o.neg_index = orbit_of[(m - o.elems[0]) % m];
    return out;
}

namespace {

struct OrbitData {
    std::size_t index;
    long d;  // orbit size
    long h;  // eigenspace height, constant on the orbit
    long end;  // sum of f_t over the orbit
    NewtonPolygon mu;  // mu-ordinary piece for this orbit
};

std::vector<OrbitData> orbit_polygons(const Signature& sig, const OrbitDecomposition& dec) {
    std::vector<OrbitData> out;
    for (std::size_t i = 0; i < dec.orbits.size(); ++i) {
        const Orbit& o = dec.orbits[i];
        OrbitData od;
        od.index = i;
        od.d = static_cast<long>(o.elems.size());
        od.h = -1;
        od.end = 0;
        for (unsigned t : o.elems) {
            long ht = sig.at(t) + sig.at(sig.m - t);
            if (od.h < 0) od.h = ht;
            if (ht != od.h)
                fail(errc::inconsistent_signature,
                     "f_t + f_{m-t} is not constant on an orbit");
            od.end += sig.at(t);
        }
        // negation partner must carry the same height
        for (unsigned t : dec.orbits[o.neg_index].elems) {
            long ht = sig.at(t) + sig.at(sig.m - t);
            if (ht != od.h)
                fail(errc::inconsistent_signature,
                     "f_t + f_{m-t} differs between paired orbits");
        }
        std::vector<std::pair<Rat, long>> slopes;
        for (long j = 1; j <= od.h; ++j) {
            long cnt = 0;
            for (unsigned t : o.elems)
                if (sig.at(t) >= j) ++cnt;
            slopes.push_back({Rat(cnt, od.d), od.d});
        }
        od.mu = zeta::polygon_from_slopes(std::move(slopes));
        out.push_back(std::move(od));
    }
    return out;
}

void check_kottwitz_constraints(const NewtonPolygon& np, const std::vector<OrbitData>& parts,
                                const OrbitDecomposition& dec) {
    // Global symmetry, and per-orbit assertions from the definition: slope
    // multiplicities divisible by the orbit size, distinct slope count <= h,
    // self-paired orbits symmetric on their own.
    if (!np.is_symmetric()) fail(errc::internal, "mu-ordinary polygon is not symmetric");
    for (const auto& od : parts) {
        if (static_cast<long>(od.mu.slopes.size()) > od.h)
            fail(errc::internal, "orbit contributes more distinct slopes than its height");
        for (const auto& [s, mult] : od.mu.slopes)
            if (mult % od.d != 0)
                fail(errc::internal, "orbit slope multiplicity not divisible by orbit size");
        if (dec.orbits[od.index].neg_index == od.index && !od.mu.is_symmetric())
            fail(errc::internal, "self-paired orbit polygon is not symmetric");
    }
}

NewtonPolygon mirror(const NewtonPolygon& np) {
    std::vector<std::pair<Rat, long>> slopes;
    for (const auto& [s, m] : np.slopes) slopes.push_back({Rat(1) - s, m});
    return zeta::polygon_from_slopes(std::move(slopes));
}

// All convex lattice chains (0,0) -> (H, A) with slopes increasing in [0,1],
// segment widths divisible by d, lying on or above `floor` pointwise.
std::vector<NewtonPolygon> orbit_chains(long H, long A, long d, const NewtonPolygon& floor) {
    std::vector<NewtonPolygon> out;
    std::vector<std::pair<Rat, long>> segs;
    auto above_floor = [&](long x0, long y0, long x1, long y1) {
        // segment stays on or above the floor at every integer abscissa
        for (long x = x0; x <= x1; ++x) {
            Rat yx = Rat(y0) + Rat((y1 - y0) * (x - x0), x1 - x0);
            if (yx < floor.value_at(x)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, long x, long y, Rat last) -> void {
        if (x == H) {
            if (y == A) out.push_back(zeta::polygon_from_slopes(segs));
            return;
        }
        for (long nx = x + d; nx <= H; nx += d) {
            for (long ny = y; ny <= A; ++ny) {
                Rat s(ny - y, nx - x);
                if (s > Rat(1) || !(last < s)) continue;
                if (!above_floor(x, y, nx, ny)) continue;
                segs.push_back({s, nx - x});
                self(self, nx, ny, s);
                segs.pop_back();
            }
        }
    };
    rec(rec, 0, 0, Rat(-1));
    return out;
}

}  // namespace

NewtonPolygon mu_ordinary(const Signature& sig, std::uint64_t p) {
    OrbitDecomposition dec = orbits(sig.m, p);
    std::vector<OrbitData> parts = orbit_polygons(sig, dec);
    NewtonPolygon np;
    for (const auto& od : parts) np = zeta::polygon_join(np, od.mu);
    check_kottwitz_constraints(np, parts, dec);
    return np;
}

AdmissibleSet admissible_set(const Signature& sig, std::uint64_t p) {
    OrbitDecomposition dec = orbits(sig.m, p);
    std::vector<OrbitData> parts = orbit_polygons(sig, dec);
    long total_height = 0;
    for (const auto& od : parts) total_height += od.d * od.h;
    if (total_height > 28) fail(errc::budget_exceeded, "admissible_set limited to 2g <= 28");

    AdmissibleSet result;
    for (const auto& od : parts) result.mu_ordinary = zeta::polygon_join(result.mu_ordinary, od.mu);
    check_kottwitz_constraints(result.mu_ordinary, parts, dec);

    // Enumerate once per orbit class {o, -o}.
    std::vector<std::vector<NewtonPolygon>> class_choices;
    std::set<std::size_t> done;
    for (const auto& od : parts) {
        if (done.count(od.index)) continue;
        std::size_t neg = dec.orbits[od.index].neg_index;
        done.insert(od.index);
        std::vector<NewtonPolygon> chains =
            orbit_chains(od.d * od.h, od.end, od.d, od.mu);
        std::vector<NewtonPolygon> choices;
        if (neg == od.index) {
            for (const auto& c : chains)
                if (c.is_symmetric()) choices.push_back(c);
        } else {
            done.insert(neg);
            for (const auto& c : chains) choices.push_back(zeta::polygon_join(c, mirror(c)));
        }
        class_choices.push_back(std::move(choices));
    }

    std::set<NewtonPolygon> all;
    std::vector<std::size_t> pick(class_choices.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, const NewtonPolygon& acc) -> void {
        if (i == class_choices.size()) {
            all.insert(acc);
            return;
        }
        for (const auto& choice : class_choices[i]) self(self, i + 1, zeta::polygon_join(acc, choice));
    };
    rec(rec, 0, NewtonPolygon{});
    result.polygons.assign(all.begin(), all.end());

    // Basic element: the per-orbit chords (isoclinic pieces).
    NewtonPolygon basic;
    for (const auto& od : parts) {
        if (od.h == 0) continue;
        basic = zeta::polygon_join(
            basic, zeta::polygon_from_slopes({{Rat(od.end, od.d * od.h), od.d * od.h}}));
    }
    result.basic = basic;
    if (!all.count(basic)) fail(errc::internal, "basic polygon missing from admissible set");
    for (const auto& np : result.polygons)
        if (strata::np_compare(basic, np) == strata::NpOrder::above)
            fail(errc::internal, "basic polygon is not minimal");
    if (!all.count(result.mu_ordinary))
        fail(errc::internal, "mu-ordinary polygon missing from admissible set");
    return result;
}

NewtonPolygon cm_newton_polygon(unsigned m, const std::vector<unsigned>& a, std::uint64_t p) {
    MonodromyDatum d{m, a};
    require_valid(d);
    if (d.N() != 3) fail(errc::invalid_datum, "cm_newton_polygon expects N = 3");
    return mu_ordinary(signature(d), p);
}

bool ss_criterion_cm(unsigned m, std::uint64_t p) {
    if (m % 2 == 0 || m < 3) fail(errc::invalid_datum, "m must be odd and at least 3");
    if (std::gcd(p, static_cast<std::uint64_t>(m)) != 1)
        fail(errc::not_coprime, "p must be coprime to m");
    std::uint64_t pm = p % m, cur = pm % m;
    unsigned order = 1;
    while (cur != 1) {
        cur = (cur * pm) % m;
        ++order;
    }
    if (order % 2 != 0) return false;
    std::uint64_t half = 1;
    for (unsigned i = 0; i < order / 2; ++i) half = (half * pm) % m;
    return half == m - 1;
}

long p_rank_bound(const Signature& sig, std::uint64_t p) {
    OrbitDecomposition dec = orbits(sig.m, p);
    long bound = 0;
    for (const auto& o : dec.orbits) {
        long mn = sig.at(o.elems[0]);
        for (unsigned t : o.elems) mn = std::min(mn, sig.at(t));
        bound += static_cast<long>(o.elems.size()) * mn;
    }
    return bound;
}

const std::vector<SpecialFamilyRow>& moonen_table() {
    static const std::vector<SpecialFamilyRow> table = {
        {"M[1]", 2, 4, {1, 1, 1, 1}, 1, {1}, 1},
        {"M[3]", 3, 4, {1, 1, 2, 2}, 2, {1, 1}, 1},
        {"M[4]", 4, 4, {1, 2, 2, 3}, 2, {1, 0, 1}, 1},
        {"M[5]", 6, 4, {2, 3, 3, 4}, 2, {1, 0, 0, 0, 1}, 1},
        {"M[6]", 3, 5, {1, 1, 1, 1, 2}, 3, {2, 1}, 2},
        {"M[7]", 4, 4, {1, 1, 1, 1}, 3, {2, 1, 0}, 1},
        {"M[8]", 4, 5, {1, 1, 2, 2, 2}, 3, {2, 0, 1}, 2},
        {"M[9]", 6, 4, {1, 3, 4, 4}, 3, {1, 1, 0, 0, 1}, 1},
        {"M[11]", 5, 4, {1, 3, 3, 3}, 4, {1, 2, 0, 1}, 1},
        {"M[12]", 6, 4, {1, 1, 1, 3}, 4, {2, 1, 1, 0, 0}, 1},
        {"M[13]", 6, 4, {1, 1, 2, 2}, 4, {2, 1, 0, 1, 0}, 1},
        {"M[14]", 6, 5, {2, 2, 2, 3, 3}, 4, {2, 0, 0, 1, 1}, 2},
        {"M[15]", 8, 4, {2, 4, 5, 5}, 5, {1, 1, 0, 0, 2, 0, 1}, 1},
        {"M[16]", 5, 5, {1, 1, 1, 1, 1}, 6, {3, 2, 1, 0}, 2},
        {"M[17]", 7, 4, {2, 4, 4, 4}, 6, {1, 2, 0, 2, 0, 1}, 1},
        {"M[18]", 10, 4, {3, 5, 6, 6}, 6, {1, 1, 0, 1, 0, 0, 2, 0, 1}, 1},
        {"M[19]", 9, 4, {3, 5, 5, 5}, 7, {1, 2, 0, 2, 0, 1, 0, 1}, 1},
        {"M[20]", 12, 4, {4, 6, 7, 7}, 7, {1, 1, 0, 1, 0, 0, 2, 0, 1, 0, 1}, 1},
    };
    return table;
}

}  // namespace ptl::cyclic
