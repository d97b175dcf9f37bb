#pragma once

#include "ptl/strata.hpp"

namespace ptl::cyclic {

using zeta::NewtonPolygon;

// (m, N, a): a mu_m-cover of the line with N branch points and inertia
// exponents a_1..a_N.
struct MonodromyDatum {
    unsigned m = 0;
    std::vector<unsigned> a;

    unsigned N() const { return static_cast<unsigned>(a.size()); }
    friend bool operator==(const MonodromyDatum& x, const MonodromyDatum& y) {
        return x.m == y.m && x.a == y.a;
    }
    friend bool operator<(const MonodromyDatum& x, const MonodromyDatum& y) {
        if (x.m != y.m) return x.m < y.m;
        if (x.N() != y.N()) return x.N() < y.N();
        return x.a < y.a;
    }
};

// Eigenspace dimensions (f_1, ..., f_{m-1}) of holomorphic differentials.
struct Signature {
    unsigned m = 0;
    std::vector<long> f;  // index n-1 holds f_n

    long at(unsigned n) const;  // f_{n mod m}, n not divisible by m
};

void require_valid(const MonodromyDatum& d);
bool is_valid(const MonodromyDatum& d);

long datum_genus(const MonodromyDatum& d);

// Lexicographically least element of the orbit of sorted(a) under
// multiplication by units of Z/m.
MonodromyDatum datum_canonicalize(const MonodromyDatum& d);

// Chevalley-Weil: f_n = -1 + sum_i <-n a_i / m>.
Signature signature(const MonodromyDatum& d);

// Dimension of the ambient Deligne-Mostow Shimura variety for (mu_m, f):
// pairs {n, m-n} with n < m/2 contribute f_n f_{m-n}; for even m the middle
// eigenspace contributes f_{m/2}(f_{m/2}+1)/2.
long shimura_dim(const Signature& sig);

// N >= 4 and shimura_dim == N - 3 (the Hurwitz space dimension).
bool is_special(const MonodromyDatum& d);

// Canonical special data with 2 <= m <= m_max, 4 <= N <= n_max.
std::vector<MonodromyDatum> special_scan(unsigned m_max, unsigned n_max);

struct Orbit {
    std::vector<unsigned> elems;  // sorted
    std::size_t neg_index = 0;    // index of the orbit of -elems
};

// Orbits of multiplication-by-p on Z/m - {0}, with the negation pairing.
struct OrbitDecomposition {
    unsigned m = 0;
    std::uint64_t p_mod_m = 0;
    std::vector<Orbit> orbits;  // sorted by smallest element
};

OrbitDecomposition orbits(unsigned m, std::uint64_t p);

// The mu-ordinary Newton polygon: each orbit o of size d with constant
// eigenspace height h = f_t + f_{m-t} contributes, for j = 1..h, the slope
// #{t in o : f_t >= j}/d with multiplicity d.
NewtonPolygon mu_ordinary(const Signature& sig, std::uint64_t p);

struct AdmissibleSet {
    std::vector<NewtonPolygon> polygons;  // sorted, deduplicated
    NewtonPolygon mu_ordinary;
    NewtonPolygon basic;
};

// All Newton polygons compatible with the orbit constraints (per-orbit
// multiplicity divisibility, negation symmetry, integral breakpoints, on or
// above the mu-ordinary piece), together with the minimal (basic) element.
AdmissibleSet admissible_set(const Signature& sig, std::uint64_t p);

// N = 3 datum: the Hurwitz space is a point, so the polygon of the curve is
// the mu-ordinary one.
NewtonPolygon cm_newton_polygon(unsigned m, const std::vector<unsigned>& a, std::uint64_t p);

// Order-of-p test for y^m = x(x-1): supersingular when the order f of p mod
// m is even and p^{f/2} = -1 mod m.
bool ss_criterion_cm(unsigned m, std::uint64_t p);

// sum over orbits of #o * min_{t in o} f_t.
long p_rank_bound(const Signature& sig, std::uint64_t p);

// Machine-readable rows of the embedded golden table of special families
// (label, m, a, genus, signature) as printed in the source survey.
struct SpecialFamilyRow {
    const char* label;
    unsigned m;
    unsigned N;
    std::vector<unsigned> a;
    long g;
    std::vector<long> f;
    int dim;  // N - 3
};

const std::vector<SpecialFamilyRow>& moonen_table();

}  // namespace ptl::cyclic
