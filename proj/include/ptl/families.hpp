#pragma once

#include <functional>
#include <optional>

#include "ptl/cartier.hpp"
#include "ptl/zeta.hpp"

namespace ptl::families {

using arith::Fq;
using arith::Poly;
using arith::u64;
using zeta::bigint;

// Exact rational on big integers, for mass sums and report ratios.
struct BigRat {
    bigint num = 0;
    bigint den = 1;

    BigRat() = default;
    BigRat(bigint n) : num(std::move(n)) {}
    BigRat(bigint n, bigint d);
    friend BigRat operator+(const BigRat& a, const BigRat& b);
    friend bool operator==(const BigRat& a, const BigRat& b) {
        return a.num == b.num && a.den == b.den;
    }
    std::string str() const;
};

// The Deuring polynomial D(lambda) = [x^{p-1}] (x(x-1)(x-lambda))^{(p-1)/2},
// built by evaluate-interpolate with lambda running over sample points of
// F_p.  Degree (p-1)/2, squarefree.
Poly deuring_polynomial(const Fq& Fp);

// Number of lambda in F_{p^2} \ {0,1} with E_lambda supersingular.
u64 legendre_ss_count(u64 p);

// Number of distinct supersingular j-invariants; asserted against
// floor(p/12) + epsilon(p mod 12).
u64 ss_j_count(u64 p);

struct MassCheck {
    BigRat computed;   // sum over supersingular classes of 1/#Aut
    BigRat expected;   // (p-1)/24
};

MassCheck mass_formula_check(u64 p);

// A one-parameter hyperelliptic family: t -> h_t, empty when t lies on the
// discriminant locus.
struct HyperellipticFamily {
    std::string name;
    Fq F;
    long genus = 0;
    std::function<std::optional<Poly>(u64 t)> member;
};

// Built-in families matching the survey's worked scans.
HyperellipticFamily legendre_family(const Fq& F);        // y^2 = x(x-1)(x-t)
HyperellipticFamily quintic_family(const Fq& F);         // y^2 = x^5 + t x + 1
HyperellipticFamily igusa_sextic_family(const Fq& F);    // y^2 = (x^3-1)(x^3-t)
std::optional<HyperellipticFamily> family_by_name(const std::string& name, const Fq& F);

struct ScanReport {
    std::string family;
    u64 field_order = 0;
    u64 total = 0;          // parameters scanned (valid members only)
    u64 ordinary = 0;
    u64 non_ordinary = 0;
    BigRat heuristic_ratio;  // non_ordinary / p^{r(3g-4)}
    std::uint64_t elapsed_ms = 0;
};

// Classifies each member by det(Cartier matrix) = 0; parameter grid sharded
// across `threads` workers with a deterministic merge.
ScanReport nonordinary_census(const HyperellipticFamily& family, unsigned threads = 1);

struct CkpDecomposition {
    u64 p = 0;
    bigint delta;
    // Runs of 1-digits in the base-p expansion, lowest first: (s_i, r_i).
    std::vector<std::pair<unsigned, unsigned>> runs;
    bigint genus;  // delta p (p-1) / 2, re-derived from the proof's sum
};

// Decomposes delta (base-p digits all 0/1) into maximal runs, evaluates the
// proof-side sum exactly and checks it equals delta p(p-1)/2.
CkpDecomposition ckp_genus_identity(u64 p, const bigint& delta);

}  // namespace ptl::families
