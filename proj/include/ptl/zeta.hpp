#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ptl/curves.hpp"
#include "ptl/rational.hpp"

namespace ptl::zeta {

using arith::u64;
using bigint = boost::multiprecision::cpp_int;

// L(C/F_q, T) = sum c_i T^i of degree 2g with c_0 = 1 and the functional
// equation c_{2g-i} = q^{g-i} c_i.
struct LPolynomial {
    std::vector<bigint> c;  // length 2g+1
    u64 p = 0;
    unsigned r = 1;  // q = p^r
    u64 q = 0;
    unsigned g = 0;
};

// Multiset of slopes in [0,1] with multiplicities, sorted ascending.  The
// polygon is drawn lower-convex from (0,0) with the slopes in this order.
struct NewtonPolygon {
    std::vector<std::pair<Rat, long>> slopes;

    long height() const;
    // Hull height at integer abscissa x (sum of the x smallest slopes).
    Rat value_at(long x) const;
    Rat end_height() const { return value_at(height()); }
    long mult_of(Rat s) const;
    bool is_symmetric() const;
    bool pure_half() const { return slopes.size() == 1 && slopes[0].first == Rat(1, 2); }
    friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
        return a.slopes == b.slopes;
    }
    friend bool operator<(const NewtonPolygon& a, const NewtonPolygon& b);
};

NewtonPolygon polygon_from_slopes(std::vector<std::pair<Rat, long>> slopes);
// Union of multisets (the paper's oplus).
NewtonPolygon polygon_join(const NewtonPolygon& a, const NewtonPolygon& b);
NewtonPolygon ordinary_polygon(unsigned g);
NewtonPolygon supersingular_polygon(unsigned g);

// Counts N_1..N_g, converts to power sums, runs Newton's identities, and
// completes the upper half by the functional equation.  Every division by s
// is checked for exactness and every count against the Hasse-Weil bound.
LPolynomial l_polynomial(const curves::CurveModel& model);

// N_s predicted by L via the logarithmic derivative of Z(T); valid for any
// s >= 1 and used to cross-check the direct counts beyond s = g.
bigint point_count_from_l(const LPolynomial& L, unsigned s);

// Lower convex hull of (i, v_p(c_i)/r); exact rational slopes.
NewtonPolygon newton_polygon(const LPolynomial& L, unsigned r);
inline NewtonPolygon newton_polygon(const LPolynomial& L) { return newton_polygon(L, L.r); }

// Multiplicity of slope 0.
long p_rank_from_np(const NewtonPolygon& np);

// Manin divisibility: p^{ceil(jr/2)} | a_j for the charpoly coefficients
// a_j = c_j, 1 <= j <= g.
bool is_supersingular_manin(const LPolynomial& L, unsigned r);
inline bool is_supersingular_manin(const LPolynomial& L) {
    return is_supersingular_manin(L, L.r);
}

}  // namespace ptl::zeta
