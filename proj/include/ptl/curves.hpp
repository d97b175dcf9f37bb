#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ptl/arith.hpp"

namespace ptl::curves {

using arith::Fq;
using arith::Poly;
using arith::u64;

// y^2 = h(x) with h separable of degree 2g+1 or 2g+2, p odd.
struct HyperellipticModel {
    Fq F;
    Poly h;
};

// y^m = prod (x - b_i)^{a_i} with distinct affine branch points b_i and
// gcd(m, a_i) = 1.  When m does not divide sum a_i the cover is branched at
// infinity with inertia exponent a_inf = -sum a_i mod m, which must also be
// coprime to m so the infinite point is a single rational point.
struct SuperellipticModel {
    Fq F;
    u64 m = 0;
    std::vector<u64> branch;  // element codes, distinct
    std::vector<u64> expo;    // 1 <= a_i < m
};

// A(y) = h(x) for an additive polynomial A (only y^{p^j} monomials) with a
// nonzero linear term; covers the Artin-Schreier and Hermitian families.
struct AdditiveCoverModel {
    Fq F;
    Poly A;  // polynomial in y
    Poly h;  // polynomial in x, gcd(deg h, p) = 1
};

using CurveModel = std::variant<HyperellipticModel, SuperellipticModel, AdditiveCoverModel>;

struct Violation {
    std::string code;    // e.g. "SeparabilityViolation"
    std::string detail;
};

// Full list of violated invariants; empty means valid.  Never throws.
std::vector<Violation> validate(const CurveModel& model);

bool is_valid(const CurveModel& model);
// Throws invalid_model listing the violations unless the model is valid.
void require_valid(const CurveModel& model);

long genus(const CurveModel& model);

const Fq& base_field(const CurveModel& model);

// Inertia exponent at infinity for a superelliptic model (0 = unbranched).
u64 superelliptic_inf_exponent(const SuperellipticModel& m);

// #C(F_{q^s}) for the smooth projective model.
u64 count_points(const CurveModel& model, unsigned s);

// Independent fiber-by-fiber recount for hyperelliptic models, used as the
// point-count cross-check; enumerates y over the quadratic fibers directly
// instead of using the character sum.
u64 count_points_hyperelliptic_naive(const HyperellipticModel& model, unsigned s);

}  // namespace ptl::curves
