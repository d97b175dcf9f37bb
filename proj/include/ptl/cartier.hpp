#pragma once

#include "ptl/curves.hpp"

namespace ptl::cartier {

using arith::Fq;
using arith::Poly;
using arith::u64;

enum class Convention { modified, unmodified };

// g x g matrix of the Cartier operator on H^0(C, Omega^1), with the twisting
// convention recorded.  The unmodified matrix is the entrywise p-th power of
// the modified one.
struct SemilinearMatrix {
    Fq F;
    std::vector<std::vector<u64>> m;  // row-major, g x g
    Convention convention = Convention::modified;

    std::size_t dim() const { return m.size(); }
};

// Entry (i,j) is the coefficient of x^{pi-j} in h^{(p-1)/2}, for the basis
// {x^{j-1} dx/y} of a hyperelliptic curve y^2 = h(x).
SemilinearMatrix cartier_matrix_hyperelliptic(const curves::HyperellipticModel& model);

SemilinearMatrix to_unmodified(const SemilinearMatrix& M);

// Rank / corank over F_q by Gaussian elimination.
std::size_t matrix_rank(const Fq& F, std::vector<std::vector<u64>> m);

// g - rank(M); identical for both conventions.
std::size_t a_number(const SemilinearMatrix& M);

// Rank of Mtilde^{(p^{g-1})} ... Mtilde^{(p)} Mtilde, twists accumulating on
// the left factor; Mtilde is the unmodified matrix.
std::size_t p_rank(const SemilinearMatrix& M);

// True iff the coefficient of x^{p-1} in h^{(p-1)/2} vanishes (deg h = 3).
bool elliptic_is_supersingular(const Fq& F, const Poly& h);

// Deuring-Shafarevich count for an additive cover with a polynomial right
// side: a single branch point forces p-rank 0.
std::size_t p_rank_additive_cover(const curves::AdditiveCoverModel& model);

}  // namespace ptl::cartier
