#pragma once

#include <string>

#include "ptl/zeta.hpp"

namespace ptl::strata {

using zeta::NewtonPolygon;

enum class NpOrder { equal, below, above, incomparable };

// Pointwise hull comparison; "below" means xi1 <= xi2 in the partial order
// on Newton polygons, i.e. xi1 lies on or above xi2 as a graph.
NpOrder np_compare(const NewtonPolygon& xi1, const NewtonPolygon& xi2);

// #{(x,y) integral : 0 <= y < x <= g, y >= xi(x)} -- the dimension of the
// stratum A_g[xi].
long sdim(const NewtonPolygon& xi);

// floor(g^2/4); asserted equal to sdim(ss^g).
long ss_locus_dim(unsigned g);

struct EOType {
    std::vector<int> nu;

    unsigned g() const { return static_cast<unsigned>(nu.size()); }
    friend bool operator==(const EOType& a, const EOType& b) { return a.nu == b.nu; }
    friend bool operator<(const EOType& a, const EOType& b) { return a.nu < b.nu; }
};

struct YoungType {
    std::vector<int> mu;  // strictly decreasing, no zeros
    friend bool operator==(const YoungType& a, const YoungType& b) { return a.mu == b.mu; }
};

void require_valid_eo(const EOType& nu);

// All 2^g types of length g, lexicographically ordered.
std::vector<EOType> eo_enumerate(unsigned g);

struct EOInvariants {
    int p_rank = 0;
    int a_number = 0;
    YoungType young;
    long dim = 0;
    long codim = 0;
};

EOInvariants eo_invariants(const EOType& nu);

// Inverse of the nu -> mu conversion.
EOType eo_from_young(unsigned g, const YoungType& mu);

// xi (+) ord^e; nu -> [1..e, e+nu_1, ..., e+nu_g].
NewtonPolygon np_add_ordinary(const NewtonPolygon& xi, unsigned e);
EOType eo_add_ordinary(const EOType& nu, unsigned e);

struct UnlikelyReport {
    unsigned g = 0;
    long dim_ag = 0;
    long dim_mg = 0;
    long sdim_xi = 0;
    long codim = 0;
    bool unlikely = false;
};

UnlikelyReport unlikely_audit(unsigned g, const NewtonPolygon& xi);

// Display label for the symmetric BT_1 group scheme of a type, in the L /
// I_{r,1} naming used for small genus (opaque labels; falls back to the nu
// sequence when no classical name is recorded).
std::string eo_name(const EOType& nu);

// All symmetric Newton polygons of height 2g with integral breakpoints
// (exhaustive; used by the poset property checks for small g).
std::vector<NewtonPolygon> enumerate_symmetric_np(unsigned g);

}  // namespace ptl::strata
