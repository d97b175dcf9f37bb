#include "ptl/cartier.hpp"

namespace ptl::cartier {

namespace {

std::vector<std::vector<u64>> twist_entries(const Fq& F, std::vector<std::vector<u64>> m,
                                            u64 e) {
    for (auto& row : m)
        for (auto& x : row) x = F.frobenius(x, e);
    return m;
}

std::vector<std::vector<u64>> mat_mul(const Fq& F, const std::vector<std::vector<u64>>& a,
                                      const std::vector<std::vector<u64>>& b) {
    std::size_t n = a.size();
    std::vector<std::vector<u64>> out(n, std::vector<u64>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] = F.add(out[i][j], F.mul(a[i][k], b[k][j]));
        }
    return out;
}

}  // namespace

SemilinearMatrix cartier_matrix_hyperelliptic(const curves::HyperellipticModel& model) {
    curves::CurveModel cm = model;
    curves::require_valid(cm);
    const Fq& F = model.F;
    u64 p = F.p();
    long g = curves::genus(cm);
    // Only coefficients up to x^{pg-1} are read off h^{(p-1)/2}.
    Poly pw = arith::poly_pow(F, model.h, (p - 1) / 2, static_cast<long>(p) * g);
    SemilinearMatrix M{F, {}, Convention::modified};
    M.m.assign(g, std::vector<u64>(g, 0));
    for (long i = 1; i <= g; ++i)
        for (long j = 1; j <= g; ++j)
            M.m[i - 1][j - 1] = pw.coeff(static_cast<std::size_t>(p * i - j));
    return M;
}

SemilinearMatrix to_unmodified(const SemilinearMatrix& M) {
    if (M.convention == Convention::unmodified) return M;
    SemilinearMatrix out = M;
    out.convention = Convention::unmodified;
    out.m = twist_entries(M.F, M.m, 1);
    return out;
}

std::size_t matrix_rank(const Fq& F, std::vector<std::vector<u64>> m) {
    std::size_t n = m.size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) continue;
        std::swap(m[rank], m[pivot]);
        u64 inv = F.inv(m[rank][col]);
        for (auto& x : m[rank]) x = F.mul(x, inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            u64 f = m[r][col];
            for (std::size_t j = 0; j < n; ++j)
                m[r][j] = F.sub(m[r][j], F.mul(f, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

std::size_t a_number(const SemilinearMatrix& M) {
    return M.dim() - matrix_rank(M.F, M.m);
}

std::size_t p_rank(const SemilinearMatrix& M) {
    SemilinearMatrix U = to_unmodified(M);
    std::size_t g = U.dim();
    if (g == 0) return 0;
    // Mtilde^{(p^{g-1})} ... Mtilde^{(p)} Mtilde, in exactly this order.
    std::vector<std::vector<u64>> prod = U.m;
    for (std::size_t t = 1; t < g; ++t)
        prod = mat_mul(U.F, twist_entries(U.F, U.m, t), prod);
    return matrix_rank(U.F, prod);
}

bool elliptic_is_supersingular(const Fq& F, const Poly& h) {
    if (F.p() == 2) fail(errc::invalid_model, "criterion requires p odd");
    if (h.degree() != 3) fail(errc::invalid_model, "criterion requires deg h = 3");
    Poly g = arith::poly_gcd(F, h, arith::poly_derivative(F, h));
    if (g.degree() != 0) fail(errc::invalid_model, "h must be separable");
    u64 p = F.p();
    Poly pw = arith::poly_pow(F, h, (p - 1) / 2, static_cast<long>(p) - 1);
    return pw.coeff(static_cast<std::size_t>(p - 1)) == 0;
}

std::size_t p_rank_additive_cover(const curves::AdditiveCoverModel& model) {
    curves::CurveModel cm = model;
    curves::require_valid(cm);
    // Deuring-Shafarevich with B = 1 branch point (the single pole at
    // infinity of a polynomial right side): (Q-1)(B-1) = 0.
    return 0;
}

}  // namespace ptl::cartier
