#include "ptl/curves.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ptl::curves {

namespace {

using arith::Embedding;
using arith::poly_derivative;
using arith::poly_eval;
using arith::poly_from_coeffs;
using arith::poly_gcd;
using arith::poly_sub;

void check_hyperelliptic(const HyperellipticModel& m, std::vector<Violation>& out) {
    if (m.F.p() == 2) out.push_back({"EvenCharacteristic", "hyperelliptic models require p odd"});
    long d = m.h.degree();
    if (d < 3) out.push_back({"DegreeTooSmall", "deg h must be at least 3 (genus >= 1)"});
    if (d >= 1 && m.F.p() != 2) {
        Poly g = poly_gcd(m.F, m.h, poly_derivative(m.F, m.h));
        if (g.degree() != 0)
            out.push_back({"SeparabilityViolation", "gcd(h, h') has positive degree"});
    }
}

void check_superelliptic(const SuperellipticModel& m, std::vector<Violation>& out) {
    if (m.m < 2) out.push_back({"DegreeTooSmall", "m must be at least 2"});
    if (m.m >= 2 && m.F.p() % m.m == 0)
        out.push_back({"WildCover", "p divides m; cover is not tame"});
    if (m.branch.size() != m.expo.size())
        out.push_back({"ShapeMismatch", "branch points and exponents differ in length"});
    std::set<u64> seen(m.branch.begin(), m.branch.end());
    if (seen.size() != m.branch.size())
        out.push_back({"BranchCollision", "branch points must be distinct"});
    for (u64 b : m.branch)
        if (b >= m.F.order()) out.push_back({"ElementOutOfField", "branch point outside F_q"});
    u64 sum = 0;
    for (u64 a : m.expo) {
        if (a == 0 || a >= m.m)
            out.push_back({"ExponentOutOfRange", "exponents must lie in [1, m-1]"});
        else if (std::gcd(m.m, a) != 1)
            out.push_back({"GcdRestriction", "gcd(m, a_i) = 1 is required for counting"});
        sum = (sum + a) % m.m;
    }
    u64 a_inf = (m.m - sum) % m.m;
    std::size_t total = m.branch.size() + (a_inf != 0 ? 1 : 0);
    if (a_inf != 0 && std::gcd(m.m, a_inf) != 1)
        out.push_back({"GcdRestriction", "gcd(m, a_inf) = 1 is required for counting"});
    if (total < 3) out.push_back({"TooFewBranchPoints", "need at least 3 branch points"});
}

void check_additive(const AdditiveCoverModel& m, std::vector<Violation>& out) {
    u64 p = m.F.p();
    if (m.A.degree() < 1) {
        out.push_back({"DegenerateCover", "A must be non-constant"});
        return;
    }
    for (std::size_t i = 0; i < m.A.c.size(); ++i) {
        if (m.A.c[i] == 0) continue;
        u64 e = i;
        while (e > 1 && e % p == 0) e /= p;
        if (e != 1) {
            out.push_back({"NotAdditive", "A may only contain y^{p^j} monomials"});
            break;
        }
    }
    if (m.A.coeff(1) == 0)
        out.push_back({"InseparableCover", "A needs a nonzero linear term"});
    u64 Q = 1;
    long dA = m.A.degree();
    while (dA > 1) {
        Q *= p;
        dA = dA / static_cast<long>(p);
    }
    // A has degree Q = p^e by the monomial check above.
    arith::u128 q6 = 1;
    for (int i = 0; i < 6; ++i) q6 *= m.F.order();
    if (static_cast<arith::u128>(Q) > q6)
        out.push_back({"BudgetExceeded", "deg A exceeds q^6"});
    if (m.h.degree() < 2) out.push_back({"DegreeTooSmall", "deg h must be at least 2"});
    if (m.h.degree() >= 1 && static_cast<u64>(m.h.degree()) % p == 0)
        out.push_back({"WildDegree", "gcd(deg h, p) = 1 is required"});
}

struct AdditiveKernel {
    // Row-echelon basis of the image of A as an F_p-linear map, plus |ker A|.
    std::vector<std::vector<u64>> echelon;  // rows, leading entry 1
    std::vector<std::size_t> pivots;
    u64 kernel_size = 1;
    const Fq* F = nullptr;

    bool in_image(u64 v) const {
        std::vector<u64> digits = F->coeffs(v);
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            u64 d = digits[pivots[r]];
            if (d == 0) continue;
            for (std::size_t j = 0; j < digits.size(); ++j) {
                u64 t = (d * echelon[r][j]) % F->p();
                digits[j] = (digits[j] + F->p() - t) % F->p();
            }
        }
        return std::all_of(digits.begin(), digits.end(), [](u64 x) { return x == 0; });
    }
};

AdditiveKernel additive_image(const Fq& big, const Poly& A_big) {
    AdditiveKernel out;
    out.F = &big;
    unsigned K = big.degree();
    u64 p = big.p();
    // Images of the F_p-basis 1, x, x^2, ... under A.
    std::vector<std::vector<u64>> rows;
    u64 basis_code = 1;
    for (unsigned j = 0; j < K; ++j) {
        rows.push_back(big.coeffs(poly_eval(big, A_big, basis_code)));
        basis_code *= p;
    }
    // Gaussian elimination over F_p.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < K && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        u64 inv = 1, a = rows[rank][col] % p;
        // inverse mod p by Fermat
        u64 e = p - 2, base = a;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        for (auto& x : rows[rank]) x = (x * inv) % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            u64 f = rows[r][col];
            for (std::size_t j = 0; j < K; ++j) {
                u64 t = (f * rows[rank][j]) % p;
                rows[r][j] = (rows[r][j] + p - t) % p;
            }
        }
        out.echelon.push_back(rows[rank]);
        out.pivots.push_back(col);
        ++rank;
    }
    u64 ker = 1;
    for (unsigned i = 0; i < K - rank; ++i) ker *= p;
    out.kernel_size = ker;
    return out;
}

Poly embed_poly(const Embedding& emb, const Poly& f) {
    std::vector<u64> c(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i) c[i] = emb.map(f.c[i]);
    return poly_from_coeffs(std::move(c));
}

u64 checked_order_pow(const Fq& F, unsigned s) {
    arith::u128 qs = 1;
    for (unsigned i = 0; i < s; ++i) {
        qs *= F.order();
        if (qs > enumeration_budget())
            fail(errc::budget_exceeded, "q^s exceeds the enumeration budget");
    }
    return static_cast<u64>(qs);
}

}  // namespace

std::vector<Violation> validate(const CurveModel& model) {
    std::vector<Violation> out;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HyperellipticModel>) check_hyperelliptic(m, out);
            if constexpr (std::is_same_v<T, SuperellipticModel>) check_superelliptic(m, out);
            if constexpr (std::is_same_v<T, AdditiveCoverModel>) check_additive(m, out);
        },
        model);
    return out;
}

bool is_valid(const CurveModel& model) { return validate(model).empty(); }

void require_valid(const CurveModel& model) {
    auto v = validate(model);
    if (v.empty()) return;
    std::string msg = "invalid model:";
    for (const auto& w : v) msg += " " + w.code;
    fail(errc::invalid_model, msg);
}

u64 superelliptic_inf_exponent(const SuperellipticModel& m) {
    u64 sum = 0;
    for (u64 a : m.expo) sum = (sum + a) % m.m;
    return (m.m - sum) % m.m;
}

long genus(const CurveModel& model) {
    require_valid(model);
    if (const auto* h = std::get_if<HyperellipticModel>(&model)) {
        long d = h->h.degree();
        return (d + 1) / 2 - 1;  // ceil(d/2) - 1
    }
    if (const auto* se = std::get_if<SuperellipticModel>(&model)) {
        std::vector<u64> a(se->expo);
        if (u64 ai = superelliptic_inf_exponent(*se)) a.push_back(ai);
        long N = static_cast<long>(a.size());
        long sum_gcd = 0;
        for (u64 x : a) sum_gcd += static_cast<long>(std::gcd(se->m, x));
        return 1 + ((N - 2) * static_cast<long>(se->m) - sum_gcd) / 2;
    }
    const auto& ac = std::get<AdditiveCoverModel>(model);
    long Q = ac.A.degree();
    return (Q - 1) * (ac.h.degree() - 1) / 2;
}

const Fq& base_field(const CurveModel& model) {
    return std::visit([](const auto& m) -> const Fq& { return m.F; }, model);
}

u64 count_points(const CurveModel& model, unsigned s) {
    require_valid(model);
    const Fq& F = base_field(model);
    checked_order_pow(F, s);
    Fq big = (s == 1 && F.degree() == 1) ? F : Fq::make(F.p(), F.degree() * s);
    Embedding emb(F, big);
    u64 Q = big.order();

    if (const auto* hm = std::get_if<HyperellipticModel>(&model)) {
        Poly h = embed_poly(emb, hm->h);
        u64 n = 0;
        u64 half = (Q - 1) / 2;
        for (u64 x = 0; x < Q; ++x) {
            u64 v = poly_eval(big, h, x);
            if (v == 0)
                n += 1;
            else if (big.pow(v, half) == big.one())
                n += 2;
        }
        // Points at infinity: 1 for odd degree; for even degree 2 when the
        // leading coefficient is a square in F_{q^s}, else 0.
        if (hm->h.degree() % 2 == 1) {
            n += 1;
        } else {
            u64 lc = emb.map(hm->h.leading());
            if (big.pow(lc, half) == big.one()) n += 2;
        }
        return n;
    }

    if (const auto* se = std::get_if<SuperellipticModel>(&model)) {
        std::vector<u64> branch(se->branch.size());
        for (std::size_t i = 0; i < branch.size(); ++i) branch[i] = emb.map(se->branch[i]);
        u64 n = 0;
        u64 e = std::gcd(se->m, Q - 1);
        u64 test_exp = (Q - 1) / e;
        for (u64 x = 0; x < Q; ++x) {
            bool is_branch = false;
            u64 v = big.one();
            for (std::size_t i = 0; i < branch.size(); ++i) {
                u64 d = big.sub(x, branch[i]);
                if (d == 0) {
                    is_branch = true;
                    break;
                }
                v = big.mul(v, big.pow(d, se->expo[i]));
            }
            if (is_branch)
                n += 1;  // totally ramified: gcd(m, a_i) = 1
            else if (big.pow(v, test_exp) == big.one())
                n += e;
        }
        n += superelliptic_inf_exponent(*se) == 0 ? e : 1;
        return n;
    }

    const auto& ac = std::get<AdditiveCoverModel>(model);
    Poly A = embed_poly(emb, ac.A);
    Poly h = embed_poly(emb, ac.h);
    AdditiveKernel im = additive_image(big, A);
    u64 n = 0;
    for (u64 x = 0; x < Q; ++x)
        if (im.in_image(poly_eval(big, h, x))) n += im.kernel_size;
    return n + 1;  // one totally ramified point at infinity
}

u64 count_points_hyperelliptic_naive(const HyperellipticModel& model, unsigned s) {
    CurveModel cm = model;
    require_valid(cm);
    checked_order_pow(model.F, s);
    Fq big = (s == 1 && model.F.degree() == 1) ? model.F : Fq::make(model.F.p(), model.F.degree() * s);
    Embedding emb(model.F, big);
    Poly h = embed_poly(emb, model.h);
    u64 n = 0;
    for (u64 x = 0; x < big.order(); ++x) {
        u64 v = poly_eval(big, h, x);
        for (u64 y = 0; y < big.order(); ++y)
            if (big.mul(y, y) == v) ++n;
    }
    if (model.h.degree() % 2 == 1) {
        n += 1;
    } else {
        u64 lc = emb.map(model.h.leading());
        u64 roots = 0;
        for (u64 y = 0; y < big.order(); ++y)
            if (big.mul(y, y) == lc) ++roots;
        n += roots;  // 2 if lc is a square, 0 otherwise
    }
    return n;
}

}  // namespace ptl::curves
