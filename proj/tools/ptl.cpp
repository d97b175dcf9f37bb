#include <algorithm>
#include <chrono>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptl/cartier.hpp"
#include "ptl/curves.hpp"
#include "ptl/cyclic.hpp"
#include "ptl/families.hpp"
#include "ptl/render.hpp"
#include "ptl/spec_parse.hpp"
#include "ptl/strata.hpp"
#include "ptl/zeta.hpp"

using json = nlohmann::ordered_json;
using namespace ptl;

namespace {

int exit_code_for(errc c) {
    switch (c) {
        case errc::budget_exceeded:
            return 3;
        case errc::non_integral:
        case errc::weil_bound:
        case errc::internal:
            return 4;
        default:
            return 2;
    }
}

struct Output {
    bool as_json = false;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    std::uint64_t elapsed_ms() const {
        if (!timing) return 0;
        return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - start)
                                              .count());
    }

    void emit(const std::string& command, json input, json result,
              const std::string& text) const {
        if (as_json) {
            json top;
            top["command"] = command;
            top["input"] = std::move(input);
            top["result"] = std::move(result);
            top["timing_ms"] = elapsed_ms();
            std::cout << top.dump() << "\n";
        } else {
            std::cout << text;
        }
    }
};

json polygon_json(const zeta::NewtonPolygon& np) {
    json arr = json::array();
    for (const auto& [s, m] : np.slopes) {
        json e;
        e["slope"] = s.str();
        e["multiplicity"] = m;
        arr.push_back(std::move(e));
    }
    return arr;
}

json lpoly_json(const zeta::LPolynomial& L) {
    json arr = json::array();
    for (const auto& c : L.c) arr.push_back(c.str());
    return arr;
}

std::string lpoly_str(const zeta::LPolynomial& L) {
    std::string s;
    for (std::size_t i = 0; i < L.c.size(); ++i) {
        if (L.c[i] == 0) continue;
        zeta::bigint c = L.c[i];
        if (s.empty()) {
            s += c.str();
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
            s += c.str();
        }
        if (i >= 1) s += "*T" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s.empty() ? "0" : s;
}

std::string field_str(const arith::Fq& F) {
    if (F.degree() == 1) return "F" + std::to_string(F.p());
    return "F" + std::to_string(F.p()) + "^" + std::to_string(F.degree());
}

json eo_row_json(const strata::EOType& nu) {
    strata::EOInvariants inv = strata::eo_invariants(nu);
    json row;
    row["name"] = strata::eo_name(nu);
    row["cod"] = inv.codim;
    row["f"] = inv.p_rank;
    row["a"] = inv.a_number;
    row["nu"] = nu.nu;
    row["mu"] = inv.young.mu;
    row["dim"] = inv.dim;
    return row;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        out.push_back(std::stol(s.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

int run_invariants(const std::string& spec, const Output& out) {
    curves::CurveModel model = cli::parse_curve_spec(spec);
    auto violations = curves::validate(model);
    if (!violations.empty()) {
        std::string msg = "invalid model:";
        for (const auto& v : violations) msg += " " + v.code;
        fail(errc::invalid_model, msg);
    }
    long g = curves::genus(model);
    zeta::LPolynomial L = zeta::l_polynomial(model);
    zeta::NewtonPolygon np = zeta::newton_polygon(L);
    long f_np = zeta::p_rank_from_np(np);
    bool ss = zeta::is_supersingular_manin(L);

    json result;
    result["genus"] = g;
    result["field"] = field_str(curves::base_field(model));
    std::string text = "genus:    " + std::to_string(g) + "\n";
    text += "field:    " + field_str(curves::base_field(model)) + "\n";
    long p_rank = f_np;
    if (const auto* hm = std::get_if<curves::HyperellipticModel>(&model)) {
        auto M = cartier::cartier_matrix_hyperelliptic(*hm);
        long a = static_cast<long>(cartier::a_number(M));
        long f_cartier = static_cast<long>(cartier::p_rank(M));
        if (f_cartier != f_np)
            fail(errc::internal, "Cartier p-rank disagrees with the Newton polygon");
        result["a_number"] = a;
        p_rank = f_cartier;
        text += "a_number: " + std::to_string(a) + "\n";
    } else if (std::holds_alternative<curves::AdditiveCoverModel>(model)) {
        long f_ds = static_cast<long>(cartier::p_rank_additive_cover(
            std::get<curves::AdditiveCoverModel>(model)));
        if (f_ds != f_np)
            fail(errc::internal, "Deuring-Shafarevich p-rank disagrees with the Newton polygon");
    }
    result["p_rank"] = p_rank;
    result["l_polynomial"] = lpoly_json(L);
    result["newton_polygon"] = polygon_json(np);
    result["polygon"] = cli::polygon_str(np);
    result["supersingular"] = ss;
    text += "p_rank:   " + std::to_string(p_rank) + "\n";
    text += "L:        " + lpoly_str(L) + "\n";
    text += "polygon:  " + cli::polygon_str(np) + "\n";
    text += std::string("supersingular: ") + (ss ? "yes" : "no") + "\n";
    out.emit("invariants", json{{"curve", spec}}, std::move(result), text);
    return 0;
}

int run_zeta(const std::string& spec, const Output& out) {
    curves::CurveModel model = cli::parse_curve_spec(spec);
    curves::require_valid(model);
    long g = curves::genus(model);
    zeta::LPolynomial L = zeta::l_polynomial(model);
    zeta::NewtonPolygon np = zeta::newton_polygon(L);
    json result;
    result["genus"] = g;
    json ns = json::array();
    for (unsigned s = 1; s <= L.g; ++s) ns.push_back(zeta::point_count_from_l(L, s).str());
    result["point_counts"] = ns;
    result["l_polynomial"] = lpoly_json(L);
    result["newton_polygon"] = polygon_json(np);
    result["polygon"] = cli::polygon_str(np);
    result["p_rank"] = zeta::p_rank_from_np(np);
    result["supersingular_manin"] = zeta::is_supersingular_manin(L);
    std::string text = "L:       " + lpoly_str(L) + "\n";
    text += "polygon: " + cli::polygon_str(np) + "\n";
    text += "p_rank:  " + std::to_string(zeta::p_rank_from_np(np)) + "\n";
    text += std::string("supersingular (Manin): ") +
            (zeta::is_supersingular_manin(L) ? "yes" : "no") + "\n";
    out.emit("zeta", json{{"curve", spec}}, std::move(result), text);
    return 0;
}

int run_strata(unsigned eo_table, const std::string& np_text, const Output& out) {
    if (eo_table > 0) {
        auto types = strata::eo_enumerate(eo_table);
        // paper order: codimension ascending, more ordinary types first
        std::sort(types.begin(), types.end(), [](const auto& a, const auto& b) {
            long da = 0, db = 0;
            for (int v : a.nu) da += v;
            for (int v : b.nu) db += v;
            if (da != db) return da > db;
            return b.nu < a.nu;
        });
        json rows = json::array();
        std::string text = "name           cod f a  nu          mu\n";
        for (const auto& nu : types) {
            json row = eo_row_json(nu);
            std::string name = row["name"].get<std::string>();
            text += name + std::string(name.size() < 15 ? 15 - name.size() : 1, ' ');
            text += std::to_string(row["cod"].get<long>()) + "   ";
            text += std::to_string(row["f"].get<int>()) + " " + std::to_string(row["a"].get<int>());
            std::string nus = "[";
            for (std::size_t i = 0; i < nu.nu.size(); ++i)
                nus += (i ? "," : "") + std::to_string(nu.nu[i]);
            nus += "]";
            text += "  " + nus + std::string(nus.size() < 12 ? 12 - nus.size() : 1, ' ');
            std::string mus = "{";
            auto mu = row["mu"].get<std::vector<int>>();
            for (std::size_t i = 0; i < mu.size(); ++i)
                mus += (i ? "," : "") + std::to_string(mu[i]);
            mus += "}";
            text += mus + "\n";
            rows.push_back(std::move(row));
        }
        out.emit("strata", json{{"eo_table", eo_table}}, std::move(rows), text);
        return 0;
    }
    zeta::NewtonPolygon np = cli::parse_polygon(np_text);
    if (!np.is_symmetric()) fail(errc::invalid_model, "polygon must be symmetric");
    unsigned g = static_cast<unsigned>(np.height() / 2);
    strata::UnlikelyReport rep = strata::unlikely_audit(g, np);
    json result;
    result["g"] = rep.g;
    result["sdim"] = rep.sdim_xi;
    result["dim_ag"] = rep.dim_ag;
    result["dim_mg"] = rep.dim_mg;
    result["codim"] = rep.codim;
    result["unlikely"] = rep.unlikely;
    std::string text = "g:        " + std::to_string(rep.g) + "\n";
    text += "sdim:     " + std::to_string(rep.sdim_xi) + "\n";
    text += "dim A_g:  " + std::to_string(rep.dim_ag) + "\n";
    text += "dim M_g:  " + std::to_string(rep.dim_mg) + "\n";
    text += "codim:    " + std::to_string(rep.codim) + "\n";
    text += std::string("unlikely: ") + (rep.unlikely ? "yes" : "no") + "\n";
    out.emit("strata", json{{"np", np_text}}, std::move(result), text);
    return 0;
}

int run_eo(const std::string& nu_text, unsigned enumerate_g, unsigned add_ord,
           const Output& out) {
    if (enumerate_g > 0) {
        auto types = strata::eo_enumerate(enumerate_g);
        json rows = json::array();
        std::string text;
        for (const auto& nu : types) {
            rows.push_back(eo_row_json(nu));
            text += strata::eo_name(nu) + "\n";
        }
        out.emit("eo", json{{"enumerate", enumerate_g}}, std::move(rows), text);
        return 0;
    }
    strata::EOType nu;
    for (long v : parse_long_list(nu_text)) nu.nu.push_back(static_cast<int>(v));
    if (add_ord > 0) nu = strata::eo_add_ordinary(nu, add_ord);
    json row = eo_row_json(nu);
    std::string text = "name: " + row["name"].get<std::string>() + "\n";
    text += "f: " + std::to_string(row["f"].get<int>()) +
            "  a: " + std::to_string(row["a"].get<int>()) +
            "  dim: " + std::to_string(row["dim"].get<long>()) +
            "  cod: " + std::to_string(row["cod"].get<long>()) + "\n";
    out.emit("eo", json{{"nu", nu_text}, {"add_ord", add_ord}}, std::move(row), text);
    return 0;
}

int run_kottwitz(unsigned m, const std::string& sig_text, std::uint64_t p, bool admissible,
                 const Output& out) {
    cyclic::Signature sig;
    sig.m = m;
    sig.f = parse_long_list(sig_text);
    if (sig.f.size() + 1 != m) fail(errc::inconsistent_signature, "signature needs m-1 entries");
    zeta::NewtonPolygon mu = cyclic::mu_ordinary(sig, p);
    json result;
    result["mu_ordinary"] = cli::polygon_str(mu);
    result["mu_ordinary_slopes"] = polygon_json(mu);
    result["p_rank_bound"] = cyclic::p_rank_bound(sig, p);
    std::string text = "mu-ordinary: " + cli::polygon_str(mu) + "\n";
    text += "max p-rank:  " + std::to_string(cyclic::p_rank_bound(sig, p)) + "\n";
    cyclic::AdmissibleSet adm;
    if (admissible) {
        adm = cyclic::admissible_set(sig, p);
        result["basic"] = cli::polygon_str(adm.basic);
        result["admissible_count"] = adm.polygons.size();
        json all = json::array();
        for (const auto& np : adm.polygons) all.push_back(cli::polygon_str(np));
        result["admissible"] = all;
        text += "basic:       " + cli::polygon_str(adm.basic) + "\n";
        text += "admissible:  " + std::to_string(adm.polygons.size()) + " polygons\n";
    } else {
        adm = cyclic::admissible_set(sig, p);
        result["basic"] = cli::polygon_str(adm.basic);
        text += "basic:       " + cli::polygon_str(adm.basic) + "\n";
    }
    out.emit("kottwitz", json{{"m", m}, {"sig", sig_text}, {"p", p}}, std::move(result), text);
    return 0;
}

int run_special(unsigned m_max, unsigned n_max, const Output& out) {
    auto found = cyclic::special_scan(m_max, n_max);
    json rows = json::array();
    std::string text = "label   m  N  a\n";
    for (const auto& d : found) {
        json row;
        std::string label = "-";
        for (const auto& ref : cyclic::moonen_table()) {
            cyclic::MonodromyDatum refd{ref.m, ref.a};
            if (cyclic::datum_canonicalize(refd) == d) {
                label = ref.label;
                break;
            }
        }
        row["label"] = label;
        row["m"] = d.m;
        row["N"] = d.N();
        row["a"] = d.a;
        row["g"] = cyclic::datum_genus(d);
        cyclic::Signature sig = cyclic::signature(d);
        row["f"] = sig.f;
        row["dim"] = cyclic::shimura_dim(sig);
        rows.push_back(std::move(row));
        text += label + std::string(label.size() < 8 ? 8 - label.size() : 1, ' ');
        text += std::to_string(d.m) + "  " + std::to_string(d.N()) + "  (";
        for (std::size_t i = 0; i < d.a.size(); ++i)
            text += (i ? "," : "") + std::to_string(d.a[i]);
        text += ")\n";
    }
    out.emit("special", json{{"m_max", m_max}, {"n_max", n_max}}, std::move(rows), text);
    return 0;
}

int run_cm(unsigned m, const std::string& a_text, std::uint64_t p, const Output& out) {
    std::vector<unsigned> a;
    for (long v : parse_long_list(a_text)) a.push_back(static_cast<unsigned>(v));
    zeta::NewtonPolygon np = cyclic::cm_newton_polygon(m, a, p);
    json result;
    result["polygon"] = cli::polygon_str(np);
    result["slopes"] = polygon_json(np);
    result["supersingular"] = np.pure_half();
    if (m % 2 == 1) result["order_criterion"] = cyclic::ss_criterion_cm(m, p);
    std::string text = "polygon: " + cli::polygon_str(np) + "\n";
    text += std::string("supersingular: ") + (np.pure_half() ? "yes" : "no") + "\n";
    out.emit("cm", json{{"m", m}, {"a", a_text}, {"p", p}}, std::move(result), text);
    return 0;
}

int run_scan(const std::string& family, std::uint64_t p, unsigned r, unsigned threads,
             const Output& out) {
    arith::Fq F = arith::Fq::make(p, r);
    auto fam = families::family_by_name(family, F);
    if (!fam) fail(errc::invalid_model, "unknown family '" + family + "'");
    families::ScanReport rep = families::nonordinary_census(*fam, threads);
    json result;
    result["family"] = rep.family;
    result["field"] = field_str(F);
    result["total"] = rep.total;
    json counts;
    counts["ordinary"] = rep.ordinary;
    counts["non_ordinary"] = rep.non_ordinary;
    result["counts"] = counts;
    result["heuristic_ratio"] = rep.heuristic_ratio.str();
    result["elapsed_ms"] = out.timing ? rep.elapsed_ms : 0;
    std::string text = "family:       " + rep.family + " over " + field_str(F) + "\n";
    text += "parameters:   " + std::to_string(rep.total) + "\n";
    text += "ordinary:     " + std::to_string(rep.ordinary) + "\n";
    text += "non-ordinary: " + std::to_string(rep.non_ordinary) + "\n";
    text += "ratio vs p^{r(3g-4)}: " + rep.heuristic_ratio.str() + "\n";
    out.emit("scan", json{{"family", family}, {"p", p}, {"r", r}}, std::move(result), text);
    return 0;
}

int run_mass(std::uint64_t p, const Output& out) {
    families::MassCheck mc = families::mass_formula_check(p);
    json result;
    result["mass"] = mc.computed.str();
    result["expected"] = mc.expected.str();
    if (p >= 5) {
        result["legendre_ss_count"] = families::legendre_ss_count(p);
        result["ss_j_count"] = families::ss_j_count(p);
    }
    std::string text = "mass:     " + mc.computed.str() + "\n";
    text += "(p-1)/24: " + mc.expected.str() + "\n";
    if (p >= 5) {
        text += "supersingular lambda count: " +
                std::to_string(families::legendre_ss_count(p)) + "\n";
        text += "supersingular j count:      " + std::to_string(families::ss_j_count(p)) + "\n";
    }
    out.emit("mass", json{{"p", p}}, std::move(result), text);
    return 0;
}

int run_ckp(std::uint64_t p, const std::string& delta_text, const Output& out) {
    zeta::bigint delta(delta_text);
    families::CkpDecomposition dec = families::ckp_genus_identity(p, delta);
    json result;
    result["p"] = p;
    result["delta"] = dec.delta.str();
    json runs = json::array();
    for (const auto& [s, r] : dec.runs) runs.push_back(json{{"s", s}, {"r", r}});
    result["runs"] = runs;
    result["genus"] = dec.genus.str();
    std::string text = "delta: " + dec.delta.str() + "\n";
    text += "runs (s_i, r_i):";
    for (const auto& [s, r] : dec.runs)
        text += " (" + std::to_string(s) + "," + std::to_string(r) + ")";
    text += "\ngenus: " + dec.genus.str() + "\n";
    out.emit("ckp", json{{"p", p}, {"delta", delta_text}}, std::move(result), text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-torsion invariants of curves over small finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_flag("--json", out.as_json, "emit JSON instead of text");
    app.add_flag("--timing", out.timing, "include wall-clock timing in output");
    unsigned threads = std::thread::hardware_concurrency();
    app.add_option("--threads", threads, "worker threads for scans");

    std::string curve_spec, np_text, nu_text, sig_text, a_text, family = "legendre",
                              delta_text = "1";
    unsigned eo_table = 0, enumerate_g = 0, add_ord = 0, m = 0, m_max = 12, n_max = 5, r = 1;
    std::uint64_t p = 0;
    bool admissible = false;

    auto* inv = app.add_subcommand("invariants", "genus, a-number, p-rank, L, polygon");
    inv->add_option("curve", curve_spec, "curve spec, e.g. \"hyp;F3;h=x^5+1\"")->required();

    auto* zet = app.add_subcommand("zeta", "L-polynomial and Newton polygon");
    zet->add_option("curve", curve_spec)->required();

    auto* str = app.add_subcommand("strata", "stratum dimensions and E-O tables");
    str->add_option("--eo-table", eo_table, "print the full E-O table for genus g");
    str->add_option("--np", np_text, "polygon, e.g. \"(1/4,3/4)\" or \"ss^4\"");

    auto* eo = app.add_subcommand("eo", "Ekedahl-Oort type invariants");
    eo->add_option("--nu", nu_text, "type as comma list, e.g. 0,1,2");
    eo->add_option("--enumerate", enumerate_g, "list all 2^g types");
    eo->add_option("--add-ord", add_ord, "adjoin ord^e before computing");

    auto* kot = app.add_subcommand("kottwitz", "mu-ordinary/basic polygons for (m, signature, p)");
    kot->add_option("--m", m)->required();
    kot->add_option("--sig", sig_text, "signature f_1..f_{m-1}")->required();
    kot->add_option("--p", p)->required();
    kot->add_flag("--admissible", admissible, "list the full admissible set");

    auto* spe = app.add_subcommand("special", "scan for special cyclic-cover families");
    spe->add_option("--m-max", m_max);
    spe->add_option("--n-max", n_max);

    auto* cm = app.add_subcommand("cm", "Newton polygon of an N=3 (CM) cover");
    cm->add_option("--m", m)->required();
    cm->add_option("--a", a_text, "three exponents, e.g. 1,1,11")->required();
    cm->add_option("--p", p)->required();

    auto* scan = app.add_subcommand("scan", "non-ordinary census of a hyperelliptic family");
    scan->add_option("--family", family, "legendre | quintic | igusa");
    scan->add_option("--p", p)->required();
    scan->add_option("--r", r, "field F_{p^r}");

    auto* mass = app.add_subcommand("mass", "Deuring counts and the mass formula");
    mass->add_option("--p", p)->required();

    auto* ckp = app.add_subcommand("ckp", "supersingular genus identity for delta p(p-1)/2");
    ckp->add_option("--p", p)->required();
    ckp->add_option("--delta", delta_text)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return run_invariants(curve_spec, out);
        if (zet->parsed()) return run_zeta(curve_spec, out);
        if (str->parsed()) {
            if (eo_table == 0 && np_text.empty())
                fail(errc::invalid_model, "strata needs --eo-table or --np");
            return run_strata(eo_table, np_text, out);
        }
        if (eo->parsed()) return run_eo(nu_text, enumerate_g, add_ord, out);
        if (kot->parsed()) return run_kottwitz(m, sig_text, p, admissible, out);
        if (spe->parsed()) return run_special(m_max, n_max, out);
        if (cm->parsed()) return run_cm(m, a_text, p, out);
        if (scan->parsed()) return run_scan(family, p, r, threads, out);
        if (mass->parsed()) return run_mass(p, out);
        if (ckp->parsed()) return run_ckp(p, delta_text, out);
    } catch (const Error& e) {
        int code = exit_code_for(e.code());
        if (out.as_json) {
            json err;
            err["error"] = errc_name(e.code());
            err["detail"] = e.what();
            std::cout << err.dump() << "\n";
        } else {
            std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        }
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
