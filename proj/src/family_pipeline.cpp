#include "expsieve/bounds.hpp"
#include "expsieve/sieves.hpp"
#include "expsieve/tables.hpp"

#include <algorithm>
#include <sstream>

namespace expsieve {

std::vector<NagellHit> nagell_check(unsigned long m_max) {
    std::vector<NagellHit> out;
    for (unsigned long m = 1; m <= m_max; ++m) {
        Int v = Int(m) * m + m + 1;
        if (!mpz_perfect_power_p(v.get_mpz_t())) continue;
        auto pp = is_perfect_power(v);
        if (pp && is_probable_prime(pp->first)) out.push_back({m, pp->first, pp->second});
    }
    return out;
}

bool FamilyReport::ok() const {
    if (!survivors.empty()) return false;
    for (const auto& s : stages)
        if (s.status == "failed") return false;
    return true;
}

namespace {

const char* pass(bool b) { return b ? "passed" : "failed"; }

ScanOptions stage_opt(const ScanOptions& opt, const std::string& stage) {
    ScanOptions o = opt;
    if (!o.checkpoint_path.empty()) o.checkpoint_path += "." + stage;
    return o;
}

StageRow bounds_stage(const std::vector<BoundReport>& rows) {
    std::ostringstream d;
    bool all = true;
    for (const auto& b : rows) {
        d << b.name << "=" << b.value << " (" << b.status() << "); ";
        all = all && b.matched();
    }
    // A constant that differs from the table does not gate the sieves, which take the larger value.
    return {"bounds", all ? "passed" : "warning", d.str()};
}

// Steps 1-3 with E = 3; returns the step 3 survivors.
std::vector<SieveCandidate> run_step123(const Int& c, const Step1Config& s1, unsigned long x_l,
                                        const Step3Constants& k, const ScanOptions& opt, std::string& detail) {
    auto l1 = step1(s1, stage_opt(opt, "step1"));
    auto l2 = step2(c, l1, x_l, stage_opt(opt, "step2"));
    auto l3 = step3(c, l2, k, stage_opt(opt, "step3"));
    detail = "list1=" + std::to_string(l1.size()) + " list2=" + std::to_string(l2.size()) +
             " survivors=" + std::to_string(l3.size());
    return l3;
}

void scan_stages(FamilyReport& rep, const Int& c, unsigned long z_lo, unsigned long z_hi, unsigned e_max,
                 unsigned long Y_floor_u, const FinalConfig& fc, const ScanOptions& opt) {
    ZgapConfig zg{c, z_lo, z_hi, 10, e_max};
    auto g = zgap_scan(zg, stage_opt(opt, "zgap"));
    rep.stages.push_back({"zgap", pass(g.empty()),
                          "z in [" + std::to_string(z_lo) + ", " + std::to_string(z_hi) + "], e <= " +
                              std::to_string(e_max) + ", hits=" + std::to_string(g.size())});
    rep.survivors.insert(rep.survivors.end(), g.begin(), g.end());

    ZfloorConfig zf;
    zf.c = c;
    zf.z_lo = z_lo;
    zf.z_hi = z_hi;
    zf.Y_u = Y_floor_u;
    auto f = zfloor_scan(zf, stage_opt(opt, "zfloor"));
    rep.stages.push_back({"zfloor", pass(f.empty()),
                          "Y <= " + std::to_string(Y_floor_u) + ", hits=" + std::to_string(f.size())});
    rep.survivors.insert(rep.survivors.end(), f.begin(), f.end());

    FinalStats st;
    auto s = final_sieve(fc, stage_opt(opt, "final"), &st);
    rep.stages.push_back({"final", pass(s.empty()),
                          "Y <= " + std::to_string(fc.Y_u) + ", z2=" + std::to_string(fc.z2) +
                              ", T values=" + std::to_string(st.T_values) + ", squares=" + std::to_string(st.squares) +
                              ", survivors=" + std::to_string(s.size())});
    rep.survivors.insert(rep.survivors.end(), s.begin(), s.end());
}

}  // namespace

FamilyReport family_pipeline(const FamilyConfig& cfg, const ScanOptions& opt) {
    if (!is_supported_r(cfg.r)) throw ParamError("family_pipeline: r=" + std::to_string(cfg.r) + " is not in the supported list");
    if (!proth_is_prime(Int(3), cfg.r)) throw ParamError("family_pipeline: 3*2^r+1 is composite");
    FamilyReport rep;
    rep.r = cfg.r;
    rep.c = family_c(cfg.r);
    const Int& c = rep.c;
    const unsigned long z_hi = cfg.full ? 30 : cfg.z_scan_hi;

    auto hits = nagell_check(cfg.nagell_m_max);
    bool nagell_ok = hits.size() == 1 && hits[0].m == 18 && hits[0].c == 7 && hits[0].z == 3;
    rep.stages.push_back({"nagell", pass(nagell_ok),
                          "m <= " + std::to_string(cfg.nagell_m_max) + ", hits=" + std::to_string(hits.size()) +
                              (hits.empty() ? "" : " first (m,c,z)=(" + std::to_string(hits[0].m) + "," +
                                                       to_string(hits[0].c) + "," + std::to_string(hits[0].z) + ")")});

    if (cfg.r == 1) {
        rep.stages.push_back(bounds_stage(bounds_for_c7()));
        std::string d;
        Step1Config s1;
        auto s3 = run_step123(c, s1, 3, Step3Constants{}, opt, d);
        rep.stages.push_back({"step123", pass(s3.empty()), "case (i): " + d});
        rep.survivors.insert(rep.survivors.end(), s3.begin(), s3.end());
        FinalConfig fc;
        scan_stages(rep, c, 5, 30, 3, 4906, fc, opt);
        return rep;
    }
    if (cfg.r == 2) {
        rep.stages.push_back({"even-delta", "trusted-external", "c=13 even Delta branch rests on earlier published work"});
        rep.stages.push_back({"odd-delta", "skipped", "no per-r parameters for c=13 in the tables"});
        return rep;
    }
    if (cfg.r == 5) {
        rep.stages.push_back(bounds_stage(bounds_for_c97()));
        C97Config cc;
        if (cfg.full) cc.Z_hi = 42000;
        auto cr = c97_even_delta_check(cc);
        bool ok = cr.table_matches && cr.V_ok && cr.small_Z_empty;
        std::string d = "Z in [1, " + std::to_string(cc.Z_hi) + "], max V=" + std::to_string(cr.max_V) +
                        ", small-Z cases=" + std::to_string(cr.small_Z.size());
        if (!cr.min_component_ok)
            d += ", component floor fails at Z=" + std::to_string(cr.min_component_first_fail) + " (covered by brute force)";
        rep.stages.push_back({"c97-even-delta", pass(ok), d});
        rep.stages.push_back({"c97-z>Z", "trusted-external", "(959,9360) and (46071,80404) rest on an external method"});
        return rep;
    }

    auto rows = bounds_for_r(cfg.r);
    rep.stages.push_back(bounds_stage(rows));
    auto yrow = ybound_row(cfg.r);
    if (!yrow) throw ParamError("family_pipeline: no Y-bound row for r=" + std::to_string(cfg.r));
    for (const auto& b : rows) {
        if (b.name == "Y_u1") yrow->Y_u1 = std::max(yrow->Y_u1, b.value);
        if (b.name == "Y_u2") yrow->Y_u2 = std::max(yrow->Y_u2, b.value);
    }

    if (cfg.r > 8) {
        rep.stages.push_back({"first-step", pass(nagell_ok),
                              "n'=0 for r > 8, so Delta != 0 mod c forces x = y = 1 unless m^2+m+1 = c^z"});
    } else {
        auto zr = zcap_row(cfg.r);
        if (!zr) throw ParamError("family_pipeline: no z-cap row for r=" + std::to_string(cfg.r));
        Step1Config s1;
        s1.c = c;
        s1.nprime_max = zr->nprime;
        s1.z_u = zr->z_u3;
        Step3Constants k;
        k.K1_small = bound_K1(c, 3, true).value;
        k.K1_large = bound_K1(c, 3, false).value;
        long long K2 = bound_K2(c, 3).value;
        k.K3_small = bound_K3_small(c, k.K1_small, 12, "m<c").value;
        k.K3_large = bound_K3_large(c, K2).value;
        k.K3_z13 = k.K3_large;
        std::string d;
        auto s3 = run_step123(c, s1, 1, k, opt, d);
        rep.stages.push_back({"first-step", pass(s3.empty()),
                              "n' <= " + std::to_string(zr->nprime) + ", z <= " + std::to_string(zr->z_u3) + ": " + d});
        rep.survivors.insert(rep.survivors.end(), s3.begin(), s3.end());
    }

    // Desk scale: e <= 1 for the lifted candidates (c^e of them per root), Y capped in the z floor scan,
    // and for r in {6, 8} (long T ranges) also in the final sieve.
    unsigned e_max = cfg.full ? 3 : (c < 1000 ? 1 : 0);
    unsigned long Yf = cfg.full ? static_cast<unsigned long>(yrow->Y_u1)
                                : std::min<unsigned long>(yrow->Y_u1, cfg.Y_desk_cap);
    FinalConfig fc;
    fc.c = c;
    fc.Y_u = static_cast<unsigned long>(yrow->Y_u2);
    if (!cfg.full && cfg.r <= 8) fc.Y_u = std::min<unsigned long>(fc.Y_u, cfg.Y_desk_cap);
    fc.z2 = yrow->z2;
    scan_stages(rep, c, cfg.z_scan_lo, z_hi, e_max, Yf, fc, opt);
    return rep;
}

}  // namespace expsieve
