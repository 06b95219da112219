#include "wz/report.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "wz/errors.hpp"
#include "wz/manifest.hpp"

namespace wz {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json big_array(const std::vector<BigInt>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) arr.push_back(x.to_string());
    return arr;
}

BigRat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open manifest: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string manifest_path;
    uint32_t ext = 3;
    int deg_num = -1;
    int deg_den = -1;
    bool auto_deg = false;
    uint32_t precision = 0;  // 0: default 24 a
    uint32_t kappa = 1;
    std::string rho;  // empty: report every slope
    std::string check_name;
    std::string json_path;
    std::string variety_name;
};

uint32_t precision_of(const Options& opt, const FqField& f) {
    return opt.precision ? opt.precision : 24 * f.a();
}

ReconOptions recon_of(const Options& opt) {
    ReconOptions r;
    if (!opt.auto_deg && opt.deg_num >= 0 && opt.deg_den >= 0)
        r.deg_bounds = {static_cast<uint32_t>(opt.deg_num),
                        static_cast<uint32_t>(opt.deg_den)};
    return r;
}

const VarietySpec& main_variety(const Manifest& m, const Options& opt) {
    std::string name = !opt.variety_name.empty() ? opt.variety_name
                                                 : m.default_variety;
    if (name.empty())
        throw Error("no main variety: pass --variety or declare main = ...");
    return m.variety(name);
}

std::string declared(const Manifest& m, const std::string& key) {
    auto it = m.declares.find(key);
    if (it == m.declares.end())
        throw HypothesisNotDeclared("manifest lacks the declaration '" + key +
                                    "'");
    return it->second;
}

std::vector<std::string> split2(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '\t') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

void payload_from_report(ReportPayload& out, const CheckReport& rep) {
    out.counts = rep.counts;
    out.zeta = rep.zeta;
    out.precision = rep.precision;
    out.verdict = rep.pass ? "pass" : "fail";
    out.assumptions = rep.assumptions;
    for (const auto& note : rep.slope_notes) out.assumptions.push_back(note);
    for (const auto& [k, v] : rep.inputs)
        out.assumptions.push_back("input " + k + " = " + v);
    for (const auto& c : rep.cross_checks)
        out.cross_checks.emplace_back(c.name, c.agree);
    for (const auto& r : rep.residues)
        out.cross_checks.emplace_back(
            "r=" + std::to_string(r.r) + " residue " + r.value.to_string() +
                " mod " + r.modulus.to_string(),
            r.ok);
}

CheckReport dispatch_check(const Manifest& m, const Options& opt) {
    const std::string& name = opt.check_name;
    uint32_t M = precision_of(opt, m.field);
    if (name == "divis") {
        const VarietySpec& V = m.variety(declared(m, "divis"));
        auto t = count_table(V, opt.ext);
        return check_divis(t, opt.kappa, opt.ext, M, recon_of(opt));
    }
    if (name == "ax-katz") {
        std::string vn = m.declares.count("ax_katz") ? m.declares.at("ax_katz")
                                                     : m.default_variety;
        return check_ax_katz(m.variety(vn), opt.ext, M, recon_of(opt));
    }
    if (name == "general-serre") {
        auto names = split2(declared(m, "serre_pair"));
        if (names.size() != 2)
            throw HypothesisNotDeclared("serre_pair needs two curve names");
        return check_general_serre(m.variety(names[0]), m.variety(names[1]),
                                   opt.ext, M);
    }
    if (name == "serre-theta") {
        auto names = split2(declared(m, "theta_divisors"));
        if (names.size() != 2)
            throw HypothesisNotDeclared("theta_divisors needs two names");
        return check_serre_theta(m.variety(names[0]), m.variety(names[1]),
                                 /*declared=*/true, opt.ext);
    }
    if (name == "congruence-pair") {
        auto names = split2(declared(m, "pair"));
        if (names.size() != 2)
            throw HypothesisNotDeclared("pair needs two variety names");
        return check_congruence_pair(m.variety(names[0]), m.variety(names[1]),
                                     opt.ext);
    }
    if (name == "igusa") {
        auto names = split2(declared(m, "igusa"));
        if (names.size() != 2)
            throw HypothesisNotDeclared("igusa needs 'variety,action'");
        uint32_t slot = 0;
        if (m.declares.count("igusa_torsion_slot"))
            slot = static_cast<uint32_t>(
                std::stoul(m.declares.at("igusa_torsion_slot")));
        return check_igusa(m.variety(names[0]), m.action(names[1]), slot,
                           opt.ext, M);
    }
    if (name == "vanish-purity") {
        auto names = split2(declared(m, "vanish"));
        if (names.size() != 3)
            throw HypothesisNotDeclared("vanish needs 'X,D,n'");
        uint32_t n = static_cast<uint32_t>(std::stoul(names[2]));
        return check_vanish_purity(m.variety(names[0]), m.variety(names[1]), n,
                                   opt.ext, M, recon_of(opt));
    }
    throw Error("unknown check '" + name +
                "'; expected one of divis, ax-katz, general-serre, "
                "serre-theta, congruence-pair, igusa, vanish-purity");
}

}  // namespace

std::string emit_report(const ReportPayload& p) {
    ordered_json j;
    j["command"] = p.command;
    j["q"] = p.q.to_string();
    j["counts"] = big_array(p.counts);
    ordered_json zeta;
    if (p.zeta) {
        zeta["num"] = big_array(p.zeta->num.coeffs());
        zeta["den"] = big_array(p.zeta->den.coeffs());
    } else {
        zeta["num"] = ordered_json::array();
        zeta["den"] = ordered_json::array();
    }
    j["zeta"] = zeta;
    ordered_json slopes = ordered_json::array();
    for (const auto& s : p.slopes) {
        ordered_json e;
        e["lambda"] = s.lambda.to_string();
        e["factor_mod_pM"] = big_array(s.factor);
        e["side"] = s.side;
        slopes.push_back(e);
    }
    j["slopes"] = slopes;
    j["precision"] = p.precision;
    j["verdict"] = p.verdict;
    ordered_json assum = ordered_json::array();
    for (const auto& a : p.assumptions) assum.push_back(a);
    j["assumptions"] = assum;
    ordered_json crosses = ordered_json::array();
    for (const auto& [name, agree] : p.cross_checks) {
        ordered_json c;
        c["name"] = name;
        c["agree"] = agree;
        crosses.push_back(c);
    }
    j["cross_checks"] = crosses;
    return j.dump(2) + "\n";
}

CliResult run_command(const std::vector<std::string>& args) {
    CliResult result;
    Options opt;
    std::string subcommand;

    CLI::App app{"zeta functions, slopes and point-counting congruences over "
                 "small finite fields"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--manifest", opt.manifest_path, "manifest file")
            ->required();
        cmd->add_option("--ext", opt.ext, "check extensions r = 1..R");
        cmd->add_option("--deg-num", opt.deg_num, "numerator degree bound");
        cmd->add_option("--deg-den", opt.deg_den, "denominator degree bound");
        cmd->add_flag("--auto-deg", opt.auto_deg, "search minimal degree bounds");
        cmd->add_option("--precision", opt.precision, "p-adic precision M");
        cmd->add_option("--kappa", opt.kappa, "divisibility exponent");
        cmd->add_option("--rho", opt.rho, "slope bound (fraction u/v)");
        cmd->add_option("--json", opt.json_path, "write the JSON report here");
        cmd->add_option("--variety", opt.variety_name, "main variety override");
    };
    CLI::App* c_count = app.add_subcommand("count", "count rational points");
    CLI::App* c_zeta = app.add_subcommand("zeta", "reconstruct the zeta function");
    CLI::App* c_slopes = app.add_subcommand("slopes", "p-adic slope factors");
    CLI::App* c_check = app.add_subcommand("check", "run a named checker");
    for (auto* c : {c_count, c_zeta, c_slopes, c_check}) add_common(c);
    c_check->add_option("--check", opt.check_name, "checker name")->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.human = std::string("usage error: ") + e.what() + "\n";
        return result;
    }
    if (c_count->parsed()) subcommand = "count";
    if (c_zeta->parsed()) subcommand = "zeta";
    if (c_slopes->parsed()) subcommand = "slopes";
    if (c_check->parsed()) subcommand = "check";

    try {
        Manifest m = parse_manifest(read_file(opt.manifest_path));
        ReportPayload payload;
        payload.command = subcommand;
        payload.q = m.field.q();
        std::ostringstream human;

        if (subcommand == "count") {
            const VarietySpec& V = main_variety(m, opt);
            auto t = count_table(V, opt.ext);
            payload.counts = t.counts;
            payload.verdict = "pass";
            human << "counts over F_{" << m.field.q().to_string() << "^r} of "
                  << V.name << ":";
            for (const auto& n : t.counts) human << " " << n.to_string();
            human << "\n";
        } else if (subcommand == "zeta" || subcommand == "slopes") {
            const VarietySpec& V = main_variety(m, opt);
            auto t = count_table(V, opt.ext);
            payload.counts = t.counts;
            auto s = series_from_counts(t, opt.ext);
            ReconOptions recon = recon_of(opt);
            RationalZeta z = recon.deg_bounds
                                 ? reconstruct_rational(s, recon.deg_bounds->first,
                                                        recon.deg_bounds->second)
                                 : reconstruct_rational_auto(s);
            payload.zeta = z;
            payload.verdict = "pass";
            human << "zeta(" << V.name << ") = (" << z.num.to_string()
                  << ") / (" << z.den.to_string() << ")\n";
            if (subcommand == "slopes") {
                uint32_t M = precision_of(opt, m.field);
                payload.precision = M;
                bool restrict_rho = !opt.rho.empty();
                BigRat rho = restrict_rho ? parse_rat(opt.rho) : BigRat(0);
                auto emit_side = [&](const IntPoly& f, const std::string& side) {
                    auto fac =
                        slope_factorization(f, m.field.p(), m.field.a(), M);
                    for (const auto& [lam, g] : fac.factors) {
                        if (restrict_rho && !(lam < rho)) continue;
                        ReportPayload::SlopeEntry e;
                        e.lambda = lam;
                        e.factor = g.c;
                        e.side = side;
                        payload.slopes.push_back(std::move(e));
                    }
                };
                emit_side(z.num, "num");
                emit_side(z.den, "den");
                human << "slopes:";
                for (const auto& e : payload.slopes)
                    human << " " << e.side << ":" << e.lambda.to_string();
                human << "\n";
            }
        } else if (subcommand == "check") {
            CheckReport rep = dispatch_check(m, opt);
            payload_from_report(payload, rep);
            human << "check " << rep.check_name << ": "
                  << (rep.pass ? "PASS" : "FAIL");
            if (rep.internal_inconsistency) human << " (internal inconsistency)";
            human << "\n";
            for (const auto& c : rep.cross_checks)
                human << "  cross-check " << c.name << ": "
                      << (c.agree ? "agree" : "DISAGREE") << "\n";
            result.exit_code = rep.internal_inconsistency ? 3
                               : rep.pass                 ? 0
                                                          : 1;
        }

        result.json = emit_report(payload);
        result.human += human.str();
        if (!opt.json_path.empty()) {
            std::ofstream out(opt.json_path, std::ios::binary);
            out << result.json;
        }
        return result;
    } catch (const InternalInconsistency& e) {
        result.exit_code = 3;
        result.human = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const NonIntegralUniversal& e) {
        result.exit_code = 3;
        result.human = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const NonIntegralQuotient& e) {
        result.exit_code = 3;
        result.human = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const InconsistentCounts& e) {
        result.exit_code = 3;
        result.human = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const NonIntegralSeries& e) {
        result.exit_code = 3;
        result.human = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const Error& e) {
        result.exit_code = 2;
        result.human = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.human = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

}  // namespace wz
