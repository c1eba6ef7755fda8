// Command line front end for the anticyc library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "anticyc/cones.hpp"
#include "anticyc/json_io.hpp"
#include "anticyc/pell.hpp"
#include "anticyc/roots.hpp"
#include "anticyc/scenarios.hpp"

using namespace anticyc;

namespace {

json verdict_to_json(const BoundedVerdict& v) {
    json j;
    j["status"] = verdict_name(v.status);
    j["bound"] = v.bound.get_str();
    if (v.witness) j["witness"] = class_to_json(*v.witness);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

json root_verdict_to_json(const RootVerdict& v) {
    json j;
    j["beta"] = class_to_json(v.beta);
    j["status"] = root_status_name(v.status);
    if (v.witness) j["witness"] = class_to_json(*v.witness);
    if (!v.rule.empty()) j["rule"] = v.rule;
    return j;
}

std::optional<LatticeClass> opt_class(const std::string& text, int dim) {
    if (text.empty()) return std::nullopt;
    return parse_class_arg(text, dim);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact lattice computations for anticanonical cycle pairs"};
    app.require_subcommand(1);

    // pair validate / classify
    auto* pair_cmd = app.add_subcommand("pair", "Inspect a pair file");
    pair_cmd->require_subcommand(1);
    std::string pv_file;
    auto* pv = pair_cmd->add_subcommand("validate", "Check all pair invariants");
    pv->add_option("file", pv_file, "pair JSON file")->required();
    std::string pc_file;
    long pc_bound = 8;
    auto* pc = pair_cmd->add_subcommand("classify", "Report the effectiveness regime");
    pc->add_option("file", pc_file, "pair JSON file")->required();
    pc->add_option("--bound", pc_bound, "degree bound for the distinguished-point search");

    // nef construct
    std::string nef_file, nef_seed;
    auto* nef_cmd = app.add_subcommand("nef", "Nef class construction");
    nef_cmd->require_subcommand(1);
    auto* nefc = nef_cmd->add_subcommand("construct", "Project a seed away from the components");
    nefc->add_option("file", nef_file, "pair JSON file")->required();
    nefc->add_option("--seed", nef_seed, "ample seed class, e.g. 1,0,0,...")->required();

    // numexc enum
    std::string nx_file, nx_nef;
    long nx_bound = 8;
    auto* nx_cmd = app.add_subcommand("numexc", "Numerical exceptional classes");
    nx_cmd->require_subcommand(1);
    auto* nxe = nx_cmd->add_subcommand("enum", "Enumerate with effectiveness tags (JSON lines)");
    nxe->add_option("file", nx_file, "pair JSON file")->required();
    nxe->add_option("--bound", nx_bound, "degree bound")->required();
    nxe->add_option("--nef-h", nx_nef, "caller-asserted nef class");

    // cone member
    std::string cm_file, cm_class, cm_nef;
    long cm_bound = 8;
    bool cm_actual = false;
    auto* cone_cmd = app.add_subcommand("cone", "Ample cone membership");
    cone_cmd->require_subcommand(1);
    auto* cmem = cone_cmd->add_subcommand("member", "Bounded membership test");
    cmem->add_option("file", cm_file, "pair JSON file")->required();
    cmem->add_option("--class", cm_class, "class to test")->required();
    cmem->add_option("--bound", cm_bound, "degree bound")->required();
    cmem->add_flag("--actual", cm_actual, "also require nonnegativity on declared -2 classes");
    cmem->add_option("--nef-h", cm_nef, "caller-asserted nef class");

    // roots find / distinguished
    auto* roots_cmd = app.add_subcommand("roots", "Looijenga root detection");
    roots_cmd->require_subcommand(1);
    std::string rf_file, rf_nef;
    long rf_bound = 8;
    auto* rf = roots_cmd->add_subcommand("find", "Classify all -2 classes of Lambda up to bound");
    rf->add_option("file", rf_file, "pair JSON file")->required();
    rf->add_option("--bound", rf_bound, "degree bound")->required();
    rf->add_option("--nef-h", rf_nef, "caller-asserted nef class");
    std::string rd_file, rd_nef;
    long rd_bound = 8;
    auto* rd = roots_cmd->add_subcommand("distinguished", "Search for an R-distinguished point");
    rd->add_option("file", rd_file, "pair JSON file")->required();
    rd->add_option("--bound", rd_bound, "degree bound")->required();
    rd->add_option("--nef-h", rd_nef, "caller-asserted nef class");

    // isometry check
    std::string ic_file, ic_file2, ic_matrix, ic_probe, ic_nef, ic_nef2;
    long ic_bound = 8;
    auto* iso_cmd = app.add_subcommand("isometry", "Isometry cone-preservation check");
    iso_cmd->require_subcommand(1);
    auto* ic = iso_cmd->add_subcommand("check", "Does f carry the generic ample cone across?");
    ic->add_option("file", ic_file, "source pair JSON file")->required();
    ic->add_option("file2", ic_file2, "target pair JSON file (defaults to the source)");
    ic->add_option("--matrix", ic_matrix, "isometry matrix JSON file")->required();
    ic->add_option("--bound", ic_bound, "degree bound")->required();
    ic->add_option("--probe", ic_probe, "asserted member of the source cone");
    ic->add_option("--nef-h", ic_nef, "nef certificate for the source pair");
    ic->add_option("--nef-h2", ic_nef2, "nef certificate for the target pair");

    // pell
    long pell_d = 0;
    bool pell_neg = false;
    auto* pell_cmd = app.add_subcommand("pell", "Pell equation x^2 - D y^2 = +-1");
    pell_cmd->add_option("D", pell_d, "nonsquare D > 1")->required();
    pell_cmd->add_flag("--negative", pell_neg, "solve x^2 - D y^2 = -1 instead");

    // scenario build / verify
    auto* sc_cmd = app.add_subcommand("scenario", "Named constructions");
    sc_cmd->require_subcommand(1);
    std::string sb_name, sb_out;
    std::vector<long> sb_params;
    auto* sb = sc_cmd->add_subcommand("build", "Build a named pair and write it to a file");
    sb->add_option("name", sb_name, "scenario name")->required();
    sb->add_option("params", sb_params, "scenario parameters");
    sb->add_option("-o,--output", sb_out, "output pair JSON file")->required();
    std::string sv_name;
    std::vector<long> sv_params;
    auto* sv = sc_cmd->add_subcommand("verify", "Run the golden-value battery");
    sv->add_option("name", sv_name, "scenario name")->required();
    sv->add_option("params", sv_params, "scenario parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*pv) {
        std::ifstream in(pv_file);
        if (!in) throw std::runtime_error("cannot open: " + pv_file);
        json raw;
        in >> raw;
        CyclePair pair;
        std::vector<std::string> findings;
        try {
            pair = pair_from_json(raw);
        } catch (const std::exception& e) {
            findings.push_back(e.what());
        }
        if (findings.empty()) findings = validate(pair);
        json out;
        out["valid"] = findings.empty();
        out["findings"] = findings;
        std::cout << out.dump(2) << "\n";
        return findings.empty() ? 0 : 1;
    }
    if (*pc) {
        CyclePair pair = load_pair(pc_file);
        PairClassification cls = classify(pair, {}, Int(pc_bound));
        json out;
        out["regime"] = regime_name(cls.regime);
        out["negative_definite"] = cls.negative_definite;
        out["k_square"] = cls.k_square.get_str();
        out["has_minus_one_component"] = cls.has_minus_one_component;
        if (cls.distinguished) {
            json cert;
            cert["x"] = class_to_json(cls.distinguished->x);
            cert["roots_used"] = json::array();
            for (const auto& r : cls.distinguished->roots_used)
                cert["roots_used"].push_back(class_to_json(r));
            out["distinguished"] = cert;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*nefc) {
        CyclePair pair = load_pair(nef_file);
        LatticeClass seed = parse_class_arg(nef_seed, pair.n + 1);
        NefResult res = construct_nef(seed, pair.components);
        json out;
        out["h"] = class_to_json(res.h);
        out["scale"] = res.scale.get_str();
        out["multipliers"] = json::array();
        for (const auto& r : res.multipliers) out["multipliers"].push_back(r.get_str());
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*nxe) {
        CyclePair pair = load_pair(nx_file);
        auto nef = opt_class(nx_nef, pair.n + 1);
        for (const auto& c : enumerate_numexc(pair, Int(nx_bound), std::nullopt, nef)) {
            json line;
            line["class"] = class_to_json(c.cls);
            line["degree"] = pairing(c.cls, basis_h(pair.n)).get_str();
            line["effectiveness"] = effectiveness_name(c.effectiveness);
            std::cout << line.dump() << "\n";
        }
        return 0;
    }
    if (*cmem) {
        CyclePair pair = load_pair(cm_file);
        LatticeClass x = parse_class_arg(cm_class, pair.n + 1);
        auto nef = opt_class(cm_nef, pair.n + 1);
        BoundedVerdict v = cm_actual
                               ? in_actual_ample_cone(pair, x, Int(cm_bound), std::nullopt, nef)
                               : in_generic_ample_cone(pair, x, Int(cm_bound), std::nullopt, nef);
        std::cout << verdict_to_json(v).dump(2) << "\n";
        return 0;
    }
    if (*rf) {
        CyclePair pair = load_pair(rf_file);
        auto nef = opt_class(rf_nef, pair.n + 1);
        for (const auto& v : roots_up_to_bound(pair, Int(rf_bound), nef))
            std::cout << root_verdict_to_json(v).dump() << "\n";
        return 0;
    }
    if (*rd) {
        CyclePair pair = load_pair(rd_file);
        auto nef = opt_class(rd_nef, pair.n + 1);
        std::vector<LatticeClass> verified;
        for (const auto& v : roots_up_to_bound(pair, Int(rd_bound), nef))
            if (v.status == RootStatus::InR) verified.push_back(v.beta);
        auto cert = find_R_distinguished(pair, verified, Int(rd_bound));
        json out;
        out["found"] = static_cast<bool>(cert);
        if (cert) {
            out["x"] = class_to_json(cert->x);
            out["roots_used"] = json::array();
            for (const auto& r : cert->roots_used) out["roots_used"].push_back(class_to_json(r));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*ic) {
        CyclePair pair = load_pair(ic_file);
        CyclePair pair2 = ic_file2.empty() ? pair : load_pair(ic_file2);
        IntegerIsometry f = load_isometry(ic_matrix);
        auto probe = opt_class(ic_probe, pair.n + 1);
        auto nef = opt_class(ic_nef, pair.n + 1);
        auto nef2 = opt_class(ic_nef2, pair2.n + 1);
        IsometryReport rep = check_isometry(pair, pair2, f, Int(ic_bound), probe, nef, nef2);
        json out;
        out["components_match"] = rep.components_match;
        out["positive_cone"] = rep.positive_cone;
        out["lambda_preserved"] = rep.lambda_preserved;
        out["cone"] = cone_verdict_name(rep.cone);
        out["roots_consistent"] = rep.roots_consistent;
        if (rep.witness) out["witness"] = class_to_json(*rep.witness);
        if (rep.probe) out["probe"] = class_to_json(*rep.probe);
        if (rep.probe_verdict) out["probe_verdict"] = verdict_to_json(*rep.probe_verdict);
        if (!rep.rule.empty()) out["rule"] = rep.rule;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*pell_cmd) {
        json out;
        if (pell_neg) {
            NegativePellResult r = pell_negative(Int(pell_d));
            out["solvable"] = r.solvable;
            if (r.fundamental) {
                out["x"] = r.fundamental->x.get_str();
                out["y"] = r.fundamental->y.get_str();
            }
            if (!r.certificate.empty()) out["certificate"] = r.certificate;
        } else {
            PellSolution s = pell_fundamental(Int(pell_d));
            out["x"] = s.x.get_str();
            out["y"] = s.y.get_str();
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*sb) {
        Scenario s = build_scenario(sb_name, sb_params);
        save_pair(s.pair, sb_out);
        json out;
        out["name"] = s.name;
        out["written"] = sb_out;
        out["named"] = json::object();
        for (const auto& [k, v] : s.named) out["named"][k] = class_to_json(v);
        if (s.nef_certificate) out["nef_certificate"] = class_to_json(*s.nef_certificate);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (*sv) {
        VerifyReport rep = verify_scenario(sv_name, sv_params);
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.label
                      << (c.pass ? "" : "  expected: " + c.expected + "  actual: " + c.actual)
                      << "\n";
        std::cout << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
        return rep.all_pass() ? 0 : 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
