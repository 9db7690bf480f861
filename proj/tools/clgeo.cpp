#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clgeo/identities.hpp"
#include "clgeo/incidence.hpp"
#include "clgeo/io.hpp"
#include "clgeo/search.hpp"

using namespace clgeo;
using nlohmann::json;

namespace {

// q -> (p, e); q must be a prime power <= 32
std::pair<int, int> factor_order(int q) {
    for (int p = 2; p <= q; ++p) {
        bool prime = p >= 2;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        int e = 0, v = q;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (v == 1 && e >= 1) return {p, e};
    }
    throw CLI::ValidationError("--q", "q must be a prime power");
}

struct GeoOpts {
    std::string kind = "pg";
    int n = 3;
    int q = 2;
    int k = 1;

    Geometry geometry() const {
        auto [p, e] = factor_order(q);
        return Geometry(kind == "pg" ? Kind::PG : Kind::AG, n, Field::get(p, e));
    }
};

void add_geo_opts(CLI::App* cmd, GeoOpts& g, bool with_k = true) {
    cmd->add_option("--kind", g.kind, "geometry kind")->check(CLI::IsMember({"pg", "ag"}));
    cmd->add_option("--n", g.n, "dimension")->required();
    cmd->add_option("--q", g.q, "field order")->required();
    if (with_k) cmd->add_option("--k", g.k, "subspace dimension")->required();
}

KSet load_kset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_kset(in);
}

void emit_kset(const KSet& L, const std::string& path) {
    if (path.empty() || path == "-") {
        write_kset(std::cout, L);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_kset(out, L);
}

json report_json(const VerifierReport& r) {
    json j;
    j["definition"] = r.definition;
    j["pass"] = r.pass;
    if (r.witness) j["witness"] = *r.witness;
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.definition == 4) j["exhaustive_spreads"] = r.exhaustive_spreads;
    return j;
}

std::string rat_str(const Rational& x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

// spreads used by `verify`: the constructible families, or an exhaustive
// enumeration when the geometry is tiny
std::pair<std::vector<Spread>, bool> default_spreads(const Geometry& g, int k) {
    if (SubspaceTable::get(g, 0).size() <= 16) {
        auto e = enumerate_spreads(g, k, 200000);
        if (e.exhaustive) return {e.spreads, true};
    }
    std::vector<Spread> out;
    if (g.kind == Kind::AG) {
        // one parallel spread per direction
        Geometry dirs(Kind::PG, g.n - 1, *g.F);
        for (const Subspace& w : SubspaceTable::get(dirs, k - 1).all())
            out.push_back(affine_parallel_spread(g, w.basis));
    } else if ((g.n + 1) % (k + 1) == 0) {
        out.push_back(desarguesian_spread(g, k));
    }
    return {out, false};
}

int cmd_verify(const std::string& path, const std::string& spread_path) {
    KSet L = load_kset(path);
    json out;
    out["parameter"] = rat_str(L.parameter());
    out["size"] = L.size();
    bool all = true;

    auto add = [&](const VerifierReport& r) {
        out["definitions"].push_back(report_json(r));
        all = all && r.pass;
    };
    add(verify_def1(L));
    if (L.g.kind == Kind::PG || L.k == 1) add(verify_def2(L));
    if (L.g.kind == Kind::PG) add(verify_def3(L));

    std::vector<Spread> spreads;
    bool exhaustive = false;
    if (!spread_path.empty()) {
        std::ifstream in(spread_path);
        if (!in) throw std::runtime_error("cannot open " + spread_path);
        auto [s, ex] = read_spread(in);
        spreads.push_back(s);
        exhaustive = ex;
    } else {
        std::tie(spreads, exhaustive) = default_spreads(L.g, L.k);
    }
    if (!spreads.empty() && (L.g.kind == Kind::AG || (L.g.n + 1) % (L.k + 1) == 0))
        add(verify_def4(L, spreads, exhaustive));

    std::cout << out << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Cameron-Liebler k-set toolkit for PG(n,q) and AG(n,q)"};
    app.require_subcommand(1);
    unsigned seed = 1;
    app.add_option("--seed", seed, "seed for randomized sampling");

    // gauss
    auto* gaussc = app.add_subcommand("gauss", "Gaussian binomial coefficient");
    int gb = 0, ga = 0, gq = 2;
    gaussc->add_option("b", gb)->required();
    gaussc->add_option("a", ga)->required();
    gaussc->add_option("q", gq)->required();

    // enumerate
    auto* enumc = app.add_subcommand("enumerate", "count/enumerate k-subspaces");
    GeoOpts eg;
    add_geo_opts(enumc, eg);

    // trivial
    auto* trivc = app.add_subcommand("trivial", "construct a trivial k-set");
    GeoOpts tg;
    add_geo_opts(trivc, tg);
    std::string family = "pencil", tout;
    int point_id = 0, hyperplane_id = 0;
    bool complemented = false;
    trivc->add_option("--family", family)
        ->check(CLI::IsMember({"empty", "pencil", "hyperplane", "union", "full"}));
    trivc->add_option("--point-id", point_id, "point ID for pencil/union");
    trivc->add_option("--hyperplane-id", hyperplane_id, "hyperplane ID for hyperplane/union");
    trivc->add_flag("--complement", complemented, "emit the complement");
    trivc->add_option("-o,--output", tout, "output path (default stdout)");

    // verify
    auto* verc = app.add_subcommand("verify", "run all applicable verifiers on a k-set file");
    std::string vin, vspread;
    verc->add_option("input", vin, "k-set file")->required();
    verc->add_option("--spread", vspread, "spread file for the spread verifier");

    // restrict
    auto* resc = app.add_subcommand("restrict", "restrict a k-set to a subspace");
    std::string rin, rout;
    int pi_k = 2, pi_id = 0;
    resc->add_option("input", rin)->required();
    resc->add_option("--pi-k", pi_k, "dimension of the subspace")->required();
    resc->add_option("--pi-id", pi_id, "ID of the subspace")->required();
    resc->add_option("-o,--output", rout);

    // closure
    auto* cloc = app.add_subcommand("closure", "AG->PG transfer (or PG->AG with --hyperplane-id)");
    std::string cin_, cout_;
    int hyp_id = -1;
    cloc->add_option("input", cin_)->required();
    cloc->add_option("--hyperplane-id", hyp_id, "to-affine w.r.t. this hyperplane");
    cloc->add_option("-o,--output", cout_);

    // spread
    auto* sprc = app.add_subcommand("spread", "construct or enumerate spreads");
    GeoOpts sg;
    add_geo_opts(sprc, sg);
    std::string construction = "desarguesian", sout;
    long cap = 1000;
    int direction_id = 0;
    sprc->add_option("--construction", construction)
        ->check(CLI::IsMember({"desarguesian", "parallel", "enumerate"}));
    sprc->add_option("--direction-id", direction_id, "direction (parallel spreads)");
    sprc->add_option("--cap", cap, "enumeration cap");
    sprc->add_option("-o,--output", sout);

    // identity
    auto* idec = app.add_subcommand("identity", "evaluate a counting identity on a k-set file");
    std::string iin, which = "lemma41";
    int site = 0, tau_id = 0, tdim = 3;
    idec->add_option("input", iin)->required();
    idec->add_option("--which", which)->check(CLI::IsMember({"lemma212", "lemma41", "lemma42"}));
    idec->add_option("--site", site, "point / k-space / line ID");
    idec->add_option("--tau-id", tau_id, "subspace ID (lemma212)");
    idec->add_option("--t", tdim, "subspace dimension");

    // glue
    auto* gluc = app.add_subcommand("glue", "gluing criterion on a k-set file");
    std::string gin;
    int gt = 3;
    gluc->add_option("input", gin)->required();
    gluc->add_option("--t", gt, "restriction dimension")->required();

    // bounds
    auto* bndc = app.add_subcommand("bounds", "non-existence bound table over an (n,k,q) grid");
    int n_lo = 4, n_hi = 10, k_lo = 1, k_hi = 2;
    std::vector<int> qs{2, 3};
    std::string fmt = "csv";
    bndc->add_option("--n-min", n_lo);
    bndc->add_option("--n-max", n_hi);
    bndc->add_option("--k-min", k_lo);
    bndc->add_option("--k-max", k_hi);
    bndc->add_option("--q", qs, "field orders");
    bndc->add_option("--format", fmt)->check(CLI::IsMember({"csv", "json"}));

    // classify
    auto* clsc = app.add_subcommand("classify", "exhaustive 0/1 row-space classification");
    GeoOpts cg;
    add_geo_opts(clsc, cg);
    long long budget = 10'000'000;
    bool crossval = false;
    std::string clsout;
    clsc->add_option("--budget", budget, "node budget");
    clsc->add_flag("--cross-validate", crossval, "re-check against spreads");
    clsc->add_option("-o,--output", clsout, "write found k-sets here (JSON lines)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage/config errors are exit 2
    }

    try {
        if (*gaussc) {
            std::cout << gauss_binomial(gb, ga, gq) << "\n";
            return 0;
        }
        if (*enumc) {
            Geometry g = eg.geometry();
            json out;
            out["count"] = SubspaceTable::get(g, eg.k).size();
            out["closed_form"] = g.num_subspaces(eg.k).str();
            std::cout << out << "\n";
            return 0;
        }
        if (*trivc) {
            Geometry g = tg.geometry();
            KSet L = make_empty(g, tg.k);
            if (family == "pencil")
                L = make_pencil(g, tg.k, SubspaceTable::get(g, 0).at(point_id));
            else if (family == "hyperplane")
                L = make_hyperplane_set(g, tg.k, SubspaceTable::get(g, g.n - 1).at(hyperplane_id));
            else if (family == "union")
                L = make_union(g, tg.k, SubspaceTable::get(g, 0).at(point_id),
                               SubspaceTable::get(g, g.n - 1).at(hyperplane_id));
            else if (family == "full")
                L = complement(make_empty(g, tg.k));
            if (complemented) L = complement(L);
            emit_kset(L, tout);
            return 0;
        }
        if (*verc) return cmd_verify(vin, vspread);
        if (*resc) {
            KSet L = load_kset(rin);
            KSet r = restrict_to(L, SubspaceTable::get(L.g, pi_k).at(pi_id));
            emit_kset(r, rout);
            return 0;
        }
        if (*cloc) {
            KSet L = load_kset(cin_);
            KSet out = hyp_id >= 0
                           ? to_affine(L, SubspaceTable::get(L.g, L.g.n - 1).at(hyp_id))
                           : to_projective(L);
            emit_kset(out, cout_);
            return 0;
        }
        if (*sprc) {
            Geometry g = sg.geometry();
            std::ostream* os = &std::cout;
            std::ofstream f;
            if (!sout.empty() && sout != "-") {
                f.open(sout);
                if (!f) throw std::runtime_error("cannot open " + sout);
                os = &f;
            }
            if (construction == "desarguesian") {
                write_spread(*os, desarguesian_spread(g, sg.k), true);
            } else if (construction == "parallel") {
                Geometry dirs(Kind::PG, g.n - 1, *g.F);
                const Subspace& w = SubspaceTable::get(dirs, sg.k - 1).at(direction_id);
                write_spread(*os, affine_parallel_spread(g, w.basis), true);
            } else {
                auto e = enumerate_spreads(g, sg.k, cap);
                for (const Spread& s : e.spreads) write_spread(*os, s, e.exhaustive);
            }
            return 0;
        }
        if (*idec) {
            KSet L = load_kset(iin);
            json out;
            out["which"] = which;
            bool pass;
            if (which == "lemma212") {
                auto rep = check_lemma212(L, SubspaceTable::get(L.g, 0).at(site),
                                          SubspaceTable::get(L.g, tdim).at(tau_id));
                out["lhs"] = rat_str(rep.lhs);
                out["rhs"] = rat_str(rep.rhs);
                pass = rep.pass;
            } else {
                Rational v = which == "lemma41" ? lemma41_parameter(L, site, tdim)
                                                : lemma42_parameter(L, site, tdim);
                out["value"] = rat_str(v);
                out["parameter"] = rat_str(L.parameter());
                pass = v == L.parameter();
            }
            out["pass"] = pass;
            std::cout << out << "\n";
            return pass ? 0 : 1;
        }
        if (*gluc) {
            KSet L = load_kset(gin);
            GlueReport rep =
                L.g.kind == Kind::PG ? glue_constant_pg(L, gt) : glue_constant_ag(L, gt);
            json out;
            out["restrictions_cl"] = rep.restrictions_cl;
            if (rep.bad_restriction) out["bad_restriction"] = *rep.bad_restriction;
            out["constant"] = rep.constant;
            if (rep.constant) out["value"] = rat_str(rep.value);
            if (rep.witness) out["witness"] = {rep.witness->first, rep.witness->second};
            out["infinity_ok"] = rep.infinity_ok;
            out["verdict"] = rep.verdict;
            std::cout << out << "\n";
            return rep.verdict ? 0 : 1;
        }
        if (*bndc) {
            std::vector<json> rows;
            for (int q : qs)
                for (int k = k_lo; k <= k_hi; ++k)
                    for (int n = n_lo; n <= n_hi; ++n) {
                        json r;
                        r["n"] = n;
                        r["k"] = k;
                        r["q"] = q;
                        auto b62 = bound_thm62(n, k, q);
                        r["thm62"] = b62.applicable ? rat_str(b62.value) : "n/a";
                        auto b64 = bound_thm64(n, k, q);
                        r["thm64"] = b64.applicable ? rat_str(b64.value) : "n/a";
                        auto b66 = bound_thm66(n, k, q);
                        r["thm66"] = b66.applicable ? std::to_string((double)b66.value) : "n/a";
                        auto b67 = bound_thm67_maxx(n, k, q);
                        r["thm67_maxx"] = b67.applicable ? b67.max_x.str() : "n/a";
                        if (k == 1) {
                            auto b72 = bound_thm72(n, q);
                            r["thm72"] = b72.applicable ? rat_str(b72.value) : "n/a";
                        }
                        rows.push_back(std::move(r));
                    }
            if (fmt == "json") {
                for (const auto& r : rows) std::cout << r << "\n";
            } else {
                std::cout << "n,k,q,thm62,thm64,thm66,thm67_maxx,thm72\n";
                for (const auto& r : rows)
                    std::cout << r["n"] << "," << r["k"] << "," << r["q"] << ","
                              << r["thm62"].get<std::string>() << ","
                              << r["thm64"].get<std::string>() << ","
                              << r["thm66"].get<std::string>() << ","
                              << r["thm67_maxx"].get<std::string>() << ","
                              << (r.contains("thm72") ? r["thm72"].get<std::string>() : "n/a")
                              << "\n";
            }
            return 0;
        }
        if (*clsc) {
            Geometry g = cg.geometry();
            auto run = classify(g, cg.k, budget);
            json out;
            out["rank"] = IncidenceSpace::get(g, cg.k).rank();
            out["nodes"] = run.nodes;
            out["found"] = run.found.size();
            out["exhaustive"] = run.exhaustive;
            out["seconds"] = run.seconds;
            json params = json::array();
            for (const KSet& L : run.found) params.push_back(rat_str(L.parameter()));
            out["parameters"] = std::move(params);
            bool ok = true;
            if (crossval) {
                auto spreads = default_spreads(g, cg.k);
                auto cv = cross_validate(run, spreads.first, seed);
                out["cross_validate"] = cv.ok;
                ok = cv.ok;
            }
            std::cout << out << "\n";
            if (!clsout.empty()) {
                std::ofstream f(clsout);
                if (!f) throw std::runtime_error("cannot open " + clsout);
                for (const KSet& L : run.found) write_kset(f, L);
            }
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
