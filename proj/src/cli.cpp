#include "lensbound/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lensbound/json_io.hpp"
#include "lensbound/plot.hpp"
#include "lensbound/sweep.hpp"

namespace lensbound {

namespace {

void print_verdict(const Verdict& v, bool json, std::ostream& out) {
    if (json) {
        out << verdict_json(v).dump() << "\n";
        return;
    }
    out << "answer: " << v.answer() << "\n";
    for (const Witness& w : v.witnesses) {
        out << "witness (" << w.label << "):";
        for (const auto& [name, value] : w.values) out << " " << name << "=" << value;
        out << "\n";
    }
    out << "derivation:\n";
    for (std::size_t i = 0; i < v.derivation.size(); ++i)
        out << "  " << i + 1 << ". " << v.derivation[i].text << "  [" << v.derivation[i].ref
            << "]\n";
    out << "bounds: " << v.bounds << "\n";
}

void print_certificate(const Certificate& c, bool json, std::ostream& out) {
    if (json) {
        out << certificate_json(c).dump() << "\n";
        return;
    }
    out << "coefficient: " << c.coefficient.str() << "\n";
    out << "conclusion: " << to_string(c.conclusion) << "\n";
    out << "status: " << to_string(c.status) << "\n";
    out << "hypotheses:\n";
    for (const std::string& h : c.hypotheses) out << "  - " << h << "\n";
    out << "ref: " << c.paper_ref << "\n";
    out << "homology check: " << (c.homology_check ? "ok" : "FAILED") << "\n";
    for (const std::string& n : c.notes) out << "note: " << n << "\n";
}

IntMatrix load_matrix(const std::string& file) {
    if (file == "-") return read_matrix(std::cin);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open matrix file '" + file + "'");
    return read_matrix(in);
}

ordered_json sweep_json(const SweepReport& r) {
    ordered_json j;
    j["sweep"] = sweep_kind_name(r.kind);
    j["pmax"] = std::to_string(r.pmax);
    j["pairs"] = std::to_string(r.pairs);
    j["checked"] = std::to_string(r.checked);
    j["violations"] = std::to_string(r.violations);
    j["counterexamples"] = r.counterexamples;
    return j;
}

struct CertArgs {
    long long m = 0;
    long long s = 0;
    long long k = 1;
    int sign = 1;
    std::string ambient = "acyclic";
};

AmbientClass parse_ambient(const std::string& name) {
    if (name == "acyclic") return AmbientClass::acyclic;
    if (name == "rational" || name == "rationally_acyclic") return AmbientClass::rationally_acyclic;
    throw std::invalid_argument("ambient must be 'acyclic' or 'rational'");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"lensbound: exact decision toolkit for lens spaces, Farey paths, tight "
                 "contact structures, fillings and surgery certificates"};
    app.require_subcommand(1);

    bool json = false;
    std::string lens_token, second_token, signs, matrix_file = "-", out_file, sweep_name;
    long long arg_p = 0, arg_q = 0, pmax = 0;
    int jobs = default_jobs();
    bool verify_bfs = false, all_orderings = false, allow_even = false;
    CertArgs cert_args;
    int exit_code = 0;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "emit JSON"); };

    CLI::App* tight = app.add_subcommand("tight", "enumerate tight contact structures on L(p,q)");
    tight->add_option("lens", lens_token, "lens space as p,q")->required();
    add_json(tight);
    tight->callback([&] {
        LensSpace lens = parse_lens(lens_token);
        std::vector<TightStructure> all = enumerate_tight(lens);
        long long universal = 0;
        for (const TightStructure& t : all) universal += is_universally_tight(t) ? 1 : 0;
        if (json) {
            ordered_json j;
            j["p"] = std::to_string(lens.p);
            j["q"] = std::to_string(lens.q);
            j["count"] = std::to_string(all.size());
            j["universally_tight"] = std::to_string(universal);
            j["universally_tight_unoriented"] =
                std::to_string(universally_tight_count(lens, false));
            ordered_json list = ordered_json::array();
            for (const TightStructure& t : all) list.push_back(tight_structure_json(t));
            j["structures"] = list;
            out << j.dump() << "\n";
            return;
        }
        out << lens.str() << ": " << all.size() << " tight contact structure"
            << (all.size() == 1 ? "" : "s") << ", " << universal << " universally tight ("
            << universally_tight_count(lens, false) << " unoriented)\n";
        if (!all.empty()) {
            out << "path:";
            for (const Slope& s : all.front().path.vertices) out << " " << s.str();
            out << "\n";
        }
        for (std::size_t i = 0; i < all.size(); ++i) {
            const TightStructure& t = all[i];
            out << "  [" << i << "] signs=" << (t.signs.empty() ? "(none)" : t.signs) << " "
                << (is_universally_tight(t) ? "universally_tight" : "virtually_overtwisted")
                << " mixed=" << mixed_vertices(t).size() << "\n";
        }
    });

    CLI::App* path_cmd = app.add_subcommand("path", "minimal Farey path from -p/q to 0");
    path_cmd->add_option("lens", lens_token, "lens space as p,q")->required();
    path_cmd->add_flag("--verify-bfs", verify_bfs, "cross-check against the BFS oracle");
    add_json(path_cmd);
    path_cmd->callback([&] {
        LensSpace lens = parse_lens(lens_token);
        FareyPath path = minimal_path(lens);
        if (verify_bfs) {
            FareyPath oracle = bfs_minimal_path(lens);
            if (!(path == oracle))
                throw std::logic_error("oracle mismatch: greedy path differs from BFS for " +
                                       lens.str());
        }
        if (json) {
            ordered_json j;
            j["p"] = std::to_string(lens.p);
            j["q"] = std::to_string(lens.q);
            j["path"] = path_json(path);
            j["edges"] = std::to_string(path.edge_count());
            if (verify_bfs) j["bfs_oracle"] = "match";
            out << j.dump() << "\n";
            return;
        }
        out << "path:";
        for (const Slope& s : path.vertices) out << " " << s.str();
        out << "\nedges: " << path.edge_count() << "\n";
        if (verify_bfs) out << "bfs oracle: match\n";
    });

    CLI::App* menke = app.add_subcommand(
        "menke", "mixed vertices and meridional-slope candidates of a sign assignment");
    menke->add_option("lens", lens_token, "lens space as p,q")->required();
    menke->add_option("--signs", signs, "interior edge signs, e.g. +-")->required();
    menke->add_flag("--all-orderings", all_orderings,
                    "union candidates over all sign orderings within blocks");
    add_json(menke);
    menke->callback([&] {
        LensSpace lens = parse_lens(lens_token);
        TightStructure t = tight_structure_from_signs(lens, signs);
        std::vector<MixedVertex> mixed =
            all_orderings ? mixed_vertices_any_ordering(t) : mixed_vertices(t);
        ordered_json jmixed = ordered_json::array();
        for (const MixedVertex& v : mixed) {
            std::vector<Slope> candidates = menke_candidates_at(t, v);
            if (json) {
                ordered_json vj;
                vj["position"] = std::to_string(v.position);
                vj["prev"] = v.prev.str();
                vj["torus"] = v.torus.str();
                vj["next"] = v.next.str();
                ordered_json cj = ordered_json::array();
                for (const Slope& c : candidates) cj.push_back(c.str());
                vj["candidates"] = cj;
                jmixed.push_back(vj);
            } else {
                out << "mixed vertex at " << v.torus.str() << " (prev " << v.prev.str()
                    << ", next " << v.next.str() << "): candidates";
                for (const Slope& c : candidates) out << " " << c.str();
                out << "\n";
            }
        }
        if (json) {
            ordered_json j;
            j["p"] = std::to_string(lens.p);
            j["q"] = std::to_string(lens.q);
            j["signs"] = t.signs;
            j["all_orderings"] = all_orderings;
            j["mixed"] = jmixed;
            out << j.dump() << "\n";
        } else {
            if (t.signs != signs)
                out << "(signs canonicalized within blocks: " << signs << " -> " << t.signs
                    << ")\n";
            if (mixed.empty()) out << "no mixed vertices: structure is universally tight\n";
        }
    });

    CLI::App* lisca = app.add_subcommand("lisca", "rational-homology-ball filling criterion");
    lisca->add_option("lens", lens_token, "lens space as p,q")->required();
    add_json(lisca);
    lisca->callback([&] { print_verdict(lisca_qhb_filling(parse_lens(lens_token)), json, out); });

    CLI::App* sum_qhb = app.add_subcommand(
        "sum-qhb", "rational-homology-ball filling of L(p,q) # L(p,p-q)");
    sum_qhb->add_option("p", arg_p, "p")->required();
    sum_qhb->add_option("q", arg_q, "q")->required();
    add_json(sum_qhb);
    sum_qhb->callback([&] { print_verdict(sum_qhb_filling(arg_p, arg_q), json, out); });

    CLI::App* embed = app.add_subcommand("embed-s4", "does L1 # L2 embed smoothly in S^4?");
    embed->add_option("first", lens_token, "first summand as p,q")->required();
    embed->add_option("second", second_token, "second summand as p,q")->required();
    add_json(embed);
    embed->callback([&] {
        print_verdict(embeds_s4_pair(parse_lens(lens_token), parse_lens(second_token)), json,
                      out);
    });

    CLI::App* donald = app.add_subcommand("donald",
                                          "does a sum of lens spaces embed smoothly in R^4?");
    donald->add_option("sum", lens_token, "connected sum as p1,q1#p2,q2#...")->required();
    donald->add_flag("--allow-even", allow_even, "drop the odd-p requirement");
    add_json(donald);
    donald->callback([&] {
        print_verdict(embeds_s4_sum(parse_connected_sum(lens_token), !allow_even), json, out);
    });

    CLI::App* punctured = app.add_subcommand("punctured",
                                             "does punctured L(p,q) embed smoothly in R^4?");
    punctured->add_option("lens", lens_token, "lens space as p,q")->required();
    add_json(punctured);
    punctured->callback([&] {
        LensSpace lens = parse_lens(lens_token);
        bool yes = punctured_embeds_r4(lens);
        if (json) {
            ordered_json j;
            j["p"] = std::to_string(lens.p);
            j["q"] = std::to_string(lens.q);
            j["punctured_embeds_r4"] = yes;
            out << j.dump() << "\n";
        } else {
            out << (yes ? "yes" : "no") << "\n";
        }
    });

    CLI::App* h1 = app.add_subcommand("h1", "H_1 of the surgery with the given linking matrix");
    h1->add_option("--matrix", matrix_file, "matrix file ('-' for stdin)");
    add_json(h1);
    h1->callback([&] {
        AbelianGroup g = h1_of_surgery(load_matrix(matrix_file));
        if (json)
            out << group_json(g).dump() << "\n";
        else
            out << "H_1 = " << g.str() << "\n";
    });

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    snf->add_option("--matrix", matrix_file, "matrix file ('-' for stdin)");
    add_json(snf);
    snf->callback([&] {
        IntMatrix m = load_matrix(matrix_file);
        SnfResult result = smith_normal_form(m);
        Int abs_det = determinant(m);
        if (abs_det < 0) abs_det = -abs_det;
        std::vector<Int> diag = result.diagonal();
        if (json) {
            ordered_json j;
            j["n"] = std::to_string(m.n);
            ordered_json dj = ordered_json::array();
            for (const Int& d : diag) dj.push_back(d.str());
            j["diagonal"] = dj;
            ordered_json fj = ordered_json::array();
            for (const Int& d : diag)
                if (d > 1) fj.push_back(d.str());
            j["invariant_factors"] = fj;
            j["abs_det"] = abs_det.str();
            out << j.dump() << "\n";
            return;
        }
        out << "diagonal:";
        for (const Int& d : diag) out << " " << d.str();
        out << "\ninvariant factors:";
        bool any = false;
        for (const Int& d : diag)
            if (d > 1) {
                out << " " << d.str();
                any = true;
            }
        if (!any) out << " (none)";
        out << "\n|det| = " << abs_det.str() << "\n";
    });

    CLI::App* cert = app.add_subcommand("cert", "surgery certificates");
    cert->require_subcommand(1);
    CLI::App* cert_slice = cert->add_subcommand("slice", "1/m surgery on a slice knot");
    cert_slice->add_option("--m", cert_args.m, "surgery parameter m != 0")->required();
    add_json(cert_slice);
    cert_slice->callback([&] { print_certificate(slice_surgery_certificate(cert_args.m), json, out); });

    CLI::App* cert_fickle = cert->add_subcommand("fickle", "1/(s+sign) genus-one surgery");
    cert_fickle->add_option("--s", cert_args.s, "F-framing of the surface curve")->required();
    cert_fickle->add_option("--sign", cert_args.sign, "+1 or -1")->required();
    cert_fickle->add_option("--ambient", cert_args.ambient, "acyclic | rational");
    add_json(cert_fickle);
    cert_fickle->callback([&] {
        print_certificate(
            fickle_certificate(cert_args.s, cert_args.sign, parse_ambient(cert_args.ambient)),
            json, out);
    });

    CLI::App* cert_stein = cert->add_subcommand("stein", "contact (1+1/m) surgery verdict");
    cert_stein->add_option("--m", cert_args.m, "contact parameter m != 0")->required();
    add_json(cert_stein);
    cert_stein->callback(
        [&] { print_certificate(stein_contractible_verdict(cert_args.m), json, out); });

    CLI::App* cert_fs = cert->add_subcommand("fs", "1/k(s+sign) surgery (conjectural for k >= 2)");
    cert_fs->add_option("--k", cert_args.k, "multiplier k >= 1")->required();
    cert_fs->add_option("--s", cert_args.s, "F-framing of the surface curve")->required();
    cert_fs->add_option("--sign", cert_args.sign, "+1 or -1")->required();
    add_json(cert_fs);
    cert_fs->callback([&] {
        print_certificate(fs_conjecture_coefficient(cert_args.k, cert_args.s, cert_args.sign),
                          json, out);
    });

    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive check over coprime (p,q), p <= pmax");
    sweep->add_option("check", sweep_name,
                      "one of: sum-qhb, tight-count, menke-nosphere, path-oracle")
        ->required();
    sweep->add_option("--pmax", pmax, "largest p")->required();
    sweep->add_option("--jobs", jobs, "worker threads (default LENSBOUND_JOBS or 1)");
    add_json(sweep);
    sweep->callback([&] {
        SweepReport report = run_sweep(parse_sweep_kind(sweep_name), pmax, jobs);
        if (json) {
            out << sweep_json(report).dump() << "\n";
        } else {
            out << "sweep " << sweep_kind_name(report.kind) << " pmax=" << report.pmax
                << " jobs=" << jobs << "\n";
            out << "pairs: " << report.pairs << "\n";
            out << "checked: " << report.checked << "\n";
            out << "violations: " << report.violations << "\n";
            char wall[32];
            std::snprintf(wall, sizeof(wall), "%.2f", report.wall_seconds);
            out << "wall: " << wall << "s\n";
        }
        if (report.violations > 0) {
            err << "error: sweep found " << report.violations
                << " violation(s); first: " << report.counterexamples.front() << "\n";
            exit_code = 2;
        }
    });

    CLI::App* plot = app.add_subcommand("plot-path", "render the minimal Farey path as SVG");
    plot->add_option("lens", lens_token, "lens space as p,q")->required();
    plot->add_option("--out", out_file, "output SVG file")->required();
    plot->callback([&] {
        FareyPath path = minimal_path(parse_lens(lens_token));
        std::ofstream file(out_file);
        if (!file) throw std::invalid_argument("cannot open output file '" + out_file + "'");
        file << farey_path_svg(path);
        out << "wrote " << out_file << "\n";
    });

    // CLI11 consumes the argument vector back to front.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace lensbound
