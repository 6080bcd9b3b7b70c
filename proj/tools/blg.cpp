#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "blg/cache.hpp"
#include "blg/category.hpp"
#include "blg/enumerate.hpp"
#include "blg/fourcolor.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"
#include "blg/io.hpp"
#include "blg/isotest.hpp"
#include "blg/planarity.hpp"

using nlohmann::json;

namespace {

json edge_list(const std::vector<std::pair<int, int>>& edges) {
    json a = json::array();
    for (auto [u, v] : edges) a.push_back(json::array({u, v}));
    return a;
}

json graph_json(const blg::Graph& g) {
    return json::parse(blg::blg_to_json({g, {}, {}}));
}

struct Output {
    std::string path;  // empty -> stdout
    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text << "\n";
        else
            blg::write_file(path, text + "\n");
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bi-labeled graph calculus"};
    app.require_subcommand(1);

    Output out;
    int jobs = 1;
    unsigned seed = 0;
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_option("--jobs", jobs, "worker threads for corpus scans");
    app.add_option("--seed", seed, "seed for randomized commands");

    std::string file_a, file_b, target;
    int size = 5, nverts = 1;
    bool planar_only = false, loops = false, connected = false, planar_filter = false,
         up_to = false;
    std::string report_path;

    auto* c_planar = app.add_subcommand("planar", "planarity test with witness");
    c_planar->add_option("graph", file_a)->required();

    auto* c_inp = app.add_subcommand("inP", "membership in the planar class");
    c_inp->add_option("blg", file_a)->required();

    auto* c_hom = app.add_subcommand("hom", "homomorphism count");
    c_hom->add_option("source", file_a)->required();
    c_hom->add_option("target", file_b)->required();

    auto* c_hommatrix = app.add_subcommand("hommatrix", "homomorphism matrix");
    c_hommatrix->add_option("blg", file_a)->required();
    c_hommatrix->add_option("target", file_b)->required();

    auto* c_compose = app.add_subcommand("compose", "composition of two bi-labeled graphs");
    c_compose->add_option("first", file_a)->required();
    c_compose->add_option("second", file_b)->required();
    auto* c_tensor = app.add_subcommand("tensor", "tensor product");
    c_tensor->add_option("first", file_a)->required();
    c_tensor->add_option("second", file_b)->required();
    auto* c_schur = app.add_subcommand("schur", "Schur product");
    c_schur->add_option("first", file_a)->required();
    c_schur->add_option("second", file_b)->required();

    auto* c_decompose = app.add_subcommand("decompose", "generator expression of a member of P");
    c_decompose->add_option("blg", file_a)->required();

    auto* c_eval = app.add_subcommand("eval", "evaluate a generator expression");
    c_eval->add_option("expr", file_a)->required();
    c_eval->add_option("--target", target, "target graph file: emit the matrix instead");

    auto* c_orbits = app.add_subcommand("orbits", "orbit refinement partition");
    c_orbits->add_option("graph", file_a)->required();
    c_orbits->add_option("--size", size, "corpus vertex bound");
    auto* c_orbitals = app.add_subcommand("orbitals", "orbital refinement partition");
    c_orbitals->add_option("graph", file_a)->required();
    c_orbitals->add_option("--size", size, "corpus vertex bound");
    auto* c_wl2 = app.add_subcommand("wl2", "2-WL stable pair partition");
    c_wl2->add_option("graph", file_a)->required();

    auto* c_dist = app.add_subcommand("distinguish", "hom-count distinguishing");
    c_dist->add_option("first", file_a)->required();
    c_dist->add_option("second", file_b)->required();
    c_dist->add_option("--size", size, "corpus vertex bound");
    c_dist->add_flag("--planar-only", planar_only, "restrict the corpus to planar graphs");

    auto* c_four = app.add_subcommand("fourcolor", "S4 Cayley pair pipeline");
    auto* c_verify = c_four->add_subcommand("verify", "run every check");
    c_verify->add_option("--size", size, "corpus vertex bound");
    c_verify->add_option("--report", report_path, "also write the report to a file");

    auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes");
    c_enum->add_option("n", nverts)->required();
    c_enum->add_flag("--loops", loops);
    c_enum->add_flag("--connected", connected);
    c_enum->add_flag("--planar", planar_filter);
    c_enum->add_flag("--up-to", up_to, "all orders 1..n");

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    c_verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_planar) {
            auto r = blg::check_planar(blg::load_graph(file_a));
            json j{{"planar", r.planar}, {"witness", edge_list(r.witness)}};
            out.emit(j.dump());
            return r.planar ? 0 : 1;
        }
        if (*c_inp) {
            auto h = blg::load_blg(file_a);
            auto env = blg::build_envelope(h);
            auto r = blg::check_planar(env.apexed.simplify());
            json j{{"in_p", r.planar},
                   {"apexed_vertices", env.apexed.n()},
                   {"apex", env.apex},
                   {"witness", edge_list(r.witness)}};
            out.emit(j.dump());
            return r.planar ? 0 : 1;
        }
        if (*c_hom) {
            auto cache = blg::HomCache::from_env();
            blg::BigInt c = cache.count(blg::load_graph(file_a), blg::load_graph(file_b));
            out.emit(c.str());
            return 0;
        }
        if (*c_hommatrix) {
            auto h = blg::load_blg(file_a);
            out.emit(blg::matrix_to_json(blg::hom_matrix(h, blg::load_graph(file_b))));
            return 0;
        }
        if (*c_compose || *c_tensor || *c_schur) {
            auto a = blg::load_blg(file_a);
            auto b = blg::load_blg(file_b);
            auto r = *c_compose ? blg::compose(a, b)
                                : (*c_tensor ? blg::tensor(a, b) : blg::schur(a, b));
            out.emit(blg::blg_to_json(r));
            return 0;
        }
        if (*c_decompose) {
            auto h = blg::load_blg(file_a);
            if (!blg::in_P(h)) {
                out.emit("not in P");
                return 1;
            }
            out.emit(blg::format_expression(blg::decompose(h)));
            return 0;
        }
        if (*c_eval) {
            auto e = blg::parse_expression(blg::read_file(file_a));
            if (target.empty())
                out.emit(blg::blg_to_json(blg::eval_blg(e)));
            else
                out.emit(blg::matrix_to_json(blg::eval_matrix(e, blg::load_graph(target))));
            return 0;
        }
        if (*c_orbits || *c_orbitals) {
            auto g = blg::load_graph(file_a);
            auto p = *c_orbits ? blg::orbit_refinement(g, size) : blg::orbital_refinement(g, size);
            out.emit(blg::partition_to_json(p));
            return 0;
        }
        if (*c_wl2) {
            out.emit(blg::partition_to_json(blg::wl2(blg::load_graph(file_a))));
            return 0;
        }
        if (*c_dist) {
            auto g1 = blg::load_graph(file_a);
            auto g2 = blg::load_graph(file_b);
            auto r = blg::planar_distinguish(g1, g2, size, planar_only, jobs);
            json j{{"verdict", r.distinguished ? "distinguished" : "indistinguishable"},
                   {"corpus_size", r.corpus_size}};
            if (r.distinguished) {
                j["witness"] = graph_json(*r.witness);
                j["counts"] = json::array({r.count1.str(), r.count2.str()});
            }
            out.emit(j.dump());
            return r.distinguished ? 1 : 0;
        }
        if (*c_four) {
            auto r = blg::verify_theorem(size, jobs);
            std::string text = blg::report_to_json(r);
            out.emit(text);
            if (!report_path.empty()) blg::write_file(report_path, text + "\n");
            return r.all_pass() ? 0 : 1;
        }
        if (*c_enum) {
            blg::EnumerateOptions opts;
            opts.allow_loops = loops;
            opts.connected_only = connected;
            if (planar_filter)
                opts.filter = [](const blg::Graph& k) { return blg::is_planar(k); };
            auto classes = up_to ? blg::enumerate_graphs_up_to(nverts, opts)
                                 : blg::enumerate_graphs(nverts, opts);
            json j = json::array();
            for (const auto& g : classes) j.push_back(graph_json(g));
            out.emit(j.dump());
            return 0;
        }
    } catch (const std::bad_alloc&) {
        std::cerr << "out of memory\n";
        return 3;
    } catch (const std::length_error&) {
        std::cerr << "resource limit exceeded\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
