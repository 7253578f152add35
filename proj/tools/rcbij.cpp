// rcbij: command-line front end for paths, rigged configurations and the bijection.

#include "rcbij/io.hpp"
#include "rcbij/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace rcbij;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Args {
    std::string type;
    int n = 0;
    int len = -1;
    int max_len = -1;
    std::string weight;
    std::string grid;
    std::string dir;
    std::string input;
    std::string out;
    bool json = false;
    bool relax = false;
    bool dump_h = false;
    bool dot = false;
    bool tilde = false;
    bool no_bruteforce = false;
    int jobs = 1;
};

AffineType type_of(const Args &a) {
    if (a.type.empty()) throw UsageError("--type is required");
    return make_type(parse_family(a.type), a.n, a.relax);
}

std::vector<int> weight_of(const Args &a, AffineType t) {
    if (a.weight.empty()) throw UsageError("--weight is required");
    auto w = parse_weight(a.weight);
    if ((int)w.size() != weight_dim(t))
        throw UsageError("--weight needs " + std::to_string(weight_dim(t)) + " entries");
    if (!is_dominant(t, w)) throw UsageError("weight is not dominant");
    return w;
}

int len_of(const Args &a) {
    if (a.len < 0) throw UsageError("--len is required");
    return a.len;
}

json read_json(const Args &a) {
    if (a.input.empty() || a.input == "-") return json::parse(std::cin);
    std::ifstream in(a.input);
    if (!in) throw UsageError("cannot open " + a.input);
    return json::parse(in);
}

std::string half_string(int v2) {
    return v2 % 2 == 0 ? std::to_string(v2 / 2) : std::to_string(v2) + "/2";
}

void print_poly(const QPoly &p, bool as_json) {
    if (as_json)
        std::cout << to_json(p).dump() << '\n';
    else
        std::cout << p.to_string() << '\n';
}

int cmd_x(const Args &a) {
    const auto t = type_of(a);
    Crystal C(t);
    LocalEnergy H(C);
    if (a.dump_h) {
        std::cout << H.dump_tsv();
        return kOk;
    }
    const int L = len_of(a);
    print_poly(one_dim_sum(H, weight_of(a, t), L).invert_q(), a.json);
    return kOk;
}

int cmd_m(const Args &a, bool fermionic) {
    const auto t = type_of(a);
    RcSpace S(t, len_of(a));
    const auto w = weight_of(a, t);
    print_poly(fermionic ? S.fermionic_m(w) : S.rc_genfun(w), a.json);
    return kOk;
}

int cmd_rc_enum(const Args &a) {
    const auto t = type_of(a);
    const int L = len_of(a);
    const auto w = weight_of(a, t);
    RcSpace S(t, L);
    for (const auto &rc : S.enumerate(w)) {
        if (a.json)
            std::cout << to_json(RcDocument{t, L, w, rc}).dump() << '\n';
        else
            std::cout << to_string(rc) << "\tcc=" << half_string(S.cc_total2(rc)) << '\n';
    }
    return kOk;
}

int cmd_path_enum(const Args &a) {
    const auto t = type_of(a);
    const int L = len_of(a);
    const auto w = weight_of(a, t);
    Crystal C(t);
    LocalEnergy H(C);
    for (const auto &p : C.enumerate_highest(w, L)) {
        if (a.json)
            std::cout << to_json(PathDocument{t, p}).dump() << '\n';
        else
            std::cout << to_string(p) << "\tDbar=" << H.Dbar(p) << '\n';
    }
    return kOk;
}

int cmd_map(const Args &a) {
    const json in = read_json(a);
    if (a.dir == "rc2path") {
        auto d = rc_document(in, a.relax);
        RcSpace S(d.type, d.L);
        if (!S.is_valid(d.rc)) throw UsageError("input is not a rigged configuration");
        const auto sizes = S.sizes2(d.lambda);
        const auto nu = shape(d.rc);
        for (int k = 0; k < d.type.n; ++k) {
            int tot = 0;
            for (int x : nu[k]) tot += x;
            if (!sizes || (*sizes)[k] != tot) throw UsageError("configuration does not have weight lambda");
        }
        Bijection B(d.type);
        const Path p = a.tilde ? B.phi_tilde(d.rc, d.L) : B.phi(d.rc, d.L);
        std::cout << to_json(PathDocument{d.type, p}).dump() << '\n';
        return kOk;
    }
    if (a.dir == "path2rc") {
        auto d = path_document(in, a.relax);
        Bijection B(d.type);
        if (!B.crystal().is_classically_highest(d.path)) throw UsageError("path is not classically highest");
        const int L = (int)d.path.size();
        const auto rc = a.tilde ? B.phi_tilde_inverse(d.path) : B.phi_inverse(d.path);
        std::cout << to_json(RcDocument{d.type, L, B.crystal().wt(d.path), rc}).dump() << '\n';
        return kOk;
    }
    throw UsageError("--dir must be rc2path or path2rc");
}

std::vector<Cell> cells_from_grid(const Args &a, int &jobs, std::string &out_path) {
    std::ifstream in(a.grid);
    if (!in) throw UsageError("cannot open " + a.grid);
    const json g = json::parse(in);
    if (g.contains("jobs")) jobs = g.at("jobs").get<int>();
    if (g.contains("out") && out_path.empty()) out_path = g.at("out").get<std::string>();
    std::vector<Cell> out;
    for (const auto &c : g.at("cells")) {
        const auto t = make_type(parse_family(c.at("type").get<std::string>()), c.at("n").get<int>(),
                                 c.value("relax_rank", a.relax));
        std::vector<Cell> here;
        if (c.contains("L")) {
            const int L = c.at("L").get<int>();
            for (auto &w : dominant_weights(t, L)) here.push_back({t, L, w});
        } else {
            here = grid_cells(t, c.at("max_len").get<int>());
        }
        if (c.contains("lambda")) {
            const auto w = c.at("lambda").get<std::vector<int>>();
            std::erase_if(here, [&](const Cell &x) { return x.lambda != w; });
        }
        out.insert(out.end(), here.begin(), here.end());
    }
    return out;
}

int cmd_verify(const Args &a) {
    int jobs = a.jobs;
    std::string out_path = a.out;
    std::vector<Cell> cells;
    if (!a.grid.empty()) {
        cells = cells_from_grid(a, jobs, out_path);
    } else {
        const auto t = type_of(a);
        if (a.max_len >= 0) {
            cells = grid_cells(t, a.max_len);
        } else {
            const int L = len_of(a);
            for (auto &w : dominant_weights(t, L)) cells.push_back({t, L, w});
        }
        if (!a.weight.empty()) {
            const auto w = weight_of(a, t);
            std::erase_if(cells, [&](const Cell &x) { return x.lambda != w; });
        }
    }
    if (jobs <= 0) jobs = (int)std::max(1u, std::thread::hardware_concurrency());
    CellOptions opt;
    opt.bruteforce = !a.no_bruteforce;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
    }
    std::ostream &os = out_path.empty() ? std::cout : file;
    const auto reports = verify_cells(cells, jobs, opt);
    os << tsv_header() << '\n';
    bool ok = true;
    for (const auto &r : reports) {
        os << to_tsv(r) << '\n';
        if (!r.ok()) {
            ok = false;
            json cex = {{"cell", to_string(r.cell)}, {"counterexamples", r.counterexamples}};
            std::cerr << cex.dump() << '\n';
        }
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_graph(const Args &a) {
    Crystal C(type_of(a));
    if (a.dot) {
        std::cout << C.to_dot();
        return kOk;
    }
    std::cout << "i\tfrom\tto\n";
    for (int i = 0; i <= C.n(); ++i)
        for (Letter b : C.letters())
            if (auto y = C.f(i, b)) std::cout << i << '\t' << to_string(b) << '\t' << to_string(*y) << '\n';
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Crystal paths, rigged configurations and the bijection between them"};
    app.require_subcommand(1);
    Args args;

    auto common = [&](CLI::App *s, bool needs_len = true) {
        s->add_option("--type", args.type, "A1, B1, C1, D1, A2, A2dag, A2odd or D2");
        s->add_option("--n", args.n, "rank");
        if (needs_len) s->add_option("--len", args.len, "number of tensor factors L");
        s->add_option("--weight", args.weight, "dominant weight, comma separated");
        s->add_flag("--json", args.json, "JSON output");
        s->add_flag("--relax-rank", args.relax, "allow ranks below the generic diagram");
    };

    auto *x = app.add_subcommand("x", "one-dimensional sum Xbar");
    common(x);
    x->add_flag("--dump-h", args.dump_h, "print the local energy table as TSV");
    auto *m = app.add_subcommand("m", "fermionic formula Mbar");
    common(m);
    auto *f = app.add_subcommand("f", "sum of q^cc over rigged configurations");
    common(f);
    auto *rce = app.add_subcommand("rc-enum", "list rigged configurations");
    common(rce);
    auto *pe = app.add_subcommand("path-enum", "list classically highest paths");
    common(pe);
    auto *mp = app.add_subcommand("map", "apply Phi or its inverse to JSON on stdin");
    mp->add_option("--dir", args.dir, "rc2path or path2rc")->required();
    mp->add_option("--input", args.input, "input file instead of stdin");
    mp->add_flag("--tilde", args.tilde, "use Phi~ = Phi . comp");
    mp->add_flag("--relax-rank", args.relax, "allow ranks below the generic diagram");
    auto *ver = app.add_subcommand("verify", "exhaustive checks, TSV certificate on stdout");
    common(ver);
    ver->add_option("--max-len", args.max_len, "all L = 0..max-len");
    ver->add_option("--grid", args.grid, "JSON grid file");
    ver->add_option("--jobs", args.jobs, "worker threads (0 = all cores)");
    ver->add_option("--out", args.out, "write the TSV here instead of stdout");
    ver->add_flag("--no-bruteforce", args.no_bruteforce, "skip the brute-force inverse oracle");
    auto *gr = app.add_subcommand("graph", "arrow table of B^{1,1}");
    common(gr, false);
    gr->add_flag("--dot", args.dot, "Graphviz output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*x) return cmd_x(args);
        if (*m) return cmd_m(args, true);
        if (*f) return cmd_m(args, false);
        if (*rce) return cmd_rc_enum(args);
        if (*pe) return cmd_path_enum(args);
        if (*mp) return cmd_map(args);
        if (*ver) return cmd_verify(args);
        if (*gr) return cmd_graph(args);
    } catch (const UsageError &e) {
        std::cerr << "rcbij: " << e.what() << '\n';
        return kUsage;
    } catch (const TypeError &e) {
        std::cerr << "rcbij: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception &e) {
        std::cerr << "rcbij: bad JSON: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "rcbij: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "rcbij: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
