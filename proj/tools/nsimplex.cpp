// Command line front end: face combinatorics, tetrahedron verification,
// homology jobs, cocycle tools and the built-in reference pipelines.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "nsimplex/chain_complex.hpp"
#include "nsimplex/cocycle.hpp"
#include "nsimplex/electric.hpp"
#include "nsimplex/errors.hpp"
#include "nsimplex/face_graph.hpp"
#include "nsimplex/propagation.hpp"
#include "nsimplex/quantum.hpp"
#include "nsimplex/report.hpp"
#include "nsimplex/reproduce.hpp"

namespace {

using namespace nsimplex;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInvariant = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file '" + path + "'", 0, 0);
    out << content;
}

std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--input", "empty color entry");
        out.push_back(std::stoi(item));
    }
    return out;
}

SignConvention parse_convention(const std::string& name) {
    if (name == "alt") return SignConvention::alternating;
    if (name == "plain" || name == "paper") return SignConvention::plain;
    throw CLI::ValidationError("--convention", "expected alt or plain");
}

FieldSpec parse_field(const std::string& name) {
    if (name == "q") return FieldSpec::rationals();
    if (name.rfind("fp:", 0) == 0) {
        std::int64_t p = std::stoll(name.substr(3));
        if (p < 2) throw CLI::ValidationError("--field", "prime must be at least 2");
        return FieldSpec::mod(p);
    }
    throw CLI::ValidationError("--field", "expected q or fp:<p>");
}

std::string join_colors(const std::vector<int>& colors) {
    std::string out;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(colors[i]);
    }
    return out;
}

int cmd_faces(int N, int k) {
    for (const FaceCode& f : enumerate_faces(N, k)) std::cout << f.str() << "\n";
    return kExitTrue;
}

int cmd_graph(int N, int n) {
    FaceGraph g = build_face_graph(N, n);
    std::cout << "n_faces=" << g.n_faces.size() << "\n";
    std::cout << "sub_faces=" << g.sub_faces.size() << "\n";
    std::cout << "edges=" << g.edges.size() << "\n";
    std::cout << "acyclic=true\n";
    for (const auto& e : g.edges)
        std::cout << "edge " << g.face_of(e.from).str() << " -> " << g.face_of(e.to).str()
                  << "\n";
    std::cout << "toporder";
    for (std::size_t v : g.topo_order) std::cout << ' ' << g.face_of(v).str();
    std::cout << "\n";
    return kExitTrue;
}

int cmd_equation_graph(int n) {
    EquationGraph eg = build_equation_graph(n);
    std::cout << "lhs";
    for (const auto& f : eg.lhs) std::cout << ' ' << f.str();
    std::cout << "\nrhs";
    for (const auto& f : eg.rhs) std::cout << ' ' << f.str();
    std::cout << "\n";
    for (const auto& e : eg.edges)
        std::cout << "edge " << e.from.str() << " -> " << e.to.str() << " via "
                  << e.shared.str() << "\n";
    return kExitTrue;
}

int cmd_verify(const std::string& rmap_path, const std::string& mode, bool strict,
               int threads) {
    Timer timer;
    std::string text = read_file(rmap_path);
    RMap r = RMap::parse(text);
    RunReport report("verify --rmap " + rmap_path + " --mode " + mode +
                     (strict ? " --strict" : ""));
    report.add_input_digest("rmap", text);
    report.add("n", static_cast<long long>(r.arity()));
    report.add("m", static_cast<long long>(r.colors()));
    report.add("bijective", r.is_bijective());

    SimplexCheckResult primary = mode == "composition"
                                     ? check_n_simplex_composition(r, threads)
                                     : check_n_simplex(r, threads);
    report.add("verdict", primary.ok);
    if (!primary.ok && primary.counterexample)
        report.add("counterexample", join_colors(*primary.counterexample));
    if (!primary.ok && primary.conflict && primary.conflict->face.ambient_dim() > 0)
        report.add("conflict", primary.conflict->describe());

    bool agreement = true;
    if (strict) {
        SimplexCheckResult other = mode == "composition" ? check_n_simplex(r, threads)
                                                         : check_n_simplex_composition(r, threads);
        agreement = other.ok == primary.ok;
        report.add("cross_check_verdict", other.ok);
        report.add("formulations_agree", agreement);
    }
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    if (!agreement) return kExitInvariant;
    return primary.ok ? kExitTrue : kExitFalse;
}

int cmd_propagate(const std::string& rmap_path, int N, const std::string& input,
                  bool strict) {
    Timer timer;
    std::string text = read_file(rmap_path);
    RMap r = RMap::parse(text);
    std::vector<int> colors = parse_color_list(input);
    PermittedColoring c = propagate(r, N, colors, strict);
    RunReport report("propagate --rmap " + rmap_path + " --dim " + std::to_string(N) +
                     " --input " + input + (strict ? " --strict" : ""));
    report.add_input_digest("rmap", text);
    report.add("incoming", join_colors(c.incoming_tuple()));
    report.add("outgoing", join_colors(c.outgoing_tuple()));
    const auto& sched = schedule_for(N, r.arity());
    for (std::size_t i = 0; i < sched.faces().size(); ++i)
        report.add("coloring." + sched.faces()[i].str(),
                   static_cast<long long>(c.colors[i]));
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return kExitTrue;
}

int cmd_homology(const std::string& rmap_path, int max_dim, const std::string& field_name,
                 bool normalized, const std::string& convention_name,
                 std::uint64_t max_nnz, const std::string& export_prefix, int threads) {
    Timer timer;
    std::string text = read_file(rmap_path);
    RMap r = RMap::parse(text);
    FieldSpec field = parse_field(field_name);
    SignConvention conv = parse_convention(convention_name);
    ChainOptions opts;
    opts.threads = threads;
    if (const char* env = std::getenv("NSIMPLEX_MAX_NNZ"))
        opts.max_nnz = std::strtoull(env, nullptr, 10);
    if (max_nnz) opts.max_nnz = max_nnz; // explicit flag wins over the env override

    RunReport report("homology --rmap " + rmap_path + " --max-dim " +
                     std::to_string(max_dim) + " --field " + field_name +
                     (normalized ? " --normalized" : "") + " --convention " +
                     convention_name);
    report.add_input_digest("rmap", text);
    HomologyReport rep = homology(r, max_dim, field, normalized, conv, opts);
    report.add("field", field.str());
    report.add("normalized", normalized);
    report.add("convention",
               conv == SignConvention::alternating ? std::string("alt") : std::string("plain"));
    for (const auto& row : rep.rows) {
        std::string key = "h." + std::to_string(row.degree);
        report.add(key + ".dim", static_cast<long long>(row.dim));
        report.add(key + ".rank_d", static_cast<long long>(row.rank_out));
        if (row.truncated)
            report.add(key + ".rank_d_next", std::string("truncated"));
        else
            report.add(key + ".rank_d_next", static_cast<long long>(row.rank_in));
        if (!row.truncated)
            report.add(key + ".betti", static_cast<long long>(row.betti));
    }
    if (!export_prefix.empty()) {
        for (int N = r.arity(); N <= max_dim; ++N) {
            SparseIntMatrix d = boundary_matrix(r, N, conv, opts);
            write_file(export_prefix + ".d" + std::to_string(N) + ".txt",
                       d.serialize_coord());
        }
        report.add("exported", export_prefix);
    }
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return kExitTrue;
}

int cmd_convention_audit(const std::string& rmap_path, int max_dim, int threads) {
    Timer timer;
    std::string text = read_file(rmap_path);
    RMap r = RMap::parse(text);
    ChainOptions opts;
    opts.threads = threads;
    RunReport report("convention-audit --rmap " + rmap_path + " --max-dim " +
                     std::to_string(max_dim));
    report.add_input_digest("rmap", text);
    for (int N = r.arity() + 1; N <= max_dim; ++N) {
        for (SignConvention conv : {SignConvention::alternating, SignConvention::plain}) {
            std::string tag = conv == SignConvention::alternating ? "alt" : "plain";
            SparseIntMatrix outer = boundary_matrix(r, N - 1, conv, opts);
            SparseIntMatrix inner = boundary_matrix(r, N, conv, opts);
            SparseIntMatrix product = multiply(outer, inner);
            report.add("d2." + tag + "." + std::to_string(N) + ".zero_over_Z",
                       product.is_zero());
            report.add("d2." + tag + "." + std::to_string(N) + ".zero_mod_2",
                       product.is_zero_mod(2));
        }
    }
    if (r.arity() == 3 && max_dim >= 4) {
        // Compare the eight-term expansion with the matrix columns.
        SparseIntMatrix plain = boundary_matrix(r, 4, SignConvention::plain, opts);
        SparseIntMatrix alt = boundary_matrix(r, 4, SignConvention::alternating, opts);
        auto by_col = [](const SparseIntMatrix& m) {
            std::vector<std::map<std::int64_t, std::int64_t>> cols(
                static_cast<std::size_t>(m.cols));
            for (const auto& e : m.entries)
                cols[static_cast<std::size_t>(e.col)][e.row] = e.value;
            return cols;
        };
        auto plain_cols = by_col(plain);
        auto alt_cols = by_col(alt);
        bool matches_plain = true, matches_alt = true;
        std::vector<int> a(6);
        for (std::uint64_t col = 0; col < static_cast<std::uint64_t>(plain.cols); ++col) {
            std::uint64_t v = col;
            for (std::size_t j = 6; j-- > 0;) {
                a[j] = static_cast<int>(v % static_cast<std::uint64_t>(r.colors()));
                v /= static_cast<std::uint64_t>(r.colors());
            }
            std::map<std::int64_t, std::int64_t> want;
            for (const SignedTriple& term : d4_explicit_terms(r, a)) {
                std::int64_t row = (term.triple[0] * r.colors() + term.triple[1]) *
                                       r.colors() +
                                   term.triple[2];
                want[row] += term.sign;
                if (want[row] == 0) want.erase(row);
            }
            if (plain_cols[col] != want) matches_plain = false;
            if (alt_cols[col] != want) matches_alt = false;
            if (!matches_plain && !matches_alt) break;
        }
        report.add("d4_terms.match_plain", matches_plain);
        report.add("d4_terms.match_alt", matches_alt);
    }
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return kExitTrue;
}

int cmd_cocycle(const std::string& action, const std::string& rmap_path,
                const std::string& cocycle_path, int threads) {
    Timer timer;
    std::string rtext = read_file(rmap_path);
    std::string ctext = read_file(cocycle_path);
    RMap r = RMap::parse(rtext);
    Cocycle phi = Cocycle::parse(ctext);
    RunReport report("cocycle " + action + " --rmap " + rmap_path + " --cocycle " +
                     cocycle_path);
    report.add_input_digest("rmap", rtext);
    report.add_input_digest("cocycle", ctext);

    int exit_code = kExitTrue;
    if (action == "check") {
        CocycleCheckResult res = check_cocycle(r, phi, threads);
        report.add("verdict", res.ok);
        if (!res.ok) {
            std::vector<int> ce(res.counterexample->begin(), res.counterexample->end());
            report.add("counterexample", join_colors(ce));
            report.add("left_exponent", static_cast<long long>(res.left));
            report.add("right_exponent", static_cast<long long>(res.right));
            exit_code = kExitFalse;
        }
    } else if (action == "solve") {
        CoboundarySolution sol = solve_coboundary(r, phi);
        report.add("coboundary", sol.exists);
        if (sol.exists) {
            report.add_timing("total", timer.ms());
            std::cout << report.render();
            std::cout << sol.psi->serialize();
            return kExitTrue;
        }
        report.add("certificate.rhs", sol.certificate->rhs_value.get_str());
        long long nonzero = 0;
        for (const auto& w : sol.certificate->weights)
            if (w != 0) ++nonzero;
        report.add("certificate.nonzero_weights", nonzero);
        exit_code = kExitFalse;
    } else { // obstruct
        auto witnesses = fixed_point_obstruction(r, phi);
        report.add("witnesses", static_cast<long long>(witnesses.size()));
        for (const auto& w : witnesses)
            report.add("witness",
                       std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
                           std::to_string(w[2]));
    }
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return exit_code;
}

int cmd_electric_emit_rmap(std::int64_t p, int k, std::int64_t epsilon,
                           const std::string& out) {
    std::optional<std::int64_t> eps;
    if (epsilon >= 0) eps = epsilon;
    ResidueColorSet cs = ResidueColorSet::make(p, k, eps);
    std::string text = electric_rmap(cs).serialize();
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
    return kExitTrue;
}

int cmd_electric_emit_cocycles(std::int64_t p, int k, std::int64_t epsilon,
                               const std::string& character, const std::string& which,
                               const std::string& out_dir) {
    std::optional<std::int64_t> eps;
    if (epsilon >= 0) eps = epsilon;
    ResidueColorSet cs = ResidueColorSet::make(p, k, eps);
    std::vector<Character> chars = characters(cs);

    std::vector<std::size_t> selected;
    if (character == "all") {
        if (out_dir.empty())
            throw CLI::ValidationError("--character", "all requires --out-dir");
        for (std::size_t i = 0; i < chars.size(); ++i) selected.push_back(i);
    } else {
        std::size_t idx = static_cast<std::size_t>(std::stoull(character));
        if (idx >= chars.size())
            throw CLI::ValidationError("--character", "index out of range (have " +
                                                          std::to_string(chars.size()) + ")");
        selected.push_back(idx);
    }
    if (which == "both" && out_dir.empty())
        throw CLI::ValidationError("--which", "both requires --out-dir");

    for (std::size_t idx : selected) {
        ElectricCocycles cc = electric_cocycles(cs, chars[idx]);
        auto emit = [&](const std::string& name, const Cocycle& phi) {
            if (out_dir.empty())
                std::cout << phi.serialize();
            else
                write_file(out_dir + "/" + name + "_eta" + std::to_string(idx) + ".cocycle",
                           phi.serialize());
        };
        if (which == "c1" || which == "both") emit("c1", cc.c1);
        if (which == "c2" || which == "both") emit("c2", cc.c2);
    }
    return kExitTrue;
}

int cmd_qte_verify(const std::string& rmap_path, const std::string& cocycle_path,
                   const std::string& emit_operator) {
    Timer timer;
    std::string rtext = read_file(rmap_path);
    RMap r = RMap::parse(rtext);
    RunReport report("qte verify --rmap " + rmap_path +
                     (cocycle_path.empty() ? "" : " --cocycle " + cocycle_path));
    report.add_input_digest("rmap", rtext);
    MonomialOperator op = permutation_operator(r);
    if (!cocycle_path.empty()) {
        std::string ctext = read_file(cocycle_path);
        report.add_input_digest("cocycle", ctext);
        op = twisted_operator(r, Cocycle::parse(ctext));
    }
    QteCheckResult res = check_qte(op);
    report.add("verdict", res.ok);
    if (!res.ok) {
        std::vector<int> ce(res.counterexample->begin(), res.counterexample->end());
        report.add("counterexample", join_colors(ce));
        report.add("lhs_phase", static_cast<long long>(res.lhs_phase));
        report.add("rhs_phase", static_cast<long long>(res.rhs_phase));
    }
    if (!emit_operator.empty()) write_file(emit_operator, op.serialize());
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return res.ok ? kExitTrue : kExitFalse;
}

int cmd_qte_gauge(const std::string& rmap_path, const std::string& cocycle_a,
                  const std::string& cocycle_b, const std::string& psi_path) {
    Timer timer;
    std::string rtext = read_file(rmap_path);
    std::string atext = read_file(cocycle_a);
    std::string btext = read_file(cocycle_b);
    RMap r = RMap::parse(rtext);
    Cocycle phi_a = Cocycle::parse(atext);
    Cocycle phi_b = Cocycle::parse(btext);
    RunReport report("qte gauge --rmap " + rmap_path + " --cocycle " + cocycle_a +
                     " --cocycle2 " + cocycle_b);
    report.add_input_digest("rmap", rtext);
    report.add_input_digest("cocycle_a", atext);
    report.add_input_digest("cocycle_b", btext);

    Potential psi;
    if (!psi_path.empty()) {
        psi = Potential::parse(read_file(psi_path));
        report.add("psi_source", std::string("file"));
    } else {
        // Solve for a potential linking the two phase tables.
        if (phi_a.colors != phi_b.colors || phi_a.modulus != phi_b.modulus)
            throw CLI::ValidationError("--cocycle2", "cocycles live on different spaces");
        Cocycle diff = Cocycle::zero(phi_a.colors, phi_a.modulus);
        for (std::size_t i = 0; i < diff.table.size(); ++i)
            diff.table[i] =
                ((phi_b.table[i] - phi_a.table[i]) % diff.modulus + diff.modulus) %
                diff.modulus;
        CoboundarySolution sol = solve_coboundary(r, diff);
        report.add("psi_source", std::string("solved"));
        report.add("psi_found", sol.exists);
        if (!sol.exists) {
            report.add("equivalent", false);
            report.add_timing("total", timer.ms());
            std::cout << report.render();
            return kExitFalse;
        }
        psi = *sol.psi;
    }
    GaugeCheckResult res =
        gauge_equivalent(twisted_operator(r, phi_a), twisted_operator(r, phi_b), psi);
    report.add("equivalent", res.equivalent);
    if (!res.equivalent) report.add("reason", res.reason);
    report.add_timing("total", timer.ms());
    std::cout << report.render();
    return res.equivalent ? kExitTrue : kExitFalse;
}

int cmd_reproduce(int threads) {
    Timer timer;
    ReferenceResult res = run_reference_pipelines(threads);
    std::cout << res.report;
    std::cout << "time.total_ms=" << timer.ms() << "\n";
    std::cout << (res.ok ? "result=ok\n" : "result=mismatch\n");
    return res.ok ? kExitTrue : kExitFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for set-theoretic n-simplex relations"};
    app.set_version_flag("--version", "nsimplex " + tool_version());
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)");

    // faces
    int faces_N = 3, faces_k = 2;
    auto* faces = app.add_subcommand("faces", "enumerate the k-faces of the N-cube");
    faces->add_option("--dim", faces_N, "ambient dimension N")->required();
    faces->add_option("--k", faces_k, "face dimension")->required();

    // graph
    int graph_N = 4, graph_n = 3;
    auto* graph = app.add_subcommand("graph", "face graph on n- and (n-1)-faces");
    graph->add_option("--dim", graph_N, "ambient dimension N")->required();
    graph->add_option("--n", graph_n, "n of the relation")->required();

    // equation-graph
    int eq_n = 3;
    auto* eqgraph = app.add_subcommand("equation-graph", "the two-component graph on I^(n+1)");
    eqgraph->add_option("--n", eq_n, "n of the relation")->required();

    // verify
    std::string verify_rmap, verify_mode = "consistency";
    bool verify_strict = false;
    auto* verify = app.add_subcommand("verify", "check the set-theoretic n-simplex equation");
    verify->add_option("--rmap", verify_rmap, "rmap file")->required();
    verify->add_option("--mode", verify_mode, "consistency or composition")
        ->check(CLI::IsMember({"consistency", "composition"}));
    verify->add_flag("--strict", verify_strict, "run both formulations and compare");

    // propagate
    std::string prop_rmap, prop_input;
    int prop_dim = 4;
    bool prop_strict = false;
    auto* prop = app.add_subcommand("propagate", "extend incoming colors over the N-cube");
    prop->add_option("--rmap", prop_rmap, "rmap file")->required();
    prop->add_option("--dim", prop_dim, "cube dimension N")->required();
    prop->add_option("--input", prop_input, "comma-separated incoming colors")->required();
    prop->add_flag("--strict", prop_strict, "check all derivations for conflicts");

    // homology
    std::string hom_rmap, hom_field = "q", hom_conv = "alt", hom_export;
    int hom_max = 4;
    bool hom_norm = false;
    std::uint64_t hom_nnz = 0;
    auto* hom = app.add_subcommand("homology", "chain complex ranks and betti numbers");
    hom->add_option("--rmap", hom_rmap, "rmap file")->required();
    hom->add_option("--max-dim", hom_max, "largest cube dimension")->required();
    hom->add_option("--field", hom_field, "q or fp:<p>");
    hom->add_flag("--normalized", hom_norm, "quotient by degenerate colorings");
    hom->add_option("--convention", hom_conv, "alt or plain");
    hom->add_option("--max-nnz", hom_nnz, "override the matrix size cap");
    hom->add_option("--export-matrices", hom_export, "write boundary matrices to PREFIX.dN.txt");

    // convention-audit
    std::string audit_rmap;
    int audit_max = 4;
    auto* audit = app.add_subcommand("convention-audit",
                                     "record d*d verdicts for both sign conventions");
    audit->add_option("--rmap", audit_rmap, "rmap file")->required();
    audit->add_option("--max-dim", audit_max, "largest cube dimension")->required();

    // cocycle
    std::string coc_action, coc_rmap, coc_file;
    auto* coc = app.add_subcommand("cocycle", "check, solve or obstruct a 3-cocycle");
    coc->add_option("action", coc_action, "check | solve | obstruct")
        ->required()
        ->check(CLI::IsMember({"check", "solve", "obstruct"}));
    coc->add_option("--rmap", coc_rmap, "rmap file")->required();
    coc->add_option("--cocycle", coc_file, "cocycle file")->required();

    // electric
    auto* electric = app.add_subcommand("electric", "electric solution over Z/p^k");
    electric->require_subcommand(1);
    std::int64_t el_p = 5, el_eps = -1;
    int el_k = 2;
    electric->add_option("--p", el_p, "prime (2 or p = 1 mod 4)")->required();
    electric->add_option("--k", el_k, "power k >= 2")->required();
    electric->add_option("--epsilon", el_eps, "square root of -1 mod p");
    std::string el_out;
    auto* el_rmap = electric->add_subcommand("emit-rmap", "write the tabulated map");
    el_rmap->add_option("--out", el_out, "output file (default stdout)");
    std::string el_char = "0", el_which = "c1", el_outdir;
    auto* el_coc = electric->add_subcommand("emit-cocycles", "write character cocycles");
    el_coc->add_option("--character", el_char, "character index or 'all'")->required();
    el_coc->add_option("--which", el_which, "c1 | c2 | both")
        ->check(CLI::IsMember({"c1", "c2", "both"}));
    el_coc->add_option("--out-dir", el_outdir, "directory for emitted files");

    // qte
    auto* qte = app.add_subcommand("qte", "quantum tetrahedron checks");
    qte->require_subcommand(1);
    std::string qte_rmap, qte_cocycle, qte_emit;
    auto* qte_verify = qte->add_subcommand("verify", "verify the tensor equation");
    qte_verify->add_option("--rmap", qte_rmap, "rmap file")->required();
    qte_verify->add_option("--cocycle", qte_cocycle, "optional phase table");
    qte_verify->add_option("--emit-operator", qte_emit, "write the operator table");
    std::string gauge_rmap, gauge_a, gauge_b, gauge_psi;
    auto* qte_gauge = qte->add_subcommand("gauge", "diagonal gauge equivalence");
    qte_gauge->add_option("--rmap", gauge_rmap, "rmap file")->required();
    qte_gauge->add_option("--cocycle", gauge_a, "first phase table")->required();
    qte_gauge->add_option("--cocycle2", gauge_b, "second phase table")->required();
    qte_gauge->add_option("--psi", gauge_psi, "potential file (default: solve)");

    // reproduce-paper
    auto* repro = app.add_subcommand("reproduce-paper",
                                     "run the built-in Z/25 and Z/8 reference pipelines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitTrue;
    }

    try {
        if (*faces) return cmd_faces(faces_N, faces_k);
        if (*graph) return cmd_graph(graph_N, graph_n);
        if (*eqgraph) return cmd_equation_graph(eq_n);
        if (*verify) return cmd_verify(verify_rmap, verify_mode, verify_strict, threads);
        if (*prop) return cmd_propagate(prop_rmap, prop_dim, prop_input, prop_strict);
        if (*hom)
            return cmd_homology(hom_rmap, hom_max, hom_field, hom_norm, hom_conv, hom_nnz,
                                hom_export, threads);
        if (*audit) return cmd_convention_audit(audit_rmap, audit_max, threads);
        if (*coc) return cmd_cocycle(coc_action, coc_rmap, coc_file, threads);
        if (*electric) {
            if (*el_rmap) return cmd_electric_emit_rmap(el_p, el_k, el_eps, el_out);
            return cmd_electric_emit_cocycles(el_p, el_k, el_eps, el_char, el_which,
                                              el_outdir);
        }
        if (*qte) {
            if (*qte_verify) return cmd_qte_verify(qte_rmap, qte_cocycle, qte_emit);
            return cmd_qte_gauge(gauge_rmap, gauge_a, gauge_b, gauge_psi);
        }
        if (*repro) return cmd_reproduce(threads);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource cap: " << e.what() << " (requested " << e.requested
                  << ", cap " << e.cap << ")\n";
        return kExitResource;
    } catch (const InvariantError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const SingularityError& e) {
        std::cerr << "singular input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
