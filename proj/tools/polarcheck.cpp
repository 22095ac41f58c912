// polarcheck: build dual polar and half-spin Grassmann spaces over small
// prime fields, run the collinearity-vs-opposition verifications, export
// graphs and answer ad-hoc queries.
//
// JSON goes to stdout, human log (including timings) to stderr.
// Exit codes: 0 pass, 1 mathematical-claim violation, 2 usage/config error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polarcheck/theorems.hpp"

using json = nlohmann::ordered_json;
using namespace polarcheck;

namespace {

struct SpaceArgs {
    std::string kind = "symplectic";
    unsigned n = 3;
    unsigned q = 2;
};

struct CommonArgs {
    uint64_t seed = 0;
    int threads = 0;  // 0 = hardware concurrency
    uint64_t budget = 10000;
};

void add_space_options(CLI::App* cmd, SpaceArgs& s) {
    cmd->add_option("--kind", s.kind, "Form kind: symplectic | quadric")
        ->check(CLI::IsMember({"symplectic", "quadric"}))
        ->capture_default_str();
    cmd->add_option("--n", s.n, "Witt index (rank)")->capture_default_str();
    cmd->add_option("--q", s.q, "Field order (prime, 2 or 3)")->capture_default_str();
}

void add_common_options(CLI::App* cmd, CommonArgs& c) {
    cmd->add_option("--seed", c.seed, "Seed for sampled modes")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Thread cap (0 = auto)")->capture_default_str();
    cmd->add_option("--budget", c.budget, "Refuse spaces above this many maximals")
        ->capture_default_str();
}

FormKind parse_kind(const SpaceArgs& s) {
    return s.kind == "symplectic" ? FormKind::Symplectic : FormKind::Quadratic;
}

void validate_descriptor(const SpaceArgs& s, const CommonArgs& c) {
    if (s.q != 2 && s.q != 3) {
        throw CLI::ValidationError("--q", "supported field orders are 2 and 3");
    }
    if (s.n < 2) throw CLI::ValidationError("--n", "rank must be at least 2");
    uint64_t expected = PolarSpace::expected_maximal_count(parse_kind(s), s.n, s.q);
    if (expected > c.budget) {
        throw CLI::ValidationError(
            "--n", "space would have " + std::to_string(expected) +
                       " maximal singular subspaces, over the budget of " +
                       std::to_string(c.budget) + " (raise --budget to force)");
    }
}

PolarSpace build_space(const SpaceArgs& s, const CommonArgs& c) {
    validate_descriptor(s, c);
    Form form = parse_kind(s) == FormKind::Symplectic ? Form::symplectic(s.n, s.q)
                                                      : Form::hyperbolic_quadric(s.n, s.q);
    auto t0 = std::chrono::steady_clock::now();
    PolarSpace ps = PolarSpace::build(std::move(form), {.max_maximals = c.budget});
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "[polarcheck] built " << s.kind << " n=" << s.n << " q=" << s.q << ": "
              << ps.maximal_count() << " maximals, "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()
              << " ms\n";
    return ps;
}

json space_json(const SpaceArgs& s) {
    return json{{"kind", s.kind}, {"n", s.n}, {"q", s.q}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

constexpr size_t kFailureCap = 50;

json pair_failures_json(const std::vector<PairFailure>& failures) {
    json arr = json::array();
    for (size_t i = 0; i < failures.size() && i < kFailureCap; ++i) {
        arr.push_back(json{{"s1", failures[i].s1},
                           {"s2", failures[i].s2},
                           {"collinear", failures[i].collinear},
                           {"witness_found", failures[i].witness_found}});
    }
    return arr;
}

json line_witness_json(const LineWitnessReport& r) {
    json arr = json::array();
    for (size_t i = 0; i < r.failures.size() && i < kFailureCap; ++i) {
        arr.push_back(json{{"s1", r.failures[i].s1},
                           {"s2", r.failures[i].s2},
                           {"candidate", r.failures[i].candidate},
                           {"violating_u", r.failures[i].violating_u}});
    }
    return json{{"collinear_pairs", r.collinear_pairs},
                {"witnesses_checked", r.witnesses_checked},
                {"failures", arr},
                {"pass", r.pass}};
}

int emit_verdict(json j, bool pass) {
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~Timer() {
        auto end = std::chrono::steady_clock::now();
        std::cerr << "[polarcheck] elapsed "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count()
                  << " ms\n";
    }
};

int cmd_stats(const SpaceArgs& s, const CommonArgs& c) {
    Timer timer;
    PolarSpace ps = build_space(s, c);
    emit(json{{"q", s.q},
              {"n", s.n},
              {"kind", s.kind},
              {"type", to_string(ps.type())},
              {"num_points", ps.points().size()},
              {"num_max_singulars", ps.maximal_count()}});
    return 0;
}

int cmd_check_theorem1(const SpaceArgs& s, const CommonArgs& c, bool exhaustive,
                       uint64_t samples, const std::string& family) {
    Timer timer;
    PolarSpace ps = build_space(s, c);
    auto [plus, minus] = split_families(ps, c.threads);

    CharacterizationOptions opt;
    opt.exhaustive = exhaustive;
    opt.noncollinear_samples = samples;
    opt.seed = c.seed;
    opt.threads = c.threads;

    json fams = json::array();
    bool pass = true;
    for (const HalfSpinSpace* fam : {&plus, &minus}) {
        std::string tag(1, fam->delta());
        if (family != "both" && family != tag) continue;
        CharacterizationReport rep = verify_witness_characterization(*fam, opt);
        LineWitnessReport lw = verify_line_witnesses(*fam, c.threads);
        pass &= rep.pass && lw.pass;
        fams.push_back(json{{"family", tag},
                            {"members", rep.members},
                            {"mode", rep.exhaustive ? "exhaustive" : "sampled"},
                            {"pairs_total", rep.pairs_total},
                            {"collinear_pairs", rep.collinear_pairs},
                            {"noncollinear_pairs_checked", rep.noncollinear_pairs_checked},
                            {"failures", pair_failures_json(rep.failures)},
                            {"pass", rep.pass},
                            {"line_witnesses", line_witness_json(lw)}});
    }
    json j{{"check", "theorem1"},
           {"space", space_json(s)},
           {"mode", exhaustive ? "exhaustive" : "sampled"},
           {"seed", c.seed},
           {"families", fams}};
    return emit_verdict(std::move(j), pass);
}

int cmd_check_counterexample(const SpaceArgs& s, const CommonArgs& c, bool scan_witnesses) {
    Timer timer;
    if (s.kind != "symplectic") {
        throw CLI::ValidationError("--kind", "counterexample check needs a symplectic space");
    }
    validate_descriptor(s, c);
    SymplecticTriple triple = build_symplectic_triple(s.n, s.q, {.max_maximals = c.budget});
    SymplecticTripleReport rep =
        verify_symplectic_triple(triple, c.threads, scan_witnesses);

    json violations = json::array();
    for (size_t i = 0; i < rep.violations.size() && i < kFailureCap; ++i) {
        violations.push_back(rep.violations[i].u);
    }
    json j{{"check", "counterexample"},
           {"space", space_json(s)},
           {"maximals", rep.maximals_scanned},
           {"construction",
            json{{"s1_singular", triple.s1_singular},
                 {"s2_singular", triple.s2_singular},
                 {"s_singular", triple.s_singular},
                 {"s1_id", triple.s1_id},
                 {"s2_id", triple.s2_id},
                 {"s_id", triple.s_id},
                 {"ok", rep.construction_ok}}},
           {"intersections",
            json{{"s1_s2", rep.inter_s1_s2},
                 {"s_s1", rep.inter_s_s1},
                 {"s_s2", rep.inter_s_s2},
                 {"core_vdim", rep.core_vdim},
                 {"match_core", rep.intersections_match_core}}},
           {"s1_s2_noncollinear", rep.s1_s2_noncollinear},
           {"witness_property", rep.witness_property},
           {"violations", violations}};
    if (rep.witness_scan) {
        j["witness_scan"] =
            json{{"witness", rep.witness_scan->witness ? json(*rep.witness_scan->witness)
                                                       : json(nullptr)},
                 {"candidates_rejected", rep.witness_scan->rejections.size()}};
    } else {
        j["witness_scan"] = nullptr;
    }
    return emit_verdict(std::move(j), rep.pass);
}

int cmd_check_lines(const SpaceArgs& s, const CommonArgs& c) {
    Timer timer;
    if (s.kind != "symplectic") {
        throw CLI::ValidationError("--kind", "lines check needs a symplectic space");
    }
    validate_descriptor(s, c);
    SymplecticTriple triple = build_symplectic_triple(s.n, s.q, {.max_maximals = c.budget});
    TripleLinesReport rep = verify_triple_lines(triple);
    json scalars = json::array();
    for (const ScalarLineCheck& chk : rep.scalars) {
        scalars.push_back(json{{"a", chk.a},
                               {"p_q_collinear", chk.p_q_collinear},
                               {"meet_is_point", chk.meet_is_point},
                               {"meet_matches", chk.meet_matches}});
    }
    json j{{"check", "lines"},
           {"space", space_json(s)},
           {"scalars", scalars},
           {"scalars_pass", rep.scalars_pass},
           {"generalized",
            json{{"pairs_checked", rep.generalized_pairs_checked},
                 {"pass", rep.generalized_pass}}}};
    return emit_verdict(std::move(j), rep.pass);
}

int cmd_check_grassmann(unsigned d, unsigned k, unsigned q, const CommonArgs& c,
                        bool skip_characterization) {
    Timer timer;
    if (q != 2 && q != 3) throw CLI::ValidationError("--q", "supported field orders are 2 and 3");
    uint64_t expected = gaussian_binomial(d, k, q);
    if (expected > c.budget) {
        throw CLI::ValidationError("--d", "Grassmannian has " + std::to_string(expected) +
                                              " vertices, over the budget of " +
                                              std::to_string(c.budget));
    }
    GrassmannCharReport rep =
        verify_grassmann_characterization(d, k, q, !skip_characterization, c.threads);
    json j{{"check", "grassmann"},
           {"space", json{{"d", d}, {"k", k}, {"q", q}}},
           {"vertices", rep.vertices},
           {"expected_vertices", rep.expected_vertices},
           {"characterization",
            json{{"enabled", rep.characterization_enabled},
                 {"pairs_checked", rep.pairs_checked},
                 {"failures", pair_failures_json(rep.failures)},
                 {"pass", rep.characterization_pass}}},
           {"distance_formula",
            json{{"diameter", rep.diameter}, {"pass", rep.formula_vs_bfs_pass}}}};
    return emit_verdict(std::move(j), rep.pass && rep.vertices == rep.expected_vertices);
}

json polar_axioms_json(const PolarAxiomsReport& r) {
    return json{{"partial_linear", r.partial_linear},
                {"every_point_on_a_line", r.every_point_on_a_line},
                {"lines_have_3_points", r.lines_have_3_points},
                {"buekenhout_shult", r.buekenhout_shult},
                {"nondegenerate", r.nondegenerate},
                {"pass", r.pass}};
}

int cmd_check_axioms(const SpaceArgs& s, const CommonArgs& c) {
    Timer timer;
    PolarSpace ps = build_space(s, c);
    DualPolarSpace dps(ps, c.threads);

    IncidenceGeometry ambient = ambient_incidence(ps);
    PolarAxiomsReport ambient_rep = check_polar_axioms(ambient);

    // Dual polar line sizes: exactly 2 on D_n, q+1 on C_n.
    unsigned expected_size = ps.type() == PolarType::Dn ? 2 : s.q + 1;
    bool line_sizes_uniform = true;
    for (const auto& [core, ids] : dps.lines()) {
        if (ids.size() != expected_size) line_sizes_uniform = false;
    }

    bool pass = ambient_rep.pass && line_sizes_uniform;
    json j{{"check", "axioms"},
           {"space", space_json(s)},
           {"ambient",
            json{{"points", ambient.points},
                 {"lines", ambient.lines.size()},
                 {"axioms", polar_axioms_json(ambient_rep)}}},
           {"dual_polar_lines",
            json{{"count", dps.lines().size()},
                 {"expected_size", expected_size},
                 {"uniform", line_sizes_uniform}}}};

    if (ps.type() == PolarType::Dn && (s.n == 3 || s.n == 4)) {
        auto [plus, minus] = split_families(ps, c.threads);
        json hs = json::array();
        for (const HalfSpinSpace* fam : {&plus, &minus}) {
            IncidenceGeometry g = half_spin_incidence(*fam);
            json entry{{"family", std::string(1, fam->delta())},
                       {"points", g.points},
                       {"lines", g.lines.size()}};
            if (s.n == 3) {
                // Rank-3 half-spin spaces are projective 3-spaces.
                LinearSpaceReport lin = check_linear_space(g);
                bool profile = lin.pass && uint64_t(lin.points) == gaussian_binomial(4, 1, s.q) &&
                               uint64_t(lin.lines) == gaussian_binomial(4, 2, s.q) &&
                               lin.line_size == int(s.q) + 1;
                entry["projective_space"] = json{{"line_size", lin.line_size},
                                                 {"linear_space", lin.every_pair_on_unique_line},
                                                 {"pg_3_profile", profile}};
                pass &= profile;
            } else {
                // Rank-4 half-spin spaces are themselves D_4 polar spaces.
                PolarAxiomsReport ax = check_polar_axioms(g);
                AbstractClassification cls = classify_abstract(g);
                bool is_d4 = cls.valid && cls.rank == 4 && cls.type == PolarType::Dn;
                entry["polar_axioms"] = polar_axioms_json(ax);
                entry["classification"] = json{{"valid", cls.valid},
                                               {"rank", cls.rank},
                                               {"maximal_count", cls.maximal_count},
                                               {"through_next_to_max", cls.through_next_to_max},
                                               {"type", cls.valid ? to_string(cls.type) : "?"},
                                               {"is_D4", is_d4}};
                pass &= ax.pass && is_d4;
            }
            hs.push_back(std::move(entry));
        }
        j["half_spin"] = hs;
    } else {
        j["half_spin"] = nullptr;
    }
    return emit_verdict(std::move(j), pass);
}

int cmd_check_distance_formula(const SpaceArgs& s, const CommonArgs& c) {
    Timer timer;
    PolarSpace ps = build_space(s, c);
    DistanceFormulaReport rep = verify_distance_formulas(ps, c.threads);
    json j{{"check", "distance-formula"},
           {"space", space_json(s)},
           {"dual_polar",
            json{{"pairs", rep.dp_pairs},
                 {"connected", rep.dp_connected},
                 {"formula_equals_bfs", rep.dp_formula_vs_bfs},
                 {"diameter", rep.dp_diameter},
                 {"diameter_equals_rank", rep.dp_diameter_is_rank}}}};
    if (rep.has_half_spin) {
        j["half_spin"] = json{{"pairs", rep.hs_pairs},
                              {"opposite_iff_max_distance", rep.hs_opposite_iff_max_distance},
                              {"distance_is_half_dual", rep.hs_distance_is_half_dp},
                              {"diameter_plus", rep.hs_diameter_plus},
                              {"diameter_minus", rep.hs_diameter_minus}};
    } else {
        j["half_spin"] = nullptr;
    }
    return emit_verdict(std::move(j), rep.pass);
}

int cmd_export(const SpaceArgs& s, const CommonArgs& c, const std::string& format,
               const std::string& family, bool grassmann, unsigned d, unsigned k) {
    Timer timer;
    std::string text;
    if (grassmann) {
        if (s.q != 2 && s.q != 3) {
            throw CLI::ValidationError("--q", "supported field orders are 2 and 3");
        }
        GrassmannGraph g = GrassmannGraph::build(d, k, s.q, c.threads, c.budget);
        text = format == "dot" ? to_dot(g.adjacency()) : to_adjlist(g.adjacency());
    } else if (!family.empty()) {
        PolarSpace ps = build_space(s, c);
        auto [plus, minus] = split_families(ps, c.threads);
        const HalfSpinSpace& fam = family == "+" ? plus : minus;
        text = format == "dot" ? to_dot(fam.local_adjacency(), fam.members())
                               : to_adjlist(fam.local_adjacency(), fam.members());
    } else {
        PolarSpace ps = build_space(s, c);
        DualPolarSpace dps(ps, c.threads);
        text = format == "dot" ? to_dot(dps.adjacency()) : to_adjlist(dps.adjacency());
    }
    std::cout << text;
    return 0;
}

int cmd_query(const SpaceArgs& s, const CommonArgs& c, const std::string& op, int id1, int id2,
              const std::string& family) {
    Timer timer;
    PolarSpace ps = build_space(s, c);
    json j{{"op", op}, {"space", space_json(s)}, {"id1", id1}, {"id2", id2}};
    if (!family.empty()) {
        auto [plus, minus] = split_families(ps, c.threads);
        const HalfSpinSpace& fam = family == "+" ? plus : minus;
        j["family"] = family;
        if (op == "distance") {
            j["value"] = fam.distance(id1, id2);
        } else if (op == "opposite") {
            j["value"] = fam.opposite(id1, id2);
        } else if (op == "intersection-dim") {
            j["value"] = fam.intersection_vdim(id1, id2);
        } else {
            j["value"] = all_witnesses(fam, id1, id2);
        }
    } else {
        DualPolarSpace dps(ps, c.threads);
        if (op == "distance") {
            j["value"] = dps.distance(id1, id2);
        } else if (op == "opposite") {
            j["value"] = dps.opposite(id1, id2);
        } else if (op == "intersection-dim") {
            j["value"] = dps.intersection_vdim(id1, id2);
        } else {
            j["value"] = all_witnesses(dps, id1, id2);
        }
    }
    emit(j);
    return 0;
}

int cmd_frame_through(const SpaceArgs& s, const CommonArgs& c, const std::string& file_a,
                      const std::string& file_b) {
    Timer timer;
    validate_descriptor(s, c);
    auto read_subspace = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        return subspace_from_text(buf.str());
    };
    Subspace a = read_subspace(file_a);
    Subspace b = read_subspace(file_b);
    Form form = parse_kind(s) == FormKind::Symplectic ? Form::symplectic(s.n, s.q)
                                                      : Form::hyperbolic_quadric(s.n, s.q);
    if (a.ambient_dim() != form.dim() || a.field_order() != s.q || b.ambient_dim() != form.dim() ||
        b.field_order() != s.q) {
        throw std::runtime_error("subspace files do not match the space descriptor");
    }
    Frame fr = frame_through(form, a, b);
    json pairs = json::array();
    for (unsigned i = 0; i < fr.pair_count(); ++i) {
        pairs.push_back(json{{"x", fr.x(i)}, {"y", fr.y(i)}});
    }
    emit(json{{"space", space_json(s)}, {"valid", frame_valid(form, fr)}, {"pairs", pairs}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite polar space engine: dual polar and half-spin Grassmann geometry checks"};
    app.require_subcommand(1);

    SpaceArgs space;
    CommonArgs common;
    int rc = 0;

    auto* stats = app.add_subcommand("stats", "Build a space and print its statistics");
    add_space_options(stats, space);
    add_common_options(stats, common);
    stats->callback([&] { rc = cmd_stats(space, common); });

    auto* check = app.add_subcommand("check", "Run a verification");
    check->require_subcommand(1);

    bool exhaustive = false;
    uint64_t samples = 200;
    std::string family = "both";
    auto* theorem1 = check->add_subcommand(
        "theorem1", "Half-spin collinearity <=> opposition-witness equivalence");
    add_space_options(theorem1, space);
    add_common_options(theorem1, common);
    theorem1->add_flag("--exhaustive", exhaustive, "Scan every pair (default: sampled)");
    theorem1->add_option("--samples", samples, "Non-collinear pairs to sample in sampled mode")
        ->capture_default_str();
    theorem1->add_option("--family", family, "Family: + | - | both")
        ->check(CLI::IsMember({"+", "-", "both"}))
        ->capture_default_str();
    theorem1->callback(
        [&] { rc = cmd_check_theorem1(space, common, exhaustive, samples, family); });

    bool scan_witnesses = false;
    auto* counter = check->add_subcommand(
        "counterexample", "Symplectic triple: witness without collinearity");
    add_space_options(counter, space);
    add_common_options(counter, common);
    counter->add_flag("--scan-witnesses", scan_witnesses,
                      "Also scan every candidate for a witness of the pair");
    counter->callback([&] { rc = cmd_check_counterexample(space, common, scan_witnesses); });

    auto* lines = check->add_subcommand("lines", "Parametrized line pencils of the triple");
    add_space_options(lines, space);
    add_common_options(lines, common);
    lines->callback([&] { rc = cmd_check_lines(space, common); });

    unsigned gd = 4, gk = 2;
    bool skip_char = false;
    auto* grass = check->add_subcommand("grassmann",
                                        "Grassmann graph characterization and distance formula");
    grass->add_option("--d", gd, "Ambient dimension")->capture_default_str();
    grass->add_option("--k", gk, "Subspace dimension")->capture_default_str();
    grass->add_option("--q", space.q, "Field order")->capture_default_str();
    add_common_options(grass, common);
    grass->add_flag("--skip-characterization", skip_char,
                    "Only run the distance-formula cross-check");
    grass->callback([&] { rc = cmd_check_grassmann(gd, gk, space.q, common, skip_char); });

    auto* axioms = check->add_subcommand("axioms", "Polar axioms and structural profiles");
    add_space_options(axioms, space);
    add_common_options(axioms, common);
    axioms->callback([&] { rc = cmd_check_axioms(space, common); });

    auto* distf = check->add_subcommand("distance-formula",
                                        "Distance formulas against BFS on the built graphs");
    add_space_options(distf, space);
    add_common_options(distf, common);
    distf->callback([&] { rc = cmd_check_distance_formula(space, common); });

    std::string format = "adjlist", exp_family;
    bool exp_grassmann = false;
    auto* exp = app.add_subcommand("export", "Export a collinearity graph");
    exp->alias("export-graph");
    add_space_options(exp, space);
    add_common_options(exp, common);
    exp->add_option("--format", format, "Output format: dot | adjlist")
        ->check(CLI::IsMember({"dot", "adjlist"}))
        ->capture_default_str();
    exp->add_option("--family", exp_family, "Half-spin family selector: + | -")
        ->check(CLI::IsMember({"+", "-"}));
    exp->add_flag("--grassmann", exp_grassmann, "Export the Grassmann graph instead");
    exp->add_option("--d", gd, "Grassmann ambient dimension");
    exp->add_option("--k", gk, "Grassmann subspace dimension");
    exp->callback(
        [&] { rc = cmd_export(space, common, format, exp_family, exp_grassmann, gd, gk); });

    std::string qop = "distance", q_family;
    int id1 = 0, id2 = 0;
    auto* query = app.add_subcommand("query", "Ad-hoc distance/opposite queries by vertex ID");
    add_space_options(query, space);
    add_common_options(query, common);
    query->add_option("--op", qop, "distance | opposite | intersection-dim | witnesses")
        ->check(CLI::IsMember({"distance", "opposite", "intersection-dim", "witnesses"}))
        ->capture_default_str();
    query->add_option("--id1", id1, "First vertex ID")->required();
    query->add_option("--id2", id2, "Second vertex ID")->required();
    query->add_option("--family", q_family, "Half-spin family selector: + | -")
        ->check(CLI::IsMember({"+", "-"}));
    query->callback([&] { rc = cmd_query(space, common, qop, id1, id2, q_family); });

    std::string file_a, file_b;
    auto* ft = app.add_subcommand("frame-through",
                                  "Build a frame through two singular subspaces (debugging)");
    add_space_options(ft, space);
    add_common_options(ft, common);
    ft->add_option("--a", file_a, "Subspace file (text format)")->required();
    ft->add_option("--b", file_b, "Subspace file (text format)")->required();
    ft->callback([&] { rc = cmd_frame_through(space, common, file_a, file_b); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "[polarcheck] error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
