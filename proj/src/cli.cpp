#include <ellgw/cli.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include <ellgw/commutator.hpp>
#include <ellgw/fock_trace.hpp>
#include <ellgw/graph_engine.hpp>
#include <ellgw/jet_algebra.hpp>
#include <ellgw/modular_forms.hpp>
#include <ellgw/serialization.hpp>

namespace ellgw
{

namespace
{

struct RunConfig {
    std::vector<int> insertions;
    int q_order = 10;
    std::optional<int> lambda_order;
    std::optional<int> flow_bound;
    std::string pipeline = "fock";
    std::string format = "json";
    std::optional<int> weight;
    int vertex_k = 0;
    std::string suite = "all";
};

void validate_insertions(const std::vector<int> &ks)
{
    if (ks.empty()) {
        throw std::invalid_argument("--insertions must list at least one level");
    }
    for (int k : ks) {
        if (k < 0) {
            throw std::invalid_argument("descendant levels must be nonnegative, got " + std::to_string(k));
        }
    }
}

void attach_recognition(InvariantRecord &rec)
{
    if (!rec.genus || rec.series.is_zero()) {
        return;
    }
    const int w = predicted_weight(rec.insertions);
    if (rec.q_order < static_cast<int>(quasimodular_basis(w).size()) + 5) {
        return;
    }
    const Recognition r = recognize(rec.series, w);
    if (const auto *rep = std::get_if<QuasiModularRep>(&r)) {
        rec.quasi_modular = *rep;
    }
}

InvariantRecord fock_record(const RunConfig &cfg)
{
    return connected_correlator({cfg.insertions, cfg.q_order, cfg.lambda_order});
}

// The record at the predicted genus, plus any other genus that came out nonzero.
std::pair<InvariantRecord, std::vector<int>> graph_record(const RunConfig &cfg)
{
    const auto buckets = bcov_correlator(cfg.insertions, cfg.q_order, GraphOptions{cfg.flow_bound});
    InvariantRecord rec;
    rec.insertions = cfg.insertions;
    rec.genus = genus_from_insertions(cfg.insertions);
    rec.pipeline = Pipeline::graph;
    rec.q_order = cfg.q_order;
    rec.series = QSeries(cfg.q_order);
    std::vector<int> stray;
    for (const auto &[g, r] : buckets) {
        if (rec.genus && g == *rec.genus) {
            rec.series = r.series;
        } else {
            stray.push_back(g);
        }
    }
    return {rec, stray};
}

void print_table(std::ostream &out, const InvariantRecord &rec)
{
    out << "insertions:";
    for (int k : rec.insertions) {
        out << ' ' << k;
    }
    out << "  genus: " << (rec.genus ? std::to_string(*rec.genus) : std::string("null"))
        << "  pipeline: " << to_string(rec.pipeline) << "  q_order: " << rec.q_order << '\n';
    std::size_t width = std::string("coefficient").size();
    for (const auto &c : rec.series.coeffs()) {
        width = std::max(width, to_string(c).size());
    }
    const int dwidth = std::max(2, static_cast<int>(std::to_string(rec.q_order).size()));
    out << std::setw(dwidth) << "d" << "  " << std::setw(static_cast<int>(width)) << "coefficient" << '\n';
    for (int d = 0; d <= rec.q_order; ++d) {
        out << std::setw(dwidth) << d << "  " << std::setw(static_cast<int>(width)) << to_string(rec.series[d])
            << '\n';
    }
    if (rec.quasi_modular) {
        out << "quasi-modular (weight " << rec.quasi_modular->weight << "):";
        for (const auto &[m, c] : rec.quasi_modular->terms) {
            out << "  " << to_string(c) << " E2^" << m.e2 << " E4^" << m.e4 << " E6^" << m.e6;
        }
        out << '\n';
    }
}

int cmd_compute(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    validate_insertions(cfg.insertions);
    std::vector<InvariantRecord> records;
    std::vector<int> stray;
    if (cfg.pipeline == "fock" || cfg.pipeline == "both") {
        records.push_back(fock_record(cfg));
    }
    if (cfg.pipeline == "graph" || cfg.pipeline == "both") {
        auto [rec, s] = graph_record(cfg);
        records.push_back(std::move(rec));
        stray = std::move(s);
    }
    for (auto &r : records) {
        attach_recognition(r);
    }

    int code = exit_ok;
    Json verdict;
    if (!stray.empty()) {
        err << "graph pipeline produced nonzero output outside the predicted genus\n";
        code = exit_mismatch;
    }
    if (cfg.pipeline == "both") {
        Json mismatches = Json::array();
        for (int d = 0; d <= cfg.q_order; ++d) {
            if (records[0].series[d] != records[1].series[d]) {
                Json m;
                m["d"] = d;
                m["fock"] = to_string(records[0].series[d]);
                m["graph"] = to_string(records[1].series[d]);
                mismatches.push_back(std::move(m));
            }
        }
        verdict["equal"] = mismatches.empty() && stray.empty();
        verdict["mismatches"] = std::move(mismatches);
        verdict["stray_genera"] = stray;
        if (!verdict["equal"].get<bool>()) {
            code = exit_mismatch;
        }
    }

    if (cfg.format == "table") {
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) {
                out << '\n';
            }
            print_table(out, records[i]);
        }
        if (cfg.pipeline == "both") {
            out << "\nverdict: " << (code == exit_ok ? "equal" : "MISMATCH") << '\n';
        }
        return code;
    }
    Json doc;
    doc["records"] = Json::array();
    for (const auto &r : records) {
        doc["records"].push_back(to_json(r));
    }
    if (cfg.pipeline == "both") {
        doc["verdict"] = std::move(verdict);
    }
    out << doc.dump(2) << '\n';
    return code;
}

int cmd_vertex(const RunConfig &cfg, std::ostream &out)
{
    const NormalForm v = vertex(cfg.vertex_k);
    Json doc;
    doc["k"] = cfg.vertex_k;
    doc["vertex"] = to_json(v.poly());
    Json split = Json::array();
    for (const auto &[g, part] : genus_split(v)) {
        Json s;
        s["genus"] = g;
        s["poly"] = to_json(part.poly());
        split.push_back(std::move(s));
    }
    doc["genus_split"] = std::move(split);
    out << doc.dump(2) << '\n';
    return exit_ok;
}

int cmd_recognize(const RunConfig &cfg, std::ostream &out)
{
    validate_insertions(cfg.insertions);
    if (cfg.pipeline == "both") {
        throw std::invalid_argument("recognize takes a single pipeline");
    }
    InvariantRecord rec = cfg.pipeline == "graph" ? graph_record(cfg).first : fock_record(cfg);
    const int w = cfg.weight.value_or(predicted_weight(cfg.insertions));
    const Recognition r = recognize(rec.series, w);
    Json doc;
    int code = exit_ok;
    if (const auto *rep = std::get_if<QuasiModularRep>(&r)) {
        rec.quasi_modular = *rep;
        doc["record"] = to_json(rec);
        doc["recognized"] = true;
        doc["quasi_modular"] = to_json(*rep);
    } else {
        const auto &fail = std::get<RecognitionFailure>(r);
        doc["record"] = to_json(rec);
        doc["recognized"] = false;
        Json cert;
        cert["weight"] = w;
        cert["q_power"] = fail.q_power;
        cert["actual"] = to_string(fail.actual);
        cert["predicted"] = to_string(fail.predicted);
        doc["failure"] = std::move(cert);
        code = exit_mismatch;
    }
    out << doc.dump(2) << '\n';
    return code;
}

Json check_propagator()
{
    Json r;
    r["name"] = "propagator";
    r["pass"] = propagator_identity_check(10, 10);
    return r;
}

Json check_selfloop()
{
    Json r;
    r["name"] = "selfloop";
    const LambdaSeries residual = self_loop_identity_check(20);
    r["pass"] = residual.is_zero();
    if (!residual.is_zero()) {
        const int v = *residual.valuation();
        r["certificate"] = {{"lambda_power", v}, {"residual", to_string(residual.coefficient(v))}};
    }
    return r;
}

Json check_kernel()
{
    Json r;
    r["name"] = "kernel";
    r["pass"] = true;
    for (int k = -1; k <= 10; ++k) {
        const NormalForm e = apply_E(vertex(k).poly());
        if (!e.is_zero()) {
            r["pass"] = false;
            r["certificate"] = {{"k", k}, {"E_vertex", to_json(e.poly())}};
            return r;
        }
    }
    for (int d = 1; d <= 12; ++d) {
        const KernelResult kr = kernel_dimension(d);
        bool ok = kr.dimension == 1;
        if (ok) {
            const DiffPoly &b = kr.basis[0].poly();
            const NormalForm vn = vertex(d - 2);
            const DiffPoly &v = vn.poly();
            const auto &[lead, bc] = *b.terms().begin();
            ok = v.coefficient(lead) != 0 && b * (v.coefficient(lead) / bc) == v;
        }
        if (!ok) {
            r["pass"] = false;
            r["certificate"] = {{"degree", d}, {"dimension", kr.dimension}};
            return r;
        }
    }
    return r;
}

Json check_commutator()
{
    Json r;
    r["name"] = "commutator";
    r["pass"] = true;
    for (int k1 = -1; k1 <= 4; ++k1) {
        for (int k2 = -1; k2 <= 4; ++k2) {
            for (const auto &[h, nf] : commutator_bracket(k1, k2, 3)) {
                if (!nf.is_zero()) {
                    r["pass"] = false;
                    r["certificate"] = {{"k1", k1}, {"k2", k2}, {"hbar_order", h}, {"residual", to_json(nf.poly())}};
                    return r;
                }
            }
        }
    }
    return r;
}

int cmd_check(const RunConfig &cfg, std::ostream &out)
{
    Json results = Json::array();
    const bool all = cfg.suite == "all";
    if (all || cfg.suite == "propagator") {
        results.push_back(check_propagator());
    }
    if (all || cfg.suite == "selfloop") {
        results.push_back(check_selfloop());
    }
    if (all || cfg.suite == "kernel") {
        results.push_back(check_kernel());
    }
    if (all || cfg.suite == "commutator") {
        results.push_back(check_commutator());
    }
    bool pass = true;
    for (const auto &r : results) {
        pass = pass && r["pass"].get<bool>();
    }
    Json doc;
    doc["suite"] = cfg.suite;
    doc["pass"] = pass;
    doc["results"] = std::move(results);
    out << doc.dump(2) << '\n';
    return pass ? exit_ok : exit_mismatch;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Stationary descendant Gromov-Witten invariants of the elliptic curve", "ellgw"};
    app.require_subcommand(1, 1);

    auto add_series_options = [&cfg](CLI::App *sub) {
        sub->add_option("--insertions", cfg.insertions, "Descendant levels k1,k2,...")->delimiter(',')->required();
        sub->add_option("--q-order", cfg.q_order, "Truncation order in q")->check(CLI::NonNegativeNumber);
        sub->add_option("--lambda-order", cfg.lambda_order, "Lambda truncation override")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--flow-bound", cfg.flow_bound, "Per-edge flow cutoff (testing)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App *compute = app.add_subcommand("compute", "Compute connected invariants");
    add_series_options(compute);
    compute->add_option("--pipeline", cfg.pipeline, "fock, graph or both")
        ->check(CLI::IsMember({"fock", "graph", "both"}));

    CLI::App *compare = app.add_subcommand("compare", "Compute with both pipelines and compare");
    add_series_options(compare);

    CLI::App *vert = app.add_subcommand("vertex", "Print the vertex Lagrangian for tau_k");
    vert->add_option("k", cfg.vertex_k, "Descendant level (>= -1)")->required();

    CLI::App *recog = app.add_subcommand("recognize", "Recognize a correlator as a quasi-modular form");
    add_series_options(recog);
    recog->add_option("--pipeline", cfg.pipeline, "fock or graph")->check(CLI::IsMember({"fock", "graph"}));
    recog->add_option("--weight", cfg.weight, "Weight (defaults to sum(k_i + 2))");

    CLI::App *check = app.add_subcommand("check", "Run an identity suite");
    check->add_option("suite", cfg.suite, "propagator, selfloop, kernel, commutator or all")
        ->check(CLI::IsMember({"propagator", "selfloop", "kernel", "commutator", "all"}));

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (compute->parsed()) {
            return cmd_compute(cfg, out, err);
        }
        if (compare->parsed()) {
            cfg.pipeline = "both";
            return cmd_compute(cfg, out, err);
        }
        if (vert->parsed()) {
            return cmd_vertex(cfg, out);
        }
        if (recog->parsed()) {
            return cmd_recognize(cfg, out);
        }
        return cmd_check(cfg, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_invalid;
}

} // namespace ellgw
