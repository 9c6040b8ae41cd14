#include "multiseq/task.hpp"

#include <chrono>
#include <sstream>

#include "multiseq/dependence.hpp"
#include "multiseq/sv.hpp"

namespace multiseq {

namespace {

int task_arity(const std::string& name) {
    if (name == "multseq" || name == "jmult" || name == "endpoints" || name == "hilbert")
        return 1;
    if (name == "check-integral" || name == "sv") return 2;
    throw precondition_error("unknown task '" + name + "'");
}

Json seq_json(const std::vector<long long>& c) {
    Json a = Json::array();
    for (long long v : c) a.push_back(v);
    return a;
}

template <coefficient_field C>
struct Workspace {
    RingPresPtr<C> ring;
    const ProblemFile& file;

    Workspace(const ProblemFile& f) : file(f) {
        FieldSpec fs{f.characteristic};
        RingPtr ambient = make_ring(fs, f.variables);
        PolyVec<C> quot;
        for (const auto& g : f.quotient)
            quot.push_back(parse_polynomial<C>(g.text, ambient, g.line, g.column));
        ring = std::make_shared<const RingPresentation<C>>(ambient, std::move(quot),
                                                           f.options.equidimensional);
    }

    PolyVec<C> gens_of(const std::string& label) const {
        const auto* gens = file.find_ideal(label);
        if (!gens) throw precondition_error("no ideal labeled '" + label + "' in the file");
        PolyVec<C> out;
        for (const auto& g : *gens)
            out.push_back(parse_polynomial<C>(g.text, ring->ring(), g.line, g.column));
        return out;
    }

    IdealPresentation<C> ideal_of(const std::string& label) const {
        return IdealPresentation<C>(ring, gens_of(label), label);
    }
};

void add_sequence_fields(Json& r, const MultiplicitySequence& seq) {
    r["c"] = seq_json(seq.c);
    r["d"] = seq.d;
    r["j"] = seq.c.back();
    auto [ht, ell] = sequence_endpoints(seq);
    r["ht"] = ht;
    r["ell"] = ell;
    r["route"] = std::string(1, seq.route);
    Json seeds = Json::array();
    for (auto s : seq.seeds) seeds.push_back(s);
    r["seeds"] = seeds;
    for (const auto& note : seq.crosschecks) r["crosschecks"].push_back(note);
}

template <coefficient_field C>
MultiplicitySequence sequence_by_route(const Workspace<C>& ws, const IdealPresentation<C>& I,
                                       char route) {
    const auto& o = ws.file.options;
    switch (route) {
        case 'A':
            return multiplicity_sequence_oracle(
                *ws.ring, I, GridOptions{o.grid_start, o.grid_cap, o.grid_stride});
        case 'C':
            return length_formula_sequence(*ws.ring, I, o.seed, o.seeds);
        default:
            return multiplicity_sequence(*ws.ring, I);
    }
}

template <coefficient_field C>
void run_route_crosschecks(const Workspace<C>& ws, const IdealPresentation<C>& I,
                           const MultiplicitySequence& seq, Json& r) {
    std::vector<std::string> notes;
    for (char other : {'A', 'B', 'C'}) {
        if (other == seq.route) continue;
        if (other == 'C' && (!I.is_zero() && !I.equigenerated())) continue;
        if (other == 'C' && !ws.ring->is_polynomial_ring() &&
            !ws.ring->equidimensional_asserted())
            continue;
        auto check = sequence_by_route(ws, I, other);
        if (check.c != seq.c)
            throw internal_error(std::string("route ") + other +
                                 " disagrees with route " + seq.route);
        notes.push_back(std::string("route ") + other + " agrees");
    }
    for (const auto& n : notes) r["crosschecks"].push_back(n);
}

template <coefficient_field C>
void add_field_warnings(const Workspace<C>& ws, const MultiplicitySequence& seq, Json& r) {
    if (!ws.ring->is_polynomial_ring())
        r["warnings"].push_back(
            std::string("quotient ring: results assume the asserted ring hypotheses "
                        "(equidimensionality ") +
            (ws.ring->equidimensional_asserted() ? "asserted" : "NOT asserted") + ")");
    if (!seq.seeds.empty())
        r["warnings"].push_back("randomized general elements over a finite field: results are "
                                "exact only off a small bad locus; all seeds listed agreed");
}

template <coefficient_field C>
Json run_typed(const ProblemFile& file) {
    Workspace<C> ws(file);
    const auto& task = file.task;
    const auto& opts = file.options;

    Json r;
    r["task"] = task.name;
    r["char"] = file.characteristic;
    r["vars"] = file.variables;
    Json quot = Json::array();
    for (const auto& q : file.quotient) quot.push_back(q.text);
    r["quotient"] = quot;
    Json ideals = Json::object();
    for (const auto& [label, gens] : file.ideals) {
        Json l = Json::array();
        for (const auto& g : gens) l.push_back(g.text);
        ideals[label] = l;
    }
    r["ideals"] = ideals;
    r["options"] = Json{{"seed", opts.seed},
                        {"seeds", opts.seeds},
                        {"route", std::string(1, opts.route)},
                        {"max_n", opts.max_n},
                        {"grid_start", opts.grid_start},
                        {"grid_cap", opts.grid_cap},
                        {"grid_stride", opts.grid_stride},
                        {"oracle", opts.oracle.has_value() ? Json(*opts.oracle) : Json(nullptr)},
                        {"equidimensional", opts.equidimensional},
                        {"join", opts.join}};
    r["crosschecks"] = Json::array();
    r["warnings"] = Json::array();

    if (task.name == "multseq" || task.name == "jmult" || task.name == "endpoints") {
        auto I = ws.ideal_of(task.args[0]);
        auto seq = sequence_by_route(ws, I, opts.route);
        add_sequence_fields(r, seq);
        if (task.name == "endpoints") {
            int ell_independent = analytic_spread(*ws.ring, I);
            r["analytic_spread"] = ell_independent;
            int ht_independent = I.is_zero() ? 0 : ideal_height(*ws.ring, I.gens());
            r["height"] = ht_independent;
            if (r["ell"] != ell_independent)
                throw internal_error("sequence endpoint disagrees with the fiber-ring "
                                     "analytic spread");
            if (r["ht"] != ht_independent)
                throw internal_error("sequence endpoint disagrees with the dimension-based "
                                     "height");
            r["crosschecks"].push_back("analytic spread and height agree with endpoints");
        }
        if (opts.oracle.value_or(false)) run_route_crosschecks(ws, I, seq, r);
        add_field_warnings(ws, seq, r);
    } else if (task.name == "check-integral") {
        auto I = ws.ideal_of(task.args[0]);
        auto J = ws.ideal_of(task.args[1]);
        bool run_oracle = opts.oracle.value_or(true);
        auto v = check_integral(*ws.ring, I, J, opts.join, run_oracle, opts.max_n);
        r["verdict"] = v.integral ? "integral" : "not-integral";
        if (!v.integral) r["witness_index"] = v.witness_index;
        r["c_I"] = seq_json(v.seq_small.c);
        r["c_J"] = seq_json(v.seq_large.c);
        r["d"] = v.seq_small.d;
        r["route"] = std::string(1, v.seq_small.route);
        r["seeds"] = Json::array();
        switch (v.oracle) {
            case OracleOutcome::confirmed_integral:
                r["oracle"] = Json{{"outcome", "confirmed-integral"}, {"n", v.oracle_steps}};
                break;
            case OracleOutcome::inconclusive:
                r["oracle"] = Json{{"outcome", "inconclusive"}};
                break;
            case OracleOutcome::not_run:
                r["oracle"] = Json{{"outcome", "not-run"}};
                break;
        }
        for (const auto& w : v.warnings) r["warnings"].push_back(w);
    } else if (task.name == "sv") {
        auto ix = ws.gens_of(task.args[0]);
        auto iy = ws.gens_of(task.args[1]);
        if (!ws.ring->is_polynomial_ring())
            throw precondition_error("sv expects a polynomial ambient ring (the joined "
                                     "quotient is built internally)");
        auto inst = sv_instance<C>(ws.ring->ring(), ix, iy, opts.seed, true);
        auto rep = sv_degrees(inst, opts.seeds);
        add_sequence_fields(r, rep.seq);
        r["cycle_degrees"] = seq_json(rep.cycle_degrees);
        r["sum_c"] = rep.sum_c;
        r["deg_X"] = inst.deg_x;
        r["deg_Y"] = inst.deg_y;
        r["degree_product"] = rep.degree_product;
        r["warnings"].push_back("randomized general elements over a finite field: results are "
                                "exact only off a small bad locus; all seeds listed agreed");
    } else if (task.name == "hilbert") {
        auto gens = ws.gens_of(task.args[0]);
        for (const auto& g : gens)
            if (!g.is_homogeneous())
                throw precondition_error("hilbert requires homogeneous generators");
        auto num = quotient_numerator(*ws.ring, gens);
        Json coeffs = Json::array();
        for (long long c : num) coeffs.push_back(c);
        r["hilbert_numerator"] = coeffs;
        r["dim"] = dimension_from_numerator(num, ws.ring->nvars());
        r["degree"] = degree_from_numerator(num, ws.ring->nvars());
        r["route"] = "B";
        r["seeds"] = Json::array();
    }
    return r;
}

}  // namespace

Json run_task(ProblemFile file, const RunOverrides& overrides) {
    const auto start = std::chrono::steady_clock::now();

    if (overrides.task_name) file.task.name = *overrides.task_name;
    if (overrides.characteristic) file.characteristic = *overrides.characteristic;
    if (overrides.seed) file.options.seed = *overrides.seed;
    if (overrides.route) file.options.route = *overrides.route;
    if (overrides.oracle) file.options.oracle = *overrides.oracle;

    if (file.task.name.empty())
        throw precondition_error("no task: give a subcommand or a task line in the file");
    int arity = task_arity(file.task.name);
    if (static_cast<int>(file.task.args.size()) != arity)
        throw precondition_error("task '" + file.task.name + "' needs " + std::to_string(arity) +
                                 " ideal label(s), got " +
                                 std::to_string(file.task.args.size()));
    validate_field(FieldSpec{file.characteristic});

    Json r = file.characteristic == 0 ? run_typed<Rational>(file) : run_typed<Fp>(file);

    if (overrides.include_timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        r["timings"] = Json{{"total_ms", ms}};
    }
    return r;
}

std::string emit_report(const Json& report, bool as_json) {
    if (as_json) return report.dump(2) + "\n";

    std::ostringstream out;
    out << "task: " << report.value("task", "") << "\n";
    auto emit_if = [&](const char* key, const char* label) {
        if (report.contains(key)) out << label << ": " << report[key].dump() << "\n";
    };
    emit_if("c", "multiplicity sequence c");
    emit_if("c_I", "sequence of I");
    emit_if("c_J", "sequence of J");
    emit_if("verdict", "verdict");
    emit_if("witness_index", "witness index");
    emit_if("oracle", "reduction oracle");
    emit_if("j", "j-multiplicity");
    emit_if("ht", "height (min nonzero index)");
    emit_if("ell", "analytic spread (max nonzero index)");
    emit_if("analytic_spread", "analytic spread (fiber ring)");
    emit_if("height", "height (dimension count)");
    emit_if("cycle_degrees", "cycle degrees deg v_i");
    emit_if("sum_c", "sum of c_i");
    emit_if("deg_X", "deg X");
    emit_if("deg_Y", "deg Y");
    emit_if("degree_product", "deg X * deg Y");
    emit_if("hilbert_numerator", "Hilbert numerator");
    emit_if("dim", "dimension");
    emit_if("degree", "degree");
    emit_if("route", "route");
    emit_if("seeds", "seeds");
    if (report.contains("crosschecks") && !report["crosschecks"].empty())
        out << "crosschecks: " << report["crosschecks"].dump() << "\n";
    if (report.contains("warnings") && !report["warnings"].empty())
        out << "warnings: " << report["warnings"].dump() << "\n";
    if (report.contains("timings"))
        out << "time: " << report["timings"]["total_ms"].dump() << " ms\n";
    return out.str();
}

}  // namespace multiseq
