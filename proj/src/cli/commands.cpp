#include "basesize/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "basesize/basecount.hpp"
#include "basesize/characters.hpp"
#include "basesize/errors.hpp"
#include "basesize/oracle/group_spec.hpp"
#include "basesize/oracle/search.hpp"

namespace basesize::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dec(const BigInt& x) { return to_decimal(x); }
std::string dec(unsigned long x) { return std::to_string(x); }

Json orbit_row(const OrbitReport& r, bool with_kernel = true) {
    Json row;
    row["l"] = dec(r.l);
    row["regular"] = dec(r.regular);
    row["o"] = dec(r.o);
    if (with_kernel) row["o_K"] = dec(r.o_K);
    row["method"] = to_string(r.method);
    return row;
}

Json trace_rows(const std::vector<OrbitReport>& trace) {
    Json rows = Json::array();
    for (const auto& r : trace) rows.push_back(orbit_row(r));
    return rows;
}

/// Result document under construction.
struct Document {
    Json inputs = Json::object();
    Json outputs = Json::object();
    Json methods = Json::object();
    Json warnings = Json::array();
};

struct Options {
    unsigned n = 0, k = 0, l = 0, m = 0, r = 0, s = 0;
    std::optional<unsigned long> max_l;
    std::optional<std::string> dist;
    std::optional<std::string> cache_dir;
    std::string group;
    std::string labels = "default";
    std::uint64_t seed = 1;
    bool trace = false;
    bool oracle = false;
};

SearchOptions search_options(const Options& o) {
    SearchOptions s;
    s.max_l = o.max_l;
    return s;
}

void cmd_basesize_subsets(const Options& o, Document& doc) {
    doc.inputs["n"] = dec(o.n);
    doc.inputs["k"] = dec(o.k);
    const auto report = base_size_subsets(o.n, o.k, search_options(o));
    doc.outputs["action"] = report.action;
    doc.outputs["domain_size"] = dec(report.domain_size);
    doc.outputs["base_size"] = dec(*report.base_size);
    if (o.trace) doc.outputs["trace"] = trace_rows(report.trace);
    doc.methods["base_size"] = "formula";
}

void cmd_orbits(const Options& o, Document& doc) {
    doc.inputs["n"] = dec(o.n);
    doc.inputs["k"] = dec(o.k);
    doc.inputs["l"] = dec(o.l);
    check_subsets_params(o.n, o.k);
    const auto classes = class_table(o.n);
    const auto chi = subsets_character(classes, o.k);
    const auto regular = inner_product(classes, sign_vector(o.n), chi, o.l);
    const auto counts = orbit_counts(classes, chi, o.l);
    doc.outputs["regular"] = dec(regular);
    doc.outputs["o"] = dec(counts.o);
    doc.outputs["o_K"] = dec(counts.o_K);
    doc.methods["regular"] = "formula";
    if (counts.o_K - counts.o != regular) {
        throw ConsistencyError("o_K(l) - o(l) differs from <sgn, chi^l>");
    }
    if (o.oracle) {
        auto group = std::make_shared<oracle::LabeledGroup>(oracle::symmetric_group(o.n));
        const auto action = oracle::act_on_subsets(group, o.k);
        const auto brute = oracle::orbit_counts_bruteforce(action, o.l);
        doc.outputs["oracle"] = orbit_row(brute);
        const bool agree = brute.regular == regular && brute.o == counts.o && brute.o_K == counts.o_K;
        doc.outputs["agree"] = agree;
        if (!agree) throw ConsistencyError("formula and oracle orbit counts differ");
    }
}

void cmd_wreath(const Options& o, Document& doc) {
    doc.inputs["n"] = dec(o.n);
    doc.inputs["k"] = dec(o.k);
    BigInt distinguishing;
    if (o.dist) {
        distinguishing = from_decimal(*o.dist);
        doc.inputs["dist"] = dec(distinguishing);
    } else {
        if (o.r < 1) throw InputError("wreath needs --r >= 1 or --dist");
        distinguishing = o.r;  // D(S_r) = r
        doc.inputs["r"] = dec(o.r);
    }
    const auto report = base_size_wreath_subsets(o.n, o.k, distinguishing, search_options(o));
    doc.outputs["inner_action"] = report.inner_action;
    doc.outputs["distinguishing_number"] = dec(report.distinguishing_number);
    doc.outputs["base_size"] = dec(report.base_size);
    doc.outputs["trace"] = trace_rows(report.trace);
    doc.methods["base_size"] = "formula";
    if (o.oracle) {
        if (o.dist) throw InputError("--oracle needs --r (top group S_r)");
        auto group = std::make_shared<oracle::LabeledGroup>(oracle::symmetric_group(o.n));
        const auto inner = o.k == 1 ? oracle::natural_action(group) : oracle::act_on_subsets(group, o.k);
        const auto wreath = oracle::product_action_wreath(inner, o.r);
        const auto brute = oracle::base_size_bruteforce(wreath);
        doc.outputs["oracle_base_size"] = dec(brute);
        doc.outputs["agree"] = brute == report.base_size;
        doc.methods["oracle_base_size"] = "oracle";
        if (brute != report.base_size) throw ConsistencyError("wreath formula and oracle base sizes differ");
    }
}

void cmd_bounds(const Options& o, Document& doc) {
    doc.inputs["m"] = dec(o.m);
    doc.inputs["k"] = dec(o.k);
    doc.inputs["r"] = dec(o.r);
    const auto report = large_base_bounds(o.m, o.k, o.r, search_options(o));
    doc.outputs["lower"] = dec(report.lower);
    doc.outputs["upper"] = dec(report.upper);
    doc.outputs["lower_trace"] = trace_rows(report.lower_trace);
    doc.outputs["upper_trace"] = trace_rows(report.upper_trace);
    doc.methods["lower"] = "formula";
    doc.methods["upper"] = "formula";
}

void cmd_partitions_action(const Options& o, Document& doc) {
    doc.inputs["n"] = dec(o.n);
    doc.inputs["r"] = dec(o.r);
    doc.inputs["s"] = dec(o.s);
    if (o.r < 1 || o.s < 1 || o.n != o.r * o.s) throw InputError("need n = r*s");
    const auto parts = o.cache_dir ? UniformPartitions::load_or_build(o.r, o.s, *o.cache_dir)
                                   : UniformPartitions::enumerate(o.r, o.s);
    const auto classes = class_table(o.n);
    const auto chi = uniform_partitions_character(classes, parts);
    const auto report = base_size_partitions_action(classes, chi, search_options(o));

    Json character = Json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        character.push_back({{"class", classes.classes[i].cycle_type.to_string()},
                             {"size", dec(classes.classes[i].size)},
                             {"sign", classes.classes[i].sign},
                             {"chi", dec(chi.values[i])}});
    }
    doc.outputs["action"] = report.action;
    doc.outputs["domain_size"] = dec(report.domain_size);
    doc.outputs["character"] = std::move(character);
    doc.outputs["inner_products"] = trace_rows(report.trace);
    doc.outputs["min_l"] = report.base_size ? Json(dec(*report.base_size)) : Json(nullptr);
    doc.outputs["candidate_only"] = report.candidate_only;
    doc.outputs["reference_base_size"] =
        report.reference_base_size ? Json(dec(*report.reference_base_size)) : Json(nullptr);
    doc.methods["min_l"] = "formula";
    for (const auto& w : report.warnings) doc.warnings.push_back(w);
}

// Formula counterpart of a verified spec, when one exists.
struct FormulaView {
    enum class Kind { none, subsets, partitions, wreath } kind = Kind::none;
    unsigned n = 0, k = 1, r = 0, s = 0;
};

FormulaView formula_view(const oracle::GroupSpec& spec) {
    using Kind = oracle::GroupSpec::Suffix::Kind;
    FormulaView view;
    if (spec.base != oracle::GroupSpec::Base::symmetric) return view;
    view.n = spec.param;
    const auto& sfx = spec.suffixes;
    auto valid_subsets = [&](unsigned k) {
        return (k == 1 && view.n >= 2) || (k >= 2 && view.n > 2 * k);
    };
    if (sfx.empty() && valid_subsets(1)) {
        view.kind = FormulaView::Kind::subsets;
    } else if (sfx.size() == 1 && sfx[0].kind == Kind::subsets && valid_subsets(sfx[0].a)) {
        view.kind = FormulaView::Kind::subsets;
        view.k = sfx[0].a;
    } else if (sfx.size() == 1 && sfx[0].kind == Kind::partitions) {
        view.kind = FormulaView::Kind::partitions;
        view.r = sfx[0].a;
        view.s = sfx[0].b;
    } else if (sfx.size() == 1 && sfx[0].kind == Kind::wreath && valid_subsets(1)) {
        view.kind = FormulaView::Kind::wreath;
        view.r = sfx[0].a;
    } else if (sfx.size() == 2 && sfx[0].kind == Kind::subsets && sfx[1].kind == Kind::wreath &&
               valid_subsets(sfx[0].a)) {
        view.kind = FormulaView::Kind::wreath;
        view.k = sfx[0].a;
        view.r = sfx[1].a;
    }
    return view;
}

void cmd_verify(const Options& o, Document& doc) {
    doc.inputs["group"] = o.group;
    doc.inputs["labels"] = o.labels;
    const auto spec = oracle::parse_group_spec(o.group);
    const auto mode = oracle::parse_label_mode(o.labels);
    const auto action = oracle::build_action(spec, mode);

    doc.outputs["action"] = action.description;
    doc.outputs["degree"] = dec(action.degree);
    doc.outputs["order"] = dec(action.order());

    if (action.has_labels()) {
        doc.inputs["seed"] = dec(o.seed);
        doc.outputs["kernel_order"] = dec(action.group->kernel_order());
        doc.outputs["labels_homomorphic"] = oracle::spot_check_labels(*action.group, 200, o.seed);
    }

    bool controlling = false;
    if (!action.has_labels()) {
        doc.outputs["base_controlling"] = nullptr;
        doc.warnings.push_back("action carries no labels; base-controlling check skipped");
    } else if (action.group->kernel_order() == action.order()) {
        doc.outputs["base_controlling"] = nullptr;
        doc.warnings.push_back("labels are all +1; base-controlling check is degenerate and skipped");
    } else if (action.degree > default_limits().max_controlling_degree) {
        doc.outputs["base_controlling"] = nullptr;
        doc.warnings.push_back("degree above the base-controlling search cap; check skipped");
    } else {
        const auto verdict = oracle::is_base_controlling(action);
        controlling = verdict.controlling;
        doc.outputs["base_controlling"] = verdict.controlling;
        if (!verdict.controlling) {
            Json points = Json::array();
            for (auto p : verdict.counterexample) points.push_back(dec(p + 1));
            doc.outputs["counterexample"] = {{"points", points},
                                             {"stabilizer_order", dec(verdict.stabilizer_order)},
                                             {"labels", verdict.label_image}};
        }
        doc.methods["base_controlling"] = "oracle";
    }

    const unsigned base = oracle::base_size_bruteforce(action);
    doc.outputs["base_size"] = dec(base);
    doc.methods["base_size"] = "oracle";

    const unsigned l_max = o.max_l ? static_cast<unsigned>(*o.max_l) : std::max(base, 1u);
    std::vector<OrbitReport> brute;
    Json rows = Json::array();
    for (unsigned l = 1; l <= l_max; ++l) {
        brute.push_back(oracle::orbit_counts_bruteforce(action, l));
        rows.push_back(orbit_row(brute.back(), action.has_labels()));
    }
    doc.outputs["orbits"] = std::move(rows);

    const auto view = formula_view(spec);
    const bool sign_labels = mode != oracle::LabelMode::automatic || spec.base == oracle::GroupSpec::Base::symmetric;
    if (view.kind == FormulaView::Kind::none || !sign_labels) return;

    Json formula;
    if (view.kind == FormulaView::Kind::subsets) {
        const auto classes = class_table(view.n);
        const auto chi = subsets_character(classes, view.k);
        PowerSweep sweep(classes, chi);
        Json frows = Json::array();
        std::optional<unsigned> min_l;
        for (unsigned l = 1; l <= std::max(l_max, base); ++l) {
            const auto step = sweep.next();
            if (!min_l && step.regular > 0) min_l = l;
            if (l > l_max) continue;
            frows.push_back(orbit_row(step));
            const auto& b = brute[l - 1];
            if (step.o != b.o || step.o_K != b.o_K || step.regular != b.regular) {
                throw ConsistencyError("formula and oracle orbit counts differ at l = " + std::to_string(l));
            }
        }
        formula["base_size"] = dec(*min_l);
        formula["orbits"] = std::move(frows);
        formula["agree"] = *min_l == base;
        if (*min_l != base) throw ConsistencyError("formula and oracle base sizes differ");
    } else if (view.kind == FormulaView::Kind::partitions) {
        const auto report = base_size_partitions_action(view.n, view.r, view.s);
        formula["min_l"] = report.base_size ? Json(dec(*report.base_size)) : Json(nullptr);
        formula["orbits"] = trace_rows(report.trace);
        const bool agree = report.base_size && *report.base_size == base;
        formula["agree"] = agree;
        if (controlling && !agree) throw ConsistencyError("formula and oracle disagree on a controlled action");
        if (!agree) doc.warnings.push_back("formula min-l differs from the oracle base size");
    } else {
        const auto report = base_size_wreath_subsets(view.n, view.k, view.r);
        formula["base_size"] = dec(report.base_size);
        formula["distinguishing_number"] = dec(report.distinguishing_number);
        formula["agree"] = report.base_size == base;
        if (report.base_size != base) throw ConsistencyError("wreath formula and oracle base sizes differ");
    }
    doc.outputs["formula"] = std::move(formula);
    doc.methods["formula"] = "formula";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Base sizes and regular-orbit counts of permutation groups"};
    app.require_subcommand(1);
    Options o;

    auto* bs = app.add_subcommand("basesize-subsets", "base size of S_n on k-subsets");
    bs->add_option("--n", o.n)->required();
    bs->add_option("--k", o.k)->required();
    bs->add_option("--max-l", o.max_l, "largest l tried");
    bs->add_flag("--trace", o.trace, "include per-l regular-orbit counts");

    auto* orb = app.add_subcommand("orbits", "regular, G- and A_n-orbit counts on Omega^l");
    orb->add_option("--n", o.n)->required();
    orb->add_option("--k", o.k)->required();
    orb->add_option("--l", o.l)->required();
    orb->add_flag("--oracle", o.oracle, "cross-check by brute force");

    auto* wr = app.add_subcommand("wreath", "base size of S_{n,k} wr P in product action");
    wr->add_option("--n", o.n)->required();
    wr->add_option("--k", o.k)->required();
    auto* r_opt = wr->add_option("--r", o.r, "top group S_r");
    auto* d_opt = wr->add_option("--dist", o.dist, "distinguishing number D(P)");
    r_opt->excludes(d_opt);
    wr->add_option("--max-l", o.max_l);
    wr->add_flag("--oracle", o.oracle, "cross-check by brute force");

    auto* bd = app.add_subcommand("bounds", "base size bounds for large base groups");
    bd->add_option("--m", o.m)->required();
    bd->add_option("--k", o.k)->required();
    bd->add_option("--r", o.r)->required();
    bd->add_option("--max-l", o.max_l);

    auto* pa = app.add_subcommand("partitions-action", "S_n on partitions into r blocks of size s");
    pa->add_option("--n", o.n)->required();
    pa->add_option("--r", o.r)->required();
    pa->add_option("--s", o.s)->required();
    pa->add_option("--l-max", o.max_l, "largest l tried");
    pa->add_option("--cache-dir", o.cache_dir, "directory for memoized partition lists");

    auto* vf = app.add_subcommand("verify", "brute-force checks for an explicit group");
    vf->add_option("--group", o.group, "group spec, e.g. sn:6/subsets:2 or pgl2:7")->required();
    vf->add_option("--labels", o.labels, "sgn | auto")->check(CLI::IsMember({"default", "sgn", "auto"}));
    vf->add_option("--l-max", o.max_l, "largest l for orbit counts");
    vf->add_option("--seed", o.seed, "seed for label spot-checks");

    const std::vector<std::pair<CLI::App*, std::function<void(const Options&, Document&)>>> commands = {
        {bs, cmd_basesize_subsets}, {orb, cmd_orbits},           {wr, cmd_wreath},
        {bd, cmd_bounds},           {pa, cmd_partitions_action}, {vf, cmd_verify},
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    for (const auto& [sub, handler] : commands) {
        if (!sub->parsed()) continue;
        Document doc;
        const auto start = std::chrono::steady_clock::now();
        try {
            handler(o, doc);
        } catch (const InputError& e) {
            err << "invalid input: " << e.what() << "\n";
            return invalid_input;
        } catch (const CapacityError& e) {
            err << "capacity exceeded: " << e.what() << "\n";
            return capacity_exceeded;
        } catch (const ConsistencyError& e) {
            err << "internal consistency failure: " << e.what() << "\n";
            return internal_failure;
        } catch (const std::exception& e) {
            err << "internal failure: " << e.what() << "\n";
            return internal_failure;
        }
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

        Json result;
        result["command"] = sub->get_name();
        result["argv"] = args;
        result["inputs"] = std::move(doc.inputs);
        result["outputs"] = std::move(doc.outputs);
        result["methods"] = std::move(doc.methods);
        result["warnings"] = std::move(doc.warnings);
        result["timing_ms"] = elapsed.count();
        out << result.dump(2) << "\n";
        return ok;
    }
    return invalid_input;
}

}  // namespace basesize::cli
