#include "tropreal/hyperbolic.hpp"
#include "tropreal/render.hpp"
#include "tropreal/report.hpp"
#include "tropreal/scenario.hpp"
#include "tropreal/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace tropreal;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string spec, a, b, out, point, eps, format = "text";
    std::uint32_t seed = 1;
    int trials = 50;
};

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + o.out);
    f << text;
}

void emit(const Options& o, const json& report) {
    write_output(o, o.format == "json" ? report.dump(2) + "\n" : to_text(report));
}

RealCurve primary(const Options& o) {
    if (o.spec.empty()) throw ValidationError("--spec is required");
    return realize(load_spec_file(o.spec).primary);
}

int cmd_build(const Options& o) {
    if (o.spec.empty()) throw ValidationError("--spec is required");
    emit(o, build_report(build_curve(load_spec_file(o.spec).primary.curve)));
    return 0;
}

int cmd_analyze(const Options& o) {
    RealCurve rc = primary(o);
    emit(o, analyze_report(rc.curve, rc.phase));
    return 0;
}

int cmd_intersect(const Options& o) {
    RealCurve first, second;
    if (!o.a.empty() || !o.b.empty()) {
        if (o.a.empty() || o.b.empty()) throw ValidationError("--a and --b must be given together");
        first = realize(load_spec_file(o.a).primary);
        second = realize(load_spec_file(o.b).primary);
    } else {
        if (o.spec.empty()) throw ValidationError("give --a/--b or a --spec with a 'second' curve");
        ScenarioSpec s = load_spec_file(o.spec);
        if (!s.second) throw ValidationError(o.spec + ": no 'second' curve to intersect with");
        first = realize(s.primary);
        second = realize(*s.second);
    }
    emit(o, intersect_report(first.curve, first.phase, second.curve, second.phase));
    return 0;
}

int cmd_hyperbolic(const Options& o) {
    if (o.spec.empty()) throw ValidationError("--spec is required");
    ScenarioSpec s = load_spec_file(o.spec);
    RealCurve rc = realize(s.primary);
    std::optional<QuerySpec> query = s.query;
    if (!o.point.empty()) query = QuerySpec{parse_lattice_point(o.point), o.eps.empty() ? Z2Pair{} : parse_z2pair(o.eps)};
    else if (!o.eps.empty()) throw ValidationError("--eps needs --point");
    if (query) {
        if (!rc.curve.dual().contains(query->point))
            throw ValidationError("point " + to_string(query->point) + " is outside the Newton polygon");
        emit(o, point_report(query->point, query->eps, hyperbolic_wrt_point(rc.curve, rc.phase, query->point, query->eps)));
        return 0;
    }
    emit(o, hyperbolic_report(hyperbolicity_locus(rc.curve, rc.phase)));
    return 0;
}

int cmd_render(const Options& o) {
    RealCurve rc = primary(o);
    RenderOptions opts;
    if (rc.curve.degree()) opts.locus = hyperbolicity_locus(rc.curve, rc.phase).locus_pointwise;
    write_output(o, render_svg(rc.curve, &rc.phase, opts));
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyResult r = run_verify(o.seed, o.trials);
    json checks = json::array();
    for (const auto& c : r.checks) {
        json row{{"name", c.name}, {"trials", c.trials}, {"mismatches", c.mismatches}};
        if (!c.first_failure.empty()) row["first_failure"] = c.first_failure;
        checks.push_back(row);
    }
    emit(o, json{{"seed", o.seed}, {"checks", checks}, {"ok", r.ok()}});
    return r.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real tropical plane curves: patchworking, twists, intersections, hyperbolicity"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", o.out, "Write output to a file instead of stdout");
    };
    auto* build = app.add_subcommand("build", "Print curve combinatorics");
    build->add_option("--spec", o.spec, "Scenario file (.trop.json)")->required();
    common(build);
    auto* analyze = app.add_subcommand("analyze", "Twists, admissibility, dividing, component counts");
    analyze->add_option("--spec", o.spec, "Scenario file")->required();
    common(analyze);
    auto* intersect = app.add_subcommand("intersect", "Classify intersection components and real lifts");
    intersect->add_option("--a", o.a, "First scenario file");
    intersect->add_option("--b", o.b, "Second scenario file");
    intersect->add_option("--spec", o.spec, "Scenario file with a 'second' curve");
    common(intersect);
    auto* hyper = app.add_subcommand("hyperbolic", "Hyperbolicity report, or a single point verdict");
    hyper->add_option("--spec", o.spec, "Scenario file")->required();
    hyper->add_option("--point", o.point, "Complement component as \"(i,j)\"");
    hyper->add_option("--eps", o.eps, "Quadrant as b,b");
    common(hyper);
    auto* render = app.add_subcommand("render", "Emit an SVG figure");
    render->add_option("--spec", o.spec, "Scenario file")->required();
    common(render);
    auto* verify = app.add_subcommand("verify", "Run the randomized oracle cross-checks");
    verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--trials", o.trials, "Trials per check")->check(CLI::PositiveNumber);
    common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*build) return cmd_build(o);
        if (*analyze) return cmd_analyze(o);
        if (*intersect) return cmd_intersect(o);
        if (*hyper) return cmd_hyperbolic(o);
        if (*render) return cmd_render(o);
        if (*verify) return cmd_verify(o);
    } catch (const UnsupportedConfiguration& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitValidation;
}
