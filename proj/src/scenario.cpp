#include "tropreal/scenario.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tropreal {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
    throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) bad_field(where + "." + key, "missing");
    return *it;
}

int as_int(const json& v, const std::string& field) {
    if (!v.is_number_integer()) bad_field(field, "expected an integer");
    return v.get<int>();
}

Rational as_rational(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) bad_field(field, "expected a rational string \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
        bad_field(field, e.what());
    }
}

LatticePoint as_point(const std::string& key, const std::string& field) {
    try {
        return parse_lattice_point(key);
    } catch (const ParseError& e) {
        bad_field(field, e.what());
    }
}

Z2Pair as_z2(const json& v, const std::string& field) {
    if (v.is_string()) {
        try {
            return parse_z2pair(v.get<std::string>());
        } catch (const ParseError& e) {
            bad_field(field, e.what());
        }
    }
    if (!v.is_array() || v.size() != 2) bad_field(field, "expected [b,b]");
    int a = as_int(v[0], field + "[0]"), b = as_int(v[1], field + "[1]");
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) bad_field(field, "entries must be 0 or 1");
    return Z2Pair::of(a, b);
}

json z2_json(Z2Pair e) { return json::array({e.first(), e.second()}); }

CurveSpec parse_curve(const json& j, const std::string& where) {
    if (!j.is_object()) bad_field(where, "expected an object");
    CurveSpec c;
    bool has_h = j.contains("honeycomb"), has_c = j.contains("coefficients");
    if (has_h == has_c) throw ValidationError(where + ": give exactly one of 'honeycomb' and 'coefficients'");
    if (has_h) {
        c.honeycomb = as_int(j["honeycomb"], where + ".honeycomb");
        if (*c.honeycomb < 1) throw ValidationError(where + ".honeycomb: degree must be at least 1");
    } else {
        const json& m = j["coefficients"];
        if (!m.is_object()) bad_field(where + ".coefficients", "expected an object keyed by \"(i,j)\"");
        for (const auto& [k, v] : m.items()) {
            std::string f = where + ".coefficients." + k;
            c.coefficients[as_point(k, f)] = as_rational(v, f);
        }
    }
    for (const auto& [k, v] : j.items())
        if (k != "honeycomb" && k != "coefficients") bad_field(where + "." + k, "unknown field");
    return c;
}

RealStructureSpec parse_real(const json& j, const std::string& where) {
    if (!j.is_object()) bad_field(where, "expected an object");
    int present = j.contains("signs") + j.contains("twists") + j.contains("phase");
    if (present != 1) throw ValidationError(where + ": give exactly one of 'signs', 'twists' and 'phase'");
    RealStructureSpec r;
    if (j.contains("signs")) {
        r.kind = RealStructureSpec::Kind::Signs;
        const json& s = j["signs"];
        if (s.is_string()) {
            if (s.get<std::string>() != "all+") bad_field(where + ".signs", "the only shorthand is \"all+\"");
            r.all_plus = true;
        } else if (s.is_object()) {
            for (const auto& [k, v] : s.items()) {
                std::string f = where + ".signs." + k;
                int x = as_int(v, f);
                if (x != 1 && x != -1) throw ValidationError(f + ": sign must be 1 or -1");
                r.signs[as_point(k, f)] = x;
            }
        } else {
            bad_field(where + ".signs", "expected \"all+\" or an object");
        }
    } else if (j.contains("twists")) {
        r.kind = RealStructureSpec::Kind::Twists;
        const json& t = j["twists"];
        if (!t.is_array()) bad_field(where + ".twists", "expected a list of edge ids");
        for (std::size_t k = 0; k < t.size(); ++k) r.twists.push_back(as_int(t[k], where + ".twists[" + std::to_string(k) + "]"));
        if (j.contains("seed")) {
            const json& s = j["seed"];
            if (!s.is_object()) bad_field(where + ".seed", "expected an object");
            r.seed = PhaseSeed{as_int(require(s, "edge", where + ".seed"), where + ".seed.edge"),
                               as_z2(require(s, "eps", where + ".seed"), where + ".seed.eps")};
        }
    } else {
        r.kind = RealStructureSpec::Kind::Phase;
        const json& p = j["phase"];
        if (!p.is_array()) bad_field(where + ".phase", "expected a list of element pairs per edge");
        for (std::size_t k = 0; k < p.size(); ++k) {
            std::string f = where + ".phase[" + std::to_string(k) + "]";
            if (!p[k].is_array() || p[k].size() != 2) bad_field(f, "expected two elements [b,b]");
            r.phase.push_back({as_z2(p[k][0], f + "[0]"), as_z2(p[k][1], f + "[1]")});
        }
    }
    for (const auto& [k, v] : j.items())
        if (k != "signs" && k != "twists" && k != "seed" && k != "phase") bad_field(where + "." + k, "unknown field");
    if (j.contains("seed") && r.kind != RealStructureSpec::Kind::Twists)
        throw ValidationError(where + ".seed: only valid together with 'twists'");
    return r;
}

RealCurveSpec parse_real_curve(const json& j, const std::string& where) {
    if (!j.is_object()) bad_field(where, "expected an object");
    RealCurveSpec s;
    std::string prefix = where.empty() ? "" : where + ".";
    s.curve = parse_curve(require(j, "curve", where), prefix + "curve");
    s.real_structure = parse_real(require(j, "real_structure", where), prefix + "real_structure");
    return s;
}

json curve_json(const CurveSpec& c) {
    if (c.honeycomb) return json{{"honeycomb", *c.honeycomb}};
    json m = json::object();
    for (const auto& [p, a] : c.coefficients) m[to_string(p)] = to_string(a);
    return json{{"coefficients", m}};
}

json real_json(const RealStructureSpec& r) {
    switch (r.kind) {
        case RealStructureSpec::Kind::Signs: {
            if (r.all_plus) return json{{"signs", "all+"}};
            json m = json::object();
            for (const auto& [p, s] : r.signs) m[to_string(p)] = s;
            return json{{"signs", m}};
        }
        case RealStructureSpec::Kind::Twists: {
            json out{{"twists", r.twists}};
            if (r.seed) out["seed"] = json{{"edge", r.seed->edge}, {"eps", z2_json(r.seed->eps)}};
            return out;
        }
        case RealStructureSpec::Kind::Phase: {
            json lines = json::array();
            for (const auto& pair : r.phase) lines.push_back(json::array({z2_json(pair[0]), z2_json(pair[1])}));
            return json{{"phase", lines}};
        }
    }
    return json::object();
}

json real_curve_json(const RealCurveSpec& s) {
    return json{{"curve", curve_json(s.curve)}, {"real_structure", real_json(s.real_structure)}};
}

}  // namespace

ScenarioSpec load_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) bad_field("<root>", "expected an object");
    ScenarioSpec spec;
    spec.primary = parse_real_curve(j, "");
    if (j.contains("second")) spec.second = parse_real_curve(j["second"], "second");
    if (j.contains("query")) {
        const json& q = j["query"];
        if (!q.is_object()) bad_field("query", "expected an object");
        const json& p = require(q, "point", "query");
        if (!p.is_string()) bad_field("query.point", "expected \"(i,j)\"");
        spec.query = QuerySpec{as_point(p.get<std::string>(), "query.point"), as_z2(require(q, "epsilon", "query"), "query.epsilon")};
    }
    for (const auto& [k, v] : j.items())
        if (k != "curve" && k != "real_structure" && k != "second" && k != "query") bad_field(k, "unknown field");
    return spec;
}

std::string save_spec(const ScenarioSpec& spec) {
    json j = real_curve_json(spec.primary);
    if (spec.second) j["second"] = real_curve_json(*spec.second);
    if (spec.query) j["query"] = json{{"point", to_string(spec.query->point)}, {"epsilon", z2_json(spec.query->eps)}};
    return j.dump(2) + "\n";
}

ScenarioSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return load_spec(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

TropicalCurve build_curve(const CurveSpec& spec) {
    if (spec.honeycomb) return honeycomb(*spec.honeycomb);
    return curve_from_polynomial(TropicalPolynomial{spec.coefficients});
}

RealCurve realize(const RealCurveSpec& spec) {
    TropicalCurve curve = build_curve(spec.curve);
    const auto& r = spec.real_structure;
    switch (r.kind) {
        case RealStructureSpec::Kind::Signs: {
            SignDistribution delta = SignDistribution::constant(curve);
            if (!r.all_plus) {
                for (const auto& [p, s] : r.signs)
                    if (!curve.dual().contains(p))
                        throw ValidationError("sign given at " + to_string(p) + ", outside the Newton polygon");
                for (const auto& p : curve.dual().points) {
                    auto it = r.signs.find(p);
                    if (it == r.signs.end()) throw ValidationError("sign map misses lattice point " + to_string(p));
                    delta.signs[p] = it->second;
                }
            }
            RealPhaseStructure phase = phase_from_signs(curve, delta);
            return RealCurve{std::move(curve), std::move(phase)};
        }
        case RealStructureSpec::Kind::Twists: {
            TwistSet t = TwistSet::from_edges(curve, r.twists);
            if (!is_admissible(curve, t)) throw ValidationError("twist set is not admissible");
            RealPhaseStructure phase = phase_from_twists(curve, t, r.seed);
            return RealCurve{std::move(curve), std::move(phase)};
        }
        case RealStructureSpec::Kind::Phase: {
            if (r.phase.size() != curve.edges().size())
                throw ValidationError("phase lists " + std::to_string(r.phase.size()) + " edges, the curve has " +
                                      std::to_string(curve.edges().size()));
            RealPhaseStructure phase;
            for (std::size_t k = 0; k < r.phase.size(); ++k) {
                if (r.phase[k][0] == r.phase[k][1])
                    throw ValidationError("phase of edge " + std::to_string(k) + " repeats an element");
                phase.lines.emplace_back(r.phase[k][0], r.phase[k][0] + r.phase[k][1]);
            }
            validate_phase(curve, phase);
            return RealCurve{std::move(curve), std::move(phase)};
        }
    }
    throw InternalError("unknown real structure kind");
}

}  // namespace tropreal
