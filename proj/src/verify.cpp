#include "tropreal/verify.hpp"

#include "tropreal/hyperbolic.hpp"
#include "tropreal/sampling.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace tropreal {

bool VerifyResult::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.mismatches == 0; });
}

namespace {

// Runs body once per trial; a false return or an exception counts as a mismatch.
VerifyCheck run_check(const std::string& name, int trials, const std::function<std::string(int)>& body) {
    VerifyCheck c{name, trials, 0, ""};
    for (int t = 0; t < trials; ++t) {
        std::string failure;
        try {
            failure = body(t);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (!failure.empty()) {
            if (c.mismatches == 0) c.first_failure = "trial " + std::to_string(t) + ": " + failure;
            ++c.mismatches;
        }
    }
    return c;
}

}  // namespace

VerifyResult run_verify(std::uint32_t seed, int trials) {
    VerifyResult result;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(1, 5);

    result.checks.push_back(run_check("component count: twist matrix vs patchwork", trials, [&](int) -> std::string {
        TropicalCurve c = random_curve(deg(rng), rng);
        SignDistribution delta = random_signs(c, rng);
        RealPhaseStructure phase = phase_from_signs(c, delta);
        TwistSet t = twists_from_signs(c, delta);
        if (!is_admissible(c, t)) return "sign-induced twists not admissible";
        if (!(twists_from_phase(c, phase) == t)) return "sign rule and sidedness rule disagree on twists";
        std::size_t m = count_components_matrix(c, t);
        std::size_t d = count_components_direct(real_part(c, phase)).count;
        if (m != d) return "matrix " + std::to_string(m) + " vs direct " + std::to_string(d);
        return "";
    }));

    result.checks.push_back(run_check("dividing test vs dividing space", trials, [&](int) -> std::string {
        TropicalCurve c = random_curve(deg(rng), rng);
        TwistSet t = twists_from_signs(c, random_signs(c, rng));
        if (is_dividing(c, t) != div_space(c).contains(t.vector())) return "membership mismatch";
        return "";
    }));

    result.checks.push_back(run_check("sign reconstruction round trip", trials, [&](int) -> std::string {
        TropicalCurve c = random_curve(deg(rng), rng);
        SignDistribution delta = random_signs(c, rng);
        SignDistribution back = signs_from_phase(c, phase_from_signs(c, delta));
        if (!(back == delta) && !(back == delta.negated())) return "signs not recovered up to global sign";
        return "";
    }));

    std::uniform_int_distribution<int> hdeg(1, 4);
    result.checks.push_back(run_check("honeycomb locus: geometric vs pointwise vs bridges", std::max(1, trials / 4),
                                      [&](int) -> std::string {
                                          TropicalCurve c = honeycomb(hdeg(rng));
                                          TwistSet t = random_dividing(c, rng);
                                          HyperbolicityReport r = hyperbolicity_locus(c, phase_from_twists(c, t));
                                          if (!r.methods_agree()) return "methods A and B disagree";
                                          if (r.locus_pointwise != honeycomb_locus(c, t)) return "bridge locus differs";
                                          if (r.locus_pointwise.empty() == r.hyperbolic) return "locus emptiness vs criterion";
                                          return "";
                                      }));

    std::uniform_int_distribution<int> bdeg(1, 3);
    result.checks.push_back(run_check("Bezout totals", trials, [&](int) -> std::string {
        int d1 = bdeg(rng), d2 = bdeg(rng);
        TropicalCurve a = random_curve(d1, rng);
        TropicalCurve b0 = random_curve(d2, rng);
        for (int attempt = 0; attempt < 20; ++attempt) {
            TropicalCurve b = b0.translated(random_rational(rng, -3, 3, 97), random_rational(rng, -3, 3, 89));
            try {
                int total = bezout_total(a, b);
                if (total != d1 * d2) return "total " + std::to_string(total) + " != " + std::to_string(d1 * d2);
                return "";
            } catch (const UnsupportedConfiguration&) {
            }
        }
        return "no generic translate found";
    }));
    return result;
}

}  // namespace tropreal
