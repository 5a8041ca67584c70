#include <cmath>
#include <numbers>

#include "catalog_detail.hpp"
#include "bmrbwr/bounds.hpp"

namespace bmrbwr::detail {

namespace {

constexpr double pi = std::numbers::pi;

catalog_family engineering(std::string name, std::vector<double> lower,
                           std::vector<double> upper, std::optional<double> best,
                           std::string note,
                           std::function<double(const std::vector<double>&)> f,
                           std::vector<constraint_fn> inequalities,
                           std::optional<std::vector<double>> witness) {
    catalog_family row;
    row.name = name;
    row.default_dimension = lower.size();
    row.min_dimension = lower.size();
    row.build = [name, lower, upper, best, note, f, inequalities](std::size_t) {
        problem_spec p;
        p.name = name;
        p.dimension = lower.size();
        p.box = {lower, upper};
        p.known_best = best;
        p.source_note = note;
        p.objective = f;
        p.constraints.inequalities = inequalities;
        return p;
    };
    if (witness)
        row.witness = [w = *witness](std::size_t) { return std::optional(w); };
    return row;
}

double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

}  // namespace

void register_engineering(std::vector<catalog_family>& families) {
    // Welded beam: weld thickness, weld length, bar height, bar thickness.
    families.push_back(engineering(
        "welded-beam", {0.1, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0},
        1.72485256253, "Coello (2000) welded beam design",
        [](const std::vector<double>& x) {
            return 1.10471 * sq(x[0]) * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
        },
        {
            [](const std::vector<double>& x) {  // shear stress in the weld
                const double P = 6000.0, L = 14.0;
                const double tp = P / (std::sqrt(2.0) * x[0] * x[1]);
                const double M = P * (L + x[1] / 2.0);
                const double R = std::sqrt(sq(x[1]) / 4.0 + sq((x[0] + x[2]) / 2.0));
                const double J = 2.0 * (std::sqrt(2.0) * x[0] * x[1] *
                                        (sq(x[1]) / 12.0 + sq((x[0] + x[2]) / 2.0)));
                const double tpp = M * R / J;
                return std::sqrt(sq(tp) + 2.0 * tp * tpp * x[1] / (2.0 * R) + sq(tpp)) -
                       13600.0;
            },
            [](const std::vector<double>& x) {  // bending stress in the bar
                return 6.0 * 6000.0 * 14.0 / (x[3] * sq(x[2])) - 30000.0;
            },
            [](const std::vector<double>& x) { return x[0] - x[3]; },
            [](const std::vector<double>& x) {  // material cost cap
                return 0.10471 * sq(x[0]) + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0;
            },
            [](const std::vector<double>& x) { return 0.125 - x[0]; },
            [](const std::vector<double>& x) {  // end deflection
                return 4.0 * 6000.0 * cube(14.0) / (30e6 * cube(x[2]) * x[3]) - 0.25;
            },
            [](const std::vector<double>& x) {  // buckling load
                const double E = 30e6, G = 12e6, L = 14.0;
                const double Pc = (4.013 * E * std::sqrt(sq(x[2]) * std::pow(x[3], 6.0) / 36.0) /
                                   sq(L)) *
                                  (1.0 - x[2] / (2.0 * L) * std::sqrt(E / (4.0 * G)));
                return 6000.0 - Pc;
            },
        },
        std::vector<double>{0.20572969478748557, 3.470488059203132, 9.03662249960727,
                            0.20572970478743963}));

    // Three-bar truss: cross-section areas of the outer and middle bars.
    families.push_back(engineering(
        "three-bar-truss", {0.0, 0.0}, {1.0, 1.0}, 263.895844692,
        "Nowacki (1973) three-bar truss, load 2, stress limit 2, span 100",
        [](const std::vector<double>& x) {
            return (2.0 * std::sqrt(2.0) * x[0] + x[1]) * 100.0;
        },
        {
            [](const std::vector<double>& x) {
                const double d = std::sqrt(2.0) * sq(x[0]) + 2.0 * x[0] * x[1];
                return (std::sqrt(2.0) * x[0] + x[1]) / d * 2.0 - 2.0;
            },
            [](const std::vector<double>& x) {
                const double d = std::sqrt(2.0) * sq(x[0]) + 2.0 * x[0] * x[1];
                return x[1] / d * 2.0 - 2.0;
            },
            [](const std::vector<double>& x) {
                return 2.0 / (std::sqrt(2.0) * x[1] + x[0]) - 2.0;
            },
        },
        std::vector<double>{0.7886751291437809, 0.40824831903466047}));

    // Cantilever beam of five square hollow sections.
    families.push_back(engineering(
        "cantilever-beam", std::vector<double>(5, 0.01), std::vector<double>(5, 100.0),
        1.33995636507, "Fleury & Braibant (1986) stepped cantilever",
        [](const std::vector<double>& x) {
            return 0.0624 * (x[0] + x[1] + x[2] + x[3] + x[4]);
        },
        {
            [](const std::vector<double>& x) {
                return 61.0 / cube(x[0]) + 37.0 / cube(x[1]) + 19.0 / cube(x[2]) +
                       7.0 / cube(x[3]) + 1.0 / cube(x[4]) - 1.0;
            },
        },
        std::vector<double>{6.0160159142787855, 5.309173883182048, 4.494329588625255,
                            3.501474972635688, 2.1526653378422558}));

    // Gear train ratio error; tooth counts relaxed to continuous values.
    families.push_back(engineering(
        "gear-train", std::vector<double>(4, 12.0), std::vector<double>(4, 60.0),
        2.7008571488865134e-12, "Sandgren (1990) gear train, continuous relaxation",
        [](const std::vector<double>& x) {
            return sq(1.0 / 6.931 - x[0] * x[1] / (x[2] * x[3]));
        },
        {}, std::vector<double>{16.0, 19.0, 43.0, 49.0}));

    // Helical spring: wire diameter, coil diameter, number of active coils.
    families.push_back(engineering(
        "tension-compression-spring", {0.05, 0.25, 2.0}, {2.0, 1.3, 15.0},
        0.0126652331398, "Belegundu (1982) / Arora (1989) spring design",
        [](const std::vector<double>& x) { return (x[2] + 2.0) * x[1] * sq(x[0]); },
        {
            [](const std::vector<double>& x) {
                return 1.0 - cube(x[1]) * x[2] / (71785.0 * sq(sq(x[0])));
            },
            [](const std::vector<double>& x) {
                return (4.0 * sq(x[1]) - x[0] * x[1]) /
                           (12566.0 * (x[1] * cube(x[0]) - sq(sq(x[0])))) +
                       1.0 / (5108.0 * sq(x[0])) - 1.0;
            },
            [](const std::vector<double>& x) {
                return 1.0 - 140.45 * x[0] / (sq(x[1]) * x[2]);
            },
            [](const std::vector<double>& x) { return (x[0] + x[1]) / 1.5 - 1.0; },
        },
        std::vector<double>{0.05168905972364362, 0.3567177026673863, 11.288968202497378}));

    // Pressure vessel: shell/head thickness, radius, cylinder length. The
    // known_best and witness keep the classic half-inch-multiple thicknesses;
    // the continuous relaxation admits lower objectives.
    families.push_back(engineering(
        "pressure-vessel", {0.0625, 0.0625, 10.0, 10.0}, {6.1875, 6.1875, 200.0, 200.0},
        6059.71444759, "Sandgren (1990) pressure vessel, thickness steps relaxed",
        [](const std::vector<double>& x) {
            return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * sq(x[2]) +
                   3.1661 * sq(x[0]) * x[3] + 19.84 * sq(x[0]) * x[2];
        },
        {
            [](const std::vector<double>& x) { return -x[0] + 0.0193 * x[2]; },
            [](const std::vector<double>& x) { return -x[1] + 0.00954 * x[2]; },
            [](const std::vector<double>& x) {
                return -pi * sq(x[2]) * x[3] - 4.0 / 3.0 * pi * cube(x[2]) + 1296000.0;
            },
            [](const std::vector<double>& x) { return x[3] - 240.0; },
        },
        std::vector<double>{0.8125, 0.4375, 42.0984449686452, 176.6366051609126}));

    // Golinski speed reducer: gear face width, tooth module, pinion teeth,
    // two shaft lengths, two shaft diameters.
    families.push_back(engineering(
        "speed-reducer", {2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0},
        {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5}, 2994.4712169,
        "Golinski (1973) speed reducer",
        [](const std::vector<double>& x) {
            return 0.7854 * x[0] * sq(x[1]) *
                       (3.3333 * sq(x[2]) + 14.9334 * x[2] - 43.0934) -
                   1.508 * x[0] * (sq(x[5]) + sq(x[6])) + 7.4777 * (cube(x[5]) + cube(x[6])) +
                   0.7854 * (x[3] * sq(x[5]) + x[4] * sq(x[6]));
        },
        {
            [](const std::vector<double>& x) { return 27.0 / (x[0] * sq(x[1]) * x[2]) - 1.0; },
            [](const std::vector<double>& x) {
                return 397.5 / (x[0] * sq(x[1]) * sq(x[2])) - 1.0;
            },
            [](const std::vector<double>& x) {
                return 1.93 * cube(x[3]) / (x[1] * x[2] * sq(sq(x[5]))) - 1.0;
            },
            [](const std::vector<double>& x) {
                return 1.93 * cube(x[4]) / (x[1] * x[2] * sq(sq(x[6]))) - 1.0;
            },
            [](const std::vector<double>& x) {
                return std::sqrt(sq(745.0 * x[3] / (x[1] * x[2])) + 16.9e6) /
                           (110.0 * cube(x[5])) -
                       1.0;
            },
            [](const std::vector<double>& x) {
                return std::sqrt(sq(745.0 * x[4] / (x[1] * x[2])) + 157.5e6) /
                           (85.0 * cube(x[6])) -
                       1.0;
            },
            [](const std::vector<double>& x) { return x[1] * x[2] / 40.0 - 1.0; },
            [](const std::vector<double>& x) { return 5.0 * x[1] / x[0] - 1.0; },
            [](const std::vector<double>& x) { return x[0] / (12.0 * x[1]) - 1.0; },
            [](const std::vector<double>& x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
            [](const std::vector<double>& x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
        },
        std::vector<double>{3.5000001, 0.7, 17.0, 7.3, 7.715320100000003, 3.350215,
                            5.286654500000002}));

    // I-beam: flange width, section height, web and flange thicknesses;
    // minimize midspan deflection under area and stress limits.
    families.push_back(engineering(
        "i-beam-deflection", {10.0, 10.0, 0.9, 0.9}, {50.0, 80.0, 5.0, 5.0},
        0.0130741189089, "Gold & Krishnamurty (1997) I-beam vertical deflection",
        [](const std::vector<double>& x) {
            const double b = x[0], h = x[1], tw = x[2], tf = x[3];
            const double inertia = tw * cube(h - 2.0 * tf) / 12.0 + b * cube(tf) / 6.0 +
                                   2.0 * b * tf * sq((h - tf) / 2.0);
            return 5000.0 / inertia;
        },
        {
            [](const std::vector<double>& x) {
                return 2.0 * x[0] * x[3] + x[2] * (x[1] - 2.0 * x[3]) - 300.0;
            },
            [](const std::vector<double>& x) {
                const double b = x[0], h = x[1], tw = x[2], tf = x[3];
                const double bending =
                    180000.0 * h /
                    (tw * cube(h - 2.0 * tf) +
                     2.0 * b * tf * (4.0 * sq(tf) + 3.0 * h * (h - 2.0 * tf)));
                const double lateral =
                    15000.0 * b / ((h - 2.0 * tf) * cube(tw) + 2.0 * tf * cube(b));
                return bending + lateral - 56.0;
            },
        },
        std::vector<double>{50.0, 80.0, 0.9, 2.3217922599129337}));

    // Tubular column under compressive load: section diameter and thickness.
    families.push_back(engineering(
        "tubular-column", {2.0, 0.2}, {14.0, 0.8}, 26.4994970472,
        "Rao, Engineering Optimization (1996), tubular column example",
        [](const std::vector<double>& x) { return 9.8 * x[0] * x[1] + 2.0 * x[0]; },
        {
            [](const std::vector<double>& x) {
                return 2500.0 / (pi * x[0] * x[1] * 500.0) - 1.0;
            },
            [](const std::vector<double>& x) {
                return 8.0 * 2500.0 * sq(250.0) /
                           (cube(pi) * 0.85e6 * x[0] * x[1] * (sq(x[0]) + sq(x[1]))) -
                       1.0;
            },
            [](const std::vector<double>& x) { return 2.0 / x[0] - 1.0; },
            [](const std::vector<double>& x) { return x[0] / 14.0 - 1.0; },
            [](const std::vector<double>& x) { return 0.2 / x[1] - 1.0; },
            [](const std::vector<double>& x) { return x[1] / 0.8 - 1.0; },
        },
        std::vector<double>{5.451156234098031, 0.29196548007173223}));

    // Piston lever: support positions, cylinder bore, pivot location;
    // minimize the oil volume swept when the lever lifts 45 degrees. The
    // customary constraint set admits degenerate low-volume geometries, so
    // no reference optimum or witness ships.
    families.push_back(engineering(
        "piston-lever", {0.05, 0.05, 0.05, 0.05}, {500.0, 500.0, 120.0, 500.0},
        std::nullopt, "Vanderplaats (1984) piston lever synthesis",
        [](const std::vector<double>& x) {
            const double H = x[0], B = x[1], D = x[2], X = x[3];
            const double th = pi / 4.0;
            const double L1 = std::sqrt(sq(X - B) + sq(H));
            const double L2 = std::sqrt(sq(X * std::sin(th) + H) + sq(B - X * std::cos(th)));
            return 0.25 * pi * sq(D) * (L2 - L1);
        },
        {
            [](const std::vector<double>& x) {  // actuating force balance
                const double H = x[0], B = x[1], D = x[2], X = x[3];
                const double th = pi / 4.0;
                const double L1 = std::sqrt(sq(X - B) + sq(H));
                const double F = pi * 1500.0 * sq(D) / 4.0;
                const double R = std::fabs(-X * (X * std::sin(th) + H) +
                                           H * (B - X * std::cos(th))) /
                                 L1;
                return 10000.0 * 240.0 * std::cos(th) - R * F;
            },
            [](const std::vector<double>& x) {  // bending moment cap
                return 10000.0 * (240.0 - x[3]) - 1.8e6;
            },
            [](const std::vector<double>& x) {  // stroke limit
                const double H = x[0], B = x[1], X = x[3];
                const double th = pi / 4.0;
                const double L1 = std::sqrt(sq(X - B) + sq(H));
                const double L2 = std::sqrt(sq(X * std::sin(th) + H) +
                                            sq(B - X * std::cos(th)));
                return 1.2 * (L2 - L1) - L1;
            },
            [](const std::vector<double>& x) { return x[2] / 2.0 - x[1]; },
        },
        std::nullopt));

    // Corrugated bulkhead: corrugation width, depth, length, plate thickness.
    families.push_back(engineering(
        "corrugated-bulkhead", {0.0, 0.0, 0.0, 0.0}, {100.0, 100.0, 100.0, 5.0},
        6.84295807279, "Kvalie (1967) tanker bulkhead, per Rao, Engineering Optimization",
        [](const std::vector<double>& x) {
            const double b = x[0], h = x[1], l = x[2], t = x[3];
            return 5.885 * t * (b + l) / (b + std::sqrt(std::max(sq(l) - sq(h), 0.0)));
        },
        {
            [](const std::vector<double>& x) {  // section modulus
                const double b = x[0], h = x[1], l = x[2], t = x[3];
                const double root = std::sqrt(std::max(sq(l) - sq(h), 0.0));
                return -t * h * (0.4 * b + l / 6.0) + 8.94 * (b + root);
            },
            [](const std::vector<double>& x) {  // moment of inertia
                const double b = x[0], h = x[1], l = x[2], t = x[3];
                const double root = std::sqrt(std::max(sq(l) - sq(h), 0.0));
                return -t * sq(h) * (0.2 * b + l / 12.0) +
                       2.2 * std::pow(8.94 * (b + root), 4.0 / 3.0);
            },
            [](const std::vector<double>& x) { return -x[3] + 0.0156 * x[0] + 0.15; },
            [](const std::vector<double>& x) { return -x[3] + 0.0156 * x[2] + 0.15; },
            [](const std::vector<double>& x) { return -x[3] + 1.05; },
            [](const std::vector<double>& x) { return -x[2] + x[1]; },
        },
        std::vector<double>{57.69230754742608, 34.147620257787246, 57.6923076474346,
                            1.050000009999897}));

    // Car side impact: eleven thickness/material/position variables against
    // ten crash-response limits.
    families.push_back(engineering(
        "car-side-impact",
        {0.5, 0.45, 0.5, 0.5, 0.5, 0.5, 0.5, 0.192, 0.192, -30.0, -30.0},
        {1.5, 1.35, 1.5, 1.5, 1.5, 1.5, 1.5, 0.345, 0.345, 30.0, 30.0},
        22.842969363, "Gu et al. (2001) crashworthiness study, 11-variable form",
        [](const std::vector<double>& x) {
            return 1.98 + 4.90 * x[0] + 6.67 * x[1] + 6.98 * x[2] + 4.01 * x[3] +
                   1.78 * x[4] + 2.73 * x[6];
        },
        {
            [](const std::vector<double>& x) {  // abdomen load
                return 1.16 - 0.3717 * x[1] * x[3] - 0.00931 * x[1] * x[9] -
                       0.484 * x[2] * x[8] + 0.01343 * x[5] * x[9] - 1.0;
            },
            [](const std::vector<double>& x) {  // upper viscous criterion
                return 0.261 - 0.0159 * x[0] * x[1] - 0.188 * x[0] * x[7] -
                       0.019 * x[1] * x[6] + 0.0144 * x[2] * x[4] +
                       0.0008757 * x[4] * x[9] + 0.08045 * x[5] * x[8] +
                       0.00139 * x[7] * x[10] + 0.00001575 * x[9] * x[10] - 0.32;
            },
            [](const std::vector<double>& x) {  // middle viscous criterion
                return 0.214 + 0.00817 * x[4] - 0.131 * x[0] * x[7] -
                       0.0704 * x[0] * x[8] + 0.03099 * x[1] * x[5] -
                       0.018 * x[1] * x[6] + 0.0208 * x[2] * x[7] +
                       0.121 * x[2] * x[8] - 0.00364 * x[4] * x[5] +
                       0.0007715 * x[4] * x[9] - 0.0005354 * x[5] * x[9] +
                       0.00121 * x[7] * x[10] + 0.00184 * x[8] * x[9] -
                       0.018 * sq(x[1]) - 0.32;
            },
            [](const std::vector<double>& x) {  // lower viscous criterion
                return 0.74 - 0.61 * x[1] - 0.163 * x[2] * x[7] +
                       0.001232 * x[2] * x[9] - 0.166 * x[6] * x[8] + 0.227 * sq(x[1]) -
                       0.32;
            },
            [](const std::vector<double>& x) {  // upper rib deflection
                return 28.98 + 3.818 * x[2] - 4.2 * x[0] * x[1] + 0.0207 * x[4] * x[9] +
                       6.63 * x[5] * x[8] - 7.77 * x[6] * x[7] + 0.32 * x[8] * x[9] - 32.0;
            },
            [](const std::vector<double>& x) {  // middle rib deflection
                return 33.86 + 2.95 * x[2] + 0.1792 * x[9] - 5.057 * x[0] * x[1] -
                       11.0 * x[1] * x[7] - 0.0215 * x[4] * x[9] - 9.98 * x[6] * x[7] +
                       22.0 * x[7] * x[8] - 32.0;
            },
            [](const std::vector<double>& x) {  // lower rib deflection
                return 46.36 - 9.9 * x[1] - 12.9 * x[0] * x[7] + 0.1107 * x[2] * x[9] -
                       32.0;
            },
            [](const std::vector<double>& x) {  // pubic symphysis force
                return 4.72 - 0.5 * x[3] - 0.19 * x[1] * x[2] - 0.0122 * x[3] * x[9] +
                       0.009325 * x[5] * x[9] + 0.000191 * sq(x[10]) - 4.0;
            },
            [](const std::vector<double>& x) {  // B-pillar velocity
                return 10.58 - 0.674 * x[0] * x[1] - 1.95 * x[1] * x[7] +
                       0.02054 * x[2] * x[9] - 0.0198 * x[3] * x[9] +
                       0.028 * x[5] * x[9] - 9.9;
            },
            [](const std::vector<double>& x) {  // door velocity
                return 16.45 - 0.489 * x[2] * x[6] - 0.843 * x[4] * x[5] +
                       0.0432 * x[8] * x[9] - 0.0556 * x[8] * x[10] -
                       0.000786 * sq(x[10]) - 15.7;
            },
        },
        std::vector<double>{0.5, 1.11636619166887, 0.5, 1.3021962255891597, 0.5, 1.5, 0.5,
                            0.34499999999999886, 0.276, -19.5614222645042, 0.0}));
}

}  // namespace bmrbwr::detail
