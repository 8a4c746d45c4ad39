// Acceptance suite: runs every contract-level property end to end and prints
// one PASS/FAIL line per criterion.  Exits nonzero when any criterion fails.
//
// Usage: acceptance <path-to-webs3-binary>

#include "testutil.hpp"
#include "webs/circular.hpp"
#include "webs/curvature.hpp"
#include "webs/expr.hpp"
#include "webs/normalform.hpp"
#include "webs/series.hpp"
#include "webs/symmetry.hpp"

#include <array>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace webs;
using namespace webs::test;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
    if (!ok && notes.size() < 8) notes.push_back(what);
    if (!ok && notes.size() == 8) notes.push_back("(further failures suppressed)");
}

void criterion(int idx, const std::string& title, const std::function<void()>& body) {
    notes.clear();
    std::string thrown;
    try {
        body();
    } catch (const std::exception& e) {
        thrown = e.what();
    }
    const bool pass = thrown.empty() && notes.empty();
    std::printf("%s  %2d. %s\n", pass ? "PASS" : "FAIL", idx, title.c_str());
    if (!thrown.empty()) std::printf("        exception: %s\n", thrown.c_str());
    for (const auto& n : notes) std::printf("        %s\n", n.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
}

// The polynomial `a`, reinterpreted as valid to `order` (exact for polynomials).
Series2 as_order(const Series2& a, int order) {
    Series2 out(order);
    for (const auto& [m, c] : a.terms()) out.set_coeff(m.r, m.s, c);
    return out;
}

bool is_even_series(const Series2& g) {
    for (const auto& [m, c] : g.terms())
        if ((m.r + m.s) % 2 != 0) return false;
    return true;
}

Series2 renormalized(const Series2& f, const NormalForm& nf) {
    return apply1(nf.Z, compose2(f, PlaneMap(embed_x(nf.X), embed_y(nf.Y))));
}

PlaneMap phi_of(const CircularResult& res) {
    return PlaneMap(res.F, embed_x(res.G));
}

PlaneMap map_power(const PlaneMap& m, int k) {
    PlaneMap p = PlaneMap::identity(m.first().order());
    for (int i = 0; i < k; ++i) p = compose_map(m, p);
    return p;
}

const FoliationPermutation kCycleVHL{
    {Foliation::Horizontal, Foliation::Level, Foliation::Vertical}};

std::pair<int, std::string> run_capture(const std::string& cmd) {
    std::string out;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return {-1, out};
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    return {::pclose(p), out};
}

// --- criteria ---------------------------------------------------------------

void c1_normal_form_identities() {
    Gen gen(11);
    const int N = 9;
    const Series1 t = Series1::var_t(N);
    for (int i = 0; i < 200; ++i) {
        const Series2 f = gen.web_function(N, 5);
        const NormalForm nf = normalize(Web(f));
        const Series2 ft = renormalized(f, nf);
        expect(restrict_line(ft, Rat(1), Rat(0)) == t, "f(t,0) != t");
        expect(restrict_line(ft, Rat(0), Rat(1)) == t, "f(0,t) != t");
        expect(restrict_line(ft, Rat(1), Rat(1)) == Rat(2) * t, "f(t,t) != 2t");
        if (!notes.empty()) break;
    }
}

void c2_sternberg() {
    Gen gen(22);
    const int N = 12;
    const Series1 t = Series1::var_t(N);
    for (int i = 0; i < 100; ++i) {
        const Series1 c = gen.germ2(N);
        const Series1 k = sternberg_k(c);
        expect(compose1(k, Rat(2) * t) == compose1(c, k), "k(2t) != c(k(t))");
        if (!notes.empty()) break;
    }
    const Series1 k = sternberg_k(s1("2 t + t^2", N));
    expect(k.coeff(1) == 1, "closed form: k_1");
    expect(k.coeff(2) == rat(1, 2), "closed form: k_2");
    expect(k.coeff(3) == rat(1, 6), "closed form: k_3");
    expect(k.coeff(4) == rat(1, 24), "closed form: k_4");
}

void c3_simple_symmetries() {
    Gen gen(33);
    const Rat lams[] = {Rat(1), Rat(-1), Rat(2), Rat(-2), rat(1, 3)};
    for (int i = 0; i < 40; ++i) {
        const Series2 g = (i % 2 == 0) ? gen.series2(6) : gen.even_series2(6);
        const SimpleClass cls = classify_simple(g);
        for (const Rat& lam : lams)
            expect(classify_simple(lambda_action(g, lam)).tag == cls.tag,
                   "classification moved under homothety");

        const bool even = is_even_series(g);
        const Series2 f = reconstruct_f(g);
        const int N = f.order();
        const auto p = foliation_permutation(
            PlaneMap(-Series2::var_x(N), -Series2::var_y(N)), Web(f));
        expect((p.has_value() && p->is_identity()) == even,
               "central involution disagrees with evenness");

        bool granted = false;
        for (const auto& w : symmetry_witnesses(trivial_normal_form(g)))
            granted |= w.kind == WitnessKind::SimpleInvolution;
        expect(granted == (even && !g.is_zero()),
               "involution witness disagrees with evenness");
        if (!notes.empty()) break;
    }
}

void c4_mirror_symmetries() {
    const struct {
        const char* text;
        bool swap_, antiswap;
    } cases[] = {
        {"x - y", true, false},
        {"x + y", false, true},
        {"x^2 - y^2", true, true},
    };
    for (const auto& c : cases) {
        const Series2 g = s2(c.text, 6);
        const MirrorClass mc = classify_mirror(g);
        expect(mc.swap == c.swap_ && mc.antiswap == c.antiswap,
               std::string("wrong mirror class for ") + c.text);

        const Web w(reconstruct_f(g));
        int mirrors = 0;
        for (const auto& wit : symmetry_witnesses(trivial_normal_form(g))) {
            const auto p = foliation_permutation(wit.map, w);
            expect(p.has_value() && *p == wit.permutation,
                   "witness failed verification");
            if (!p.has_value()) continue;
            if (wit.kind == WitnessKind::SimpleInvolution) {
                expect(p->is_identity(), "involution witness moved a foliation");
                continue;
            }
            ++mirrors;
            int fixed = 0;
            for (int i = 0; i < 3; ++i)
                fixed += p->images[i] == Foliation{i} ? 1 : 0;
            expect(fixed == 1, "mirror witness does not fix exactly one foliation");
        }
        expect(mirrors == int(c.swap_) + int(c.antiswap), "wrong mirror count");
    }
}

void c5_circular_solver() {
    Gen gen(55);
    const int N = 9;
    for (int i = 0; i < 50; ++i) {
        const Series2 V = Series2::var_y(N) + as_order(gen.series2(4, 2), N);
        const CircularResult res =
            solve_circular(V, Series1::var_t(N), LinearModel::Order3, N);
        expect(res.report.eq2 && res.report.eq3 && res.report.eq4 &&
                   res.report.eq5 && res.report.eq6,
               "conjugacy residual");
        expect(res.report.g_independent_of_y, "G depends on y");
        expect(res.report.phi_power_is_identity, "phi^3 != id (report)");
        expect(map_power(phi_of(res), 3) == PlaneMap::identity(N),
               "phi^3 != id (recomputed)");
        expect(res.report.permutation.has_value() &&
                   *res.report.permutation == kCycleVHL,
               "foliation action is not the 3-cycle");
        if (!notes.empty()) break;
    }
}

void c6_synthesis_equivalence() {
    const int N = 10;
    const Series2 x = Series2::var_x(N), y = Series2::var_y(N);
    const Series2 ps[] = {s2("x^2 + x y + y^2", N), theorem3_p0(N)};
    for (const Series2& P : ps) {
        const CircularResult a = lemma1_synthesize(P, LinearModel::Order3, N);
        const CircularResult b =
            solve_circular(y + P, Series1::var_t(N), LinearModel::Order3, N);
        expect(a.A == b.A && a.B == b.B && a.U == b.U && a.F == b.F &&
                   a.G == b.G && a.f == b.f,
               "synthesis disagrees with the generic solver");
        expect(a.F == -x - y - Rat(3) * solve_theta(P, N),
               "F != -x - y - 3 theta");
    }
}

void c7_nonflat_circular_web() {
    const int N = 10;
    const CircularResult res = theorem3_example(N);
    const Series1 t = Series1::var_t(N);
    expect(restrict_line(res.f, Rat(1), Rat(0)) == t, "f(t,0) != t");
    expect(restrict_line(res.f, Rat(0), Rat(1)) == t, "f(0,t) != t");
    expect(restrict_line(res.f, Rat(1), Rat(1)) == Rat(2) * t, "f(t,t) != 2t");
    expect(res.report.thm3_identities.value_or(false), "identities not certified");
    expect(res.report.thm3_five_points.value_or(false), "five points not certified");
    expect(restrict_line(res.f, Rat(-1), Rat(2)) == t, "f(-t,2t) != t");
    expect(restrict_line(res.f, rat(1, 2), rat(1, 2)) == t, "f(t/2,t/2) != t");
    expect(restrict_line(res.f, Rat(2), Rat(-1)) == t, "f(2t,-t) != t");

    const Series2 g = normalize(Web(res.f)).g;
    expect(!g.is_zero(), "residue vanishes");
    expect(truncated(g, 3) == s2("-6 x^3 - 21 x^2 y - 21 x y^2 - 6 y^3", 3),
           "wrong lowest part of the residue");
    expect(!blaschke_curvature(Web(res.f)).is_zero(), "curvature vanishes");
}

void c8_flatness_oracles() {
    Gen gen(88);
    for (int i = 0; i < 100; ++i) {
        const Series2 f = gen.flat_web(12);
        const Series2 g = normalize(Web(f)).g;
        expect(g.order() == 9 && g.is_zero(), "residue of a flat web is nonzero");
        const Series2 K = blaschke_curvature(Web(truncated(f, 9)));
        expect(K.order() == 6 && K.is_zero(), "curvature of a flat web is nonzero");
        if (!notes.empty()) break;
    }
}

void c9_order6_model() {
    const int N = 9;
    const Series2 x = Series2::var_x(N), y = Series2::var_y(N);
    // Admissible order-6 perturbations: anti-invariant under (x+y,-x).
    const char* ps[] = {"x y (x + y)", "x^3 + 3 x^2 y - y^3",
                        "x y (x + y) (x^2 + x y + y^2)"};
    for (const char* text : ps) {
        const Series2 P = s2(text, N);
        expect(compose2(P, model_action(LinearModel::Order6, N)) == -P,
               "perturbation is not anti-invariant");
        const CircularResult res = lemma1_synthesize(P, LinearModel::Order6, N);
        const PlaneMap phi = phi_of(res);
        expect(res.report.phi_power == 6 && res.report.phi_power_is_identity,
               "phi^6 != id (report)");
        expect(map_power(phi, 6) == PlaneMap::identity(N), "phi^6 != id");
        const PlaneMap phi3 = map_power(phi, 3);
        expect(phi3.linear() == std::array<Rat, 4>{Rat(-1), Rat(0), Rat(0), Rat(-1)},
               "phi^3 linear part is not -id");
        expect(phi3 == PlaneMap(-x, -y), "phi^3 != -id");
        const Series2 g = normalize(Web(res.f)).g;
        expect(is_even_series(g), "residue has an odd term");
        expect(classify_simple(g).tag == SimpleTag::IdAndInvolution,
               "residue not certified even and nonzero");
    }
    // A perturbation invariant (not anti-invariant) under the order-6 action is
    // even, cannot close the foliation cycle, and must be rejected.
    bool rejected = false;
    try {
        lemma1_synthesize(s2("x^2 + x y + y^2", N), LinearModel::Order6, N);
    } catch (const NotInvariant&) {
        rejected = true;
    }
    expect(rejected, "even invariant perturbation was accepted");
}

void c10_cli_round_trip(const std::string& tool) {
    Gen gen(1010);
    for (int i = 0; i < 1000; ++i) {
        if (i % 2 == 0) {
            const Series2 s = gen.series2(6);
            const std::string text = format_series(s);
            const Series2 back = eval2(parse_expr(text), s.order());
            expect(back == s, "series round-trip changed value: " + text);
            expect(format_series(back) == text, "format not idempotent: " + text);
        } else {
            const Series1 s = gen.series1(6);
            const std::string text = format_series(s);
            const Series1 back = eval1(parse_expr(text), s.order());
            expect(back == s, "series round-trip changed value: " + text);
            expect(format_series(back) == text, "format not idempotent: " + text);
        }
        if (!notes.empty()) break;
    }

    const std::string cmd = "\"" + tool + "\" circular example-thm3 --order 10 --json";
    const auto [st1, out1] = run_capture(cmd);
    const auto [st2, out2] = run_capture(cmd);
    expect(st1 == 0 && st2 == 0, "tool exited nonzero");
    expect(!out1.empty(), "tool produced no output");
    expect(out1 == out2, "output is not byte-stable across runs");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-webs3>\n", argv[0]);
        return 2;
    }
    const std::string tool = argv[1];

    criterion(1, "normal form: boundary and diagonal identities on 200 random webs",
              c1_normal_form_identities);
    criterion(2, "diagonal linearization: k(2t) = c(k(t)) on 100 random germs",
              c2_sternberg);
    criterion(3, "simple symmetries: homothety invariance, even residue <=> involution",
              c3_simple_symmetries);
    criterion(4, "mirror symmetries: swap/antiswap classes with certified witnesses",
              c4_mirror_symmetries);
    criterion(5, "circular solver: residuals, phi^3 = id, foliation 3-cycle",
              c5_circular_solver);
    criterion(6, "closed-form synthesis agrees with the generic solver",
              c6_synthesis_equivalence);
    criterion(7, "non-flat circular web: line conditions, residue, curvature",
              c7_nonflat_circular_web);
    criterion(8, "flatness oracles agree on 100 flat-by-construction webs",
              c8_flatness_oracles);
    criterion(9, "order-6 model: phi^6 = id, phi^3 = -id, even residue",
              c9_order6_model);
    criterion(10, "expression round-trips and byte-stable JSON output",
              [&] { c10_cli_round_trip(tool); });

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
