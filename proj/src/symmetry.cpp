#include "webs/symmetry.hpp"

#include <algorithm>

namespace webs {

std::string to_string(Foliation f) {
    switch (f) {
        case Foliation::Vertical: return "Vertical";
        case Foliation::Horizontal: return "Horizontal";
        case Foliation::Level: return "Level";
    }
    return "?";
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::SimpleInvolution: return "simple-involution";
        case WitnessKind::SwapMirror: return "swap-mirror";
        case WitnessKind::AntiswapMirror: return "antiswap-mirror";
    }
    return "?";
}

std::optional<FoliationPermutation> foliation_permutation(const PlaneMap& m, const Web& w) {
    const int N = std::min(m.order(), w.order());
    const auto [a, b, c, d] = m.linear();
    if (is_zero(a * d - b * c))
        throw NotInvertible("candidate symmetry has a singular linear part");

    const Series2 f = truncated(w.f(), N);
    const PlaneMap mt(truncated(m.first(), N), truncated(m.second(), N));

    const std::array<Series2, 3> u = {Series2::var_x(N), Series2::var_y(N), f};
    const std::array<Series2, 3> um = {mt.first(), mt.second(), compose2(f, mt)};

    std::array<Series2, 3> ux = {d_dx(u[0]), d_dx(u[1]), d_dx(u[2])};
    std::array<Series2, 3> uy = {d_dy(u[0]), d_dy(u[1]), d_dy(u[2])};
    std::array<Series2, 3> umx = {d_dx(um[0]), d_dx(um[1]), d_dx(um[2])};
    std::array<Series2, 3> umy = {d_dy(um[0]), d_dy(um[1]), d_dy(um[2])};

    std::array<int, 3> images{-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // u_j(m) is a function of u_i exactly when their differentials
            // are proportional: the wedge determinant vanishes to order.
            const Series2 wedge = umx[j] * uy[i] - umy[j] * ux[i];
            if (!wedge.is_zero()) continue;
            if (images[i] != -1) return std::nullopt;  // ambiguous match
            images[i] = j;
        }
        if (images[i] == -1) return std::nullopt;  // no match at all
    }
    if (images[0] == images[1] || images[0] == images[2] || images[1] == images[2])
        return std::nullopt;  // not a bijection

    return FoliationPermutation{{static_cast<Foliation>(images[0]),
                                 static_cast<Foliation>(images[1]),
                                 static_cast<Foliation>(images[2])}};
}

SimpleClass classify_simple(const Series2& g) {
    if (g.is_zero()) return {SimpleTag::FlatToOrder, g.order()};
    for (const auto& [m, c] : g.terms())
        if (m.total() % 2 == 1) return {SimpleTag::OnlyId, g.order()};
    return {SimpleTag::IdAndInvolution, g.order()};
}

MirrorClass classify_mirror(const Series2& g) {
    MirrorClass mc{true, true};
    for (const auto& [m, c] : g.terms()) {
        const Rat mirror = g.coeff(m.s, m.r);
        if (mirror != -c) mc.swap = false;
        if ((m.total() % 2 == 0 ? mirror : Rat(-mirror)) != -c) mc.antiswap = false;
        if (!mc.swap && !mc.antiswap) break;
    }
    return mc;
}

std::vector<Witness> symmetry_witnesses(const NormalForm& nf) {
    const Series2 f = reconstruct_f(nf.g);
    const Web w(f);
    const int N = f.order();
    const Series2 x = Series2::var_x(N), y = Series2::var_y(N);

    std::vector<Witness> out;
    auto certify = [&](WitnessKind kind, const Series2& mx, const Series2& my,
                       const FoliationPermutation& expected) {
        PlaneMap m(mx, my);
        const auto p = foliation_permutation(m, w);
        if (!p || *p != expected)
            throw InternalCheckFailed(
                "coefficient condition granted a symmetry its web rejects");
        out.push_back({kind, std::move(m), *p});
    };

    const FoliationPermutation id{
        {Foliation::Vertical, Foliation::Horizontal, Foliation::Level}};
    const FoliationPermutation vh_swap{
        {Foliation::Horizontal, Foliation::Vertical, Foliation::Level}};

    if (classify_simple(nf.g).tag == SimpleTag::IdAndInvolution)
        certify(WitnessKind::SimpleInvolution, -x, -y, id);
    const MirrorClass mc = classify_mirror(nf.g);
    if (mc.swap) certify(WitnessKind::SwapMirror, y, x, vh_swap);
    if (mc.antiswap) certify(WitnessKind::AntiswapMirror, -y, -x, vh_swap);
    return out;
}

PlaneMap conjugate_witness(const NormalForm& nf, const PlaneMap& m) {
    // T(u,v) = (X(u), Y(v)) carries normal coordinates to the original ones.
    const int N = std::min({m.order(), nf.X.order(), nf.Y.order()});
    const Series1 Xinv = invert1(nf.X), Yinv = invert1(nf.Y);
    const PlaneMap Tinv(embed_x(truncated(Xinv, N)), embed_y(truncated(Yinv, N)));
    const PlaneMap mid = compose_map(m, Tinv);
    return PlaneMap(apply1(nf.X, mid.first()), apply1(nf.Y, mid.second()));
}

}  // namespace webs
