#pragma once

// Symmetry classification for a web through its normal-form residue g.
//
// Every symmetry fixing the three foliations individually is trivial once the
// web is non-flat; the interesting classes are the extra involution (x,y) ->
// (-x,-y), available exactly when g is even, and the two mirror families that
// exchange the x- and y-foliations, pinned by coefficient conditions on g.

#include "webs/normalform.hpp"
#include "webs/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace webs {

// The three foliations of a web in a fixed order:
// Vertical {x = const}, Horizontal {y = const}, Level {f = const}.
enum class Foliation { Vertical = 0, Horizontal = 1, Level = 2 };
std::string to_string(Foliation f);

// images[i] = j when the map carries leaves of foliation i into leaves of j
// (equivalently, the pullback of j's first integral depends on i's alone).
struct FoliationPermutation {
    std::array<Foliation, 3> images;

    bool is_identity() const {
        return images == std::array{Foliation::Vertical, Foliation::Horizontal,
                                    Foliation::Level};
    }
    Foliation operator()(Foliation f) const { return images[static_cast<int>(f)]; }
    friend bool operator==(const FoliationPermutation&, const FoliationPermutation&) = default;
};

// Decide whether m permutes the web's foliations, and how.  For each pair the
// test is exact functional dependence to the validity order: the wedge of
// d(u_j \circ m) and d(u_i) vanishes, u ranging over {x, y, f}.  Returns
// nullopt (absent) unless every pullback matches exactly one foliation and
// the assignment is a bijection.
std::optional<FoliationPermutation> foliation_permutation(const PlaneMap& m, const Web& w);

// Simple-symmetry trichotomy of a residue, decided to its validity order.
enum class SimpleTag { FlatToOrder, OnlyId, IdAndInvolution };
struct SimpleClass {
    SimpleTag tag;
    int order;  // the order to which the decision is valid
    friend bool operator==(const SimpleClass&, const SimpleClass&) = default;
};
// IdAndInvolution iff every odd-total-degree coefficient of g vanishes.
SimpleClass classify_simple(const Series2& g);

// Mirror families, decided coefficient-wise:
//   swap:     g(y, x) = -g(x, y)   <=>  g_{s,r} = -g_{r,s}
//   antiswap: g(-y,-x) = -g(x, y)  <=>  (-1)^{r+s} g_{s,r} = -g_{r,s}
struct MirrorClass {
    bool swap = false;
    bool antiswap = false;
    friend bool operator==(const MirrorClass&, const MirrorClass&) = default;
};
MirrorClass classify_mirror(const Series2& g);

enum class WitnessKind { SimpleInvolution, SwapMirror, AntiswapMirror };
std::string to_string(WitnessKind k);

// A symmetry map in normal coordinates together with its certified action on
// the foliations of the reconstructed web.
struct Witness {
    WitnessKind kind;
    PlaneMap map;
    FoliationPermutation permutation;
};

// One witness per symmetry the coefficient conditions grant, each certified
// by foliation_permutation against the expected permutation:
//   (-x,-y) with the identity permutation      when g is even and nonzero,
//   ( y, x) exchanging Vertical and Horizontal when the swap condition holds,
//   (-y,-x) exchanging Vertical and Horizontal when the antiswap one does.
std::vector<Witness> symmetry_witnesses(const NormalForm& nf);

// Transport a witness from normal coordinates back through T = (X, Y):
// returns T . m . T^{-1}, a symmetry of the original web.
PlaneMap conjugate_witness(const NormalForm& nf, const PlaneMap& m);

}  // namespace webs
