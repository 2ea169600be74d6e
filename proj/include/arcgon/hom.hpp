#pragma once

#include <vector>

#include "arcgon/arc.hpp"

namespace arcgon {

enum class Ext1Case {
    None,
    SigmaShift,   // b = Sigma a, split-free triangle with zero middle
    CrossPlus,    // strict cross, t(b) < t(a): e = e1+ ⊕ e2+
    CrossMinus,   // strict cross, t(a) < t(b): e = e1- ⊕ e2-
    NbrE1Plus,    // neighbouring, t(a) = s(b)+1: e = e1+
    NbrE1Minus,   // neighbouring, t(a) = t(b)+1: e = e1-
    NbrE2Minus,   // neighbouring, s(a) = s(b)+1: e = e2-
};

/// Result of the Ext^1(b, a) decision together with the middle term of
/// the non-split triangle a -> e -> b (as a multiset of admissible arcs).
struct Ext1Answer {
    bool nonzero = false;
    Ext1Case case_tag = Ext1Case::None;
    std::vector<Arc> middle;  // empty, one or two arcs
};

/// Decide dim Ext^1(b, a) in {0,1} and compute the middle term.
///
/// The case list of the extension characterization, together with
/// class-I admissibility, is taken as a complete iff criterion; the
/// Serre-duality and sphericity test suites cross-validate this choice.
Ext1Answer ext1(Weight w, const Arc& b, const Arc& a);

/// dim Hom(x, y) in {0,1}, computed as ext1(x, Sigma^{-1} y).nonzero.
int hom_dim(Weight w, const Arc& x, const Arc& y);

/// dim Ext^k(x, y) = dim Hom(x, Sigma^k y).
int ext_dim(Weight w, std::int64_t k, const Arc& x, const Arc& y);

}  // namespace arcgon
