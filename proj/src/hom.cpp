#include "arcgon/hom.hpp"

#include <stdexcept>
#include <string>

namespace arcgon {

namespace {

void require_admissible(Weight w, const Arc& a, const char* who) {
    if (!is_admissible(w, a))
        throw std::invalid_argument(std::string(who) + ": arc (" + std::to_string(a.source) +
                                    "," + std::to_string(a.target) + ") is not admissible");
}

}  // namespace

Ext1Answer ext1(Weight w, const Arc& b, const Arc& a) {
    require_admissible(w, a, "ext1");
    require_admissible(w, b, "ext1");

    Ext1Answer ans;
    if (b == suspend(a)) {
        ans.nonzero = true;
        ans.case_tag = Ext1Case::SigmaShift;
        return ans;
    }
    if (a == b) return ans;  // no self-extensions in degree 1

    const Relation rel = relate(a, b);
    if (rel.kind == RelationKind::StrictCross) {
        Arc e1, e2;
        Ext1Case tag;
        if (b.target < a.target) {
            e1 = Arc{a.source, b.target};  // e1+
            e2 = Arc{b.source, a.target};  // e2+
            tag = Ext1Case::CrossPlus;
        } else {
            e1 = Arc{b.source, a.source};  // e1-
            e2 = Arc{b.target, a.target};  // e2-
            tag = Ext1Case::CrossMinus;
        }
        // Opposite class-I arcs are admissible together or not at all.
        if (is_admissible(w, e1) != is_admissible(w, e2))
            throw std::logic_error("ext1: opposite class-I arcs disagree on admissibility");
        if (is_admissible(w, e1)) {
            ans.nonzero = true;
            ans.case_tag = tag;
            ans.middle = {e1, e2};
        }
        return ans;
    }
    if (rel.neighbouring) {
        if (a.target == b.source + 1) {
            ans.case_tag = Ext1Case::NbrE1Plus;
            ans.middle = {Arc{a.source, b.target}};
        } else if (a.target == b.target + 1) {
            ans.case_tag = Ext1Case::NbrE1Minus;
            ans.middle = {Arc{b.source, a.source}};
        } else if (a.source == b.source + 1) {
            ans.case_tag = Ext1Case::NbrE2Minus;
            ans.middle = {Arc{b.target, a.target}};
        }
        if (!ans.middle.empty()) {
            ans.nonzero = true;
            if (!is_admissible(w, ans.middle.front()))  // class II is always admissible
                throw std::logic_error("ext1: inadmissible class-II middle term");
        }
        return ans;
    }
    return ans;
}

int hom_dim(Weight w, const Arc& x, const Arc& y) {
    return ext1(w, x, suspend(y, -1)).nonzero ? 1 : 0;
}

int ext_dim(Weight w, std::int64_t k, const Arc& x, const Arc& y) {
    return hom_dim(w, x, suspend(y, k));
}

}  // namespace arcgon
