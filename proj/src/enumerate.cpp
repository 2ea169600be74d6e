#include "arcgon/enumerate.hpp"

#include <algorithm>

namespace arcgon {

EnumResult enumerate_configs(const EnumRequest& req) {
    std::vector<Arc> candidates;
    for (std::int64_t u = req.lo; u <= req.hi; ++u)
        for (std::int64_t s = u + 1; s <= req.hi; ++s)
            if (is_admissible(req.w, Arc{s, u})) candidates.push_back(Arc{s, u});
    std::sort(candidates.begin(), candidates.end(), arc_output_less);

    EnumResult res;
    std::vector<Arc> chosen;

    auto emit = [&](const std::vector<Arc>& arcs) {
        if (res.diagrams.size() >= req.cap) {
            res.complete = false;
            return;
        }
        Diagram d = make_window(req.w, req.lo, req.hi, req.boundary, arcs);
        if (classify_configuration(d).value >= req.cls) res.diagrams.push_back(std::move(d));
    };

    // DFS over candidate indices; crossing subsets are pruned as they form.
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (!res.complete) return;
        if (i == candidates.size()) {
            emit(chosen);
            return;
        }
        self(self, i + 1);
        bool ok = true;
        for (const Arc& c : chosen)
            if (relate(c, candidates[i]).crossing()) {
                ok = false;
                break;
            }
        if (ok) {
            chosen.push_back(candidates[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);

    std::sort(res.diagrams.begin(), res.diagrams.end(),
              [](const Diagram& a, const Diagram& b) {
                  return std::lexicographical_compare(a.arcs.begin(), a.arcs.end(), b.arcs.begin(),
                                                      b.arcs.end(), arc_output_less);
              });
    return res;
}

}  // namespace arcgon
