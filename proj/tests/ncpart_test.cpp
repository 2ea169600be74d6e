#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "arcgon/enumerate.hpp"
#include "arcgon/ncpart.hpp"
#include "oracles.hpp"

using namespace arcgon;

namespace {

using Blocks = std::vector<std::vector<std::int64_t>>;

Blocks sorted_blocks(const NcPartition& p) {
    Blocks b = p.blocks;
    std::sort(b.begin(), b.end());
    return b;
}

}  // namespace

TEST_CASE("nc: chain through targets, Kreweras on the dual points") {
    // {(2,1),(3,0)} on [0,3]: nc = {{0.5,2.5}} ; K = {{-0.5,3.5},{1.5}}.
    const Diagram d = make_window(Weight{-1}, 0, 3, BoundaryMode::Free, {Arc{2, 1}, Arc{3, 0}});
    const NcBridge bridge = nc_partition(d);
    CHECK(sorted_blocks(bridge.nc) == Blocks{{1, 5}});
    CHECK(sorted_blocks(bridge.kreweras) == Blocks{{-1, 7}, {3}});
}

TEST_CASE("nc: single minimal arc") {
    // {(1,0)} on [0,1]: nc = {{0.5}} ; the Kreweras chain uses (1,0).
    const Diagram d = make_window(Weight{-1}, 0, 1, BoundaryMode::Free, {Arc{1, 0}});
    const NcBridge bridge = nc_partition(d);
    CHECK(sorted_blocks(bridge.nc) == Blocks{{1}});
    CHECK(sorted_blocks(bridge.kreweras) == Blocks{{-1, 3}});
}

TEST_CASE("nc: empty arc set is all singletons with no escaping blocks") {
    const Diagram d = make_window(Weight{-1}, 0, 3, BoundaryMode::Free, {});
    const NcBridge bridge = nc_partition(d);
    for (const auto& b : bridge.nc.blocks) CHECK(b.size() == 1);
    for (const auto& b : bridge.kreweras.blocks) CHECK(b.size() == 1);
    CHECK_FALSE(bridge.nc.has_escaping());
    CHECK_FALSE(bridge.kreweras.has_escaping());
    // Sealed empty windows do flag: the boundary through-chain fails.
    const Diagram sealed_empty = make_window(Weight{-1}, 0, 3, BoundaryMode::Sealed, {});
    const NcBridge sb = nc_partition(sealed_empty);
    CHECK((sb.nc.has_escaping() || sb.kreweras.has_escaping()));
}

TEST_CASE("nc rejects w != -1 and crossing diagrams") {
    CHECK_THROWS_AS(nc_partition(make_window(Weight{-2}, 0, 2, BoundaryMode::Free, {Arc{2, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        nc_partition(make_window(Weight{-1}, 0, 5, BoundaryMode::Free, {Arc{3, 0}, Arc{5, 2}})),
        std::invalid_argument);
}

TEST_CASE("periodic escape is decided by phase repetition") {
    const Diagram fam = make_periodic(Weight{-1}, 2, {Arc{1, 0}});
    const NcBridge bridge = nc_partition(fam);
    CHECK_FALSE(bridge.nc.has_escaping());   // odd targets never occur
    CHECK(bridge.kreweras.has_escaping());   // dual chain rides the translates forever

    // Period 4, single short arc: every chain dies after one step.
    const Diagram fam4 = make_periodic(Weight{-1}, 4, {Arc{1, 0}});
    const NcBridge b4 = nc_partition(fam4);
    CHECK_FALSE(b4.nc.has_escaping());
    CHECK_FALSE(b4.kreweras.has_escaping());
}

TEST_CASE("free restriction of the periodic counterexample escapes; bridge agrees") {
    std::vector<Arc> arcs;
    for (std::int64_t k = 0; k <= 4; ++k) arcs.push_back(Arc{2 * k + 1, 2 * k});
    const Diagram d = make_window(Weight{-1}, 0, 9, BoundaryMode::Free, arcs);
    const NcBridge bridge = nc_partition(d);
    CHECK((bridge.nc.has_escaping() || bridge.kreweras.has_escaping()));
    const BridgeReport rep = sms_iff_finite_blocks(d);
    CHECK_FALSE(rep.sms);
    CHECK(rep.agree);
}

TEST_CASE("sms_iff_finite_blocks: spec triples") {
    CHECK(sms_iff_finite_blocks(
              make_window(Weight{-1}, -1, 2, BoundaryMode::Sealed, {Arc{1, 0}, Arc{2, -1}}))
              .agree);
    CHECK(sms_iff_finite_blocks(
              make_window(Weight{-1}, 0, 3, BoundaryMode::Sealed, {Arc{1, 0}, Arc{3, 2}}))
              .agree);
    // A sealed hom_config that is not sms: the through-chain fails to close.
    const Diagram d = make_window(Weight{-1}, 0, 4, BoundaryMode::Sealed, {Arc{1, 0}, Arc{3, 2}});
    const BridgeReport rep = sms_iff_finite_blocks(d);
    CHECK_FALSE(rep.sms);
    CHECK_FALSE(rep.finite_ok);
    CHECK(rep.agree);
}

TEST_CASE("bridge agreement across enumerated sealed hom_configs") {
    for (std::int64_t span = 1; span <= 8; ++span) {
        const EnumRequest req{Weight{-1}, 0, span - 1, BoundaryMode::Sealed,
                              ConfigClass::HomConfig, 1u << 20};
        for (const Diagram& d : enumerate_configs(req).diagrams)
            CHECK(sms_iff_finite_blocks(d).agree);
    }
}

TEST_CASE("Kreweras complement is the brute-force maximal complement") {
    for (std::int64_t span = 2; span <= 8; span += 2) {
        const EnumRequest req{Weight{-1}, 0, span - 1, BoundaryMode::Sealed,
                              ConfigClass::HomConfig, 1u << 20};
        for (const Diagram& d : enumerate_configs(req).diagrams) {
            const NcBridge bridge = nc_partition(d);
            std::vector<std::int64_t> duals;
            for (const auto& b : bridge.kreweras.blocks)
                for (std::int64_t p : b) duals.push_back(p);
            std::sort(duals.begin(), duals.end());
            if (duals.size() > 8) continue;
            const auto best = oracles::brute_kreweras(bridge.nc.blocks, duals);
            REQUIRE(best.has_value());
            Blocks got = sorted_blocks(bridge.kreweras);
            Blocks want = *best;
            for (auto& b : want) std::sort(b.begin(), b.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
}
