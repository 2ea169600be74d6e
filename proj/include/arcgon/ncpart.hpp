#pragma once

#include <cstdint>
#include <vector>

#include "arcgon/diagram.hpp"

namespace arcgon {

/// Noncrossing partition of half-integer points, in exact arithmetic:
/// a point q is stored doubled, as 2q (so 2n+0.5 becomes 4n+1 and
/// 2n-0.5 becomes 4n-1). Blocks are ascending; `escaping` indexes the
/// blocks whose chain leaves the presented data (see nc_partition).
struct NcPartition {
    std::vector<std::vector<std::int64_t>> blocks;
    std::vector<std::size_t> escaping;

    bool has_escaping() const { return !escaping.empty(); }
};

struct NcBridge {
    NcPartition nc;        // points 2n+0.5
    NcPartition kreweras;  // points 2n-0.5 (the Kreweras complement)
};

/// w = -1 only. Blocks follow the chain rule: after x, if x+0.5 is the
/// target of an arc then the block continues at source+0.5. The Kreweras
/// complement is the same chain run on the interleaved point class; the
/// test suite verifies its maximality against brute force.
///
/// Escaping flags are a windowing convention: free windows flag blocks
/// touching the outer half-points lo-0.5 / hi+0.5 (a continuation could
/// exist outside); sealed windows flag blocks exactly when the chain
/// through the window fails to run from lo-0.5 all the way to hi+0.5
/// (the virtual overarc's block fails to close); periodic families flag
/// genuinely infinite chains, decided exactly by phase repetition.
NcBridge nc_partition(const Diagram& d);

struct BridgeReport {
    bool sms = false;        // classify_configuration == sms
    bool finite_ok = false;  // no escaping blocks in either partition
    bool agree = false;
};

/// Agreement between the classification and the finite-block criterion.
BridgeReport sms_iff_finite_blocks(const Diagram& d);

}  // namespace arcgon
