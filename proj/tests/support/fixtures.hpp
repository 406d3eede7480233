#pragma once

#include <string>

#include "crossrel/graph.hpp"
#include "crossrel/scenario.hpp"

namespace crossrel::testing {

// Fixtures are built through the parser so every test run also exercises the
// scenario grammar. Link indices follow plink declaration order.

// Fiber triangle, logical triangle, every lightpath routed the long way:
// links e01=0, e12=1, e02=2; routes L01={e02,e12}, L12={e01,e02},
// L20={e12,e01}. Reliability (1-p)^3.
inline const char* kTriSharedText = R"(
pnode v0
pnode v1
pnode v2
plink v0 v1
plink v1 v2
plink v0 v2
lnode v0
lnode v1
lnode v2
llink v0 v1
llink v1 v2
llink v2 v0
route 0: v0 v2 v1
route 1: v1 v0 v2
route 2: v2 v1 v0
)";

// Same layered graph, all three lightpaths on their own fiber.
inline const char* kTriDirectText = R"(
pnode v0
pnode v1
pnode v2
plink v0 v1
plink v1 v2
plink v0 v2
lnode v0
lnode v1
lnode v2
llink v0 v1
llink v1 v2
llink v2 v0
route 0: v0 v1
route 1: v1 v2
route 2: v2 v0
)";

// Six-node fiber ring, logical triangle on disjoint two-hop arcs.
// Reliability 3(1-p)^4 - 2(1-p)^6.
inline const char* kTriDisjointText = R"(
pnode v0
pnode v1
pnode v2
pnode v3
pnode v4
pnode v5
plink v0 v1
plink v1 v2
plink v2 v3
plink v3 v4
plink v4 v5
plink v5 v0
lnode v0
lnode v2
lnode v4
llink v0 v2
llink v2 v4
llink v4 v0
route 0: v0 v1 v2
route 1: v2 v3 v4
route 2: v4 v5 v0
)";

// The shared triangle padded to m = 6 by a hub whose spokes carry nothing;
// identical failure polynomial, cut vector convolved with C(3, i).
inline const char* kTriSharedPaddedText = R"(
pnode v0
pnode v1
pnode v2
pnode hub
plink v0 v1
plink v1 v2
plink v0 v2
plink v0 hub
plink v1 hub
plink v2 hub
lnode v0
lnode v1
lnode v2
llink v0 v1
llink v1 v2
llink v2 v0
route 0: v0 v2 v1
route 1: v1 v0 v2
route 2: v2 v1 v0
)";

// Logical square on K4, direct routes; diagonals are spare fibers.
inline const char* kSquareK4Text = R"(
pnode v0
pnode v1
pnode v2
pnode v3
plink v0 v1
plink v1 v2
plink v2 v3
plink v0 v3
plink v0 v2
plink v1 v3
lnode v0
lnode v1
lnode v2
lnode v3
llink v0 v1
llink v1 v2
llink v2 v3
llink v3 v0
route 0: v0 v1
route 1: v1 v2
route 2: v2 v3
route 3: v3 v0
)";

// Logical triangle on K4 with every lightpath initially through the hub v3.
inline const char* kHubK4Text = R"(
pnode v0
pnode v1
pnode v2
pnode v3
plink v0 v1
plink v1 v2
plink v0 v2
plink v0 v3
plink v1 v3
plink v2 v3
lnode v0
lnode v1
lnode v2
llink v0 v1
llink v1 v2
llink v2 v0
route 0: v0 v3 v1
route 1: v1 v3 v2
route 2: v2 v3 v0
)";

inline LayeredNetwork from_text(const char* text) {
  return parse_scenario(text).network();
}

inline LayeredNetwork tri_shared() { return from_text(kTriSharedText); }
inline LayeredNetwork tri_direct() { return from_text(kTriDirectText); }
inline LayeredNetwork tri_disjoint() { return from_text(kTriDisjointText); }
inline LayeredNetwork tri_shared_padded() {
  return from_text(kTriSharedPaddedText);
}
inline LayeredNetwork square_k4() { return from_text(kSquareK4Text); }
inline LayeredNetwork hub_k4() { return from_text(kHubK4Text); }

// One logical link over an h-hop fiber path.
inline LayeredNetwork single_lightpath(int hops) {
  std::string text;
  for (int i = 0; i <= hops; ++i)
    text += "pnode v" + std::to_string(i) + "\n";
  for (int i = 0; i < hops; ++i)
    text += "plink v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  text += "lnode v0\nlnode v" + std::to_string(hops) + "\n";
  text += "llink v0 v" + std::to_string(hops) + "\n";
  text += "route 0:";
  for (int i = 0; i <= hops; ++i) text += " v" + std::to_string(i);
  text += "\n";
  return parse_scenario(text).network();
}

}  // namespace crossrel::testing
