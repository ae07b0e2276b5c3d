#pragma once

#include <string>
#include <vector>

#include "gridrig/geometry.hpp"
#include "gridrig/quotient.hpp"
#include "gridrig/rational.hpp"
#include "gridrig/rigidity.hpp"

namespace fixtures {

using namespace gridrig;

inline Rational q(const char* text) { return parse_rational(text); }
inline Vec2 v(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

// The max norm with the horizontal facet pair labelled F1, so that the mirror
// is the vertical axis. Used by the hand-built reference frameworks.
inline QuadNorm axis_norm() { return QuadNorm(make_vec(1, 0), make_vec(0, 1)); }

inline SignedQuotientGraph single_loop() { return SignedQuotientGraph({"a"}, std::vector<NamedGainEdge>{{"l", "a", "a", -1}}); }

// ab+, ab-, cb+, cb-, ca+ : the smallest loopless tight graph.
inline SignedQuotientGraph two_k3_minus_edge() {
  return SignedQuotientGraph({"a", "b", "c"}, std::vector<NamedGainEdge>{{"ab+", "a", "b", 1},
                                                                        {"ab-", "a", "b", -1},
                                                                        {"cb+", "c", "b", 1},
                                                                        {"cb-", "c", "b", -1},
                                                                        {"ca+", "c", "a", 1}});
}

// Triangle with trivial gains, one extra parallel of gain -1 and a loop.
inline SignedQuotientGraph gain_graph_example() {
  return SignedQuotientGraph({"a", "b", "c"}, std::vector<NamedGainEdge>{{"ab", "a", "b", 1},
                                                                        {"ab-", "a", "b", -1},
                                                                        {"cb", "c", "b", 1},
                                                                        {"ca", "c", "a", 1},
                                                                        {"cc", "c", "c", -1}});
}

// Symmetrically isostatic 2K3-[e]: hand-picked coordinates shifted so the mirror is x = 0.
inline SymmetricFramework sym_example() {
  return SymmetricFramework::from_representatives(two_k3_minus_edge(), axis_norm(),
                                                  {v("-2", "0"), v("-1", "1/2"), v("-3/2", "3/2")});
}

// Anti-symmetrically isostatic 2K3-[e].
inline SymmetricFramework anti_example() {
  return SymmetricFramework::from_representatives(two_k3_minus_edge(), axis_norm(),
                                                  {v("-1/2", "0"), v("-1/2", "3/2"), v("-3/2", "0")});
}

// Plain grid frameworks with one joint at the origin: two flexible ones and a K4.
inline PlainFramework path_example() {
  return PlainFramework{{"p0", "p1", "p2"}, {{0, 1}, {0, 2}}, {v("0", "0"), v("1", "1/5"), v("3/5", "1")}, axis_norm()};
}
inline PlainFramework triangle_example() {
  return PlainFramework{
      {"p0", "p1", "p2"}, {{0, 1}, {0, 2}, {1, 2}}, {v("0", "0"), v("1", "1/5"), v("3/5", "1")}, axis_norm()};
}
inline PlainFramework k4_example() {
  return PlainFramework{{"p0", "p1", "p2", "p3"},
                        {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}},
                        {v("0", "0"), v("1", "1/5"), v("-1/5", "1"), v("6/5", "7/5")},
                        axis_norm()};
}

}  // namespace fixtures
