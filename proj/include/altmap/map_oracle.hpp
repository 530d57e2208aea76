#ifndef ALTMAP_MAP_ORACLE_HPP
#define ALTMAP_MAP_ORACLE_HPP

#include <compare>
#include <map>
#include <vector>

namespace altmap {

enum class Side { black, white };
using BoundaryWord = std::vector<Side>;

BoundaryWord alternating_word(int r); // white black white black ... (length 2r)
BoundaryWord monochromatic_word(Side c, int p);

// Isomorphism invariants separating the enumerated maps: vertex count and the
// sorted inner-face degree list of each color.
struct MapProfile {
    long vertices = 0;
    std::vector<int> black_degrees;
    std::vector<int> white_degrees;
    auto operator<=>(const MapProfile&) const = default;
};

using ProfileCounts = std::map<MapProfile, long>;

// Exhaustive ground-truth enumeration of rooted planar hypermaps with `edges`
// edges and the given boundary condition, by sweeping all rotation systems
// against the fixed edge involution (0 1)(2 3)... and normalizing the labeled
// count by 2^(E-1) (E-1)!. Desk scale only; throws above the safety cap.
ProfileCounts enumerate_hypermaps(int edges, const BoundaryWord& w,
                                  bool semi_simple = false);

// Same sweep without coloring or boundary constraints: all rooted planar maps
// with a marked dart (sanity anchor: 2 one-edge maps, the loop and the link).
long count_rooted_maps(int edges);

// Second, independent engine: glue a prescribed multiset of colored inner
// faces (color, degree) around the boundary polygon by matching sides.
// Reaches sizes the rotation sweep cannot.
ProfileCounts glue_hypermaps(const std::vector<std::pair<Side, int>>& inner_faces,
                             const BoundaryWord& w, bool semi_simple = false);

// Eulerian triangulations with an alternating boundary of length 2p and
// n black (hence n white) inner triangles, via the gluing engine.
long count_eulerian_alternating(int n, int p, bool semi_simple);

// Minimal witness of an enumerated map, enough to walk its boundary.
struct RootedMap {
    std::vector<int> rotation;  // sigma; the edge involution is d -> d^1
    std::vector<int> vertex_of; // dart -> vertex id
    std::vector<int> contour;   // boundary darts in visit order from the root
    BoundaryWord word;          // boundary condition the map was matched to
};

// Canonically orient every edge with white on its right; along each simple
// component of the boundary contour, the clockwise-minus-counterclockwise
// edge count must be divisible by m.
bool check_orientation_lemma(const RootedMap& map, int m);

// Sweep every m-constellation with the given boundary at `edges` edges and
// report whether all of them satisfy the orientation property.
bool orientation_lemma_holds(int m, int edges, const BoundaryWord& w);

} // namespace altmap

#endif
