#include <altmap/map_oracle.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace altmap {

BoundaryWord alternating_word(int r)
{
    BoundaryWord w;
    for (int i = 0; i < r; ++i) {
        w.push_back(Side::white);
        w.push_back(Side::black);
    }
    return w;
}

BoundaryWord monochromatic_word(Side c, int p) { return BoundaryWord(p, c); }

namespace {

constexpr int kMaxSweepEdges = 6;

// Labeled rotation systems per rooted map: relabelings of the darts fixing
// the root and commuting with the edge involution.
long normalization(int edges)
{
    long n = 1;
    for (int k = 1; k < edges; ++k) n *= 2L * k;
    return n;
}

struct Faces {
    std::vector<int> face_of; // dart -> face id
    std::vector<int> degree;  // face id -> degree
    int count = 0;
};

// Faces are the cycles of d -> sigma[d^1].
Faces face_cycles(const std::vector<int>& sigma)
{
    int n = static_cast<int>(sigma.size());
    Faces f;
    f.face_of.assign(n, -1);
    for (int d = 0; d < n; ++d) {
        if (f.face_of[d] >= 0) continue;
        int deg = 0;
        for (int e = d; f.face_of[e] < 0; e = sigma[e ^ 1]) {
            f.face_of[e] = f.count;
            ++deg;
        }
        f.degree.push_back(deg);
        ++f.count;
    }
    return f;
}

// Vertices are the cycles of sigma.
std::vector<int> vertex_ids(const std::vector<int>& sigma, int& vertex_count)
{
    int n = static_cast<int>(sigma.size());
    std::vector<int> v(n, -1);
    vertex_count = 0;
    for (int d = 0; d < n; ++d) {
        if (v[d] >= 0) continue;
        for (int e = d; v[e] < 0; e = sigma[e]) v[e] = vertex_count;
        ++vertex_count;
    }
    return v;
}

bool transitive(const std::vector<int>& sigma)
{
    int n = static_cast<int>(sigma.size());
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {sigma[d], d ^ 1})
            if (!seen[e]) {
                seen[e] = 1;
                ++reached;
                stack.push_back(e);
            }
    }
    return reached == n;
}

// Articulation vertices of a multigraph; loops are irrelevant and skipped.
std::vector<char> articulation_points(int nv,
                                      const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::vector<std::pair<int, int>>> adj(nv); // (to, edge id)
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto [a, b] = edges[i];
        if (a == b) continue;
        adj[a].emplace_back(b, i);
        adj[b].emplace_back(a, i);
    }
    std::vector<char> cut(nv, 0);
    std::vector<int> num(nv, -1), low(nv, 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int pedge) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (auto [to, id] : adj[v]) {
            if (id == pedge) continue;
            if (num[to] >= 0) {
                low[v] = std::min(low[v], num[to]);
            } else {
                dfs(to, id);
                low[v] = std::min(low[v], low[to]);
                ++children;
                if (pedge != -1 && low[to] >= num[v]) cut[v] = 1;
            }
        }
        if (pedge == -1 && children > 1) cut[v] = 1;
    };
    for (int v = 0; v < nv; ++v)
        if (num[v] < 0) dfs(v, -1);
    return cut;
}

// Shared per-rotation analysis; invokes the callback once per valid
// inner-face coloring with the map's profile and boundary witness.
template <typename F>
void sweep(int edges, const BoundaryWord& w, bool semi_simple, F&& visit)
{
    if (edges > kMaxSweepEdges)
        throw std::invalid_argument("map oracle: edge count above the sweep cap");
    int l = static_cast<int>(w.size());
    if (edges == 0) {
        if (l == 0) {
            RootedMap m;
            m.word = w;
            visit(MapProfile{1, {}, {}}, m);
        }
        return;
    }
    int n = 2 * edges;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        if (!transitive(sigma)) continue;
        Faces f = face_cycles(sigma);
        int vc = 0;
        std::vector<int> vid = vertex_ids(sigma, vc);
        if (vc - edges + f.count != 2) continue; // planarity
        int bf = f.face_of[0];
        if (f.degree[bf] != l) continue;

        std::vector<int> contour(l);
        std::vector<int> pos_of(n, -1);
        for (int d = 0, i = 0; i < l; ++i, d = sigma[d ^ 1]) {
            contour[i] = d;
            pos_of[d] = i;
        }

        // Rule 2 and the forced colors from rule 1.
        std::vector<int> forced(f.count, -1); // 0 black, 1 white
        bool ok = true;
        for (int i = 0; i < l && ok; ++i) {
            int other = contour[i] ^ 1;
            if (f.face_of[other] == bf) {
                int j = pos_of[other];
                if (j < 0 || w[i] == w[j]) ok = false;
            } else {
                int want = w[i] == Side::black ? 1 : 0;
                int& slot = forced[f.face_of[other]];
                if (slot == -1)
                    slot = want;
                else if (slot != want)
                    ok = false;
            }
        }
        if (!ok) continue;

        // Proper 2-coloring of the inner-face adjacency graph.
        std::vector<std::vector<int>> fadj(f.count);
        for (int d = 0; d < n; d += 2) {
            int f1 = f.face_of[d], f2 = f.face_of[d ^ 1];
            if (f1 != bf && f2 != bf) {
                fadj[f1].push_back(f2);
                fadj[f2].push_back(f1);
            }
        }
        std::vector<int> color(f.count, -1);
        std::vector<int> free_roots;
        for (int g = 0; g < f.count && ok; ++g) {
            if (g == bf || color[g] >= 0) continue;
            // Tentative bipartition of the component, then fit the forced
            // colors by flipping it as a whole (or not).
            std::vector<int> members{g};
            color[g] = 0;
            for (std::size_t qi = 0; qi < members.size() && ok; ++qi) {
                int u = members[qi];
                for (int v : fadj[u]) {
                    if (color[v] < 0) {
                        color[v] = 1 - color[u];
                        members.push_back(v);
                    } else if (color[v] == color[u]) {
                        ok = false; // odd cycle: no proper 2-coloring
                    }
                }
            }
            if (!ok) break;
            bool keep_ok = true, flip_ok = true;
            for (int u : members) {
                if (forced[u] < 0) continue;
                if (forced[u] != color[u]) keep_ok = false;
                if (forced[u] != 1 - color[u]) flip_ok = false;
            }
            if (!keep_ok && !flip_ok) {
                ok = false;
            } else if (keep_ok && flip_ok) {
                free_roots.push_back(g); // untouched by the boundary
            } else if (flip_ok) {
                for (int u : members) color[u] = 1 - color[u];
            }
        }
        if (!ok) continue;

        if (semi_simple) {
            std::vector<std::pair<int, int>> medges;
            for (int d = 0; d < n; d += 2)
                medges.emplace_back(vid[d], vid[d ^ 1]);
            std::vector<char> cut = articulation_points(vc, medges);
            bool ss = true;
            for (int i = 1; i < l; i += 2)
                if (cut[vid[contour[i]]]) ss = false;
            if (!ss) continue;
        }

        RootedMap witness;
        witness.rotation = sigma;
        witness.vertex_of = vid;
        witness.contour = contour;
        witness.word = w;

        // Component membership for the flip enumeration.
        std::vector<int> comp(f.count, -1);
        for (std::size_t ci = 0; ci < free_roots.size(); ++ci) {
            std::vector<int> stack{free_roots[ci]};
            comp[free_roots[ci]] = static_cast<int>(ci);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : fadj[u])
                    if (comp[v] < 0) {
                        comp[v] = static_cast<int>(ci);
                        stack.push_back(v);
                    }
            }
        }
        int nfree = static_cast<int>(free_roots.size());
        for (long mask = 0; mask < (1L << nfree); ++mask) {
            MapProfile prof;
            prof.vertices = vc;
            for (int g = 0; g < f.count; ++g) {
                if (g == bf) continue;
                int c = color[g];
                if (comp[g] >= 0 && (mask >> comp[g] & 1)) c = 1 - c;
                (c == 0 ? prof.black_degrees : prof.white_degrees)
                    .push_back(f.degree[g]);
            }
            std::sort(prof.black_degrees.begin(), prof.black_degrees.end());
            std::sort(prof.white_degrees.begin(), prof.white_degrees.end());
            visit(prof, witness);
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

ProfileCounts divide_out(std::map<MapProfile, long> labeled, long norm)
{
    ProfileCounts out;
    for (auto& [prof, c] : labeled) {
        if (c % norm != 0)
            throw std::logic_error("map oracle: labeled count not divisible by "
                                   "the relabeling order");
        out.emplace(prof, c / norm);
    }
    return out;
}

} // namespace

ProfileCounts enumerate_hypermaps(int edges, const BoundaryWord& w,
                                  bool semi_simple)
{
    std::map<MapProfile, long> labeled;
    sweep(edges, w, semi_simple,
          [&](const MapProfile& p, const RootedMap&) { ++labeled[p]; });
    return divide_out(std::move(labeled), normalization(edges));
}

long count_rooted_maps(int edges)
{
    if (edges > kMaxSweepEdges)
        throw std::invalid_argument("map oracle: edge count above the sweep cap");
    if (edges == 0) return 1;
    int n = 2 * edges;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    long labeled = 0;
    do {
        if (!transitive(sigma)) continue;
        Faces f = face_cycles(sigma);
        int vc = 0;
        vertex_ids(sigma, vc);
        if (vc - edges + f.count == 2) ++labeled;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    long norm = normalization(edges);
    if (labeled % norm != 0)
        throw std::logic_error("map oracle: labeled count not divisible");
    return labeled / norm;
}

bool check_orientation_lemma(const RootedMap& map, int m)
{
    int l = static_cast<int>(map.contour.size());
    if (l == 0) return true;
    // Clockwise around the map the boundary is on the left with color w_i,
    // so the step agrees with the canonical (white on the right) orientation
    // exactly when w_i is black.
    std::vector<std::pair<int, long>> stack; // (vertex, sign total at entry)
    auto on_stack = [&](int v) {
        for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i)
            if (stack[i].first == v) return i;
        return -1;
    };
    long sum = 0;
    stack.emplace_back(map.vertex_of[map.contour[0]], 0);
    for (int i = 0; i < l; ++i) {
        sum += map.word[i] == Side::black ? 1 : -1;
        int v = map.vertex_of[map.contour[(i + 1) % l]];
        int at = on_stack(v);
        if (at >= 0) {
            if ((sum - stack[at].second) % m != 0) return false;
            stack.resize(at + 1);
            sum = stack[at].second;
        } else {
            stack.emplace_back(v, sum);
        }
    }
    return true;
}

bool orientation_lemma_holds(int m, int edges, const BoundaryWord& w)
{
    bool all = true;
    sweep(edges, w, false, [&](const MapProfile& p, const RootedMap& map) {
        for (int deg : p.black_degrees)
            if (deg != m) return;
        for (int deg : p.white_degrees)
            if (deg % m != 0) return;
        if (!check_orientation_lemma(map, m)) all = false;
    });
    return all;
}

namespace {

struct GlueState {
    std::vector<int> face_of, pos_of, first_dart, fdeg, fcolor; // fcolor: -1 bnd
    std::vector<int> match;
    const BoundaryWord* word;
    bool semi_simple;
    std::map<MapProfile, long>* labeled;
};

int corner_of(const GlueState& st, int face, int pos) // corner before side pos
{
    return st.first_dart[face] + pos;
}

bool glue_compatible(const GlueState& st, int a, int b)
{
    int fa = st.face_of[a], fb = st.face_of[b];
    int ca = st.fcolor[fa], cb = st.fcolor[fb];
    const BoundaryWord& w = *st.word;
    if (ca == -1 && cb == -1) return w[st.pos_of[a]] != w[st.pos_of[b]];
    if (ca == -1) return cb == (w[st.pos_of[a]] == Side::black ? 1 : 0);
    if (cb == -1) return ca == (w[st.pos_of[b]] == Side::black ? 1 : 0);
    return ca != cb;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    void join(int a, int b) { up[find(a)] = find(b); }
};

void finish_gluing(GlueState& st)
{
    int ndarts = static_cast<int>(st.match.size());
    int nfaces = static_cast<int>(st.fdeg.size());
    // Connectivity over faces.
    UnionFind fuf(nfaces);
    for (int d = 0; d < ndarts; ++d)
        fuf.join(st.face_of[d], st.face_of[st.match[d]]);
    int fcomp = 0;
    for (int g = 0; g < nfaces; ++g)
        if (fuf.find(g) == g) ++fcomp;
    if (fcomp != 1) return;
    // Vertices from corner identifications: gluing side a to side b joins
    // start(a)~end(b) and end(a)~start(b).
    UnionFind cuf(ndarts);
    for (int a = 0; a < ndarts; ++a) {
        int b = st.match[a];
        if (b < a) continue;
        int fa = st.face_of[a], fb = st.face_of[b];
        int pa = st.pos_of[a], pb = st.pos_of[b];
        cuf.join(corner_of(st, fa, pa), corner_of(st, fb, (pb + 1) % st.fdeg[fb]));
        cuf.join(corner_of(st, fa, (pa + 1) % st.fdeg[fa]), corner_of(st, fb, pb));
    }
    std::vector<int> vname(ndarts, -1);
    int vc = 0;
    for (int c = 0; c < ndarts; ++c)
        if (cuf.find(c) == c) vname[c] = vc++;
    auto vertex_at = [&](int corner) { return vname[cuf.find(corner)]; };
    int edges = ndarts / 2;
    if (vc - edges + nfaces != 2) return; // planarity

    if (st.semi_simple) {
        std::vector<std::pair<int, int>> medges;
        for (int a = 0; a < ndarts; ++a) {
            if (st.match[a] < a) continue;
            int fa = st.face_of[a], pa = st.pos_of[a];
            medges.emplace_back(vertex_at(corner_of(st, fa, pa)),
                                vertex_at(corner_of(st, fa, (pa + 1) % st.fdeg[fa])));
        }
        std::vector<char> cut = articulation_points(vc, medges);
        int l = static_cast<int>(st.word->size());
        for (int j = 1; j < l; j += 2)
            if (cut[vertex_at(corner_of(st, 0, j))]) return;
    }

    MapProfile prof;
    prof.vertices = vc;
    for (int g = 1; g < nfaces; ++g)
        (st.fcolor[g] == 0 ? prof.black_degrees : prof.white_degrees)
            .push_back(st.fdeg[g]);
    std::sort(prof.black_degrees.begin(), prof.black_degrees.end());
    std::sort(prof.white_degrees.begin(), prof.white_degrees.end());
    ++(*st.labeled)[prof];
}

void glue_search(GlueState& st, int from)
{
    int ndarts = static_cast<int>(st.match.size());
    int a = from;
    while (a < ndarts && st.match[a] >= 0) ++a;
    if (a == ndarts) {
        finish_gluing(st);
        return;
    }
    for (int b = a + 1; b < ndarts; ++b) {
        if (st.match[b] >= 0 || !glue_compatible(st, a, b)) continue;
        st.match[a] = b;
        st.match[b] = a;
        glue_search(st, a + 1);
        st.match[a] = -1;
        st.match[b] = -1;
    }
}

} // namespace

ProfileCounts glue_hypermaps(const std::vector<std::pair<Side, int>>& inner_faces,
                             const BoundaryWord& w, bool semi_simple)
{
    int l = static_cast<int>(w.size());
    if (l == 0) {
        ProfileCounts out;
        if (inner_faces.empty()) out.emplace(MapProfile{1, {}, {}}, 1);
        return out;
    }
    GlueState st;
    st.word = &w;
    st.semi_simple = semi_simple;
    auto add_face = [&](int color, int degree) {
        int id = static_cast<int>(st.fdeg.size());
        st.first_dart.push_back(static_cast<int>(st.face_of.size()));
        st.fdeg.push_back(degree);
        st.fcolor.push_back(color);
        for (int p = 0; p < degree; ++p) {
            st.face_of.push_back(id);
            st.pos_of.push_back(p);
        }
    };
    add_face(-1, l); // the boundary polygon, sides in clockwise contour order
    for (auto [c, deg] : inner_faces) add_face(c == Side::black ? 0 : 1, deg);
    if (st.face_of.size() % 2 != 0) return {};
    st.match.assign(st.face_of.size(), -1);
    std::map<MapProfile, long> labeled;
    st.labeled = &labeled;
    glue_search(st, 0);

    // Each rooted map appears once per rotation of each inner face's side
    // labels and per permutation of identical faces.
    std::map<std::pair<int, int>, long> groups;
    for (auto [c, deg] : inner_faces) ++groups[{c == Side::black ? 0 : 1, deg}];
    long sym = 1;
    for (auto& [key, cnt] : groups)
        for (long k = 1; k <= cnt; ++k) sym *= k * key.second; // deg^cnt * cnt!
    return divide_out(std::move(labeled), sym);
}

long count_eulerian_alternating(int n, int p, bool semi_simple)
{
    std::vector<std::pair<Side, int>> faces;
    for (int i = 0; i < n; ++i) {
        faces.emplace_back(Side::black, 3);
        faces.emplace_back(Side::white, 3);
    }
    ProfileCounts counts = glue_hypermaps(faces, alternating_word(p), semi_simple);
    long total = 0;
    for (auto& [prof, c] : counts) total += c;
    return total;
}

} // namespace altmap
