#ifndef SLWEB_TEST_FIXTURES_HPP
#define SLWEB_TEST_FIXTURES_HPP

#include "slweb/web.hpp"

namespace slweb::fixtures {

// one arc between two boundary points
inline Web cup(int n, int label) {
    PlanarMap m(n);
    int b1 = m.add_vertex(PlanarMap::VertexKind::Port);
    int b2 = m.add_vertex(PlanarMap::VertexKind::Port);
    int e = m.add_edge(b1, b2, label);
    m.set_rot(b1, {2 * e});
    m.set_rot(b2, {2 * e + 1});
    attach_rim(m, {b1, b2});
    return Web{std::move(m)};
}

// The rank-4 square web: an oriented square with two self-dual sides,
// one leg per corner, marked at the bottom corner of the disk.  Corners
// sit at compass points NE=P, SE=Q, NW=R, SW=S; reading order from the
// bottom mark is SE, NE, NW, SW and the boundary reads w1,w3,w1,w3.
inline Web square_web_rank4() {
    PlanarMap m(4);
    int P = m.add_vertex(PlanarMap::VertexKind::Internal);
    int Q = m.add_vertex(PlanarMap::VertexKind::Internal);
    int R = m.add_vertex(PlanarMap::VertexKind::Internal);
    int S = m.add_vertex(PlanarMap::VertexKind::Internal);
    int NEp = m.add_vertex(PlanarMap::VertexKind::Port);
    int SEp = m.add_vertex(PlanarMap::VertexKind::Port);
    int NWp = m.add_vertex(PlanarMap::VertexKind::Port);
    int SWp = m.add_vertex(PlanarMap::VertexKind::Port);
    int e1 = m.add_edge(P, Q, 1);    // east side, pointing south
    int e2 = m.add_edge(P, R, 2);    // north side, pointing west
    int e3 = m.add_edge(P, NEp, 1);  // outward leg
    int e4 = m.add_edge(S, Q, 2);    // south side, pointing east
    int e5 = m.add_edge(S, R, 1);    // west side, pointing north
    int e6 = m.add_edge(S, SWp, 1);  // outward leg
    int e7 = m.add_edge(NWp, R, 1);  // inward leg
    int e8 = m.add_edge(SEp, Q, 1);  // inward leg
    m.set_rot(P, {2 * e3, 2 * e2, 2 * e1});
    m.set_rot(Q, {2 * e1 + 1, 2 * e4 + 1, 2 * e8 + 1});
    m.set_rot(R, {2 * e2 + 1, 2 * e7 + 1, 2 * e5 + 1});
    m.set_rot(S, {2 * e4, 2 * e5, 2 * e6});
    m.set_rot(NEp, {2 * e3 + 1});
    m.set_rot(SEp, {2 * e8});
    m.set_rot(NWp, {2 * e7});
    m.set_rot(SWp, {2 * e6 + 1});
    attach_rim(m, {SEp, NEp, NWp, SWp});
    return Web{std::move(m)};
}

// A rank-3 web with a square internal face: four corners alternating
// all-out and all-in, one leg each.
inline Web square_web_rank3() {
    PlanarMap m(3);
    int A = m.add_vertex(PlanarMap::VertexKind::Internal);  // NE source
    int B = m.add_vertex(PlanarMap::VertexKind::Internal);  // SE sink
    int C = m.add_vertex(PlanarMap::VertexKind::Internal);  // SW source
    int D = m.add_vertex(PlanarMap::VertexKind::Internal);  // NW sink
    int pa = m.add_vertex(PlanarMap::VertexKind::Port);
    int pb = m.add_vertex(PlanarMap::VertexKind::Port);
    int pc = m.add_vertex(PlanarMap::VertexKind::Port);
    int pd = m.add_vertex(PlanarMap::VertexKind::Port);
    int ab = m.add_edge(A, B, 1);  // east side, south
    int ad = m.add_edge(A, D, 1);  // north side, west
    int cb = m.add_edge(C, B, 1);  // south side, east
    int cd = m.add_edge(C, D, 1);  // west side, north
    int la = m.add_edge(A, pa, 1);
    int lb = m.add_edge(pb, B, 1);
    int lc = m.add_edge(C, pc, 1);
    int ld = m.add_edge(pd, D, 1);
    m.set_rot(A, {2 * la, 2 * ad, 2 * ab});              // NE: leg 45, W 180, S 270
    m.set_rot(B, {2 * ab + 1, 2 * cb + 1, 2 * lb + 1});  // SE: N 90, W 180, leg 315
    m.set_rot(C, {2 * cb, 2 * cd, 2 * lc});              // SW: E 0, N 90, leg 225
    m.set_rot(D, {2 * ad + 1, 2 * ld + 1, 2 * cd + 1});  // NW: E 0, leg 135, S 270
    m.set_rot(pa, {2 * la + 1});
    m.set_rot(pb, {2 * lb});
    m.set_rot(pc, {2 * lc + 1});
    m.set_rot(pd, {2 * ld});
    attach_rim(m, {pb, pa, pd, pc});  // reading from a mark below the SE corner
    return Web{std::move(m)};
}

// Rank-4: an oriented square of single-index edges between four
// self-dual legs (two source corners and two sink corners).  Boundary
// reads w2,w2,w2,w2.  Edge 0 (the east side) names the square face.
inline Web kim_square() {
    PlanarMap m(4);
    int A = m.add_vertex(PlanarMap::VertexKind::Internal);  // NE source
    int B = m.add_vertex(PlanarMap::VertexKind::Internal);  // SE sink
    int C = m.add_vertex(PlanarMap::VertexKind::Internal);  // SW source
    int D = m.add_vertex(PlanarMap::VertexKind::Internal);  // NW sink
    int pa = m.add_vertex(PlanarMap::VertexKind::Port);
    int pb = m.add_vertex(PlanarMap::VertexKind::Port);
    int pc = m.add_vertex(PlanarMap::VertexKind::Port);
    int pd = m.add_vertex(PlanarMap::VertexKind::Port);
    int ab = m.add_edge(A, B, 1);
    int ad = m.add_edge(A, D, 1);
    int cb = m.add_edge(C, B, 1);
    int cd = m.add_edge(C, D, 1);
    int la = m.add_edge(pa, A, 2);
    int lb = m.add_edge(B, pb, 2);
    int lc = m.add_edge(pc, C, 2);
    int ld = m.add_edge(D, pd, 2);
    m.set_rot(A, {2 * la + 1, 2 * ad, 2 * ab});
    m.set_rot(B, {2 * ab + 1, 2 * cb + 1, 2 * lb});
    m.set_rot(C, {2 * cb, 2 * cd, 2 * lc + 1});
    m.set_rot(D, {2 * ad + 1, 2 * ld, 2 * cd + 1});
    m.set_rot(pa, {2 * la});
    m.set_rot(pb, {2 * lb + 1});
    m.set_rot(pc, {2 * lc});
    m.set_rot(pd, {2 * ld + 1});
    attach_rim(m, {pb, pa, pd, pc});
    return Web{std::move(m)};
}

}  // namespace slweb::fixtures

#endif
