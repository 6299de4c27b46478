#ifndef DISKNET_MOVES_HPP
#define DISKNET_MOVES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "disknet/network.hpp"

namespace disknet {

enum class MoveKind {
    LoopRemoval,
    PendantRemoval,
    Series,
    Parallel,
    YToDelta,
    DeltaToY,
    AntennaJump,
    AntennaAbsorb,
    TriangleCond,
    TriangleCondInverse,
    SquareCond,
    PentagonCond,
    PentagonCondInverse,
    HexagonCondConjectural,
};

const char* move_kind_name(MoveKind k);
MoveKind move_kind_from_name(const std::string& name);
std::vector<MoveKind> all_move_kinds();

/// A concrete application site: the vertices and edges matching the move's
/// left-hand pattern, in pattern order.
///
///   LoopRemoval      v=[v]             e=[loop]
///   PendantRemoval   v=[w,v]           e=[pendant edge]
///   Series           v=[w,x,y]         e=[wx, wy]
///   Parallel         v=[u,v]           e=[e1, e2]
///   YToDelta         v=[w,x,y,z]       e=[wx, wy, wz]           (rotation order)
///   DeltaToY         v=[x,y,z]         e=[xy, yz, zx]           (face-walk order)
///   AntennaJump      v=[b,v]           e=[antenna edge, edge jumped across]
///   AntennaAbsorb    v=[x,w,u1,u2,u3]  e=[g, l1,l2,l3, t12,t23,t31]
///   TriangleCond     v=[W,T,R,P]       e=[c,a,b, f,d,e]   (legs then sides)
///   TriangleCondInv  v=[W,T,R,N,L]     e=[C,A,B, E,D,F]
///   SquareCond       v=[W,S,T,P,R,L]   e=[d,c,b,a, g,f,e,h,i]
///   PentagonCond     v=[W,V4,V5,V1,V2,V3,M',K',L']
///                    e=[d,e,a,b,c, i,f,g,h,j, m,k,l]
///   PentagonCondInv  same labeling on the image network
///   HexagonCond      v=[W,V4,V5,V6,V1,V2,V3,O',P',M',N']
///                    e=[d,e,f,a,b,c, j,k,l,g,h,i, o,p,m,n,q]
struct MoveSite {
    MoveKind kind;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    friend bool operator==(const MoveSite& a, const MoveSite& b) {
        return a.kind == b.kind && a.vertices == b.vertices && a.edges == b.edges;
    }
};

/// All pattern matches of a move kind, in a deterministic order. Conditional
/// moves are listed wherever the shape matches; positivity of the output
/// conductances is checked at apply time.
std::vector<MoveSite> find_sites(const EmbeddedNetwork& net, MoveKind kind);

/// Applies the move at the site. Throws SiteMismatch when the site does not
/// match the current network, NegativeConductance when a conditional move's
/// output would not be positive, and ConjecturalCheckFailed when the hexagon
/// move fails its post-hoc numeric response check.
EmbeddedNetwork apply_move(const EmbeddedNetwork& net, const MoveSite& site);

/// True when apply_move would succeed (used to pre-filter conditional sites).
bool move_applicable(const EmbeddedNetwork& net, const MoveSite& site);

struct WalkResult {
    EmbeddedNetwork net;
    std::vector<MoveSite> trace;
};

/// Applies `steps` random applicable moves drawn from `kinds` (steps with no
/// applicable site are skipped). Deterministic per seed.
WalkResult random_walk(const EmbeddedNetwork& net, const std::vector<MoveKind>& kinds, int steps,
                       std::uint64_t seed);

}  // namespace disknet

#endif
