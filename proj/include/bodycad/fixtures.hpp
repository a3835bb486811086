#pragma once

// Reference frameworks and graphs used by tests, the acceptance run and the
// command-line examples.

#include "bodycad/cad.hpp"
#include "bodycad/decomposition.hpp"
#include "bodycad/graph.hpp"

namespace bodycad {

/// Two bodies joined by a line-line coincidence, a point-plane coincidence
/// and a point-point distance. Minimally rigid.
CadFramework two_body_framework();

/// two_body_framework without the point-point distance: one rotational
/// degree of freedom about the shared axis.
CadFramework two_body_framework_flexible();

/// Two bodies held by point-point coincidences at two distinct points; free
/// to rotate about the line through them.
CadFramework double_banana();

/// 9 point-bodies and 9 line-bodies carrying the 27 incidences of Pappus's
/// configuration. With generic = false the points sit at exact rational
/// positions, so the last incidence is implied by the others; with
/// generic = true every incidence gets its own random point and direction.
CadFramework build_pappus(bool generic);

/// The (3,1)-counted graph on 4 vertices with edges a..i (ids 0..8); c and h
/// are red.
BiColoredMultigraph thicket31_graph();

/// Hand-encoded three-tree decomposition of thicket31_graph():
/// {a,b,g}, {e,f,i} black-only and {c,h,d} on the angular side.
ForestCertificate thicket31_certificate();

}  // namespace bodycad
