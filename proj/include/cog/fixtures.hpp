#pragma once

#include "cog/action.hpp"
#include "cog/complex.hpp"
#include "cog/scwol.hpp"

// Small standard examples shared by the tests, the acceptance suite and the CLI.
namespace cog::fixtures {

ScwolPtr point();
ScwolPtr segment();       // v1, v2, e with a1: e -> v1, a2: e -> v2
ScwolPtr path2();         // subdivided segment, 5 vertices
ScwolPtr triangle();      // closed 2-simplex, 7 vertices
ScwolPtr tetrahedron();   // closed 3-simplex, 15 vertices
ScwolPtr tripod();        // center c, leaves l1..l3, edge cells s1..s3
ScwolPtr hexagon();       // boundary of a triangle, a 6-cycle
ScwolPtr octahedron();    // boundary of the octahedron, a 2-sphere

CellComplex tripod_cells();

// Full automorphism group acting on a scwol.
ActionPtr automorphism_action(const ScwolPtr& s);
ActionPtr tripod_s3();
ActionPtr flip();  // order two reflection of path2

// Z/2 at both ends of the segment, trivial group on the middle.
CogPtr d3seg();
// Inclusions of the two Z/2 as (0 1) and (1 2) in S3 with trivial edge elements.
GroupMorphism d3seg_into_s3(const CogPtr& c);
CogPtr z2_point();    // one vertex carrying Z/2
CogPtr z2_segment();  // Z/2 on every vertex of the segment, identity maps
// Trivial groups on every vertex.
CogPtr trivial_complex(const ScwolPtr& s);
CellComplex octahedron_cells();
// Order two subgroup generated by the antipodal map, inside an automorphism
// action of the octahedron. It acts freely on all cells.
PermGroup antipodal_subgroup(const ActionPtr& octahedron_action);
// Order three rotation of the tripod inside its automorphism action.
PermGroup tripod_rotation(const ActionPtr& tripod_action);

}  // namespace cog::fixtures
