#pragma once

// The 3D body-and-cad front end: the 21 pairwise constraint kinds, their
// expansion into primitive angular and blind rows, and the labelled primitive
// cad graph (a (6,3)-frame when no point-point coincidence is present).
//
// Columns of body b are (v_b, -omega_b). A primitive row is stored as its
// 6-vector label r; the assembled row carries r on body i and -r on body j,
// so its value on twists s_i, s_j is r . (v_i, -w_i) - r . (v_j, -w_j).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bodycad/frame.hpp"
#include "bodycad/geometry.hpp"
#include "bodycad/graph.hpp"

namespace bodycad {

enum class ConstraintKind {
  PointPointCoincidence,      // L1
  PointPointDistance,         // L2
  PointLineCoincidence,       // L3
  PointLineDistance,          // L4
  PointPlaneCoincidence,      // L5
  PointPlaneDistance,         // L6
  LineLineParallel,           // L7
  LineLinePerpendicular,      // L8
  LineLineFixedAngle,         // L9
  LineLineCoincidence,        // L10
  LineLineDistance,           // L11
  LinePlaneParallel,          // L12
  LinePlanePerpendicular,     // L13
  LinePlaneFixedAngle,        // L14
  LinePlaneCoincidence,       // L15
  LinePlaneDistance,          // L16
  PlanePlaneParallel,         // L17
  PlanePlanePerpendicular,    // L18
  PlanePlaneFixedAngle,       // L19
  PlanePlaneCoincidence,      // L20
  PlanePlaneDistance,         // L21
};

inline constexpr std::array<ConstraintKind, 21> kAllConstraintKinds = {
    ConstraintKind::PointPointCoincidence,   ConstraintKind::PointPointDistance,
    ConstraintKind::PointLineCoincidence,    ConstraintKind::PointLineDistance,
    ConstraintKind::PointPlaneCoincidence,   ConstraintKind::PointPlaneDistance,
    ConstraintKind::LineLineParallel,        ConstraintKind::LineLinePerpendicular,
    ConstraintKind::LineLineFixedAngle,      ConstraintKind::LineLineCoincidence,
    ConstraintKind::LineLineDistance,        ConstraintKind::LinePlaneParallel,
    ConstraintKind::LinePlanePerpendicular,  ConstraintKind::LinePlaneFixedAngle,
    ConstraintKind::LinePlaneCoincidence,    ConstraintKind::LinePlaneDistance,
    ConstraintKind::PlanePlaneParallel,      ConstraintKind::PlanePlanePerpendicular,
    ConstraintKind::PlanePlaneFixedAngle,    ConstraintKind::PlanePlaneCoincidence,
    ConstraintKind::PlanePlaneDistance,
};

/// Geometry slots a constraint kind may use.
enum class GeometryField { P, PI, PJ, D, DI, DJ, Distance, Angle };

std::string_view to_string(ConstraintKind kind);
std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s);
std::string_view to_string(GeometryField field);

/// The exact set of geometry fields the kind's parameter schema requires.
const std::vector<GeometryField>& schema_fields(ConstraintKind kind);

/// Angular and blind primitive counts per kind.
struct PrimitiveCounts {
  int angular = 0;
  int blind = 0;
  friend bool operator==(const PrimitiveCounts&, const PrimitiveCounts&) = default;
};
PrimitiveCounts table_counts(ConstraintKind kind);

/// Parameters of one constraint. Points of lines and planes use p_i/p_j,
/// their directions (line direction or plane normal) d_i/d_j; kinds sharing a
/// single element between both bodies use p and d; kinds sharing one
/// direction between two elements use p_i, p_j and d.
struct Geometry {
  std::optional<Point3> p;
  std::optional<Point3> p_i;
  std::optional<Point3> p_j;
  std::optional<Direction3> d;
  std::optional<Direction3> d_i;
  std::optional<Direction3> d_j;
  std::optional<Rational> distance;
  std::optional<Rational> angle;  // degrees

  bool has(GeometryField f) const;

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

struct CadConstraint {
  std::string id;
  ConstraintKind kind = ConstraintKind::PointPointDistance;
  int i = 0;  // 0-based body indices
  int j = 0;
  Geometry geometry;

  friend bool operator==(const CadConstraint&, const CadConstraint&) = default;
};

struct Body {
  std::string id;
  std::string name;
  friend bool operator==(const Body&, const Body&) = default;
};

struct CadFramework {
  std::vector<Body> bodies;
  std::vector<CadConstraint> constraints;

  friend bool operator==(const CadFramework&, const CadFramework&) = default;
};

/// Throws Error(MalformedConstraint) when the geometry slots do not match
/// the kind's schema exactly, i == j, a distance is negative or an angle lies
/// outside [0, 180], or a body index is out of range (when num_bodies >= 0).
void validate(const CadConstraint& c, int num_bodies = -1);

enum class PrimitiveFlavor { Angular, Blind, PointPointCoincidenceRow };

std::string_view to_string(PrimitiveFlavor f);

using Row6 = std::array<Rational, 6>;

struct PrimitiveConstraint {
  std::size_t source = 0;  // index of the originating CadConstraint
  int row_in_source = 0;
  PrimitiveFlavor flavor = PrimitiveFlavor::Blind;
  Row6 row6;

  friend bool operator==(const PrimitiveConstraint&,
                         const PrimitiveConstraint&) = default;
};

/// Value of the assembled row (r on body i, -r on body j) on two twists.
Rational contract(const Row6& row, const Twist& body_i, const Twist& body_j);

/// Keeps the angle between direction a (body i) and b (body j): label
/// (0, b x a), whose row evaluates to (a x b) . (omega_i - omega_j).
/// Throws Error(ParallelVectors) when a x b = 0.
PrimitiveConstraint angular_row(const Direction3& a, const Direction3& b);

/// Keeps the relative velocity of the coincident point p orthogonal to c:
/// label (c, -(p x c)), whose row evaluates to c . (p'_i - p'_j).
PrimitiveConstraint blind_row(const Point3& p, const Direction3& c);

/// Deterministic (a, b) with a x b = c exactly.
std::pair<Direction3, Direction3> complement_pair(const Direction3& c);
/// Same, rejecting the zero vector with Error(ZeroDirection).
std::pair<Direction3, Direction3> complement_pair(const Vec3& c);

/// The three coincidence rows (e_x, e_y, e_z blind rows at p).
std::array<PrimitiveConstraint, 3> point_point_coincidence_rows(const Point3& p);

/// Primitive rows for one constraint, `source` and `row_in_source` filled in.
std::vector<PrimitiveConstraint> expand(const CadConstraint& constraint,
                                        std::size_t source = 0);

struct PrimitiveFrame {
  BiColoredMultigraph graph;
  FrameLabeling<Rational> labeling;
  std::vector<PrimitiveConstraint> primitives;  // indexed by edge id
  bool taint = false;  // a point-point coincidence is present
};

/// One vertex per body, one red edge per angular row and one black edge per
/// blind or coincidence row, labelled with its 6-vector. Edge ids follow
/// the expansion order.
PrimitiveFrame build_primitive_frame(const CadFramework& fw);

}  // namespace bodycad
