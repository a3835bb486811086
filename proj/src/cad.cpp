#include "bodycad/cad.hpp"

#include <algorithm>
#include <string>

#include "bodycad/error.hpp"

namespace bodycad {

Direction3::Direction3(Vec3 v) : v_(std::move(v)) {
  if (is_zero(v_)) throw Error(ErrorCode::ZeroDirection, "zero direction vector");
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
}

namespace {

struct KindInfo {
  ConstraintKind kind;
  std::string_view name;
  PrimitiveCounts counts;
  std::vector<GeometryField> fields;
};

using GF = GeometryField;

const std::vector<KindInfo>& kind_table() {
  static const std::vector<KindInfo> table = {
      {ConstraintKind::PointPointCoincidence, "point-point-coincidence", {0, 3}, {GF::P}},
      {ConstraintKind::PointPointDistance, "point-point-distance", {0, 1},
       {GF::PI, GF::PJ, GF::Distance}},
      {ConstraintKind::PointLineCoincidence, "point-line-coincidence", {0, 2},
       {GF::PI, GF::PJ, GF::D}},
      {ConstraintKind::PointLineDistance, "point-line-distance", {0, 1},
       {GF::PI, GF::PJ, GF::D, GF::Distance}},
      {ConstraintKind::PointPlaneCoincidence, "point-plane-coincidence", {0, 1},
       {GF::PI, GF::PJ, GF::D}},
      {ConstraintKind::PointPlaneDistance, "point-plane-distance", {0, 1},
       {GF::PI, GF::PJ, GF::D, GF::Distance}},
      {ConstraintKind::LineLineParallel, "line-line-parallel", {2, 0},
       {GF::PI, GF::PJ, GF::D}},
      {ConstraintKind::LineLinePerpendicular, "line-line-perpendicular", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ}},
      {ConstraintKind::LineLineFixedAngle, "line-line-fixed-angle", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ, GF::Angle}},
      {ConstraintKind::LineLineCoincidence, "line-line-coincidence", {2, 2},
       {GF::P, GF::D}},
      {ConstraintKind::LineLineDistance, "line-line-distance", {0, 1},
       {GF::PI, GF::DI, GF::PJ, GF::DJ, GF::Distance}},
      {ConstraintKind::LinePlaneParallel, "line-plane-parallel", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ}},
      {ConstraintKind::LinePlanePerpendicular, "line-plane-perpendicular", {2, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ}},
      {ConstraintKind::LinePlaneFixedAngle, "line-plane-fixed-angle", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ, GF::Angle}},
      {ConstraintKind::LinePlaneCoincidence, "line-plane-coincidence", {1, 1},
       {GF::PI, GF::DI, GF::PJ, GF::DJ}},
      {ConstraintKind::LinePlaneDistance, "line-plane-distance", {1, 1},
       {GF::PI, GF::DI, GF::PJ, GF::DJ, GF::Distance}},
      {ConstraintKind::PlanePlaneParallel, "plane-plane-parallel", {2, 0},
       {GF::PI, GF::PJ, GF::D}},
      {ConstraintKind::PlanePlanePerpendicular, "plane-plane-perpendicular", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ}},
      {ConstraintKind::PlanePlaneFixedAngle, "plane-plane-fixed-angle", {1, 0},
       {GF::PI, GF::DI, GF::PJ, GF::DJ, GF::Angle}},
      {ConstraintKind::PlanePlaneCoincidence, "plane-plane-coincidence", {2, 1},
       {GF::P, GF::D}},
      {ConstraintKind::PlanePlaneDistance, "plane-plane-distance", {2, 1},
       {GF::PI, GF::PJ, GF::D, GF::Distance}},
  };
  return table;
}

const KindInfo& info(ConstraintKind kind) {
  return kind_table()[static_cast<std::size_t>(kind)];
}

constexpr std::array<GeometryField, 8> kAllFields = {
    GF::P, GF::PI, GF::PJ, GF::D, GF::DI, GF::DJ, GF::Distance, GF::Angle};

[[noreturn]] void malformed(const CadConstraint& c, const std::string& why) {
  throw Error(ErrorCode::MalformedConstraint,
              "constraint '" + c.id + "' (" + std::string(to_string(c.kind)) +
                  "): " + why);
}

Row6 make_row(const Vec3& v_part, const Vec3& w_part) {
  return {v_part[0], v_part[1], v_part[2], w_part[0], w_part[1], w_part[2]};
}

}  // namespace

std::string_view to_string(ConstraintKind kind) { return info(kind).name; }

std::optional<ConstraintKind> constraint_kind_from_string(std::string_view s) {
  for (const auto& k : kind_table()) {
    if (k.name == s) return k.kind;
  }
  return std::nullopt;
}

std::string_view to_string(GeometryField field) {
  switch (field) {
    case GF::P: return "p";
    case GF::PI: return "p_i";
    case GF::PJ: return "p_j";
    case GF::D: return "d";
    case GF::DI: return "d_i";
    case GF::DJ: return "d_j";
    case GF::Distance: return "distance";
    case GF::Angle: return "angle";
  }
  return "?";
}

const std::vector<GeometryField>& schema_fields(ConstraintKind kind) {
  return info(kind).fields;
}

PrimitiveCounts table_counts(ConstraintKind kind) { return info(kind).counts; }

bool Geometry::has(GeometryField f) const {
  switch (f) {
    case GF::P: return p.has_value();
    case GF::PI: return p_i.has_value();
    case GF::PJ: return p_j.has_value();
    case GF::D: return d.has_value();
    case GF::DI: return d_i.has_value();
    case GF::DJ: return d_j.has_value();
    case GF::Distance: return distance.has_value();
    case GF::Angle: return angle.has_value();
  }
  return false;
}

void validate(const CadConstraint& c, int num_bodies) {
  if (c.i == c.j) malformed(c, "both ends on the same body");
  if (num_bodies >= 0 &&
      (c.i < 0 || c.j < 0 || c.i >= num_bodies || c.j >= num_bodies)) {
    malformed(c, "body index out of range");
  }
  const auto& required = schema_fields(c.kind);
  for (GeometryField f : kAllFields) {
    const bool wanted =
        std::find(required.begin(), required.end(), f) != required.end();
    if (wanted && !c.geometry.has(f)) {
      malformed(c, "missing field '" + std::string(to_string(f)) + "'");
    }
    if (!wanted && c.geometry.has(f)) {
      malformed(c, "unexpected field '" + std::string(to_string(f)) + "'");
    }
  }
  if (c.geometry.distance && sgn(*c.geometry.distance) < 0) {
    malformed(c, "negative distance");
  }
  if (c.geometry.angle &&
      (sgn(*c.geometry.angle) < 0 || *c.geometry.angle > 180)) {
    malformed(c, "angle outside [0, 180] degrees");
  }
}

std::string_view to_string(PrimitiveFlavor f) {
  switch (f) {
    case PrimitiveFlavor::Angular: return "angular";
    case PrimitiveFlavor::Blind: return "blind";
    case PrimitiveFlavor::PointPointCoincidenceRow: return "point-point";
  }
  return "?";
}

Rational contract(const Row6& row, const Twist& body_i, const Twist& body_j) {
  Rational acc = 0;
  for (std::size_t a = 0; a < 3; ++a) {
    acc += row[a] * (body_i.v[a] - body_j.v[a]);
    acc -= row[a + 3] * (body_i.omega[a] - body_j.omega[a]);
  }
  return acc;
}

PrimitiveConstraint angular_row(const Direction3& a, const Direction3& b) {
  const Vec3 ab = cross(a.vec(), b.vec());
  if (is_zero(ab)) {
    throw Error(ErrorCode::ParallelVectors, "angular row needs non-parallel vectors");
  }
  return {0, 0, PrimitiveFlavor::Angular, make_row({0, 0, 0}, -ab)};
}

PrimitiveConstraint blind_row(const Point3& p, const Direction3& c) {
  return {0, 0, PrimitiveFlavor::Blind, make_row(c.vec(), -cross(p, c.vec()))};
}

std::pair<Direction3, Direction3> complement_pair(const Direction3& c) {
  Vec3 a = cross({0, 1, 1}, c.vec());
  if (is_zero(a)) a = cross({1, 0, 0}, c.vec());
  const Rational scale = 1 / dot(a, a);
  Vec3 b = scale * cross(c.vec(), a);
  return {Direction3(std::move(a)), Direction3(std::move(b))};
}

std::pair<Direction3, Direction3> complement_pair(const Vec3& c) {
  return complement_pair(Direction3(c));
}

std::array<PrimitiveConstraint, 3> point_point_coincidence_rows(const Point3& p) {
  std::array<PrimitiveConstraint, 3> rows;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    Vec3 e{0, 0, 0};
    e[axis] = 1;
    rows[axis] = blind_row(p, Direction3(e));
    rows[axis].flavor = PrimitiveFlavor::PointPointCoincidenceRow;
    rows[axis].row_in_source = static_cast<int>(axis);
  }
  return rows;
}

namespace {

/// Two angular rows holding direction d (body j) orthogonal to the
/// complement pair of `axis` (body i): together they keep d parallel to axis.
void parallel_rows(const Direction3& axis, const Direction3& d,
                   std::vector<PrimitiveConstraint>& out) {
  const auto [a, b] = complement_pair(axis);
  out.push_back(angular_row(a, d));
  out.push_back(angular_row(b, d));
}

/// Closest point on line i to line j for non-parallel lines.
Point3 foot_on_first_line(const Point3& pi, const Vec3& di, const Point3& pj,
                          const Vec3& dj) {
  // Solve (w + s di - t dj) . di = 0 and . dj = 0 with w = pi - pj.
  const Vec3 w = pi - pj;
  const Rational a = dot(di, di);
  const Rational b = dot(di, dj);
  const Rational c = dot(dj, dj);
  const Rational d = dot(w, di);
  const Rational e = dot(w, dj);
  const Rational det = a * c - b * b;  // |di x dj|^2, nonzero here
  const Rational s = (b * e - c * d) / det;
  return pi + s * di;
}

}  // namespace

std::vector<PrimitiveConstraint> expand(const CadConstraint& c,
                                        std::size_t source) {
  validate(c);
  const Geometry& g = c.geometry;
  std::vector<PrimitiveConstraint> out;
  switch (c.kind) {
    case ConstraintKind::PointPointCoincidence: {
      const auto rows = point_point_coincidence_rows(*g.p);
      out.assign(rows.begin(), rows.end());
      break;
    }
    case ConstraintKind::PointPointDistance: {
      const Vec3 along = *g.p_i - *g.p_j;
      if (is_zero(along)) malformed(c, "points coincide; use a coincidence");
      out.push_back(blind_row(*g.p_i, Direction3(along)));
      break;
    }
    case ConstraintKind::PointLineCoincidence: {
      const auto [a, b] = complement_pair(*g.d);
      out.push_back(blind_row(*g.p_i, a));
      out.push_back(blind_row(*g.p_i, b));
      break;
    }
    case ConstraintKind::PointLineDistance: {
      const Vec3& d = g.d->vec();
      const Vec3 normal = cross(d, cross(*g.p_i - *g.p_j, d));
      if (is_zero(normal)) malformed(c, "point lies on the line");
      out.push_back(blind_row(*g.p_i, Direction3(normal)));
      break;
    }
    case ConstraintKind::PointPlaneCoincidence:
    case ConstraintKind::PointPlaneDistance:
      out.push_back(blind_row(*g.p_i, *g.d));
      break;
    case ConstraintKind::LineLineParallel:
    case ConstraintKind::PlanePlaneParallel:
      parallel_rows(*g.d, *g.d, out);
      break;
    case ConstraintKind::LineLinePerpendicular:
    case ConstraintKind::LineLineFixedAngle:
    case ConstraintKind::LinePlaneParallel:
    case ConstraintKind::LinePlaneFixedAngle:
    case ConstraintKind::PlanePlanePerpendicular:
    case ConstraintKind::PlanePlaneFixedAngle:
      out.push_back(angular_row(*g.d_i, *g.d_j));
      break;
    case ConstraintKind::LineLineCoincidence: {
      parallel_rows(*g.d, *g.d, out);
      const auto [a, b] = complement_pair(*g.d);
      out.push_back(blind_row(*g.p, a));
      out.push_back(blind_row(*g.p, b));
      break;
    }
    case ConstraintKind::LineLineDistance: {
      const Vec3& di = g.d_i->vec();
      const Vec3& dj = g.d_j->vec();
      const Vec3 common = cross(di, dj);
      if (!is_zero(common)) {
        const Point3 foot = foot_on_first_line(*g.p_i, di, *g.p_j, dj);
        out.push_back(blind_row(foot, Direction3(common)));
      } else {
        const Vec3 normal = cross(di, cross(*g.p_i - *g.p_j, di));
        if (is_zero(normal)) malformed(c, "lines coincide");
        out.push_back(blind_row(*g.p_i, Direction3(normal)));
      }
      break;
    }
    case ConstraintKind::LinePlanePerpendicular:
      parallel_rows(*g.d_i, *g.d_j, out);
      break;
    case ConstraintKind::LinePlaneCoincidence:
    case ConstraintKind::LinePlaneDistance:
      out.push_back(angular_row(*g.d_i, *g.d_j));
      out.push_back(blind_row(*g.p_i, *g.d_j));
      break;
    case ConstraintKind::PlanePlaneCoincidence:
      parallel_rows(*g.d, *g.d, out);
      out.push_back(blind_row(*g.p, *g.d));
      break;
    case ConstraintKind::PlanePlaneDistance:
      parallel_rows(*g.d, *g.d, out);
      out.push_back(blind_row(*g.p_i, *g.d));
      break;
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r].source = source;
    out[r].row_in_source = static_cast<int>(r);
  }
  return out;
}

PrimitiveFrame build_primitive_frame(const CadFramework& fw) {
  const int n = static_cast<int>(fw.bodies.size());
  if (n < 1) throw Error(ErrorCode::MalformedConstraint, "framework has no bodies");
  GraphBuilder builder(n);
  PrimitiveFrame frame{BiColoredMultigraph(n), {SparsityParams::body_and_cad(), {}},
                       {}, false};
  for (std::size_t s = 0; s < fw.constraints.size(); ++s) {
    const CadConstraint& c = fw.constraints[s];
    validate(c, n);
    for (auto& prim : expand(c, s)) {
      const Color color =
          prim.flavor == PrimitiveFlavor::Angular ? Color::Red : Color::Black;
      if (prim.flavor == PrimitiveFlavor::PointPointCoincidenceRow) frame.taint = true;
      const EdgeId id = builder.add(c.i + 1, c.j + 1, color,
                                    c.id + "#" + std::to_string(prim.row_in_source));
      frame.labeling.vec_of.emplace(
          id, std::vector<Rational>(prim.row6.begin(), prim.row6.end()));
      frame.primitives.push_back(std::move(prim));
    }
  }
  frame.graph = builder.build();
  return frame;
}

}  // namespace bodycad
