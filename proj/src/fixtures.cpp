#include "bodycad/fixtures.hpp"

#include <random>
#include <string>

namespace bodycad {

namespace {

Vec3 v3(const Rational& x, const Rational& y, const Rational& z) { return {x, y, z}; }

CadConstraint make(std::string id, ConstraintKind kind, int i, int j) {
  CadConstraint c;
  c.id = std::move(id);
  c.kind = kind;
  c.i = i;
  c.j = j;
  return c;
}

/// Intersection of line (p1, p2) with line (q1, q2) in the z = 0 plane.
Point3 meet(const Point3& p1, const Point3& p2, const Point3& q1, const Point3& q2) {
  const Vec3 d = p2 - p1;
  const Vec3 e = q2 - q1;
  const Vec3 w = q1 - p1;
  const Rational den = d[0] * e[1] - d[1] * e[0];
  const Rational t = (w[0] * e[1] - w[1] * e[0]) / den;
  return p1 + t * d;
}

Rational small_rational(std::mt19937_64& rng) {
  return ratio(uniform_int(rng, -50, 50), uniform_int(rng, 1, 13));
}

Vec3 random_vec(std::mt19937_64& rng) {
  Vec3 v;
  do {
    v = {small_rational(rng), small_rational(rng), small_rational(rng)};
  } while (is_zero(v));
  return v;
}

}  // namespace

CadFramework two_body_framework() {
  CadFramework fw;
  fw.bodies = {{"B1", "first body"}, {"B2", "second body"}};

  CadConstraint axis = make("i", ConstraintKind::LineLineCoincidence, 0, 1);
  axis.geometry.p = v3(1, 2, 3);
  axis.geometry.d = Direction3(v3(2, -1, 3));

  CadConstraint face = make("ii", ConstraintKind::PointPlaneCoincidence, 0, 1);
  face.geometry.p_i = v3(1, 1, 5);
  face.geometry.p_j = v3(0, 0, 0);
  face.geometry.d = Direction3(v3(2, 3, -1));

  CadConstraint bar = make("iii", ConstraintKind::PointPointDistance, 0, 1);
  bar.geometry.p_i = v3(4, -1, 2);
  bar.geometry.p_j = v3(2, -4, -4);
  bar.geometry.distance = Rational(7);

  fw.constraints = {axis, face, bar};
  return fw;
}

CadFramework two_body_framework_flexible() {
  CadFramework fw = two_body_framework();
  fw.constraints.pop_back();
  return fw;
}

CadFramework double_banana() {
  CadFramework fw;
  fw.bodies = {{"left", "left banana"}, {"right", "right banana"}};
  CadConstraint a = make("a", ConstraintKind::PointPointCoincidence, 0, 1);
  a.geometry.p = v3(1, 0, 0);
  CadConstraint b = make("b", ConstraintKind::PointPointCoincidence, 0, 1);
  b.geometry.p = v3(-1, 2, 3);
  fw.constraints = {a, b};
  return fw;
}

CadFramework build_pappus(bool generic) {
  const Point3 A = v3(0, 0, 0), B = v3(2, 0, 0), C = v3(5, 0, 0);
  const Point3 a = v3(Rational(1, 2), 1, 0), b = v3(3, 1, 0), c = v3(Rational(13, 3), 1, 0);
  const Point3 p_ab = meet(A, b, B, a);
  const Point3 p_ac = meet(A, c, C, a);
  const Point3 p_bc = meet(B, c, C, b);

  struct PointBody {
    std::string name;
    Point3 at;
  };
  const std::vector<PointBody> points = {{"A", A},       {"B", B},       {"C", C},
                                         {"a", a},       {"b", b},       {"c", c},
                                         {"p_ab", p_ab}, {"p_ac", p_ac}, {"p_bc", p_bc}};
  struct LineBody {
    std::string name;
    Point3 from;
    Point3 to;
    std::vector<int> on;  // indices into points
  };
  const std::vector<LineBody> lines = {
      {"ABC", A, C, {0, 1, 2}},          {"abc", a, c, {3, 4, 5}},
      {"Ab", A, b, {0, 4, 6}},           {"Ba", B, a, {1, 3, 6}},
      {"Ac", A, c, {0, 5, 7}},           {"Ca", C, a, {2, 3, 7}},
      {"Bc", B, c, {1, 5, 8}},           {"Cb", C, b, {2, 4, 8}},
      {"p_ab-p_bc", p_ab, p_bc, {6, 7, 8}},
  };

  CadFramework fw;
  for (const auto& p : points) fw.bodies.push_back({"pt_" + p.name, "point " + p.name});
  for (const auto& l : lines) fw.bodies.push_back({"ln_" + l.name, "line " + l.name});

  std::mt19937_64 rng(0x9a9905);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const LineBody& l = lines[li];
    for (int pi : l.on) {
      const auto& pt = points[static_cast<std::size_t>(pi)];
      CadConstraint con = make(pt.name + "@" + l.name, ConstraintKind::PointLineCoincidence,
                               pi, static_cast<int>(points.size() + li));
      if (generic) {
        const Point3 where = random_vec(rng);
        con.geometry.p_i = where;
        con.geometry.p_j = where;
        con.geometry.d = Direction3(random_vec(rng));
      } else {
        con.geometry.p_i = pt.at;
        con.geometry.p_j = l.from;
        con.geometry.d = Direction3(l.to - l.from);
      }
      fw.constraints.push_back(std::move(con));
    }
  }
  return fw;
}

BiColoredMultigraph thicket31_graph() {
  GraphBuilder b(4);
  b.black(1, 4, "a");
  b.black(2, 4, "b");
  b.red(1, 2, "c");
  b.black(2, 3, "d");
  b.black(1, 2, "e");
  b.black(3, 4, "f");
  b.black(1, 3, "g");
  b.red(3, 4, "h");
  b.black(2, 3, "i");
  return b.build();
}

ForestCertificate thicket31_certificate() {
  // ids: a0 b1 c2 d3 e4 f5 g6 h7 i8
  ForestCertificate cert;
  cert.class_of = {{0, 0}, {1, 0}, {6, 0}, {4, 1}, {5, 1}, {8, 1},
                   {2, 2}, {7, 2}, {3, 2}};
  return cert;
}

}  // namespace bodycad
