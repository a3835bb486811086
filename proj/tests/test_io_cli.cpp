#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "bodycad/analyzer.hpp"
#include "bodycad/cli.hpp"
#include "bodycad/error.hpp"
#include "bodycad/fixtures.hpp"
#include "bodycad/io.hpp"

using namespace bodycad;

namespace {

const std::string kFixtures = BODYCAD_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bodycad");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string line_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) return line;
  }
  return {};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Framework, JsonRoundTrip) {
  for (const auto& fw : {two_body_framework(), double_banana(), build_pappus(false),
                         build_pappus(true)}) {
    EXPECT_EQ(parse_framework(framework_to_json(fw)), fw);
  }
}

TEST(Framework, FixtureFileMatchesBuiltInFramework) {
  EXPECT_EQ(parse_framework(read_file(kFixtures + "/two_body.json")), two_body_framework());
  EXPECT_EQ(parse_framework(read_file(kFixtures + "/double_banana.json")).constraints,
            double_banana().constraints);
}

TEST(Framework, SyntaxErrorHasLineAndColumn) {
  try {
    parse_framework("{\n  \"bodies\": [\n    {\"id\": 1,}\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column"), std::string::npos) << e.what();
  }
}

TEST(Framework, RejectsFloatsUnknownKindsAndBadArity) {
  const std::string head = R"({"bodies": [{"id": "A"}, {"id": "B"}], "constraints": [)";
  EXPECT_EQ(code_of([&] {
              parse_framework(head + R"({"kind": "point-plane-coincidence", "i": "A", "j": "B",
                 "p_i": [0.5, 1, 2], "p_j": [0, 0, 0], "d": [1, 2, 3]}]})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] {
              parse_framework(head + R"({"kind": "point-point-weld", "i": "A", "j": "B"}]})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] {
              parse_framework(head + R"({"kind": "point-plane-coincidence", "i": "A", "j": "B",
                 "p_i": ["1/2", 1, 2], "d": [1, 2, 3]}]})");
            }),
            ErrorCode::MalformedConstraint);
  EXPECT_EQ(code_of([&] {
              parse_framework(head + R"({"kind": "point-point-distance", "i": "A", "j": "C",
                 "p_i": [1, 1, 2], "p_j": [0, 0, 0], "distance": 3}]})");
            }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] {
              parse_framework(head + R"({"kind": "point-plane-coincidence", "i": "A", "j": "B",
                 "p_i": [1, 1, 2], "p_j": [0, 0, 0], "d": [0, 0, 0]}]})");
            }),
            ErrorCode::ParseError);
}

TEST(Framework, ExactNumberForms) {
  const auto fw = parse_framework(
      R"({"bodies": [{"id": "A"}, {"id": "B"}], "constraints": [
          {"kind": "point-plane-coincidence", "i": "A", "j": "B",
           "p_i": ["3/7", "0.25", -2], "p_j": [0, 0, 0], "d": [1, 2, 3]}]})");
  EXPECT_EQ(fw.constraints[0].id, "c1");
  EXPECT_EQ((*fw.constraints[0].geometry.p_i)[0], Rational(3, 7));
  EXPECT_EQ((*fw.constraints[0].geometry.p_i)[1], Rational(1, 4));
  EXPECT_EQ((*fw.constraints[0].geometry.p_i)[2], Rational(-2));
}

TEST(BareGraph, ParsesThicketFixture) {
  const auto h = parse_bare_graph(read_file(kFixtures + "/thicket31.graph"));
  EXPECT_EQ(h.edges(), thicket31_graph().edges());
  EXPECT_EQ(parse_bare_graph(bare_graph_to_text(h)).edges(), h.edges());
}

TEST(BareGraph, ErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      parse_bare_graph(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("1 2 black\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("n=3\n1 2 black\n1 4 red\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("n=3\n# c\n1 2 green\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("n=3\n2 2 red\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("").find("missing header"), std::string::npos);
}

TEST(Report, JsonRoundTripIsLossless) {
  for (const auto& fw : {two_body_framework(), two_body_framework_flexible(), double_banana(),
                         build_pappus(false)}) {
    const auto r = analyze(fw, 3);
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
  auto fw = two_body_framework();
  fw.constraints.push_back(fw.constraints[2]);
  fw.constraints.back().id = "dup";
  const auto r = analyze(fw, 3, FieldChoice::Rational);
  ASSERT_FALSE(r.circuits.empty());
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
}

TEST(Cli, AnalyzeTwoBodyExitsZero) {
  const auto r = run({"analyze", kFixtures + "/two_body.json", "--seed", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2 angular (red), 4 blind (black)"), std::string::npos);
}

TEST(Cli, AnalyzeFlexibleExitsTwo) {
  EXPECT_EQ(run({"analyze", kFixtures + "/two_body_flexible.json"}).code, 2);
}

TEST(Cli, AnalyzeDoubleBananaExitsFour) {
  const auto r = run({"analyze", kFixtures + "/double_banana.json", "--json"});
  EXPECT_EQ(r.code, 4);
  const auto report = report_from_json(r.out);
  EXPECT_EQ(report.embedding.dof, 1);
  EXPECT_TRUE(report.withheld());
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run({"analyze", kFixtures + "/unknown_kind.json"}).code, 1);
  EXPECT_EQ(run({"analyze", kFixtures + "/float_number.json"}).code, 1);
  const auto syntax = run({"analyze", kFixtures + "/syntax_error.json"});
  EXPECT_EQ(syntax.code, 1);
  EXPECT_NE(syntax.err.find("line 5, column 3"), std::string::npos) << syntax.err;
  EXPECT_EQ(run({"analyze", kFixtures + "/does_not_exist.json"}).code, 1);
  EXPECT_EQ(run({"analyze", kFixtures + "/two_body.json", "--field", "real"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, TextAndJsonEncodeTheSameVerdict) {
  for (const char* f : {"two_body", "two_body_flexible", "double_banana"}) {
    const std::string path = kFixtures + "/" + f + ".json";
    const auto text = run({"analyze", path, "--text", "--seed", "9"});
    const auto json = run({"analyze", path, "--json", "--seed", "9"});
    EXPECT_EQ(text.code, json.code);
    const auto report = report_from_json(json.out);
    const std::string verdict =
        report.withheld() ? "Withheld" : std::string(to_string(report.combinatorial->status));
    EXPECT_EQ(line_starting(text.out, "combinatorial: ").rfind("combinatorial: " + verdict, 0), 0u);
    EXPECT_NE(line_starting(text.out, "cross-check: ").find(to_string(report.cross_check)),
              std::string::npos);
    EXPECT_EQ(line_starting(text.out, "exit: "), "exit: " + std::to_string(json.code));
  }
}

TEST(Cli, SameSeedSameBytes) {
  const std::string path = kFixtures + "/two_body.json";
  EXPECT_EQ(run({"analyze", path, "--json", "--seed", "4"}).out,
            run({"analyze", path, "--json", "--seed", "4"}).out);
}

TEST(Cli, CheckGraph) {
  const auto ok = run({"check-graph", kFixtures + "/thicket31.graph", "--k", "3", "--g", "1"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("certificate:"), std::string::npos);
  const auto red = run({"check-graph", kFixtures + "/thicket31_four_red.graph", "--k", "3", "--g", "1"});
  EXPECT_EQ(red.code, 3);
  EXPECT_NE(red.out.find("NotCounted"), std::string::npos);
  EXPECT_EQ(run({"check-graph", kFixtures + "/thicket31.graph", "--k", "3", "--g", "0"}).code, 1);
}

TEST(Cli, CrossValidate) {
  const auto a = run({"crossvalidate", "--trials", "1", "--seed", "77"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"crossvalidate", "--trials", "1", "--seed", "77"}).out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 1);
  EXPECT_EQ(run({"crossvalidate", "--trials", "40", "--nmax", "5", "--k", "3", "--g", "1"}).code, 0);
  EXPECT_EQ(run({"crossvalidate", "--k", "2", "--g", "3"}).code, 1);
}
