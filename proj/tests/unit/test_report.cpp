#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "facenum/constructions.hpp"
#include "facenum/dual_graph.hpp"
#include "facenum/report.hpp"

using namespace facenum;

namespace {

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Dot, PillowHasFiveParallelEdges) {
  const std::string dot = export_dot(dual_graph(pillow(4)));
  EXPECT_EQ(count(dot, "0 -- 1"), 5);
  EXPECT_EQ(count(dot, "[label="), 2);
}

TEST(Dot, OddSphereCycleWithSelfEdges) {
  const std::string dot = export_dot(dual_graph(sphere_odd(5, 6)));
  int self = 0;
  for (int v = 0; v < 6; ++v) self += count(dot, "  " + std::to_string(v) + " -- " + std::to_string(v) + ";");
  EXPECT_EQ(self, 12);
  EXPECT_EQ(count(dot, " -- "), 18);
}

TEST(Dot, SeparatingAnnotationHighlightsLoops) {
  const std::string dot = export_dot(dual_graph(p3(4)), DotAnnotations{true, {}});
  EXPECT_EQ(count(dot, "color=red"), 24);
  EXPECT_GT(count(dot, "fillcolor=lightgrey"), 0);
}

TEST(Dot, SequenceLabels) {
  const std::string dot = export_dot(dual_graph(pillow(2)), DotAnnotations{false, {1, 0}});
  EXPECT_NE(dot.find("1 [label=\"1\\n#1\"]"), std::string::npos);
  EXPECT_NE(dot.find("0 [label=\"0\\n#2\"]"), std::string::npos);
}

TEST(Report, SchemaAndValues) {
  const auto j = nlohmann::json::parse(analysis_report_json(p3(4)));
  EXPECT_EQ(j["schema"], "facenum.analysis/1");
  EXPECT_EQ(j["f_vector"][0], 13);
  EXPECT_EQ(j["f_vector"][4], 16);
  EXPECT_EQ(j["delta"], "5");
  EXPECT_EQ(j["dual_graph"]["branching_number"], 24);
  EXPECT_EQ(j["classification"]["nonsingular_from"], 2);
}

TEST(Report, ByteStable) {
  for (const Triangulation& t : {pillow(4), ds2(), sphere_odd(3, 3), p3_nl(1)}) {
    const std::string a = analysis_report_json(t);
    EXPECT_EQ(a, analysis_report_json(t));
    EXPECT_EQ(a.back(), '\n');
  }
}

TEST(Report, OpenInputOmitsClosedOnlySections) {
  const auto j = nlohmann::json::parse(analysis_report_json(ds2()));
  EXPECT_EQ(j["boundary_ridges"], 1);
  EXPECT_FALSE(j.contains("classification"));
  EXPECT_FALSE(j.contains("branching_bound"));
}
