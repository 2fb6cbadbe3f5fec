#include <doctest.h>

#include <cstdio>

#include "attractors/config.hpp"
#include "attractors/io.hpp"

using namespace attractors;

namespace {

const char* kLinearConfig = R"json({
  "model": {"kind": "linear", "lambda": 1.0, "dim": 1, "dt": 0.01},
  "symbol": {"kind": "torus", "frequencies": [1.0], "amplitudes": [1.0], "modes": [1]},
  "sampling": {"sigma_samples": 6, "tau_samples": 3, "cloud_points": 8,
               "cloud_level": 2.0, "target_level": 1.0},
  "tolerances": {"net_eps": 0.01, "gap_threshold": 0.001, "attraction_tol": 0.05},
  "budget": {"h": 12.0, "window": 4.0, "lag_step": 0.5, "t_max": 25.0,
             "pullback_T": 10.0, "pullback_T_max": 80.0},
  "seed": 7,
  "output_dir": "out/linear"
})json";

}  // namespace

TEST_CASE("config round-trips through JSON with a stable hash") {
  ExperimentConfig cfg = ExperimentConfig::from_json_text(kLinearConfig);
  CHECK(std::holds_alternative<LinearModel>(cfg.process.model));
  CHECK(cfg.pipeline.sigma_samples == 6);
  CHECK(cfg.pipeline.net_eps == doctest::Approx(0.01));
  CHECK(cfg.pullback_T == doctest::Approx(10.0));
  CHECK(cfg.output_dir == "out/linear");

  const std::string text = cfg.to_json_text();
  ExperimentConfig again = ExperimentConfig::from_json_text(text);
  CHECK(again.to_json_text() == text);
  CHECK(again.hash() == cfg.hash());
  CHECK_FALSE(cfg.hash().empty());

  ExperimentConfig tweaked = cfg;
  tweaked.pipeline.seed += 1;
  CHECK(tweaked.hash() != cfg.hash());
}

TEST_CASE("malformed configs throw invalid_argument") {
  CHECK_THROWS_AS(ExperimentConfig::from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_json_text(R"({"model":{"kind":"nope"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      ExperimentConfig::from_json_text(
          R"({"model":{"kind":"linear","lambda":-1.0},"symbol":{"kind":"torus","frequencies":[1.0],"amplitudes":[1.0],"modes":[1]}})"),
      std::invalid_argument);
}

TEST_CASE("cloud CSV round-trips bitwise") {
  PointCloud C({{0.1, -2.5e-17, 3.0}, {1.0 / 3.0, 2.0, -0.0}}, "probe");
  const std::string csv = cloud_to_csv(C);
  PointCloud back = cloud_from_csv(csv);
  REQUIRE(back.size() == C.size());
  for (std::size_t i = 0; i < C.size(); ++i) CHECK(back.points[i] == C.points[i]);
  CHECK(cloud_to_csv(back) == csv);
}

TEST_CASE("cloud CSV rejects ragged rows") {
  CHECK_THROWS_AS(cloud_from_csv("dim,2\n1.0,2.0\n3.0\n"), std::invalid_argument);
}

TEST_CASE("curve and profile CSV formatting") {
  AttractionCurve curve;
  curve.lags = {0.5, 1.0};
  curve.values = {0.25, 0.125};
  const std::string csv = curve_to_csv(curve);
  CHECK(csv.find("lag,value") == 0);
  CHECK(csv.find("0.5") != std::string::npos);

  const std::string prof = profile_to_csv({{0.0, 2.0}, {1.0, 0.5}});
  CHECK(prof.find("lag,covering_diameter") == 0);
}

TEST_CASE("manifest embeds the config hash and extras") {
  AttractorMeta meta;
  meta.sigma_samples = 4;
  meta.net_eps = 0.02;
  const std::string text = manifest_json(meta, true, "abc123", {{"gap", 0.005}});
  CHECK(text.find("abc123") != std::string::npos);
  CHECK(text.find("gap") != std::string::npos);
  CHECK(text.find("true") != std::string::npos);
}

TEST_CASE("text files round-trip through disk") {
  const std::string path = "roundtrip_probe.txt";
  write_text_file(path, "line one\nline two\n");
  CHECK(read_text_file(path) == "line one\nline two\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("definitely/not/here.txt"), std::runtime_error);
}
