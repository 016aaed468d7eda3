// Copyright 2026 The Symcone Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "symcone/commands.h"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symcone/error.h"
#include "symcone/hierarchy.h"
#include "symcone/horn.h"
#include "symcone/json_io.h"
#include "symcone/peirce.h"
#include "symcone/report.h"
#include "symcone/sos.h"
#include "symcone/suite.h"

namespace symcone {
namespace {

struct Flags {
  std::string json_path;
  double tol = 1e-9;
  std::optional<std::uint64_t> seed;
  bool timing = false;

  std::string file;
  std::string algebra_file;
  std::string operator_file;
  std::string matrix_file;
  std::vector<double> scales;
  int samples = 2000;
  int level = 0;
  int rank = 6;
  std::string expect;
};

std::uint64_t ResolveSeed(const Flags& f) {
  if (f.seed) return *f.seed;
  if (const char* env = std::getenv("SYMCONE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kMalformedInput, "SYMCONE_SEED is not a number");
    }
  }
  return 42;
}

Algebra LoadAlgebra(const std::string& path) {
  return Algebra(DescriptorFromJson(ReadJsonFile(path)));
}

Vector5 ScalesFrom(const Flags& f) {
  if (f.scales.empty()) return Vector5::Ones();
  if (f.scales.size() != 5) {
    throw Error(ErrorCode::kMalformedInput, "--scales takes five values");
  }
  return Vector5(f.scales.data());
}

// A bare array of rows, or an object with "matrix".
Matrix LoadMatrix(const std::string& path) {
  const Json j = ReadJsonFile(path);
  return MatrixFromJson(j.is_object() && j.contains("matrix") ? j["matrix"]
                                                              : j);
}

// The slice map over the canonical frame of `algebra` (hadamard(5) if the
// matrix file names none).
SliceMap SliceFor(const std::string& path, const Flags& f) {
  const Json j = ReadJsonFile(path);
  const Algebra alg(j.is_object() && j.contains("algebra")
                        ? DescriptorFromJson(j["algebra"])
                        : AlgebraDescriptor::Hadamard(5));
  return SliceMap::FromRays(ExtremeRaySet::Canonical(alg, ScalesFrom(f)));
}

void Expect(Report& report, const std::string& name, const std::string& got,
            const std::string& expect, double residual,
            const std::string& anchor) {
  report.payload["verdict"] = got;
  report.Add(name, expect.empty() || expect == got, residual, anchor);
}

Report AlgebraInfo(const Flags& f, std::mt19937_64& rng) {
  const Algebra alg = LoadAlgebra(f.file);
  Report report;
  report.payload["algebra"] = ToJson(alg.descriptor());
  report.payload["dim"] = alg.dim();
  report.payload["rank"] = alg.rank();
  report.payload["idempotent_norms"] = IdempotentNorms(alg);
  report.payload["unit"] = VectorToJson(alg.Unit().coords());
  CheckJordanAxioms(alg, 20, rng, report);
  return report;
}

Report HornBuild(const Flags& f) {
  const Algebra alg = LoadAlgebra(f.algebra_file);
  const ExtremeRaySet rays = ExtremeRaySet::Canonical(alg, ScalesFrom(f));
  const SelfAdjointOperator h = BuildHorn(rays);
  Report report;
  report.payload["operator"] = ToJson(h);
  Json deltas = Json::array();
  for (const Element& d : rays.deltas()) deltas.push_back(ToJson(d));
  report.payload["deltas"] = deltas;
  const double asym = (h.matrix() - h.matrix().transpose()).norm();
  report.Add("horn.build_horn.self_adjoint", asym == 0.0, asym, "plumbing");
  return report;
}

Report HornVerify(const Flags& f, std::mt19937_64& rng) {
  const Algebra alg = LoadAlgebra(f.algebra_file);
  const Vector5 scales = ScalesFrom(f);
  const ExtremeRaySet rays = ExtremeRaySet::Canonical(alg, scales);
  const ExtremeRaySet unit = ExtremeRaySet::Canonical(alg);
  const std::string label = alg.descriptor().DebugString();
  SuiteOptions options;
  options.tolerance = f.tol;
  Report report;
  if (alg.descriptor() == AlgebraDescriptor::Hadamard(5) &&
      scales == Vector5::Ones()) {
    CheckHornReconstruction(report);
  }
  CheckWitness(rays, label, report);
  CheckReduction(rays, label, 500, 2000, rng, options, report);
  CheckRankOneSubtransformations(unit, label, report);
  CheckQcConjugation(unit, {scales.data(), scales.data() + 5}, label, report);
  CheckIrreducibility(rays, label, report);
  if (alg.rank() >= 6) {
    CheckCertificateParts(PeirceDecompose(alg, CanonicalFrame(alg)), label,
                          report);
  }
  return report;
}

Report CopCheck(const Flags& f, std::mt19937_64& rng) {
  const SelfAdjointOperator a = OperatorFromJson(ReadJsonFile(f.operator_file));
  const ProbeResult probe = SampleCopositivity(a, f.samples, rng);
  Report report;
  report.payload["min_value"] = probe.min_value;
  report.payload["samples"] = f.samples;
  Expect(report, "hierarchy.sample_copositivity",
         probe.copositive ? "copositive" : "not-copositive", f.expect,
         probe.min_value, "x•A(x) >= 0 on the cone");
  return report;
}

Report SosCommand(const Flags& f) {
  const SelfAdjointOperator a = OperatorFromJson(ReadJsonFile(f.operator_file));
  const SosResult r = SosTest(a, f.level);
  Report report;
  report.payload["level"] = f.level;
  report.payload["sos"] = ToJson(r);
  const std::string got(SosStatusName(r.status));
  report.payload["verdict"] = got;
  const bool verified =
      VerifySosResult(DegreeLift(QuarticExpand(a), f.level), r);
  Check c{"sos.sos_test", CheckStatus::kPass,
          r.status == SosStatus::kInfeasible ? r.dual_bound : r.margin,
          "membership in the level-l inner approximation"};
  if (r.status == SosStatus::kIndeterminate) {
    c.status = CheckStatus::kIndeterminate;
  } else if (!verified || (!f.expect.empty() && f.expect != got)) {
    c.status = CheckStatus::kFail;
  }
  report.Add(std::move(c));
  return report;
}

Report SliceForward(const Flags& f) {
  const SliceMap map = SliceFor(f.matrix_file, f);
  const Matrix m = LoadMatrix(f.matrix_file);
  const SelfAdjointOperator a = map.Forward(m);
  const double r = (map.Backward(a).m - m).cwiseAbs().maxCoeff();
  Report report;
  report.payload["operator"] = ToJson(a);
  report.Add("hierarchy.slice_map.round_trip", r <= 1e-10, r,
             "f is injective with left inverse on its image");
  return report;
}

Report SliceBackward(const Flags& f) {
  const SelfAdjointOperator a = OperatorFromJson(ReadJsonFile(f.matrix_file));
  const SliceMap map =
      SliceMap::FromRays(ExtremeRaySet::Canonical(a.algebra(), ScalesFrom(f)));
  const SliceMap::BackwardResult b = map.Backward(a);
  Report report;
  report.payload["matrix"] = MatrixToJson(b.m);
  report.Add("hierarchy.slice_map.backward", true, b.residual,
             "A lies in the slice");
  return report;
}

Report SliceEquiv(const Flags& f, std::mt19937_64& rng) {
  const SliceMap map = SliceFor(f.matrix_file, f);
  const Matrix m = LoadMatrix(f.matrix_file);
  const CopositivityVerdict small = CopOracleSmall(m);
  const ProbeResult probe =
      SampleCopositivity(map.Forward(m), f.samples, rng, map.generators());
  Report report;
  report.payload["matrix_copositive"] = small.copositive;
  report.payload["operator_copositive"] = probe.copositive;
  report.payload["oracle_value"] = small.value;
  report.payload["probe_min"] = probe.min_value;
  report.Add("hierarchy.slice_map.copositivity_agreement",
             small.copositive == probe.copositive, 0.0,
             "M copositive iff f(M) copositive on the cone");
  return report;
}

Report PeirceVerify(const Flags& f, std::mt19937_64& rng) {
  const Algebra alg = LoadAlgebra(f.algebra_file);
  Report report;
  const std::string label = alg.descriptor().DebugString();
  CheckPeirce(alg, CanonicalFrame(alg), label + ",canonical", 100, rng,
              report);
  CheckPeirce(alg, RandomFrame(alg, rng), label + ",random", 100, rng, report);
  report.payload["decomposition"] =
      ToJson(PeirceDecompose(alg, CanonicalFrame(alg)));
  return report;
}

Report AppendixClassify(const Flags& f) {
  if (f.rank < 6) {
    throw Error(ErrorCode::kMalformedInput, "--rank must be at least 6");
  }
  Report report;
  CheckPartition(f.rank, report);
  return report;
}

void PrintReport(const Report& report, std::ostream& out) {
  for (const Check& c : report.checks) {
    out << std::left << std::setw(14)
        << ("[" + std::string(CheckStatusName(c.status)) + "]") << c.name
        << "  residual=" << std::scientific << std::setprecision(3)
        << c.residual << std::defaultfloat << "\n";
  }
  out << "exit " << report.ExitCode() << "\n";
}

}  // namespace

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symcone: symmetric-cone copositivity toolkit"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--json", f.json_path, "write the report as JSON");
  app.add_option("--tol", f.tol, "relative tolerance of scale-aware checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "random seed (default 42 or SYMCONE_SEED)");
  app.add_flag("--timing", f.timing, "include wall time in the report");
  app.fallthrough();

  auto* algebra = app.add_subcommand("algebra", "algebra utilities");
  algebra->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "describe an algebra");
  info->add_option("descriptor", f.file)->required();

  auto* horn = app.add_subcommand("horn", "Horn transformation");
  horn->require_subcommand(1);
  auto* build = horn->add_subcommand("build", "build H_Δ");
  auto* verify = horn->add_subcommand("verify", "verify H_Δ properties");
  for (auto* s : {build, verify}) {
    s->add_option("--algebra", f.algebra_file)->required();
    s->add_option("--scales", f.scales)->expected(5);
  }

  auto* cop = app.add_subcommand("cop", "copositivity");
  cop->require_subcommand(1);
  auto* check = cop->add_subcommand("check", "sampled copositivity probe");
  check->add_option("--operator", f.operator_file)->required();
  check->add_option("--samples", f.samples)->check(CLI::PositiveNumber);
  check->add_option("--expect", f.expect)
      ->check(CLI::IsMember({"copositive", "not-copositive"}));

  auto* sos = app.add_subcommand("sos", "sum-of-squares hierarchy");
  sos->require_subcommand(1);
  auto* test = sos->add_subcommand("test", "level-l membership");
  test->add_option("--operator", f.operator_file)->required();
  test->add_option("--level", f.level)->check(CLI::IsMember({0, 1}));
  test->add_option("--expect", f.expect)
      ->check(CLI::IsMember({"feasible", "infeasible"}));

  auto* slice = app.add_subcommand("slice", "5x5 slice map");
  slice->require_subcommand(1);
  auto* fwd = slice->add_subcommand("forward", "M -> f(M)");
  auto* bwd = slice->add_subcommand("backward", "f(M) -> M");
  auto* equiv = slice->add_subcommand("equiv", "copositivity agreement");
  for (auto* s : {fwd, bwd, equiv}) {
    s->add_option("--matrix", f.matrix_file)->required();
    s->add_option("--scales", f.scales)->expected(5);
  }
  equiv->add_option("--samples", f.samples)->check(CLI::PositiveNumber);

  auto* peirce = app.add_subcommand("peirce", "Peirce decomposition");
  peirce->require_subcommand(1);
  auto* pverify = peirce->add_subcommand("verify", "decomposition checks");
  pverify->add_option("--algebra", f.algebra_file)->required();

  auto* appendix = app.add_subcommand("appendix", "index classification");
  appendix->require_subcommand(1);
  auto* classify = appendix->add_subcommand("classify", "partition table");
  classify->add_option("--rank", f.rank, "r+")->required();

  auto* suite = app.add_subcommand("suite", "acceptance suite");
  suite->require_subcommand(1);
  auto* all = suite->add_subcommand("all", "run every acceptance check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const std::uint64_t seed = ResolveSeed(f);
    std::mt19937_64 rng(seed);
    const auto t0 = std::chrono::steady_clock::now();
    Report report;
    std::string command;
    if (*info) {
      report = AlgebraInfo(f, rng);
      command = "algebra info";
    } else if (*build) {
      report = HornBuild(f);
      command = "horn build";
    } else if (*verify) {
      report = HornVerify(f, rng);
      command = "horn verify";
    } else if (*check) {
      report = CopCheck(f, rng);
      command = "cop check";
    } else if (*test) {
      report = SosCommand(f);
      command = "sos test";
    } else if (*fwd) {
      report = SliceForward(f);
      command = "slice forward";
    } else if (*bwd) {
      report = SliceBackward(f);
      command = "slice backward";
    } else if (*equiv) {
      report = SliceEquiv(f, rng);
      command = "slice equiv";
    } else if (*pverify) {
      report = PeirceVerify(f, rng);
      command = "peirce verify";
    } else if (*classify) {
      report = AppendixClassify(f);
      command = "appendix classify";
    } else if (*all) {
      report = RunSuite({seed, f.tol});
      command = "suite all";
    }
    report.command = command;
    report.seed = seed;
    if (f.timing) {
      report.wall_time = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    }
    PrintReport(report, out);
    if (!f.json_path.empty()) {
      std::ofstream file(f.json_path);
      if (!file) {
        err << "cannot write " << f.json_path << "\n";
        return kExitUsage;
      }
      file << report.ToJson().dump(2) << "\n";
    }
    return report.ExitCode();
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.residual() != 0.0) err << " (residual " << e.residual() << ")";
    err << "\n";
    const bool usage = e.code() == ErrorCode::kMalformedInput ||
                       e.code() == ErrorCode::kDescriptor;
    return usage ? kExitUsage : 2;
  }
}

}  // namespace symcone
