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

// Verification routines shared by the command-line front end. Each routine
// appends named checks to a report; `RunSuite` strings them together into the
// full acceptance run.

#ifndef SYMCONE_SUITE_H_
#define SYMCONE_SUITE_H_

#include <cstdint>
#include <random>
#include <string>

#include "symcone/algebra.h"
#include "symcone/horn.h"
#include "symcone/peirce.h"
#include "symcone/report.h"

namespace symcone {

struct SuiteOptions {
  std::uint64_t seed = 42;
  // Relative tolerance of the scale-aware checks.
  double tolerance = 1e-9;
};

// Jordan axioms on random triples: commutativity, the Jordan identity and
// associativity of the inner product.
void CheckJordanAxioms(const Algebra& algebra, int triples,
                       std::mt19937_64& rng, Report& report);

// Integer equality with the Horn matrix on hadamard(5).
void CheckHornReconstruction(Report& report);
void CheckWitness(const ExtremeRaySet& rays, const std::string& label,
                  Report& report);
// q_H(x) = v(x)^T H v(x) on Gaussian x, and q_H >= 0 on cone samples.
void CheckReduction(const ExtremeRaySet& rays, const std::string& label,
                    int points, int cone_samples, std::mt19937_64& rng,
                    const SuiteOptions& options, Report& report);
void CheckRankOneSubtransformations(const ExtremeRaySet& rays,
                                    const std::string& label, Report& report);
void CheckQcConjugation(const ExtremeRaySet& unit_rays,
                        const std::vector<double>& scales,
                        const std::string& label, Report& report);
void CheckIrreducibility(const ExtremeRaySet& rays, const std::string& label,
                         Report& report);
void CheckCertificateParts(const PeirceDecomposition& p,
                           const std::string& label, Report& report);

// Projector completeness and orthogonality, the block identities on random
// block vectors, and the off-diagonal dimension table.
void CheckPeirce(const Algebra& algebra, const std::vector<Element>& frame,
                 const std::string& label, int vectors, std::mt19937_64& rng,
                 Report& report);

void CheckRank5Perturbations(const PeirceDecomposition& p, int operators,
                             std::mt19937_64& rng, Report& report);
void CheckTailPerturbations(const PeirceDecomposition& p, int operators,
                            std::mt19937_64& rng, Report& report);

// Partition counts against closed-form sizes; the table goes to the payload.
void CheckPartition(int r_plus, Report& report);

void CheckSos(std::mt19937_64& rng, Report& report);
void CheckSlice(std::mt19937_64& rng, Report& report);

Report RunSuite(const SuiteOptions& options);

}  // namespace symcone

#endif  // SYMCONE_SUITE_H_
