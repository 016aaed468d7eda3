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

// JSON forms of the library types. Parsers throw Error(kMalformedInput) on
// any structural problem and let library validation errors propagate.

#ifndef SYMCONE_JSON_IO_H_
#define SYMCONE_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "symcone/algebra.h"
#include "symcone/operators.h"
#include "symcone/peirce.h"
#include "symcone/polynomial.h"
#include "symcone/sdp.h"
#include "symcone/sos.h"

namespace symcone {

using Json = nlohmann::ordered_json;

Json ReadJsonFile(const std::string& path);

Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);
Json VectorToJson(const Vector& v);
Vector VectorFromJson(const Json& j);

Json ToJson(const AlgebraDescriptor& d);
AlgebraDescriptor DescriptorFromJson(const Json& j);

Json ToJson(const Element& x);
Element ElementFromJson(const Json& j);

Json ToJson(const SelfAdjointOperator& a);
SelfAdjointOperator OperatorFromJson(const Json& j);

Json ToJson(const PeirceDecomposition& p);

Json ToJson(const Polynomial& q);
Polynomial PolynomialFromJson(const Json& j);

Json ToJson(const SosResult& r);

Json ToJson(const SdpProblem& p);
SdpProblem SdpProblemFromJson(const Json& j);
Json ToJson(const SdpSolution& s);

}  // namespace symcone

#endif  // SYMCONE_JSON_IO_H_
