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

#include "symcone/json_io.h"

#include <fstream>
#include <numeric>

#include "symcone/error.h"

namespace symcone {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) Malformed(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

double Number(const Json& v) {
  if (!v.is_number()) Malformed("expected a number");
  return v.get<double>();
}

}  // namespace

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    Malformed(path + ": " + e.what());
  }
}

Json MatrixToJson(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix MatrixFromJson(const Json& j) {
  if (!j.is_array()) Malformed("matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.front().size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols) {
      Malformed("matrix rows must have equal length");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = Number(j[r][c]);
  }
  return m;
}

Json VectorToJson(const Vector& v) {
  Json out = Json::array();
  for (int k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

Vector VectorFromJson(const Json& j) {
  if (!j.is_array()) Malformed("vector must be an array");
  Vector v(j.size());
  for (size_t k = 0; k < j.size(); ++k) v(k) = Number(j[k]);
  return v;
}

Json ToJson(const AlgebraDescriptor& d) {
  using Kind = AlgebraDescriptor::Kind;
  Json out;
  switch (d.kind) {
    case Kind::kHadamard:
      out["kind"] = "hadamard";
      out["n"] = d.size;
      break;
    case Kind::kSpin:
      out["kind"] = "spin";
      out["n"] = d.size;
      break;
    case Kind::kSymmetricMatrix:
      out["kind"] = "symmat";
      out["d"] = d.size;
      break;
    case Kind::kProduct: {
      out["kind"] = "product";
      Json factors = Json::array();
      for (const AlgebraDescriptor& f : d.factors) factors.push_back(ToJson(f));
      out["factors"] = std::move(factors);
      break;
    }
  }
  return out;
}

AlgebraDescriptor DescriptorFromJson(const Json& j) {
  const Json& kind = Field(j, "kind");
  if (!kind.is_string()) Malformed("'kind' must be a string");
  const std::string k = kind.get<std::string>();
  AlgebraDescriptor d;
  if (k == "hadamard") {
    d = AlgebraDescriptor::Hadamard(IntField(j, "n"));
  } else if (k == "spin") {
    d = AlgebraDescriptor::Spin(IntField(j, "n"));
  } else if (k == "symmat") {
    d = AlgebraDescriptor::SymMat(IntField(j, "d"));
  } else if (k == "product") {
    const Json& factors = Field(j, "factors");
    if (!factors.is_array()) Malformed("'factors' must be an array");
    std::vector<AlgebraDescriptor> fs;
    for (const Json& f : factors) fs.push_back(DescriptorFromJson(f));
    d = AlgebraDescriptor::Product(std::move(fs));
  } else {
    Malformed("unknown algebra kind '" + k + "'");
  }
  d.Validate();
  return d;
}

Json ToJson(const Element& x) {
  Json out;
  out["algebra"] = ToJson(x.algebra().descriptor());
  out["coords"] = VectorToJson(x.coords());
  return out;
}

Element ElementFromJson(const Json& j) {
  const Algebra alg(DescriptorFromJson(Field(j, "algebra")));
  return Element(alg, VectorFromJson(Field(j, "coords")));
}

Json ToJson(const SelfAdjointOperator& a) {
  Json out;
  out["algebra"] = ToJson(a.algebra().descriptor());
  out["matrix"] = MatrixToJson(a.matrix());
  return out;
}

SelfAdjointOperator OperatorFromJson(const Json& j) {
  const Algebra alg(DescriptorFromJson(Field(j, "algebra")));
  return SelfAdjointOperator(alg, MatrixFromJson(Field(j, "matrix")));
}

Json ToJson(const PeirceDecomposition& p) {
  Json out;
  out["algebra"] = ToJson(p.algebra().descriptor());
  Json frame = Json::array();
  for (const Element& c : p.frame()) frame.push_back(VectorToJson(c.coords()));
  out["frame"] = std::move(frame);
  Json blocks = Json::array();
  for (const BlockKey& k : BlocksUpTo(p.rank())) {
    Json b;
    b["i"] = k.i;
    b["j"] = k.j;
    b["basis"] = MatrixToJson(p.Basis(k).transpose());
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  const Eigen::MatrixXi dims = p.DimsTable();
  Json table = Json::array();
  for (int i = 0; i < dims.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < dims.cols(); ++j) row.push_back(dims(i, j));
    table.push_back(std::move(row));
  }
  out["dims"] = std::move(table);
  return out;
}

Json ToJson(const Polynomial& q) {
  Json out;
  out["n"] = q.num_vars();
  out["degree"] = q.Degree();
  Json terms = Json::array();
  for (const auto& [e, c] : q.terms()) {
    Json t;
    t["exponents"] = e;
    t["coeff"] = c;
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Polynomial PolynomialFromJson(const Json& j) {
  const int n = IntField(j, "n");
  if (n < 0) Malformed("'n' must be nonnegative");
  Polynomial q(n);
  const Json& terms = Field(j, "terms");
  if (!terms.is_array()) Malformed("'terms' must be an array");
  for (const Json& t : terms) {
    const Json& e = Field(t, "exponents");
    if (!e.is_array() || static_cast<int>(e.size()) != n) {
      Malformed("exponent length must equal n");
    }
    Exponent ex;
    for (const Json& v : e) {
      if (!v.is_number_integer() || v.get<int>() < 0) Malformed("bad exponent");
      ex.push_back(v.get<int>());
    }
    q.AddTerm(ex, Number(Field(t, "coeff")));
  }
  return q;
}

Json ToJson(const SosResult& r) {
  Json out;
  out["status"] = SosStatusName(r.status);
  out["margin"] = r.margin;
  if (r.status == SosStatus::kFeasible) {
    out["gram"] = MatrixToJson(r.gram);
  } else if (r.status == SosStatus::kInfeasible) {
    Json f;
    f["y"] = VectorToJson(r.farkas);
    f["dual_bound"] = r.dual_bound;
    out["farkas"] = std::move(f);
  }
  return out;
}

Json ToJson(const SdpProblem& p) {
  Json out;
  out["dim"] = p.dim;
  Json cs = Json::array();
  for (const SdpConstraint& c : p.constraints) {
    Json cj;
    cj["matrix"] = MatrixToJson(c.a.ToDense(p.dim));
    cj["b"] = c.b;
    cs.push_back(std::move(cj));
  }
  out["constraints"] = std::move(cs);
  return out;
}

SdpProblem SdpProblemFromJson(const Json& j) {
  SdpProblem p;
  p.dim = IntField(j, "dim");
  const Json& cs = Field(j, "constraints");
  if (!cs.is_array()) Malformed("'constraints' must be an array");
  for (const Json& cj : cs) {
    const Matrix a = MatrixFromJson(Field(cj, "matrix"));
    if (a.rows() != p.dim || a.cols() != p.dim) Malformed("constraint size");
    p.constraints.push_back({SparseSymmetric::FromDense(a), Number(Field(cj, "b"))});
  }
  return p;
}

Json ToJson(const SdpSolution& s) {
  Json out;
  out["margin"] = s.margin;
  out["primal"] = s.primal ? MatrixToJson(*s.primal) : Json(nullptr);
  out["dual"] = s.dual ? VectorToJson(*s.dual) : Json(nullptr);
  out["iterations"] = s.iterations;
  out["primal_residual"] = s.primal_residual;
  out["dual_residual"] = s.dual_residual;
  out["converged"] = s.converged;
  return out;
}

}  // namespace symcone
