#include "chv/serial.hpp"

#include <fstream>

#include "chv/error.hpp"
#include "chv/parse.hpp"

namespace chv {
namespace {

PolyElem entry_from_json(const Json& v) {
  if (v.is_string()) return parse_entry(v.get<std::string>());
  if (v.is_number_integer()) return PolyElem(Rational(v.get<long long>()));
  throw ConfigError("matrix entry must be an expression string or integer");
}

int dim_from_json(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ConfigError("missing integer field \"n\"");
  int n = j["n"].get<int>();
  if (n < 1) throw ConfigError("dimension must be >= 1");
  return n;
}

std::vector<RingMatrix> matrix_list_from_json(const Json& j, int n) {
  if (!j.is_array()) throw ConfigError("expected an array of matrices");
  std::vector<RingMatrix> mats;
  for (const auto& mj : j) {
    RingMatrix m = matrix_from_json(mj);
    if (m.n() != n) throw ConfigError("matrix dimension differs from declared n");
    mats.push_back(std::move(m));
  }
  return mats;
}

}  // namespace

Json matrix_to_json(const RingMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"entries", std::move(rows)}};
}

RingMatrix matrix_from_json(const Json& j) {
  int n = dim_from_json(j);
  if (!j.contains("entries") || !j["entries"].is_array() ||
      static_cast<int>(j["entries"].size()) != n)
    throw ConfigError("matrix \"entries\" must be an n-element array of rows");
  RingMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j["entries"][i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ConfigError("matrix row " + std::to_string(i + 1) + " must have n entries");
    for (int c = 0; c < n; ++c) m(i, c) = entry_from_json(row[c]);
  }
  return m;
}

Json tuple_to_json(const MatrixTuple& t) {
  Json mats = Json::array();
  for (const auto& m : t.mats) mats.push_back(matrix_to_json(m));
  return Json{{"n", t.n()}, {"mats", std::move(mats)}};
}

MatrixTuple tuple_from_json(const Json& j) {
  int n = dim_from_json(j);
  if (!j.contains("mats")) throw ConfigError("tuple file needs a \"mats\" array");
  MatrixTuple t{matrix_list_from_json(j["mats"], n)};
  if (t.mats.empty()) throw ConfigError("tuple file has no matrices");
  return t;
}

Json family_to_json(const ConstraintFamily& f, const Json& gen) {
  Json a = Json::array(), b = Json::array();
  for (const auto& m : f.A) a.push_back(matrix_to_json(m));
  for (const auto& m : f.B) b.push_back(matrix_to_json(m));
  Json j{{"kind", "constraint"}, {"n", f.n},           {"k", f.k},
         {"A", std::move(a)},    {"B", std::move(b)},  {"degenerate", f.degenerate}};
  if (!gen.is_null()) j["gen"] = gen;
  return j;
}

ConstraintFamily family_from_json(const Json& j) {
  if (j.value("kind", "") != "constraint")
    throw ConfigError("family file kind must be \"constraint\"");
  ConstraintFamily f;
  f.n = dim_from_json(j);
  if (!j.contains("k") || !j["k"].is_number_integer() || (f.k = j["k"].get<int>()) < 1)
    throw ConfigError("family file needs integer k >= 1");
  if (!j.contains("A") || !j.contains("B")) throw ConfigError("family file needs \"A\" and \"B\"");
  f.A = matrix_list_from_json(j["A"], f.n);
  f.B = matrix_list_from_json(j["B"], f.n);
  if (static_cast<int>(f.A.size()) != f.k || static_cast<int>(f.B.size()) != f.k)
    throw ConfigError("family file: A and B must each hold k matrices");
  f.degenerate = j.value("degenerate", false);
  return f;
}

Json mixed_family_to_json(const MixedConstraintFamily& f, const Json& gen) {
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < f.n; ++i) {
    Json ra = Json::array(), rb = Json::array();
    for (int c = 0; c < f.k; ++c) {
      ra.push_back(matrix_to_json(f.A[i][c]));
      rb.push_back(matrix_to_json(f.B[i][c]));
    }
    a.push_back(std::move(ra));
    b.push_back(std::move(rb));
  }
  Json j{{"kind", "mixed"}, {"n", f.n}, {"k", f.k}, {"A", std::move(a)}, {"B", std::move(b)}};
  if (!gen.is_null()) j["gen"] = gen;
  return j;
}

MixedConstraintFamily mixed_family_from_json(const Json& j) {
  if (j.value("kind", "") != "mixed") throw ConfigError("family file kind must be \"mixed\"");
  MixedConstraintFamily f;
  f.n = dim_from_json(j);
  if (!j.contains("k") || !j["k"].is_number_integer() || (f.k = j["k"].get<int>()) < 1)
    throw ConfigError("family file needs integer k >= 1");
  if (!j.contains("A") || !j["A"].is_array() || static_cast<int>(j["A"].size()) != f.n ||
      !j.contains("B") || !j["B"].is_array() || static_cast<int>(j["B"].size()) != f.n)
    throw ConfigError("mixed family file: \"A\" and \"B\" must be n-row arrays");
  for (int i = 0; i < f.n; ++i) {
    f.A.push_back(matrix_list_from_json(j["A"][i], f.n));
    f.B.push_back(matrix_list_from_json(j["B"][i], f.n));
    if (static_cast<int>(f.A[i].size()) != f.k || static_cast<int>(f.B[i].size()) != f.k)
      throw ConfigError("mixed family file: each row must hold k matrices");
  }
  return f;
}

Json famspec_to_json(const FamilySpec& spec) {
  return Json{{"strategy", spec.strategy}, {"n", spec.n},
              {"k", spec.k},               {"seed", spec.seed},
              {"symbolic", spec.symbolic}, {"magnitude", spec.magnitude}};
}

FamilySpec famspec_from_json(const Json& j) {
  FamilySpec spec;
  spec.strategy = j.value("strategy", spec.strategy);
  spec.n = j.value("n", spec.n);
  spec.k = j.value("k", spec.k);
  spec.seed = j.value("seed", spec.seed);
  spec.symbolic = j.value("symbolic", spec.symbolic);
  spec.magnitude = j.value("magnitude", spec.magnitude);
  validate(spec);
  return spec;
}

Json VerificationReport::to_json() const {
  return Json{{"theorem", theorem}, {"params", params},   {"status", status},
              {"witness", witness}, {"counts", counts},   {"elapsed_ms", elapsed_ms}};
}

VerificationReport VerificationReport::from_json(const Json& j) {
  VerificationReport r;
  r.theorem = j.at("theorem").get<std::string>();
  r.params = j.at("params");
  r.status = j.at("status").get<std::string>();
  if (r.status != "pass" && r.status != "fail" && r.status != "hypothesis_violation")
    throw ConfigError("report status must be pass|fail|hypothesis_violation");
  r.witness = j.at("witness");
  r.counts = j.at("counts");
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

Json report_file_to_json(const std::vector<VerificationReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return Json{{"schema", "v1"}, {"reports", std::move(arr)}};
}

std::vector<VerificationReport> report_file_from_json(const Json& j) {
  if (j.value("schema", "") != "v1") throw ConfigError("unsupported report schema");
  std::vector<VerificationReport> out;
  for (const auto& rj : j.at("reports")) out.push_back(VerificationReport::from_json(rj));
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("invalid JSON in file: " + path);
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open file for writing: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace chv
