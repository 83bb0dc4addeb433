#include "trslab/problem_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace trs {

namespace {

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path.string());
  return in;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool next_data_line(std::ifstream& in, std::string& line, long& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos || line[pos] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

DenseSym load_matrix_market(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  long lineno = 0;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market file", 1);
  ++lineno;

  std::istringstream hs(line);
  std::string banner, object, fmt, field, symmetry;
  hs >> banner >> object >> fmt >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix")
    throw ParseError("not a Matrix Market matrix file", 1);
  fmt = lower(fmt);
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "real" && field != "double" && field != "integer")
    throw ParseError("unsupported Matrix Market field: " + field, 1);
  if (symmetry != "symmetric" && symmetry != "general")
    throw ParseError("unsupported Matrix Market symmetry: " + symmetry, 1);
  const bool coordinate = fmt == "coordinate";
  if (!coordinate && fmt != "array")
    throw ParseError("unsupported Matrix Market format: " + fmt, 1);

  if (!next_data_line(in, line, lineno)) throw ParseError("missing size line", lineno);
  std::istringstream ss(line);
  long rows = 0, cols = 0, nnz = 0;
  if (coordinate) {
    if (!(ss >> rows >> cols >> nnz)) throw ParseError("bad size line", lineno);
  } else {
    if (!(ss >> rows >> cols)) throw ParseError("bad size line", lineno);
  }
  if (rows != cols || rows < 1) throw ParseError("matrix must be square", lineno);

  DenseSym a(rows);
  if (coordinate) {
    Matrix seen = Matrix::Zero(rows, cols);  // marks explicit entries for the symmetry check
    Matrix raw = Matrix::Zero(rows, cols);
    for (long e = 0; e < nnz; ++e) {
      if (!next_data_line(in, line, lineno)) throw ParseError("unexpected end of entries", lineno);
      std::istringstream es(line);
      long i = 0, j = 0;
      double v = 0.0;
      if (!(es >> i >> j >> v)) throw ParseError("bad coordinate entry", lineno);
      if (i < 1 || i > rows || j < 1 || j > cols)
        throw ParseError("coordinate out of range", lineno);
      raw(i - 1, j - 1) = v;
      seen(i - 1, j - 1) = 1.0;
    }
    if (symmetry == "symmetric") {
      for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
          if (seen(i, j) != 0.0) a.set(i, j, raw(i, j));
    } else {
      const double scale = std::max(raw.cwiseAbs().maxCoeff(), 1.0);
      if ((raw - raw.transpose()).cwiseAbs().maxCoeff() > 1e-13 * scale)
        throw AsymmetricMatrix("matrix in " + path.string() + " is not symmetric");
      for (long i = 0; i < rows; ++i)
        for (long j = 0; j <= i; ++j) a.set(i, j, raw(i, j));
    }
  } else {
    // array format: column-major dense; symmetric variant stores the lower
    // triangle only.
    std::vector<double> vals;
    vals.reserve(static_cast<size_t>(rows) * cols);
    double v = 0.0;
    std::istringstream es;
    while (next_data_line(in, line, lineno)) {
      es.clear();
      es.str(line);
      while (es >> v) vals.push_back(v);
    }
    size_t idx = 0;
    if (symmetry == "symmetric") {
      const size_t need = static_cast<size_t>(rows) * (rows + 1) / 2;
      if (vals.size() != need) throw ParseError("wrong number of array entries", lineno);
      for (long j = 0; j < cols; ++j)
        for (long i = j; i < rows; ++i) a.set(i, j, vals[idx++]);
    } else {
      const size_t need = static_cast<size_t>(rows) * cols;
      if (vals.size() != need) throw ParseError("wrong number of array entries", lineno);
      Matrix raw(rows, cols);
      for (long j = 0; j < cols; ++j)
        for (long i = 0; i < rows; ++i) raw(i, j) = vals[idx++];
      const double scale = std::max(raw.cwiseAbs().maxCoeff(), 1.0);
      if ((raw - raw.transpose()).cwiseAbs().maxCoeff() > 1e-13 * scale)
        throw AsymmetricMatrix("matrix in " + path.string() + " is not symmetric");
      for (long i = 0; i < rows; ++i)
        for (long j = 0; j <= i; ++j) a.set(i, j, raw(i, j));
    }
  }
  return a;
}

TrsProblem load_diag_json(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON in ") + path.string() + ": " + e.what());
  }
  if (!j.contains("diag") || !j.contains("g") || !j.contains("delta"))
    throw ParseError("diag-json needs keys diag, g, delta");
  const auto& jd = j["diag"];
  const auto& jg = j["g"];
  if (!jd.is_array() || !jg.is_array() || !j["delta"].is_number())
    throw ParseError("diag-json: diag/g must be arrays, delta a number");
  if (jd.size() != jg.size())
    throw DimensionMismatch("diag-json: g length does not match diag length");
  Vector d(jd.size()), g(jg.size());
  for (size_t i = 0; i < jd.size(); ++i) d[static_cast<Index>(i)] = jd[i].get<double>();
  for (size_t i = 0; i < jg.size(); ++i) g[static_cast<Index>(i)] = jg[i].get<double>();
  return TrsProblem(SymOperator::diagonal(std::move(d)), std::move(g),
                    j["delta"].get<double>());
}

void save_diag_json(const TrsProblem& problem, const std::filesystem::path& path) {
  if (!problem.a.is_diagonal()) throw Error("save_diag_json: operator is not diagonal");
  nlohmann::json j;
  const Vector& d = problem.a.diagonal_entries();
  j["diag"] = std::vector<double>(d.data(), d.data() + d.size());
  j["g"] = std::vector<double>(problem.g.data(), problem.g.data() + problem.g.size());
  j["delta"] = problem.delta;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write file: " + path.string());
  out << j.dump(2) << '\n';
}

Vector load_vector_text(const std::filesystem::path& path) {
  std::ifstream in = open_or_throw(path);
  std::vector<double> vals;
  double v = 0.0;
  while (in >> v) vals.push_back(v);
  if (!in.eof()) throw ParseError("bad number in vector file " + path.string());
  Vector g(static_cast<Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) g[static_cast<Index>(i)] = vals[i];
  return g;
}

TrsProblem load_problem(const std::filesystem::path& path, ProblemFormat format,
                        const std::optional<std::filesystem::path>& g_path,
                        std::optional<double> delta) {
  if (format == ProblemFormat::DiagJson) return load_diag_json(path);
  DenseSym a = load_matrix_market(path);
  if (!g_path) throw Error("matrix-market problem needs a gradient file");
  if (!delta) throw Error("matrix-market problem needs a radius");
  Vector g = load_vector_text(*g_path);
  if (g.size() != a.order())
    throw DimensionMismatch("gradient length does not match matrix order");
  return TrsProblem(SymOperator::dense(std::move(a)), std::move(g), *delta);
}

}  // namespace trs
