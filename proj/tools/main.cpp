// Copyright 2026 The schatten authors
//
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

// Command-line front end.  Every subcommand reads one UTF-8 JSON document
// (--input PATH or standard input), runs the corresponding library call
// through the C API, and writes one JSON document to --output (standard
// output by default), atomically at completion.
//
// Exit codes: 0 success, 2 usage or parse error, 3 numerical failure,
// 4 precondition violation.
//
// Document schemas
//   matrix    {"rows": R, "cols": C, "re": [[..]..], "im": [[..]..]?}
//             parallel row-major real/imaginary 2-D arrays; "im" defaults
//             to zeros; all values finite.
//   exponent  positive number, or the string "inf".
//   symbol    {"kind": "abs_pow", "p": num} or
//             {"kind": "polynomial", "coeffs": [c0, c1, ...]}.
//   space     {"kind": "vector"|"matrix", "dim": n, "p": exponent,
//              "field": "R"|"C"}.
//   embedding constructor form {"kind": "diag"|"corner"|"sumdiff"|"firstrow"
//             |"vec"|"s2sp"|"cubature243", "m"?, "n"?, "p"?}, or explicit
//             form {"domain": space, "codomain": space,
//             "basis_images": [matrix, ...]} (vector-space elements are
//             1 x n or n x 1 matrices).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schatten.h"

using json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail_parse(const std::string& message) {
  throw CliError{2, message};
}

int exit_code_for(sch_status status) {
  switch (status) {
    case SCH_OK:
      return 0;
    case SCH_ERROR_NUMERICAL:
    case SCH_ERROR_NOMEM:
      return 3;
    default:
      return 4;
  }
}

void check(sch_status status, const std::string& where) {
  if (status == SCH_OK) return;
  throw CliError{exit_code_for(status),
                 where + ": " + sch_status_name(status) + ": " + sch_last_error()};
}

struct MatrixHandle {
  sch_matrix* ptr = nullptr;
  MatrixHandle() = default;
  explicit MatrixHandle(sch_matrix* p) : ptr(p) {}
  MatrixHandle(MatrixHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  MatrixHandle& operator=(MatrixHandle&& other) noexcept {
    if (this != &other) {
      sch_matrix_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  MatrixHandle(const MatrixHandle&) = delete;
  MatrixHandle& operator=(const MatrixHandle&) = delete;
  ~MatrixHandle() { sch_matrix_free(ptr); }
};

struct EmbeddingHandle {
  sch_embedding* ptr = nullptr;
  EmbeddingHandle() = default;
  explicit EmbeddingHandle(sch_embedding* p) : ptr(p) {}
  EmbeddingHandle(EmbeddingHandle&& other) noexcept : ptr(other.ptr) {
    other.ptr = nullptr;
  }
  EmbeddingHandle& operator=(EmbeddingHandle&&) = delete;
  EmbeddingHandle(const EmbeddingHandle&) = delete;
  EmbeddingHandle& operator=(const EmbeddingHandle&) = delete;
  ~EmbeddingHandle() { sch_embedding_free(ptr); }
};

// ---- document parsing ----------------------------------------------------

const json& field(const json& doc, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key))
    fail_parse("missing field \"" + key + "\"");
  return doc.at(key);
}

double finite_number(const json& value, const std::string& what) {
  if (!value.is_number()) fail_parse(what + " must be a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail_parse(what + " must be finite");
  return x;
}

int positive_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) fail_parse(what + " must be an integer");
  const long long x = value.get<long long>();
  if (x < 1 || x > 1'000'000) fail_parse(what + " out of range");
  return static_cast<int>(x);
}

double parse_exponent(const json& value, const std::string& what) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return kInf;
    fail_parse(what + ": the only exponent string is \"inf\"");
  }
  const double p = finite_number(value, what);
  if (!(p > 0)) fail_parse(what + " must be > 0");
  return p;
}

std::vector<double> parse_plane(const json& value, int rows, int cols,
                                const std::string& what) {
  if (!value.is_array() || static_cast<int>(value.size()) != rows)
    fail_parse(what + " must be a " + std::to_string(rows) + "-row array");
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (const json& row : value) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail_parse(what + " rows must hold " + std::to_string(cols) + " numbers");
    for (const json& entry : row) flat.push_back(finite_number(entry, what));
  }
  return flat;
}

MatrixHandle parse_matrix(const json& doc, const std::string& what) {
  if (!doc.is_object()) fail_parse(what + " must be a matrix document");
  const int rows = positive_int(field(doc, "rows"), what + ".rows");
  const int cols = positive_int(field(doc, "cols"), what + ".cols");
  if (static_cast<long long>(rows) * cols > 1'000'000)
    fail_parse(what + " is too large");
  const std::vector<double> re = parse_plane(field(doc, "re"), rows, cols, what + ".re");
  std::vector<double> im;
  if (doc.contains("im")) im = parse_plane(doc.at("im"), rows, cols, what + ".im");
  sch_matrix* out = nullptr;
  check(sch_matrix_create(rows, cols, re.data(), im.empty() ? nullptr : im.data(),
                          &out),
        what);
  return MatrixHandle(out);
}

json matrix_to_json(const sch_matrix* m) {
  const int rows = sch_matrix_rows(m);
  const int cols = sch_matrix_cols(m);
  std::vector<double> re(static_cast<size_t>(rows) * cols);
  std::vector<double> im(re.size());
  check(sch_matrix_copy_data(m, re.data(), im.data()), "matrix serialization");
  json jre = json::array();
  json jim = json::array();
  for (int i = 0; i < rows; ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (int j = 0; j < cols; ++j) {
      rrow.push_back(re[static_cast<size_t>(i) * cols + j]);
      irow.push_back(im[static_cast<size_t>(i) * cols + j]);
    }
    jre.push_back(std::move(rrow));
    jim.push_back(std::move(irow));
  }
  return json{{"rows", rows}, {"cols", cols}, {"re", std::move(jre)},
              {"im", std::move(jim)}};
}

json exponent_to_json(double p) {
  if (std::isinf(p)) return json("inf");
  return json(p);
}

struct SymbolHandle {
  sch_symbol* ptr = nullptr;
  explicit SymbolHandle(sch_symbol* p) : ptr(p) {}
  SymbolHandle(const SymbolHandle&) = delete;
  SymbolHandle& operator=(const SymbolHandle&) = delete;
  ~SymbolHandle() { sch_symbol_free(ptr); }
};

SymbolHandle parse_symbol(const json& doc) {
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) fail_parse("symbol.kind must be a string");
  sch_symbol* out = nullptr;
  if (kind == "abs_pow") {
    const double p = finite_number(field(doc, "p"), "symbol.p");
    check(sch_symbol_abs_pow(p, &out), "symbol");
  } else if (kind == "polynomial") {
    const json& coeffs = field(doc, "coeffs");
    if (!coeffs.is_array()) fail_parse("symbol.coeffs must be an array");
    std::vector<double> c;
    for (const json& entry : coeffs)
      c.push_back(finite_number(entry, "symbol.coeffs"));
    check(sch_symbol_polynomial(c.data(), c.size(), &out), "symbol");
  } else {
    fail_parse("symbol.kind must be \"abs_pow\" or \"polynomial\"");
  }
  return SymbolHandle(out);
}

sch_field parse_field_tag(const json& value, const std::string& what,
                          bool allow_quaternion) {
  if (value.is_string()) {
    const std::string s = value.get<std::string>();
    if (s == "R") return SCH_FIELD_REAL;
    if (s == "C") return SCH_FIELD_COMPLEX;
    if (s == "H" && allow_quaternion) return SCH_FIELD_QUATERNION;
  }
  fail_parse(what + " must be \"R\", \"C\"" +
             (allow_quaternion ? " or \"H\"" : ""));
}

void parse_space(const json& doc, const std::string& what, sch_space_kind* kind,
                 int* dim, double* p, sch_field* fieldtag) {
  const json& k = field(doc, "kind");
  if (k == "vector")
    *kind = SCH_SPACE_VECTOR;
  else if (k == "matrix")
    *kind = SCH_SPACE_MATRIX;
  else
    fail_parse(what + ".kind must be \"vector\" or \"matrix\"");
  *dim = positive_int(field(doc, "dim"), what + ".dim");
  *p = parse_exponent(field(doc, "p"), what + ".p");
  *fieldtag = parse_field_tag(field(doc, "field"), what + ".field", false);
}

EmbeddingHandle parse_embedding(const json& doc) {
  if (!doc.is_object()) fail_parse("embedding must be an object");
  sch_embedding* out = nullptr;

  if (doc.contains("basis_images")) {
    sch_space_kind dkind, ckind;
    int ddim, cdim;
    double dp, cp;
    sch_field dfield, cfield;
    parse_space(field(doc, "domain"), "embedding.domain", &dkind, &ddim, &dp, &dfield);
    parse_space(field(doc, "codomain"), "embedding.codomain", &ckind, &cdim, &cp,
                &cfield);
    const json& images = doc.at("basis_images");
    if (!images.is_array() || images.empty())
      fail_parse("embedding.basis_images must be a non-empty array");
    std::vector<MatrixHandle> owned;
    std::vector<const sch_matrix*> raw;
    for (const json& image : images) {
      owned.push_back(parse_matrix(image, "embedding.basis_images[]"));
      raw.push_back(owned.back().ptr);
    }
    check(sch_embedding_create(dkind, ddim, dp, dfield, ckind, cdim, cp, cfield,
                               raw.data(), raw.size(), &out),
          "embedding");
    return EmbeddingHandle(out);
  }

  const json& kind = field(doc, "kind");
  // constructor parameters are bounded so image storage stays at desk scale
  // (firstrow/s2sp allocate m^2 images of m^2 x m^2 entries)
  auto bounded_int = [&](const char* key, int bound) {
    const int value = positive_int(field(doc, key), std::string("embedding.") + key);
    if (value > bound)
      fail_parse(std::string("embedding.") + key + " must be <= " +
                 std::to_string(bound) + " for this constructor");
    return value;
  };
  auto p_of = [&] { return parse_exponent(field(doc, "p"), "embedding.p"); };
  if (kind == "diag") {
    check(sch_embedding_diag(bounded_int("m", 64), p_of(), &out), "embedding");
  } else if (kind == "corner") {
    const int m = bounded_int("m", 64);
    check(sch_embedding_corner(m, bounded_int("n", 64), p_of(), &out), "embedding");
  } else if (kind == "sumdiff") {
    check(sch_embedding_sum_diff(bounded_int("n", 4096), &out), "embedding");
  } else if (kind == "firstrow") {
    check(sch_embedding_first_row(bounded_int("m", 8), p_of(), &out), "embedding");
  } else if (kind == "vec") {
    check(sch_embedding_vec(bounded_int("m", 64), &out), "embedding");
  } else if (kind == "s2sp") {
    check(sch_embedding_s2_to_sp(bounded_int("m", 8), p_of(), &out), "embedding");
  } else if (kind == "cubature243") {
    check(sch_embedding_cubature_2_4_3(&out), "embedding");
  } else {
    fail_parse(
        "embedding.kind must be one of diag, corner, sumdiff, firstrow, vec, "
        "s2sp, cubature243");
  }
  return EmbeddingHandle(out);
}

json space_to_json(sch_space_kind kind, int dim, double p, sch_field fieldtag) {
  return json{{"kind", kind == SCH_SPACE_MATRIX ? "matrix" : "vector"},
              {"dim", dim},
              {"p", exponent_to_json(p)},
              {"field", fieldtag == SCH_FIELD_REAL ? "R" : "C"}};
}

json embedding_to_json(const sch_embedding* map) {
  sch_space_kind kind;
  int dim;
  double p;
  sch_field fieldtag;
  check(sch_embedding_domain(map, &kind, &dim, &p, &fieldtag), "embedding");
  json out;
  out["domain"] = space_to_json(kind, dim, p, fieldtag);
  const size_t image_count =
      kind == SCH_SPACE_MATRIX ? static_cast<size_t>(dim) * dim : static_cast<size_t>(dim);
  check(sch_embedding_codomain(map, &kind, &dim, &p, &fieldtag), "embedding");
  out["codomain"] = space_to_json(kind, dim, p, fieldtag);
  json images = json::array();
  for (size_t k = 0; k < image_count; ++k) {
    sch_matrix* image = nullptr;
    check(sch_embedding_basis_image(map, k, &image), "embedding");
    images.push_back(matrix_to_json(image));
    sch_matrix_free(image);
  }
  out["basis_images"] = std::move(images);
  return out;
}

// ---- I/O -------------------------------------------------------------------

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot open input file: " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw CliError{2, std::string("input is not valid JSON: ") + e.what()};
  }
}

void write_output(const std::string& path, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError{2, "cannot open output file: " + path};
  out << text;
}

// ---- shared option state ----------------------------------------------------

struct Options {
  std::string input = "-";
  std::string output = "-";
  long long seed = 0;
  double tol = std::numeric_limits<double>::quiet_NaN();  // NaN: per-command default

  double tol_or(const json& doc, double fallback) const {
    if (doc.is_object() && doc.contains("tol"))
      return finite_number(doc.at("tol"), "tol");
    if (!std::isnan(tol)) return tol;
    return fallback;
  }
};

// ---- subcommands -------------------------------------------------------------

json run_norm(const Options& options, const json& in) {
  const MatrixHandle m = parse_matrix(field(in, "matrix"), "matrix");
  const double p = parse_exponent(field(in, "p"), "p");
  double norm = 0.0;
  check(sch_schatten_norm(m.ptr, p, &norm), "norm");
  const int count = std::min(sch_matrix_rows(m.ptr), sch_matrix_cols(m.ptr));
  std::vector<double> svals(static_cast<size_t>(count));
  check(sch_singular_values(m.ptr, svals.data()), "norm");
  return json{{"norm", norm},
              {"singular_values", svals},
              {"p", exponent_to_json(p)},
              {"seed", options.seed}};
}

json run_svals(const Options& options, const json& in) {
  const MatrixHandle m = parse_matrix(field(in, "matrix"), "matrix");
  const int count = std::min(sch_matrix_rows(m.ptr), sch_matrix_cols(m.ptr));
  std::vector<double> svals(static_cast<size_t>(count));
  check(sch_singular_values(m.ptr, svals.data()), "svals");
  return json{{"singular_values", svals}, {"seed", options.seed}};
}

json run_divdiff(const Options& options, const json& in) {
  const SymbolHandle symbol = parse_symbol(field(in, "symbol"));
  const json& jnodes = field(in, "nodes");
  if (!jnodes.is_array() || jnodes.empty())
    fail_parse("nodes must be a non-empty array");
  std::vector<double> nodes;
  for (const json& node : jnodes) nodes.push_back(finite_number(node, "nodes"));
  double value = 0.0;
  check(sch_divided_difference(symbol.ptr, nodes.data(), nodes.size(), &value),
        "divdiff");
  return json{{"value", value},
              {"order", nodes.size() - 1},
              {"seed", options.seed}};
}

json run_moi(const Options& options, const json& in) {
  const SymbolHandle symbol = parse_symbol(field(in, "symbol"));
  const json& janchors = field(in, "anchors");
  const json& jperturbations = field(in, "perturbations");
  if (!janchors.is_array() || !jperturbations.is_array())
    fail_parse("anchors and perturbations must be arrays of matrices");
  if (jperturbations.size() > 3)
    fail_parse("moi supports order <= 3 (at most 4 anchors)");
  std::vector<MatrixHandle> owned;
  std::vector<const sch_matrix*> anchors;
  std::vector<const sch_matrix*> perturbations;
  for (const json& a : janchors) {
    owned.push_back(parse_matrix(a, "anchors[]"));
    anchors.push_back(owned.back().ptr);
  }
  for (const json& b : jperturbations) {
    owned.push_back(parse_matrix(b, "perturbations[]"));
    perturbations.push_back(owned.back().ptr);
  }
  double group_tol = -1.0;
  if (in.contains("group_tol"))
    group_tol = finite_number(in.at("group_tol"), "group_tol");
  sch_matrix* result = nullptr;
  check(sch_moi_apply(symbol.ptr, anchors.data(), anchors.size(),
                      perturbations.data(), perturbations.size(), group_tol, &result),
        "moi");
  const MatrixHandle owner(result);
  return json{{"result", matrix_to_json(result)},
              {"order", perturbations.size()},
              {"seed", options.seed}};
}

json run_d2(const Options& options, const json& in) {
  const MatrixHandle a = parse_matrix(field(in, "A"), "A");
  const MatrixHandle b = parse_matrix(field(in, "B"), "B");
  const double p = parse_exponent(field(in, "p"), "p");
  double d2 = 0.0;
  check(sch_second_derivative_schatten(a.ptr, b.ptr, p, &d2), "d2");
  json out{{"d2", d2}, {"p", exponent_to_json(p)}, {"seed", options.seed}};
  if (in.contains("h") || in.contains("fd")) {
    double h = -1.0;
    if (in.contains("h")) h = finite_number(in.at("h"), "h");
    double fd = 0.0;
    check(sch_fd_second_derivative(a.ptr, b.ptr, p, h, &fd), "d2");
    out["fd"] = fd;
  }
  return out;
}

json run_embed(const Options& options, const json& in) {
  const EmbeddingHandle map = parse_embedding(in);
  json out = embedding_to_json(map.ptr);
  out["seed"] = options.seed;
  return out;
}

json run_verify(const Options& options, const json& in) {
  const EmbeddingHandle map = parse_embedding(field(in, "embedding"));
  int samples = 200;
  if (in.contains("samples")) samples = positive_int(in.at("samples"), "samples");
  const double tol = options.tol_or(in, 1e-9);
  double residual = 0.0;
  int pass = 0;
  check(sch_verify_isometry(map.ptr, samples, static_cast<uint64_t>(options.seed),
                            tol, &residual, &pass),
        "verify");
  return json{{"pass", pass != 0},
              {"max_relative_residual", residual},
              {"samples", samples},
              {"tol", tol},
              {"seed", options.seed}};
}

json run_lambda(const Options& options, const json& in) {
  const int m = positive_int(field(in, "m"), "m");
  const json& jp = field(in, "p");
  if (!jp.is_number_integer()) fail_parse("p must be an even positive integer");
  const long long p = jp.get<long long>();
  if (p < 1 || p > 1000) throw CliError{4, "lambda: p out of the supported range"};
  const sch_field fieldtag = parse_field_tag(field(in, "field"), "field", true);
  uint64_t value = 0;
  check(sch_lambda_bound(m, static_cast<int>(p), fieldtag, &value), "lambda");
  return json{{"lambda", value},
              {"m", m},
              {"p", p},
              {"field", field(in, "field")},
              {"seed", options.seed}};
}

json run_obstruct(const Options& options, const json& in) {
  const EmbeddingHandle map = parse_embedding(field(in, "embedding"));

  double q = 0.0;
  double p = 0.0;
  {
    sch_space_kind kind;
    int dim;
    sch_field fieldtag;
    check(sch_embedding_domain(map.ptr, &kind, &dim, &q, &fieldtag), "obstruct");
    check(sch_embedding_codomain(map.ptr, &kind, &dim, &p, &fieldtag), "obstruct");
  }
  if (in.contains("q")) q = parse_exponent(in.at("q"), "q");
  if (in.contains("p")) p = parse_exponent(in.at("p"), "p");

  std::vector<double> grid;
  if (in.contains("t_grid")) {
    const json& jgrid = in.at("t_grid");
    if (!jgrid.is_array()) fail_parse("t_grid must be an array of numbers");
    for (const json& t : jgrid) grid.push_back(finite_number(t, "t_grid"));
  }
  const double tol = options.tol_or(in, -1.0);  // <= 0: library default 1e-6

  sch_report* report = nullptr;
  check(sch_check_candidate(map.ptr, q, p, grid.empty() ? nullptr : grid.data(),
                            grid.size(), tol, &report),
        "obstruct");

  json out;
  out["verdict"] = sch_verdict_name(sch_report_verdict(report));
  out["q"] = sch_report_q(report);
  out["p"] = exponent_to_json(sch_report_p(report));
  out["tol"] = sch_report_tol(report);
  out["max_residual"] = sch_report_max_residual(report);
  if (sch_report_has_d2(report)) {
    if (sch_report_d2_diverges(report)) {
      double target, actual;
      check(sch_report_d2(report, &target, &actual), "obstruct");
      out["d2_target"] = "DIVERGES";
      out["d2_actual"] = actual;
    } else {
      double target, actual;
      check(sch_report_d2(report, &target, &actual), "obstruct");
      out["d2_target"] = target;
      out["d2_actual"] = actual;
    }
  } else {
    out["d2_target"] = nullptr;
    out["d2_actual"] = nullptr;
  }
  out["profile_columns"] = json::array({"t", "target", "actual", "residual"});
  json profile = json::array();
  const size_t row_count = sch_report_profile_size(report);
  for (size_t k = 0; k < row_count; ++k) {
    double t, target, actual, residual;
    check(sch_report_profile_row(report, k, &t, &target, &actual, &residual),
          "obstruct");
    profile.push_back(json::array({t, target, actual, residual}));
  }
  out["residual_profile"] = std::move(profile);
  out["seed"] = options.seed;
  sch_report_free(report);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  CLI::App app{
      "schatten: Schatten norms, operator integrals, isometric embeddings and "
      "the non-embeddability obstruction checker.  Subcommands read one JSON "
      "document and write one JSON document."};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", options.input, "input JSON path, or - for stdin");
  app.add_option("--output", options.output, "output JSON path, or - for stdout");
  app.add_option("--seed", options.seed, "seed for randomized subcommands");
  app.add_option("--tol", options.tol, "tolerance override for verify/obstruct");

  json (*handler)(const Options&, const json&) = nullptr;
  auto add = [&](const char* name, const char* help,
                 json (*fn)(const Options&, const json&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  add("norm", "Schatten p-(quasi)norm. in: {matrix, p}; out: {norm, singular_values}",
      run_norm);
  add("svals", "singular values, descending. in: {matrix}", run_svals);
  add("divdiff",
      "divided difference at the given nodes. in: {symbol, nodes: [..]}",
      run_divdiff);
  add("moi",
      "discrete multilinear operator integral. in: {symbol, anchors: [matrix..], "
      "perturbations: [matrix..], group_tol?}",
      run_moi);
  add("d2",
      "second derivative of ||A+tB||_p^p at t=0 (finite p >= 2). in: {A, B, p, h?}; "
      "with h or fd set, also reports the central-difference value",
      run_d2);
  add("embed", "construct an embedding and emit its document. in: constructor form",
      run_embed);
  add("verify",
      "seeded isometry check. in: {embedding, samples?, tol?}; honors --seed/--tol",
      run_verify);
  add("lambda", "cubature dimension bound. in: {m, p, field: R|C|H}", run_lambda);
  add("obstruct",
      "non-embeddability pipeline on a candidate l_q^2 -> S_p^n. in: {embedding, "
      "q?, p?, t_grid?, tol?}",
      run_obstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const json in = read_input(options.input);
    const json out = handler(options, in);
    write_output(options.output, out);
    return 0;
  } catch (const CliError& e) {
    std::cerr << "schatten: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "schatten: " << e.what() << "\n";
    return 3;
  }
}
