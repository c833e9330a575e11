// Copyright 2026 The dzw Authors.
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

#include "dzw/workbench_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "dzw/errors.hpp"

namespace dzw {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, fmt::format("{}: {}", path, what));
}

// Read-only view of a JSON value that knows where it lives in the document.
class Node {
 public:
  Node(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }
  const json& raw() const noexcept { return value_; }

  bool has(const char* key) const { return value_.is_object() && value_.contains(key); }

  Node at(const char* key) const {
    require_object();
    const auto it = value_.find(key);
    if (it == value_.end()) schema_error(child_path(key), "required field missing");
    return Node(*it, child_path(key));
  }

  std::optional<Node> find(const char* key) const {
    require_object();
    const auto it = value_.find(key);
    if (it == value_.end() || it->is_null()) return std::nullopt;
    return Node(*it, child_path(key));
  }

  std::size_t size() const {
    if (!value_.is_array()) schema_error(path_, "expected an array");
    return value_.size();
  }

  Node operator[](std::size_t i) const {
    return Node(value_.at(i), fmt::format("{}[{}]", path_, i));
  }

  double number() const {
    if (!value_.is_number()) schema_error(path_, "expected a number");
    return value_.get<double>();
  }

  int integer() const {
    if (!value_.is_number_integer()) schema_error(path_, "expected an integer");
    return value_.get<int>();
  }

  std::string string() const {
    if (!value_.is_string()) schema_error(path_, "expected a string");
    return value_.get<std::string>();
  }

  Complex complex() const {
    if (!value_.is_array() || value_.size() != 2) schema_error(path_, "expected [re, im]");
    return {(*this)[0].number(), (*this)[1].number()};
  }

  std::vector<Complex> complex_list() const {
    std::vector<Complex> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].complex());
    return out;
  }

  std::vector<double> number_list() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].number());
    return out;
  }

 private:
  void require_object() const {
    if (!value_.is_object()) schema_error(path_, "expected an object");
  }
  std::string child_path(const char* key) const {
    return path_.empty() ? std::string(key) : fmt::format("{}.{}", path_, key);
  }

  const json& value_;
  std::string path_;
};

json parse_document(std::string_view text, std::string_view what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kSchemaError,
                fmt::format("{}:{}:{}: malformed JSON ({})", what, line, column, e.what()));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, fmt::format("cannot open {}", path.string()));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, fmt::format("cannot write {}", path.string()));
  out << text;
}

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson complex_list_json(const std::vector<Complex>& zs) {
  ojson out = ojson::array();
  for (const Complex& z : zs) out.push_back(complex_json(z));
  return out;
}

Eigen::MatrixXcd parse_matrix(const Node& node) {
  const Node re = node.at("re");
  const std::size_t n = re.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  const std::optional<Node> im = node.find("im");
  if (im && im->size() != n) schema_error(im->path(), "row count differs from re");
  for (std::size_t r = 0; r < n; ++r) {
    const Node row = re[r];
    if (row.size() != n) schema_error(row.path(), fmt::format("expected {} columns", n));
    for (std::size_t c = 0; c < n; ++c) {
      double imag = 0.0;
      if (im) {
        const Node irow = (*im)[r];
        if (irow.size() != n) schema_error(irow.path(), fmt::format("expected {} columns", n));
        imag = irow[c].number();
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {row[c].number(), imag};
    }
  }
  return m;
}

ojson matrix_json(const Eigen::MatrixXcd& m) {
  ojson re = ojson::array();
  ojson im = ojson::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ojson rr = ojson::array();
    ojson ir = ojson::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  ojson out;
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out;
}

HolonomyRep parse_holonomy(const Node& node) {
  const std::string type = node.at("type").string();
  if (type == "matrix") return HolonomyRep::matrix(parse_matrix(node));
  if (type == "traces") {
    const int dim = node.has("dimension") ? node.at("dimension").integer() : 1;
    const std::vector<Complex> values = node.at("values").complex_list();
    std::map<int, Complex> traces;
    for (std::size_t k = 0; k < values.size(); ++k) traces[static_cast<int>(k) + 1] = values[k];
    return HolonomyRep::traces(dim, std::move(traces));
  }
  schema_error(node.path() + ".type", fmt::format("unknown holonomy type '{}'", type));
}

ojson holonomy_json(const HolonomyRep& h) {
  ojson out;
  if (h.is_matrix()) {
    out["type"] = "matrix";
    const ojson m = matrix_json(h.matrix_form());
    out["re"] = m["re"];
    out["im"] = m["im"];
    return out;
  }
  out["type"] = "traces";
  out["dimension"] = h.dimension();
  ojson values = ojson::array();
  int expected = 1;
  for (const auto& [k, tr] : h.trace_form()) {
    if (k != expected++) {
      throw Error(ErrorCode::kInvalidArgument, "trace sequences with gaps cannot be serialized");
    }
    values.push_back(complex_json(tr));
  }
  out["values"] = std::move(values);
  return out;
}

ojson number_or_all(double x) {
  if (std::isinf(x)) return "all";
  return x;
}

}  // namespace

OrbitCatalog parse_orbit_catalog(std::string_view text) {
  const json doc = parse_document(text, "orbits.json");
  const Node root(doc, "");
  const int dimension = root.at("dimension").integer();
  const std::string mode = root.has("mode") ? root.at("mode").string() : "generic";
  if (mode != "constant_curvature" && mode != "generic") {
    schema_error("mode", fmt::format("expected constant_curvature or generic, got '{}'", mode));
  }
  const Node list = root.at("primes");
  std::vector<PrimeOrbit> primes;
  double longest = 0.0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Node p = list[i];
    PrimeOrbit orbit;
    orbit.prime_length = p.at("prime_length").number();
    longest = std::max(longest, orbit.prime_length);
    if (mode == "constant_curvature") {
      std::vector<double> angles = p.at("rotation_angles").number_list();
      orbit.poincare = constant_curvature_poincare(orbit.prime_length, angles, dimension);
      orbit.rotation_angles = std::move(angles);
    } else {
      std::vector<Complex> unstable;
      std::vector<Complex> stable;
      if (auto u = p.find("unstable_eigenvalues")) unstable = u->complex_list();
      if (auto s = p.find("stable_eigenvalues")) stable = s->complex_list();
      orbit.poincare = PoincareSpectrum(std::move(unstable), std::move(stable));
    }
    if (auto h = p.find("holonomy")) orbit.holonomy = parse_holonomy(*h);
    if (auto h = p.find("bundle_holonomy")) orbit.bundle_holonomy = parse_holonomy(*h);
    if (auto c = p.find("count")) orbit.count = c->integer();
    primes.push_back(std::move(orbit));
  }
  // Without a declaration the list is only trusted up to its longest entry.
  double complete_to = longest > 0.0 ? longest : OrbitCatalog::kComplete;
  if (auto c = root.find("complete_to")) {
    if (c->raw().is_string()) {
      if (c->string() != "all") schema_error(c->path(), "expected a number or \"all\"");
      complete_to = OrbitCatalog::kComplete;
    } else {
      complete_to = c->number();
    }
  }
  return OrbitCatalog(dimension, std::move(primes), complete_to);
}

std::string dump_orbit_catalog(const OrbitCatalog& catalog) {
  bool constant_curvature = !catalog.empty();
  for (const PrimeOrbit& p : catalog.primes()) {
    constant_curvature = constant_curvature && p.rotation_angles.has_value();
  }
  ojson doc;
  doc["dimension"] = catalog.dimension();
  doc["mode"] = constant_curvature ? "constant_curvature" : "generic";
  doc["complete_to"] = number_or_all(catalog.complete_to());
  ojson primes = ojson::array();
  for (const PrimeOrbit& p : catalog.primes()) {
    ojson entry;
    entry["prime_length"] = p.prime_length;
    if (constant_curvature) {
      entry["rotation_angles"] = *p.rotation_angles;
    } else {
      entry["unstable_eigenvalues"] = complex_list_json(p.poincare.unstable());
      entry["stable_eigenvalues"] = complex_list_json(p.poincare.stable());
    }
    entry["holonomy"] = holonomy_json(p.holonomy);
    if (p.bundle_holonomy) entry["bundle_holonomy"] = holonomy_json(*p.bundle_holonomy);
    entry["count"] = p.count;
    primes.push_back(std::move(entry));
  }
  doc["primes"] = std::move(primes);
  return doc.dump(2) + "\n";
}

LaplacianSpectra parse_spectra(std::string_view text) {
  const json doc = parse_document(text, "spectrum.json");
  const Node root(doc, "");
  const int dim = root.at("dim").integer();
  const Node degrees = root.at("degrees");
  if (!degrees.raw().is_object()) schema_error("degrees", "expected an object keyed by degree");
  std::map<int, SpectrumModel> per_degree;
  for (const auto& [key, value] : degrees.raw().items()) {
    const std::string path = fmt::format("degrees.{}", key);
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error(path, "degree keys must be integers");
    }
    const Node entry(value, path);
    std::vector<ExplicitEigenvalue> explicit_part;
    std::vector<HurwitzFamily> families;
    if (auto ex = entry.find("explicit")) {
      for (std::size_t i = 0; i < ex->size(); ++i) {
        const Node pair = (*ex)[i];
        if (pair.size() != 2) schema_error(pair.path(), "expected [eigenvalue, multiplicity]");
        explicit_part.push_back({pair[0].number(), pair[1].integer()});
      }
    }
    if (auto fam = entry.find("families")) {
      for (std::size_t i = 0; i < fam->size(); ++i) {
        const Node f = (*fam)[i];
        HurwitzFamily h;
        h.offset = f.at("a").number();
        h.scale = f.at("scale").number();
        h.multiplicity = f.has("multiplicity") ? f.at("multiplicity").integer() : 1;
        h.power = f.has("power") ? f.at("power").integer() : 2;
        families.push_back(h);
      }
    }
    per_degree.emplace(p, SpectrumModel(std::move(explicit_part), std::move(families)));
  }
  return LaplacianSpectra(dim, std::move(per_degree));
}

std::string dump_spectra(const LaplacianSpectra& spectra) {
  ojson doc;
  doc["dim"] = spectra.dim();
  ojson degrees = ojson::object();
  for (const auto& [p, model] : spectra.per_degree()) {
    ojson entry;
    ojson ex = ojson::array();
    for (const ExplicitEigenvalue& e : model.explicit_part()) {
      ex.push_back(ojson::array({e.value, e.multiplicity}));
    }
    ojson fams = ojson::array();
    for (const HurwitzFamily& f : model.families()) {
      ojson fj;
      fj["a"] = f.offset;
      fj["scale"] = f.scale;
      fj["multiplicity"] = f.multiplicity;
      if (f.power != 2) fj["power"] = f.power;
      fams.push_back(std::move(fj));
    }
    entry["explicit"] = std::move(ex);
    entry["families"] = std::move(fams);
    degrees[std::to_string(p)] = std::move(entry);
  }
  doc["degrees"] = std::move(degrees);
  return doc.dump(2) + "\n";
}

SftSystem parse_sft(std::string_view text) {
  const json doc = parse_document(text, "sft.json");
  const Node root(doc, "");
  const int vertices = root.at("vertices").integer();
  const Node list = root.at("edges");
  std::vector<SftEdge> edges;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Node e = list[i];
    SftEdge edge;
    edge.from = e.at("from").integer();
    edge.to = e.at("to").integer();
    if (e.has("weight")) edge.weight = e.at("weight").number();
    const bool has_scalar = e.has("holonomy_scalar");
    const bool has_matrix = e.has("holonomy_matrix");
    if (has_scalar && has_matrix) {
      schema_error(e.path(), "holonomy_scalar and holonomy_matrix are exclusive");
    }
    if (has_scalar) edge.holonomy = HolonomyRep::scalar(e.at("holonomy_scalar").complex());
    if (has_matrix) edge.holonomy = HolonomyRep::matrix(parse_matrix(e.at("holonomy_matrix")));
    if (auto x = e.find("expansion")) edge.expansion = x->number();
    edges.push_back(std::move(edge));
  }
  return SftSystem(vertices, std::move(edges));
}

std::string dump_sft(const SftSystem& sys) {
  ojson doc;
  doc["vertices"] = sys.vertices();
  ojson edges = ojson::array();
  for (const SftEdge& e : sys.edges()) {
    ojson ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["weight"] = e.weight;
    const Eigen::MatrixXcd& m = e.holonomy.matrix_form();
    if (m.rows() == 1) {
      ej["holonomy_scalar"] = complex_json(m(0, 0));
    } else {
      ej["holonomy_matrix"] = matrix_json(m);
    }
    if (e.expansion) ej["expansion"] = *e.expansion;
    edges.push_back(std::move(ej));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

OrbitCatalog load_orbit_catalog(const std::filesystem::path& path) {
  return parse_orbit_catalog(read_file(path));
}

void save_orbit_catalog(const OrbitCatalog& catalog, const std::filesystem::path& path) {
  write_file(path, dump_orbit_catalog(catalog));
}

LaplacianSpectra load_spectra(const std::filesystem::path& path) {
  return parse_spectra(read_file(path));
}

void save_spectra(const LaplacianSpectra& spectra, const std::filesystem::path& path) {
  write_file(path, dump_spectra(spectra));
}

SftSystem load_sft(const std::filesystem::path& path) { return parse_sft(read_file(path)); }

void save_sft(const SftSystem& sys, const std::filesystem::path& path) {
  write_file(path, dump_sft(sys));
}

}  // namespace dzw
