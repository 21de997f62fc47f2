#include "fmm/scheme_io.hpp"

#include <fstream>

#include <json.hpp>

#include "fmm/errors.hpp"
#include "fmm/verify.hpp"

namespace fmm {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

Json factor_to_json(const CoeffMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) {
    out.push_back(Json::array({e.row, e.col, e.value.str()}));
  }
  return out;
}

CoeffMatrix factor_from_json(const Json& j, int rows, int cols, std::size_t term_index,
                             const char* which) {
  const std::string where = "term " + std::to_string(term_index) + " " + which;
  if (!j.is_array()) throw ValidationError(where + ": expected an array of entries");
  CoeffMatrix m(rows, cols);
  for (const Json& entry : j) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_string()) {
      throw ValidationError(where + ": each entry must be [row, col, \"coefficient\"]");
    }
    const int r = entry[0].get<int>();
    const int c = entry[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw ValidationError(where + ": index (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range for " + std::to_string(rows) + "x" +
                            std::to_string(cols));
    }
    if (!m.at(r, c).is_zero()) {
      throw ValidationError(where + ": duplicate entry at (" + std::to_string(r) + "," +
                            std::to_string(c) + ")");
    }
    const Rational value = Rational::parse(entry[2].get<std::string>());
    if (value.is_zero()) {
      throw ValidationError(where + ": zero coefficient at (" + std::to_string(r) + "," +
                            std::to_string(c) + "); omit the entry instead");
    }
    m.add(r, c, value);
  }
  return m;
}

}  // namespace

BilinearScheme load_scheme(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  Json root;
  try {
    root = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!root.is_object()) throw ValidationError(path + ": top level must be an object");
  if (!root.contains("format_version") || !root["format_version"].is_number_integer() ||
      root["format_version"].get<int>() != kFormatVersion) {
    throw ValidationError(path + ": format_version must be " + std::to_string(kFormatVersion));
  }
  if (!root.contains("dims") || !root["dims"].is_array() || root["dims"].size() != 3) {
    throw ValidationError(path + ": dims must be an array of three integers");
  }
  Dims dims;
  int* d[3] = {&dims.u, &dims.v, &dims.w};
  for (int idx = 0; idx < 3; ++idx) {
    const Json& val = root["dims"][idx];
    if (!val.is_number_integer() || val.get<int>() < 1) {
      throw ValidationError(path + ": dims entries must be positive integers");
    }
    *d[idx] = val.get<int>();
  }
  if (!root.contains("terms") || !root["terms"].is_array()) {
    throw ValidationError(path + ": terms must be an array");
  }
  if (!root.contains("rank") || !root["rank"].is_number_integer() ||
      root["rank"].get<long long>() != static_cast<long long>(root["terms"].size())) {
    throw ValidationError(path + ": rank must equal the number of terms (" +
                          std::to_string(root["terms"].size()) + ")");
  }
  std::vector<MulTerm> terms;
  terms.reserve(root["terms"].size());
  for (std::size_t l = 0; l < root["terms"].size(); ++l) {
    const Json& jt = root["terms"][l];
    if (!jt.is_object() || !jt.contains("alpha") || !jt.contains("beta") ||
        !jt.contains("gamma")) {
      throw ValidationError(path + ": term " + std::to_string(l) +
                            " must hold alpha, beta and gamma");
    }
    MulTerm t;
    t.alpha = factor_from_json(jt["alpha"], dims.u, dims.v, l, "alpha");
    t.beta = factor_from_json(jt["beta"], dims.v, dims.w, l, "beta");
    t.gamma = factor_from_json(jt["gamma"], dims.u, dims.w, l, "gamma");
    terms.push_back(std::move(t));
  }
  const std::string name = root.value("name", std::string{});
  std::string provenance = root.value("provenance", std::string{});

  BilinearScheme scheme = make_scheme(dims, std::move(terms), name, provenance);
  if (options.verify) {
    const BrentReport report = brent_check(scheme);
    scheme.verified = report.passed;
    const std::string note = report.passed
                                 ? "verified: " + std::to_string(report.total_equations) +
                                       " equations"
                                 : "verification failed";
    scheme.provenance += scheme.provenance.empty() ? note : "; " + note;
  }
  return scheme;
}

void save_scheme(const BilinearScheme& scheme, const std::string& path) {
  Json root;
  root["format_version"] = kFormatVersion;
  root["name"] = scheme.name;
  root["provenance"] = scheme.provenance;
  root["dims"] = Json::array({scheme.dims.u, scheme.dims.v, scheme.dims.w});
  root["rank"] = rank(scheme);
  Json terms = Json::array();
  for (const MulTerm& t : scheme.terms) {
    Json jt;
    jt["alpha"] = factor_to_json(t.alpha);
    jt["beta"] = factor_to_json(t.beta);
    jt["gamma"] = factor_to_json(t.gamma);
    terms.push_back(std::move(jt));
  }
  root["terms"] = std::move(terms);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << root.dump(2) << "\n";
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace fmm
