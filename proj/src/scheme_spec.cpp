#include "fmm/scheme_spec.hpp"

#include <cstdlib>
#include <filesystem>

#include "fmm/catalog.hpp"
#include "fmm/errors.hpp"
#include "fmm/kronecker.hpp"
#include "fmm/scheme_io.hpp"
#include "fmm/symmetry.hpp"

namespace fmm {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

// Tries the literal path, then $FMM_FIXTURES/<spec>.
bool find_file(const std::string& spec, std::string& path_out) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    path_out = spec;
    return true;
  }
  if (const char* fixtures = std::getenv("FMM_FIXTURES")) {
    const std::filesystem::path candidate = std::filesystem::path(fixtures) / spec;
    if (std::filesystem::is_regular_file(candidate, ec)) {
      path_out = candidate.string();
      return true;
    }
  }
  return false;
}

bool resolvable(const std::string& spec) {
  try {
    resolve_scheme_spec(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

Dims parse_dims_csv(const std::string& text) {
  int values[3];
  std::size_t pos = 0;
  for (int idx = 0; idx < 3; ++idx) {
    if (idx > 0) {
      if (pos >= text.size() || text[pos] != ',') {
        throw ParseError("expected three comma-separated dims, got \"" + text + "\"");
      }
      ++pos;
    }
    std::size_t digits = 0;
    long long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000) throw ParseError("dimension too large in \"" + text + "\"");
      ++pos;
      ++digits;
    }
    if (digits == 0 || value < 1) {
      throw ParseError("expected a positive integer dim in \"" + text + "\"");
    }
    values[idx] = static_cast<int>(value);
  }
  if (pos != text.size()) {
    throw ParseError("trailing characters after dims in \"" + text + "\"");
  }
  return {values[0], values[1], values[2]};
}

BilinearScheme resolve_scheme_spec(const std::string& spec) {
  if (spec.empty()) throw ParameterError("empty scheme specifier");

  std::string path;
  if (find_file(spec, path)) return load_scheme(path);

  if (spec == "strassen") return strassen_scheme();

  if (starts_with(spec, "naive:")) {
    const Dims d = parse_dims_csv(spec.substr(6));
    return naive_scheme(d.u, d.v, d.w);
  }

  if (starts_with(spec, "kron:")) {
    const std::string args = spec.substr(5);
    // The factor specifiers may themselves contain commas, so use the first
    // split where both halves resolve.
    for (std::size_t i = args.find(','); i != std::string::npos; i = args.find(',', i + 1)) {
      const std::string left = args.substr(0, i);
      const std::string right = args.substr(i + 1);
      if (!left.empty() && !right.empty() && resolvable(left) && resolvable(right)) {
        return kronecker(resolve_scheme_spec(left), resolve_scheme_spec(right));
      }
    }
    throw ParameterError("cannot split \"" + args + "\" into two scheme specifiers");
  }

  if (starts_with(spec, "orient:")) {
    const std::string args = spec.substr(7);
    const std::size_t colon = args.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= args.size()) {
      throw ParameterError("orient needs \"orient:spec:u,v,w\", got \"" + spec + "\"");
    }
    const Dims target = parse_dims_csv(args.substr(colon + 1));
    return orient(resolve_scheme_spec(args.substr(0, colon)), target);
  }

  throw ParameterError("unrecognized scheme specifier \"" + spec +
                       "\" (not a file, fixture, or builtin)");
}

}  // namespace fmm
