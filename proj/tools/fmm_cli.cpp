// Command-line front end: scheme generation, transformation, composition,
// verification, evaluation, bound queries and benchmarking.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fmm/bounds.hpp"
#include "fmm/catalog.hpp"
#include "fmm/compose.hpp"
#include "fmm/errors.hpp"
#include "fmm/kronecker.hpp"
#include "fmm/scheme.hpp"
#include "fmm/scheme_io.hpp"
#include "fmm/scheme_spec.hpp"
#include "fmm/symmetry.hpp"
#include "fmm/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void print_summary(const fmm::BilinearScheme& s) {
  const fmm::OpCounts ops = fmm::op_counts(s);
  std::cout << "name:            " << s.name << "\n"
            << "dims:            " << s.dims.str() << "\n"
            << "rank:            " << fmm::rank(s) << "\n"
            << "multiplications: " << ops.multiplications << "\n"
            << "additions:       " << ops.additions << "\n"
            << "scalar muls:     " << ops.scalar_multiplications << "\n"
            << "provenance:      " << (s.provenance.empty() ? "-" : s.provenance) << "\n"
            << "verified:        " << (s.verified ? "yes" : "no") << "\n";
}

int report_brent(const fmm::BilinearScheme& s) {
  const fmm::BrentReport report = fmm::brent_check(s);
  std::cout << s.dims.str() << " rank " << fmm::rank(s) << ": " << report.total_equations
            << " equations, " << (report.passed ? "PASS" : "FAIL") << "\n";
  for (const fmm::BrentFailure& f : report.first_failures) {
    std::cout << "  " << f.str() << "\n";
  }
  return report.passed ? kExitOk : kExitVerifyFailed;
}

fmm::Matrix<fmm::Rational> load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fmm::IoError("cannot open " + path);
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw fmm::ParseError(path + ": " + e.what());
  }
  if (!root.is_array() || root.empty() || !root[0].is_array() || root[0].empty()) {
    throw fmm::ValidationError(path + ": expected a non-empty array of rows");
  }
  const int rows = static_cast<int>(root.size());
  const int cols = static_cast<int>(root[0].size());
  fmm::Matrix<fmm::Rational> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!root[r].is_array() || static_cast<int>(root[r].size()) != cols) {
      throw fmm::ValidationError(path + ": row " + std::to_string(r) + " has ragged length");
    }
    for (int c = 0; c < cols; ++c) {
      const auto& cell = root[r][c];
      if (cell.is_number_integer()) {
        m.at(r, c) = fmm::Rational(cell.get<long long>());
      } else if (cell.is_string()) {
        m.at(r, c) = fmm::Rational::parse(cell.get<std::string>());
      } else {
        throw fmm::ValidationError(path + ": entries must be integers or fraction strings");
      }
    }
  }
  return m;
}

// Blocked recursive application for square schemes; counts the scalar
// multiplications performed at the leaves.
fmm::Matrix<double> recursive_eval(const fmm::BilinearScheme& s, const fmm::Matrix<double>& a,
                                   const fmm::Matrix<double>& b, long long* mults) {
  const int n = a.rows();
  const int u = s.dims.u;
  if (n == u) return fmm::evaluate(s, a, b, mults);

  const int sub = n / u;
  auto block = [sub](const fmm::Matrix<double>& m, int br, int bc) {
    fmm::Matrix<double> out(sub, sub);
    for (int r = 0; r < sub; ++r) {
      for (int c = 0; c < sub; ++c) out.at(r, c) = m.at(br * sub + r, bc * sub + c);
    }
    return out;
  };

  fmm::Matrix<double> result(n, n);
  for (const fmm::MulTerm& term : s.terms) {
    fmm::Matrix<double> left(sub, sub);
    for (const auto& e : term.alpha.entries()) {
      const fmm::Matrix<double> blk = block(a, e.row, e.col);
      const double coeff = e.value.to_double();
      for (int r = 0; r < sub; ++r) {
        for (int c = 0; c < sub; ++c) left.at(r, c) += coeff * blk.at(r, c);
      }
    }
    fmm::Matrix<double> right(sub, sub);
    for (const auto& e : term.beta.entries()) {
      const fmm::Matrix<double> blk = block(b, e.row, e.col);
      const double coeff = e.value.to_double();
      for (int r = 0; r < sub; ++r) {
        for (int c = 0; c < sub; ++c) right.at(r, c) += coeff * blk.at(r, c);
      }
    }
    const fmm::Matrix<double> product = recursive_eval(s, left, right, mults);
    for (const auto& e : term.gamma.entries()) {
      const double coeff = e.value.to_double();
      for (int r = 0; r < sub; ++r) {
        for (int c = 0; c < sub; ++c) {
          result.at(e.row * sub + r, e.col * sub + c) += coeff * product.at(r, c);
        }
      }
    }
  }
  return result;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bilinear matrix-multiplication schemes"};
  app.require_subcommand(1);

  // gen
  std::string gen_spec, gen_out;
  CLI::App* gen = app.add_subcommand("gen", "materialize a scheme specifier into a file");
  gen->add_option("spec", gen_spec, "scheme specifier")->required();
  gen->add_option("-o,--output", gen_out, "output path")->required();

  // info
  std::string info_spec;
  CLI::App* info = app.add_subcommand("info", "print dims, rank and operation counts");
  info->add_option("spec", info_spec, "scheme specifier")->required();

  // verify
  std::string verify_spec;
  CLI::App* verify = app.add_subcommand("verify", "run the exact equation check");
  verify->add_option("spec", verify_spec, "scheme specifier")->required();

  // rotate / transpose
  std::string rot_spec, rot_out;
  CLI::App* rot = app.add_subcommand("rotate", "cycle the product roles");
  rot->add_option("spec", rot_spec, "scheme specifier")->required();
  rot->add_option("-o,--output", rot_out, "output path")->required();

  std::string tr_spec, tr_out;
  CLI::App* tr = app.add_subcommand("transpose", "transpose-dual the scheme");
  tr->add_option("spec", tr_spec, "scheme specifier")->required();
  tr->add_option("-o,--output", tr_out, "output path")->required();

  // orient
  std::string or_spec, or_out, or_target;
  CLI::App* orient_cmd = app.add_subcommand("orient", "reorient to target dims");
  orient_cmd->add_option("spec", or_spec, "scheme specifier")->required();
  orient_cmd->add_option("-t,--to", or_target, "target dims u,v,w")->required();
  orient_cmd->add_option("-o,--output", or_out, "output path")->required();

  // kron
  std::string kron_a, kron_b, kron_out;
  CLI::App* kron_cmd = app.add_subcommand("kron", "tensor product of two schemes");
  kron_cmd->add_option("left", kron_a, "left scheme specifier")->required();
  kron_cmd->add_option("right", kron_b, "right scheme specifier")->required();
  kron_cmd->add_option("-o,--output", kron_out, "output path")->required();

  // compose
  int comp_u = 0, comp_v = 0;
  std::string comp_uuu, comp_uuv, comp_vvu, comp_out;
  bool comp_no_verify = false;
  CLI::App* comp = app.add_subcommand("compose", "seven-summand divide-and-conquer combiner");
  comp->add_option("-u", comp_u, "large block size")->required();
  comp->add_option("-v", comp_v, "small block size")->required();
  comp->add_option("--uuu", comp_uuu, "scheme for <u,u,u>")->required();
  comp->add_option("--uuv", comp_uuv, "scheme for the {u,u,v} class")->required();
  comp->add_option("--vvu", comp_vvu, "scheme for the {v,v,u} class")->required();
  comp->add_option("-o,--output", comp_out, "output path")->required();
  comp->add_flag("--no-verify", comp_no_verify, "skip input and output verification");

  // eval
  std::string eval_spec, eval_left, eval_right;
  CLI::App* eval_cmd = app.add_subcommand("eval", "multiply two matrices with a scheme");
  eval_cmd->add_option("spec", eval_spec, "scheme specifier")->required();
  eval_cmd->add_option("--left", eval_left, "left matrix file (JSON rows)")->required();
  eval_cmd->add_option("--right", eval_right, "right matrix file (JSON rows)")->required();

  // check-random
  std::string cr_spec;
  int cr_trials = 100;
  unsigned long long cr_seed = 1;
  CLI::App* cr = app.add_subcommand("check-random", "compare against the cubic oracle");
  cr->add_option("spec", cr_spec, "scheme specifier")->required();
  cr->add_option("--trials", cr_trials, "number of random pairs");
  cr->add_option("--seed", cr_seed, "generator seed");

  // bound
  std::vector<int> bound_dims;
  std::vector<int> bound_prop1;
  std::vector<std::string> bound_kron;
  std::string bounds_file;
  CLI::App* bound_cmd = app.add_subcommand("bound", "query the rank-bounds table");
  bound_cmd->add_option("dims", bound_dims, "u v w")->expected(3);
  bound_cmd->add_option("--prop1", bound_prop1, "derive via divide-and-conquer from u v")
      ->expected(2);
  bound_cmd->add_option("--kron", bound_kron, "derive via tensor product of t1 t2 (as u,v,w)")
      ->expected(2);
  bound_cmd->add_option("--bounds-file", bounds_file, "merge extra bounds from a JSON file");

  // bench
  std::string bench_spec;
  int bench_size = 0, bench_reps = 3;
  unsigned long long bench_seed = 42;
  bool bench_recursive = false;
  CLI::App* bench = app.add_subcommand("bench", "time a square scheme against the cubic loop");
  bench->add_option("spec", bench_spec, "scheme specifier")->required();
  bench->add_option("--size", bench_size, "matrix size")->required();
  bench->add_option("--reps", bench_reps, "repetitions");
  bench->add_option("--seed", bench_seed, "matrix seed");
  bench->add_flag("--recursive", bench_recursive, "blocked recursion down to the scheme size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      fmm::save_scheme(fmm::resolve_scheme_spec(gen_spec), gen_out);
      std::cout << "wrote " << gen_out << "\n";
      return kExitOk;
    }
    if (*info) {
      print_summary(fmm::resolve_scheme_spec(info_spec));
      return kExitOk;
    }
    if (*verify) {
      return report_brent(fmm::resolve_scheme_spec(verify_spec));
    }
    if (*rot) {
      fmm::save_scheme(fmm::rotate(fmm::resolve_scheme_spec(rot_spec)), rot_out);
      std::cout << "wrote " << rot_out << "\n";
      return kExitOk;
    }
    if (*tr) {
      fmm::save_scheme(fmm::transpose_dual(fmm::resolve_scheme_spec(tr_spec)), tr_out);
      std::cout << "wrote " << tr_out << "\n";
      return kExitOk;
    }
    if (*orient_cmd) {
      const fmm::Dims target = fmm::parse_dims_csv(or_target);
      fmm::save_scheme(fmm::orient(fmm::resolve_scheme_spec(or_spec), target), or_out);
      std::cout << "wrote " << or_out << "\n";
      return kExitOk;
    }
    if (*kron_cmd) {
      const fmm::BilinearScheme product =
          fmm::kronecker(fmm::resolve_scheme_spec(kron_a), fmm::resolve_scheme_spec(kron_b));
      fmm::save_scheme(product, kron_out);
      std::cout << "wrote " << kron_out << " (" << product.dims.str() << ", rank "
                << fmm::rank(product) << ")\n";
      return kExitOk;
    }
    if (*comp) {
      fmm::ComposeOptions options;
      options.strict = !comp_no_verify;
      auto [scheme, report] =
          fmm::compose(comp_u, comp_v, fmm::resolve_scheme_spec(comp_uuu),
                       fmm::resolve_scheme_spec(comp_uuv), fmm::resolve_scheme_spec(comp_vvu),
                       options);
      std::cout << "rank: " << report.result_rank << " = " << report.input_ranks[0] << "+3·"
                << report.input_ranks[1] << "+3·" << report.input_ranks[2]
                << (report.bound_check ? "" : " (MISMATCH)") << "\n";
      int code = kExitOk;
      if (!comp_no_verify) {
        const fmm::BrentReport brent = fmm::brent_check(scheme);
        scheme.verified = brent.passed;
        std::cout << "verification: " << brent.total_equations << " equations, "
                  << (brent.passed ? "PASS" : "FAIL") << "\n";
        if (!brent.passed) code = kExitVerifyFailed;
      }
      fmm::save_scheme(scheme, comp_out);
      std::cout << "wrote " << comp_out << "\n";
      return code;
    }
    if (*eval_cmd) {
      const fmm::BilinearScheme scheme = fmm::resolve_scheme_spec(eval_spec);
      const auto result =
          fmm::evaluate(scheme, load_matrix(eval_left), load_matrix(eval_right));
      for (int r = 0; r < result.rows(); ++r) {
        for (int c = 0; c < result.cols(); ++c) {
          std::cout << (c ? " " : "") << result.at(r, c).str();
        }
        std::cout << "\n";
      }
      return kExitOk;
    }
    if (*cr) {
      const fmm::BilinearScheme scheme = fmm::resolve_scheme_spec(cr_spec);
      const fmm::EvalReport report = fmm::random_eval_check(scheme, cr_trials, cr_seed);
      if (report.all_equal) {
        std::cout << "all equal over " << report.trials << " trials (seed " << cr_seed << ")\n";
        return kExitOk;
      }
      const fmm::EvalMismatch& m = *report.mismatch_example;
      std::cout << "mismatch at trial " << report.trials << ", cell (" << m.row << "," << m.col
                << "): scheme " << m.scheme_value.str() << ", oracle " << m.oracle_value.str()
                << "\n";
      return kExitVerifyFailed;
    }
    if (*bound_cmd) {
      if (bound_dims.empty()) throw fmm::ParameterError("bound needs a dims triple");
      fmm::BoundsTable table = fmm::BoundsTable::seeded();
      if (!bounds_file.empty()) table.load_file(bounds_file);
      const fmm::Dims dims{bound_dims[0], bound_dims[1], bound_dims[2]};
      const fmm::BoundEntry best = table.best_entry(dims);
      std::cout << dims.str() << " <= " << best.rank_bound << " (" << best.provenance << ")\n";
      if (!bound_prop1.empty()) {
        const int u = bound_prop1[0], v = bound_prop1[1];
        if (fmm::Dims{u + v, u + v, u + v} != dims) {
          throw fmm::ParameterError("--prop1 " + std::to_string(u) + " " + std::to_string(v) +
                                    " derives a bound for " + fmm::Dims{u + v, u + v, u + v}.str() +
                                    ", not " + dims.str());
        }
        std::cout << "divide-and-conquer: " << fmm::prop1_derivation(u, v, table) << "\n";
      }
      if (!bound_kron.empty()) {
        const fmm::Dims d1 = fmm::parse_dims_csv(bound_kron[0]);
        const fmm::Dims d2 = fmm::parse_dims_csv(bound_kron[1]);
        if (fmm::Dims{d1.u * d2.u, d1.v * d2.v, d1.w * d2.w} != dims) {
          throw fmm::ParameterError("--kron factors do not multiply to " + dims.str());
        }
        std::cout << "kronecker: " << fmm::kron_derivation(d1, d2, table) << "\n";
      }
      return kExitOk;
    }
    if (*bench) {
      const fmm::BilinearScheme scheme = fmm::resolve_scheme_spec(bench_spec);
      const int u = scheme.dims.u;
      if (scheme.dims.v != u || scheme.dims.w != u) {
        throw fmm::ParameterError("bench needs a square scheme, got " + scheme.dims.str());
      }
      int levels = 0;
      if (u == 1 && bench_size != 1) {
        throw fmm::ParameterError("size must be 1 for a 1x1 scheme");
      }
      for (long long n = bench_size; n > 1; n /= u) {
        if (n % u != 0) {
          throw fmm::ParameterError("size " + std::to_string(bench_size) + " is not a power of " +
                                    std::to_string(u));
        }
        ++levels;
      }
      if (bench_size < u || (!bench_recursive && bench_size != u)) {
        throw fmm::ParameterError("size must be " + std::to_string(u) +
                                  " (or a power of it with --recursive)");
      }
      std::mt19937_64 gen(bench_seed);
      const auto a = fmm::random_real_matrix(bench_size, bench_size, gen);
      const auto b = fmm::random_real_matrix(bench_size, bench_size, gen);

      const fmm::OpCounts ops = fmm::op_counts(scheme);
      std::cout << "scheme: " << scheme.name << " " << scheme.dims.str() << "\n"
                << "rank: " << ops.multiplications << " (vs naive "
                << static_cast<long long>(u) * u * u << " per block)\n"
                << "additions: " << ops.additions
                << ", non-unit coefficients: " << ops.scalar_multiplications << "\n";

      long long mults = 0;
      fmm::Matrix<double> via_scheme(bench_size, bench_size);
      auto t0 = std::chrono::steady_clock::now();
      for (int rep = 0; rep < bench_reps; ++rep) {
        mults = 0;
        via_scheme = bench_recursive ? recursive_eval(scheme, a, b, &mults)
                                     : fmm::evaluate(scheme, a, b, &mults);
      }
      const double scheme_time = seconds_since(t0) / bench_reps;

      auto t1 = std::chrono::steady_clock::now();
      fmm::Matrix<double> via_naive(bench_size, bench_size);
      for (int rep = 0; rep < bench_reps; ++rep) via_naive = fmm::naive_mult(a, b);
      const double naive_time = seconds_since(t1) / bench_reps;

      double max_delta = 0;
      for (int r = 0; r < bench_size; ++r) {
        for (int c = 0; c < bench_size; ++c) {
          max_delta = std::max(max_delta, std::abs(via_scheme.at(r, c) - via_naive.at(r, c)));
        }
      }
      std::cout << "size " << bench_size << ", levels " << levels << ": scalar multiplications "
                << mults << "\n"
                << "scheme time: " << scheme_time << " s, naive time: " << naive_time << " s\n"
                << "max |delta| vs naive: " << max_delta << "\n";
      return kExitOk;
    }
  } catch (const fmm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
