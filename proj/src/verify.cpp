#include "fmm/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "fmm/errors.hpp"

namespace fmm {

namespace {

constexpr int kIndexBits = 10;  // packs 6 indices into one 64-bit key
constexpr int kMaxDim = (1 << kIndexBits) - 1;

std::uint64_t pack(int i, int j, int jp, int k, int ip, int kp) {
  auto u = [](int x) { return static_cast<std::uint64_t>(x); };
  return (u(i) << 50) | (u(j) << 40) | (u(jp) << 30) | (u(k) << 20) | (u(ip) << 10) | u(kp);
}

BrentFailure unpack(std::uint64_t key, int expected, Rational got) {
  constexpr std::uint64_t mask = kMaxDim;
  BrentFailure f;
  f.i = static_cast<int>((key >> 50) & mask);
  f.j = static_cast<int>((key >> 40) & mask);
  f.jp = static_cast<int>((key >> 30) & mask);
  f.k = static_cast<int>((key >> 20) & mask);
  f.ip = static_cast<int>((key >> 10) & mask);
  f.kp = static_cast<int>(key & mask);
  f.expected = expected;
  f.got = std::move(got);
  return f;
}

}  // namespace

std::string BrentFailure::str() const {
  auto pair = [](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  return "alpha" + pair(i, j) + " beta" + pair(jp, k) + " third" + pair(kp, ip) + ": expected " +
         std::to_string(expected) + ", got " + got.str();
}

BrentReport brent_check(const BilinearScheme& scheme) {
  const int u = scheme.dims.u, v = scheme.dims.v, w = scheme.dims.w;
  if (u > kMaxDim || v > kMaxDim || w > kMaxDim) {
    throw ParameterError("verifier supports dims up to " + std::to_string(kMaxDim) + ", got " +
                         scheme.dims.str());
  }

  BrentReport report;
  report.total_equations =
      static_cast<long long>(u) * v * (static_cast<long long>(v) * w) * (static_cast<long long>(w) * u);

  std::unordered_map<std::uint64_t, Rational> sums;
  for (const MulTerm& term : scheme.terms) {
    for (const auto& ea : term.alpha.entries()) {
      for (const auto& eb : term.beta.entries()) {
        const Rational ab = ea.value * eb.value;
        for (const auto& eg : term.gamma.entries()) {
          sums[pack(ea.row, ea.col, eb.row, eb.col, eg.row, eg.col)] += ab * eg.value;
        }
      }
    }
  }

  long long violations = 0;
  auto record = [&report, &violations](BrentFailure f) {
    ++violations;
    if (report.first_failures.size() < 10) report.first_failures.push_back(std::move(f));
  };

  // Deterministic failure order: visit accumulated keys sorted.
  std::vector<std::uint64_t> keys;
  keys.reserve(sums.size());
  for (const auto& [key, value] : sums) {
    (void)value;
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys) {
    const Rational& got = sums.at(key);
    const auto f = unpack(key, 0, got);  // borrow the field decoding
    const bool is_delta = f.i == f.ip && f.j == f.jp && f.k == f.kp;
    const int expected = is_delta ? 1 : 0;
    if (got != Rational(expected)) record(unpack(key, expected, got));
  }
  // Delta equations whose sum never accumulated at all are silent zeros.
  for (int i = 0; i < u; ++i) {
    for (int j = 0; j < v; ++j) {
      for (int k = 0; k < w; ++k) {
        const std::uint64_t key = pack(i, j, j, k, i, k);
        if (!sums.count(key)) record(unpack(key, 1, Rational(0)));
      }
    }
  }
  std::sort(report.first_failures.begin(), report.first_failures.end(),
            [](const BrentFailure& a, const BrentFailure& b) {
              return pack(a.i, a.j, a.jp, a.k, a.ip, a.kp) < pack(b.i, b.j, b.jp, b.k, b.ip, b.kp);
            });
  if (report.first_failures.size() > 10) report.first_failures.resize(10);
  report.passed = violations == 0;
  return report;
}

Matrix<Rational> random_int_matrix(int rows, int cols, std::mt19937_64& gen) {
  Matrix<Rational> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = Rational(static_cast<long long>(gen() % 19) - 9);
    }
  }
  return m;
}

Matrix<double> random_real_matrix(int rows, int cols, std::mt19937_64& gen) {
  Matrix<double> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double unit = static_cast<double>(gen() >> 11) / 9007199254740992.0;  // [0,1)
      m.at(r, c) = unit * 2.0 - 1.0;
    }
  }
  return m;
}

EvalReport random_eval_check(const BilinearScheme& scheme, int trials, unsigned long long seed) {
  if (trials < 1) throw ParameterError("trials must be >= 1, got " + std::to_string(trials));
  std::mt19937_64 gen(seed);
  EvalReport report;
  report.all_equal = true;
  for (int t = 0; t < trials; ++t) {
    Matrix<Rational> a = random_int_matrix(scheme.dims.u, scheme.dims.v, gen);
    Matrix<Rational> b = random_int_matrix(scheme.dims.v, scheme.dims.w, gen);
    Matrix<Rational> via_scheme = evaluate(scheme, a, b);
    Matrix<Rational> via_oracle = naive_mult(a, b);
    ++report.trials;
    if (via_scheme != via_oracle) {
      report.all_equal = false;
      for (int r = 0; r < via_scheme.rows() && !report.mismatch_example; ++r) {
        for (int c = 0; c < via_scheme.cols(); ++c) {
          if (via_scheme.at(r, c) != via_oracle.at(r, c)) {
            report.mismatch_example =
                EvalMismatch{a, b, r, c, via_scheme.at(r, c), via_oracle.at(r, c)};
            break;
          }
        }
      }
      break;
    }
  }
  return report;
}

}  // namespace fmm
