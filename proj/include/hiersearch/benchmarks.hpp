#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hiersearch/domain.hpp"

namespace hiersearch {

double rastrigin(const std::vector<double> &x);
double styblinski_tang(const std::vector<double> &x);
double hartmann(std::size_t d, const std::vector<double> &x); // d in {3,4,6}
double toy_mae(const std::vector<double> &x, const std::vector<double> &chi);

// A boxed test function with its recorded optimum and optimizer.
struct BenchmarkFunction {
  std::string key;    // "<family>-<d>d", e.g. "rastrigin-6d"
  std::string family; // hartmann | rastrigin | styblinski_tang | toy_mae
  std::size_t dims = 0;
  double lo = 0.0, hi = 1.0; // the same box on every axis
  double known_optimum = 0.0;
  std::vector<double> argmin;
  std::function<double(const std::vector<double> &)> fn;
};

std::vector<std::string> benchmark_keys();

// Looks up a key like "styblinski_tang-10d". The toy MAE family draws its
// ground-truth vector from the seed (a fresh one per experiment); the other
// families ignore the seed. Unknown keys throw ConfigError.
BenchmarkFunction make_benchmark(const std::string &key,
                                 std::uint64_t seed = 0);

// d continuous dimensions x1..xd over the function's box, all objective.
SearchSpace benchmark_space(const BenchmarkFunction &f);

// Adapter from Coordinate to the plain-vector benchmark signature.
ObjectiveHandle::Fn as_objective(const BenchmarkFunction &f);

} // namespace hiersearch
