#include "support/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace aicbnb::testing {

namespace {

std::vector<std::string> default_names(int p) {
  std::vector<std::string> names;
  for (int j = 1; j <= p; ++j) names.push_back("x" + std::to_string(j));
  names.push_back("y");
  return names;
}

Dataset assemble(std::vector<std::vector<double>> cols, std::vector<double> y) {
  int p = static_cast<int>(cols.size());
  return Dataset(std::move(cols), std::move(y), default_names(p));
}

}  // namespace

Dataset make_random_dataset(unsigned seed, int n, int p) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& col : cols)
    for (double& v : col) v = gauss(rng);

  const int signal = std::max(1, p / 3);
  std::vector<double> beta(static_cast<std::size_t>(p), 0.0);
  for (int j = 0; j < signal; ++j) beta[static_cast<std::size_t>(j)] = 1.0 + gauss(rng) * 0.5;

  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double v = 0.5;  // intercept
    for (int j = 0; j < p; ++j)
      v += beta[static_cast<std::size_t>(j)] * cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(i)] = v + gauss(rng);
  }
  return assemble(std::move(cols), std::move(y));
}

Dataset make_dependent_dataset(unsigned seed, int n, int p, int deps) {
  if (deps >= p - 1) throw std::invalid_argument("too many injected dependencies");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);

  const int base = p - deps;
  // Source columns hold small integers and relation weights are half-integers,
  // so every injected combination is exact in floating point: a dependent
  // column carries no round-off component that a full-precision fit could
  // exploit as an extra direction.
  std::uniform_int_distribution<int> level(-2, 2);
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (int j = 0; j < base; ++j)
    for (double& v : cols[static_cast<std::size_t>(j)]) v = level(rng);

  for (int j = base; j < p; ++j) {
    std::uniform_int_distribution<int> pick(0, j - 1);
    int nmembers = std::min(j, 1 + static_cast<int>(rng() % 3u));  // 1..3 source columns
    std::vector<int> members;
    while (static_cast<int>(members.size()) < nmembers) {
      int m = pick(rng);
      bool dup = false;
      for (int e : members) dup = dup || e == m;
      if (!dup) members.push_back(m);
    }
    double shift = coin(rng) ? 1.5 : 0.0;  // sometimes involve the intercept
    std::uniform_int_distribution<int> halves(1, 4);
    std::vector<double> weights;
    for (std::size_t t = 0; t < members.size(); ++t)
      weights.push_back(0.5 * halves(rng) * (coin(rng) ? 1.0 : -1.0));

    for (int i = 0; i < n; ++i) {
      double v = shift;
      for (std::size_t t = 0; t < members.size(); ++t)
        v += weights[t] * cols[static_cast<std::size_t>(members[t])][static_cast<std::size_t>(i)];
      cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  }

  const int signal = std::max(1, base / 3);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double v = -0.25;
    for (int j = 0; j < signal; ++j)
      v += 1.25 * cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(i)] = v + gauss(rng);
  }
  return assemble(std::move(cols), std::move(y));
}

Dataset make_perfect_fit_dataset(unsigned seed, int n, int p) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& col : cols)
    for (double& v : col) v = gauss(rng);

  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    y[static_cast<std::size_t>(i)] = 2.0 * cols[0][static_cast<std::size_t>(i)] -
                                     1.0 * cols[1][static_cast<std::size_t>(i)] + 0.75;
  return assemble(std::move(cols), std::move(y));
}

Dataset make_sw_trap_dataset() {
  // x2 shadows x1; y is their difference. Each variable alone explains almost
  // nothing, so the forward pass cannot justify its first move.
  std::mt19937 rng(20240811u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = 40;

  std::vector<double> x1(n), x2(n), x3(n), y(n);
  for (int i = 0; i < n; ++i) {
    x1[static_cast<std::size_t>(i)] = gauss(rng);
    x2[static_cast<std::size_t>(i)] = x1[static_cast<std::size_t>(i)] + 0.05 * gauss(rng);
    x3[static_cast<std::size_t>(i)] = gauss(rng);
    y[static_cast<std::size_t>(i)] = x1[static_cast<std::size_t>(i)] - x2[static_cast<std::size_t>(i)] +
                                     0.01 * gauss(rng);
  }
  return assemble({x1, x2, x3}, y);
}

Dataset make_noise_heavy_dataset(unsigned seed, int n, int p) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p),
                                        std::vector<double>(static_cast<std::size_t>(n)));
  for (auto& col : cols)
    for (double& v : col) v = gauss(rng);

  std::vector<double> y(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Two real but weak signals drowned in noise: the best subset stays tiny.
    double v = 0.35 * cols[0][static_cast<std::size_t>(i)] +
               0.30 * cols[1][static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(i)] = v + gauss(rng);
  }
  return assemble(std::move(cols), std::move(y));
}

void write_csv(const std::string& path, const Dataset& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  const auto& names = d.names();
  for (int j = 1; j <= d.p(); ++j) out << names[static_cast<std::size_t>(j - 1)] << ",";
  out << names.back() << "\n";
  out.precision(17);
  for (int i = 0; i < d.n(); ++i) {
    for (int j = 1; j <= d.p(); ++j) out << d.column(j)[static_cast<std::size_t>(i)] << ",";
    out << d.response()[static_cast<std::size_t>(i)] << "\n";
  }
}

}  // namespace aicbnb::testing
