#pragma once

#include <optional>
#include <utility>

#include "gegenbauer/maximal.hpp"
#include "gegenbauer/params.hpp"
#include "gegenbauer/test_function.hpp"

namespace gegenbauer {

struct NormSpec {
  double p = 2.0;
  std::optional<double> morrey_gamma;
  bool modified = false;  // normalise by [sh r/2]_1 = min{1, sh r/2}

  void validate(const GegenbauerParams& params) const;
};

// || f ||_{p, lambda} over the truncation domain of f; p = inf is a grid sup.
double lp_norm(const GegenbauerParams& params, const TestFunction& f, double p);
// Same, restricted to [a, b].
double lp_norm_on(const GegenbauerParams& params, const TestFunction& f, double p, double a, double b);

// sup over the lattice of ( norm(r)^-gamma * integral over [0, r] of
// (A_t|f|(ch x))^p sh^(2 lambda) t dt )^(1/p), norm(r) = sh r/2 or [sh r/2]_1.
double morrey_norm(const GegenbauerParams& params, const TestFunction& f, double p, double gamma_m, bool modified,
                   const Lattice& lattice = Lattice::standard(), int jobs = 1);
double norm(const GegenbauerParams& params, const TestFunction& f, const NormSpec& spec,
            const Lattice& lattice = Lattice::standard(), int jobs = 1);

// sup over the lattice of the mean oscillation of A_t g(ch x) over H(0, r)
// about its weighted mean. Exactly 0 for constants.
double bmo_norm(const GegenbauerParams& params, const TestFunction& g, const Lattice& lattice = Lattice::standard(),
                int jobs = 1);
double bmo_norm(const GegenbauerParams& params, const GridFunction& g, const Lattice& lattice = Lattice::standard(),
                int jobs = 1);

struct EmbeddingCheck {
  double alpha = 0.0;  // from alpha p = 2 lambda + 1 - gamma_m
  double lhs = 0.0;    // || f ||_{L_{1, lambda, 2 lambda + 1 - alpha}}
  double rhs = 0.0;    // || f ||_{L_{p, lambda, gamma_m}}
};

EmbeddingCheck embedding_check(const GegenbauerParams& params, const TestFunction& f, double p, double gamma_m,
                               const Lattice& lattice = Lattice::standard(), int jobs = 1);

}  // namespace gegenbauer
