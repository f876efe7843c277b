#pragma once

#include <string>
#include <vector>

#include "sigmaforge/hurwitz.hpp"

namespace sigmaforge {

// Slices of the genus-2 sigma expansion along u3 (xi) and along u1 (mu).
// Every level is carried to the same series order so cross-relations can be
// checked at full strength.
struct xi_hierarchy {
  std::vector<hw1> xi;  // xi[k] in u1
};

struct mu_hierarchy {
  std::vector<hw1> mu;  // mu[k] in u3
};

enum class sigma_route { xi, mu, tau };

struct sigma_series {
  hw2 s;
  sigma_route route;
};

// xi_0 = sum p_l u1^l/l!; seeds p_3 = 2 (normalization sigma = u1^3/3 - u3 + ...),
// p_l = 0 for l < 3, then the degree-raising recurrence in l.
hw1 xi0_series(long N);

// mu_0 = sum q_l u3^l/l!; seeds q_1 = -1, q_3 = -l6.
hw1 mu0_series(long N);

// Levels 0..K. xi_1 is solved from the k=0 slot of the second heat relation
// (dividing by u1 after the constant term is checked to vanish); xi_{k+2}
// comes from the fourth relation. mu_1 is solved termwise from the k=0 slot
// of the third relation; mu_{k+2} comes from the second. All levels end up
// with order >= N.
xi_hierarchy build_xi_hierarchy(int K, long N);
mu_hierarchy build_mu_hierarchy(int K, long N);

// Exact residuals of all four slice relations for every level that can be
// formed from the computed data. Empty result = all identities hold.
std::vector<std::string> verify_xi_hierarchy(const xi_hierarchy& h);
std::vector<std::string> verify_mu_hierarchy(const mu_hierarchy& h);

sigma_series assemble_sigma(const xi_hierarchy& h, long N);
sigma_series assemble_sigma(const mu_hierarchy& h, long N);

// Convenience: build the hierarchy deep enough for weight N and assemble.
sigma_series sigma_xi_route(long N);
sigma_series sigma_mu_route(long N);

// Genus-1 sigma from its two-equation system: u + 2 l4 u^5/5! + ...
hw1 genus1_sigma(long N);

struct integrality_entry {
  long m, n;  // n = 0 for univariate series
  membership_failure fail;
};

struct integrality_report {
  long checked_weight = 0;
  std::size_t coefficients_checked = 0;
  std::vector<integrality_entry> failures;
  bool all_pass() const { return failures.empty(); }
};

integrality_report check_integrality(const hw2& s, const subring_spec& spec);
integrality_report check_integrality(const hw1& s, const subring_spec& spec);

}  // namespace sigmaforge
