#pragma once

#include <optional>
#include <string>

namespace sigmaforge {

using var_id = int;

struct variable_info {
  std::string name;
  long weight;  // grading degree
};

// Process-wide append-only symbol registry. Variables are immutable once
// interned; re-interning an existing name must agree on the weight.
// Interning is not thread-safe and belongs in setup code.
namespace vars {

var_id intern(const std::string& name, long weight);
const variable_info& info(var_id v);
std::optional<var_id> lookup(const std::string& name);
std::size_t count();

// Canonical variable order: by (weight, name). Stable under later interning.
bool less(var_id a, var_id b);

// The standard curve parameters lambda_4, lambda_6, lambda_8, lambda_10
// (weights 4, 6, 8, 10), interned on first use.
var_id l4();
var_id l6();
var_id l8();
var_id l10();
// lambda_{2j} for j = 2..5, indexed 0..3.
var_id lambda(int idx);

var_id u1();  // weight -1
var_id u3();  // weight -3

// f_n / g_n expansion coefficients, weight n.
var_id f(int n);
var_id g(int n);

// Seeds of the inversion series: pt2 = x_*, pt5 = -2 y_* (weights 2, 5) for
// the third-integral route; qt2 = x_*, qt3 = -2 y_*/x_* (weights 2, 3) for
// the first-integral route.
var_id pt2();
var_id pt5();
var_id qt2();
var_id qt3();

}  // namespace vars

}  // namespace sigmaforge
