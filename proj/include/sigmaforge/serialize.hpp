#pragma once

#include <string>

#include "json.hpp"
#include "sigmaforge/bernoulli.hpp"
#include "sigmaforge/heat.hpp"

namespace sigmaforge {

using ojson = nlohmann::ordered_json;

ojson series_json(const hw1& s);
ojson series_json(const hw2& s);
ojson series_json(const laurent1& s);

// Table-style rendering: name = c0*x^n0/n0! + c1*x^n1/n1! + ...
std::string pretty_series(const hw1& s, const std::string& name);
std::string pretty_series(const hw2& s, const std::string& name);
std::string pretty_series(const laurent1& s, const std::string& name);

ojson bh_table_json(const bh_table& t);
std::string bh_table_pretty(const bh_table& t);
std::string bh_table_csv(const bh_table& t);

ojson valuation_rows_json(const std::vector<valuation_row>& rows);
std::string valuation_rows_csv(const std::vector<valuation_row>& rows);

ojson check_items_json(const std::vector<check_item>& items);
std::string check_items_pretty(const std::vector<check_item>& items);

}  // namespace sigmaforge
