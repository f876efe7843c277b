#include "sigmaforge/variables.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace sigmaforge {
namespace vars {

namespace {

struct registry {
  std::deque<variable_info> infos;
  std::unordered_map<std::string, var_id> by_name;
};

registry& reg() {
  static registry r;
  return r;
}

}  // namespace

var_id intern(const std::string& name, long weight) {
  auto& r = reg();
  auto it = r.by_name.find(name);
  if (it != r.by_name.end()) {
    if (r.infos[it->second].weight != weight)
      throw std::invalid_argument("variable '" + name + "' re-interned with different weight");
    return it->second;
  }
  var_id id = static_cast<var_id>(r.infos.size());
  r.infos.push_back({name, weight});
  r.by_name.emplace(name, id);
  return id;
}

const variable_info& info(var_id v) {
  return reg().infos.at(static_cast<std::size_t>(v));
}

std::optional<var_id> lookup(const std::string& name) {
  auto& r = reg();
  auto it = r.by_name.find(name);
  if (it == r.by_name.end()) return std::nullopt;
  return it->second;
}

std::size_t count() { return reg().infos.size(); }

bool less(var_id a, var_id b) {
  const auto& ia = info(a);
  const auto& ib = info(b);
  if (ia.weight != ib.weight) return ia.weight < ib.weight;
  return ia.name < ib.name;
}

var_id l4() { static var_id v = intern("l4", 4); return v; }
var_id l6() { static var_id v = intern("l6", 6); return v; }
var_id l8() { static var_id v = intern("l8", 8); return v; }
var_id l10() { static var_id v = intern("l10", 10); return v; }

var_id lambda(int idx) {
  switch (idx) {
    case 0: return l4();
    case 1: return l6();
    case 2: return l8();
    case 3: return l10();
  }
  throw std::out_of_range("lambda index");
}

var_id u1() { static var_id v = intern("u1", -1); return v; }
var_id u3() { static var_id v = intern("u3", -3); return v; }

var_id f(int n) {
  if (n < 1) throw std::out_of_range("f index");
  return intern("f" + std::to_string(n), n);
}

var_id g(int n) {
  if (n < 1) throw std::out_of_range("g index");
  return intern("g" + std::to_string(n), n);
}

var_id pt2() { static var_id v = intern("pt2", 2); return v; }
var_id pt5() { static var_id v = intern("pt5", 5); return v; }
var_id qt2() { static var_id v = intern("qt2", 2); return v; }
var_id qt3() { static var_id v = intern("qt3", 3); return v; }

}  // namespace vars
}  // namespace sigmaforge
