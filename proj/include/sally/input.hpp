#ifndef SALLY_INPUT_HPP
#define SALLY_INPUT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sally/field.hpp"

namespace sally {

struct InputError : std::runtime_error {
  explicit InputError(size_t line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Parsed form of an analysis input document. Sections: [ring], [ideal],
// [reduction], [config]. Values use `key = value` (or `key: value`); `#`
// starts a comment. The ring is either polynomial (variables = x, y) or a
// numerical-semigroup ring (semigroup = [5, 6, 9]).
struct AnalysisInput {
  bool semigroup = false;
  std::vector<std::string> variables;
  std::vector<long> sg_gens;
  std::optional<FieldSpec> field;  // [ring] field or [config] field

  bool ideal_maximal = false;
  std::vector<std::string> ideal_gens;

  bool reduction_auto = false;
  std::vector<std::string> reduction_gens;

  std::optional<uint64_t> seed;
  std::optional<unsigned> bound_reduction;
  std::optional<unsigned> bound_gb_degree;
  std::optional<unsigned> trials;
  std::optional<bool> oracle;

  bool operator==(const AnalysisInput& o) const = default;
};

inline FieldSpec parse_field_spec(const std::string& s) {
  if (s == "q" || s == "Q" || s == "QQ") return {FieldKind::Rationals, 0};
  if (s.rfind("p:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(s.substr(2));
    } catch (...) {
      throw std::invalid_argument("bad field spec '" + s + "'");
    }
    FieldSpec fs{FieldKind::PrimeField, p};
    validate(fs);  // rejects non-primes
    return fs;
  }
  throw std::invalid_argument("bad field spec '" + s + "' (expected q or p:<prime>)");
}

namespace input_detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

inline std::vector<long> parse_int_list(const std::string& raw, size_t line) {
  std::string s = trim(raw);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw InputError(line, "unterminated '[' in integer list");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<long> out;
  for (auto& tok : split_list(s)) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (...) {
      throw InputError(line, "bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw InputError(line, "empty integer list");
  return out;
}

inline bool parse_bool(const std::string& v, size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError(line, "bad boolean '" + v + "'");
}

inline unsigned long long parse_uint(const std::string& v, size_t line) {
  try {
    size_t used = 0;
    unsigned long long r = std::stoull(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (...) {
    throw InputError(line, "bad integer '" + v + "'");
  }
}

}  // namespace input_detail

inline AnalysisInput parse_input(std::istream& in) {
  using namespace input_detail;
  AnalysisInput a;
  std::string section;
  std::string line;
  size_t lineno = 0;
  bool saw_ring = false, saw_ideal = false, saw_reduction = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "ring" && section != "ideal" && section != "reduction" &&
          section != "config")
        throw InputError(lineno, "unknown section [" + section + "]");
      if (section == "ring") saw_ring = true;
      if (section == "ideal") saw_ideal = true;
      if (section == "reduction") saw_reduction = true;
      continue;
    }
    if (section.empty()) throw InputError(lineno, "value outside any section");

    // bare keywords
    if (section == "ideal" && line == "maximal") {
      a.ideal_maximal = true;
      continue;
    }
    if (section == "reduction" && line == "auto") {
      a.reduction_auto = true;
      continue;
    }

    auto sep = line.find_first_of("=:");
    // allow 'p:32003' on the right of '='; key itself never contains ':'
    if (sep == std::string::npos) throw InputError(lineno, "expected key = value");
    std::string key = trim(line.substr(0, sep));
    std::string val = trim(line.substr(sep + 1));
    if (val.empty()) throw InputError(lineno, "missing value for '" + key + "'");

    if (section == "ring") {
      if (key == "variables") {
        a.variables = split_list(val);
      } else if (key == "semigroup") {
        a.semigroup = true;
        a.sg_gens = parse_int_list(val, lineno);
      } else if (key == "field") {
        try {
          a.field = parse_field_spec(val);
        } catch (const std::exception& e) {
          throw InputError(lineno, e.what());
        }
      } else {
        throw InputError(lineno, "unknown ring key '" + key + "'");
      }
    } else if (section == "ideal") {
      if (key != "generators") throw InputError(lineno, "unknown ideal key '" + key + "'");
      a.ideal_gens = split_list(val);
    } else if (section == "reduction") {
      if (key != "generators")
        throw InputError(lineno, "unknown reduction key '" + key + "'");
      a.reduction_gens = split_list(val);
    } else {  // config
      if (key == "seed")
        a.seed = parse_uint(val, lineno);
      else if (key == "bound-reduction")
        a.bound_reduction = static_cast<unsigned>(parse_uint(val, lineno));
      else if (key == "bound-gb-degree")
        a.bound_gb_degree = static_cast<unsigned>(parse_uint(val, lineno));
      else if (key == "trials")
        a.trials = static_cast<unsigned>(parse_uint(val, lineno));
      else if (key == "oracle")
        a.oracle = parse_bool(val, lineno);
      else if (key == "field") {
        try {
          a.field = parse_field_spec(val);
        } catch (const std::exception& e) {
          throw InputError(lineno, e.what());
        }
      } else {
        throw InputError(lineno, "unknown config key '" + key + "'");
      }
    }
  }
  if (!saw_ring) throw InputError(lineno, "missing [ring] section");
  if (!a.semigroup && a.variables.empty())
    throw InputError(lineno, "ring needs either variables or a semigroup");
  if (a.semigroup && !a.variables.empty())
    throw InputError(lineno, "ring cannot be both polynomial and semigroup");
  if (!saw_ideal) throw InputError(lineno, "missing [ideal] section");
  if (!a.ideal_maximal && a.ideal_gens.empty())
    throw InputError(lineno, "ideal needs generators or 'maximal'");
  if (!saw_reduction) throw InputError(lineno, "missing [reduction] section");
  if (!a.reduction_auto && a.reduction_gens.empty())
    throw InputError(lineno, "reduction needs generators or 'auto'");
  return a;
}

inline AnalysisInput parse_input(const std::string& text) {
  std::istringstream ss(text);
  return parse_input(ss);
}

// Canonical serialization; parse_input(to_text(a)) == a (the round-trip
// contract behind the format documentation).
inline std::string to_text(const AnalysisInput& a) {
  std::ostringstream os;
  os << "[ring]\n";
  if (a.semigroup) {
    os << "semigroup = [";
    for (size_t i = 0; i < a.sg_gens.size(); ++i) os << (i ? ", " : "") << a.sg_gens[i];
    os << "]\n";
  } else {
    os << "variables = ";
    for (size_t i = 0; i < a.variables.size(); ++i)
      os << (i ? ", " : "") << a.variables[i];
    os << "\n";
  }
  if (a.field)
    os << "field = "
       << (a.field->kind == FieldKind::Rationals ? std::string("q")
                                                 : "p:" + std::to_string(a.field->p))
       << "\n";
  os << "\n[ideal]\n";
  if (a.ideal_maximal) {
    os << "maximal\n";
  } else {
    os << "generators = ";
    for (size_t i = 0; i < a.ideal_gens.size(); ++i)
      os << (i ? ", " : "") << a.ideal_gens[i];
    os << "\n";
  }
  os << "\n[reduction]\n";
  if (a.reduction_auto) {
    os << "auto\n";
  } else {
    os << "generators = ";
    for (size_t i = 0; i < a.reduction_gens.size(); ++i)
      os << (i ? ", " : "") << a.reduction_gens[i];
    os << "\n";
  }
  os << "\n[config]\n";
  if (a.seed) os << "seed = " << *a.seed << "\n";
  if (a.bound_reduction) os << "bound-reduction = " << *a.bound_reduction << "\n";
  if (a.bound_gb_degree) os << "bound-gb-degree = " << *a.bound_gb_degree << "\n";
  if (a.trials) os << "trials = " << *a.trials << "\n";
  if (a.oracle) os << "oracle = " << (*a.oracle ? "true" : "false") << "\n";
  return os.str();
}

// Valuation generator strings on the semigroup engine: `t^5` or a bare
// integer.
inline long parse_valuation(const std::string& s) {
  std::string v = s;
  if (v.rfind("t^", 0) == 0) v = v.substr(2);
  try {
    size_t used = 0;
    long r = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (...) {
    throw std::invalid_argument("bad valuation generator '" + s +
                                "' (expected t^<k> or an integer)");
  }
}

}  // namespace sally

#endif
