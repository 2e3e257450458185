#include "mlc/instance.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace mlc {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& s, int line) {
  try {
    size_t used = 0;
    std::int64_t v = std::stoll(trim(s), &used);
    if (used != trim(s).size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(line, 1, "expected an integer, found '" + trim(s) + "'");
  }
}

}  // namespace

const std::string* TaskSpec::find(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return &v;
  return nullptr;
}

std::string TaskSpec::get(const std::string& key) const {
  const std::string* v = find(key);
  if (!v) throw std::invalid_argument("task '" + name + "' is missing parameter '" + key + "'");
  return *v;
}

const MonomialIdeal& InstanceFile::ideal(const std::string& n) const {
  for (const auto& [k, v] : ideals)
    if (k == n) return v;
  throw std::invalid_argument("unknown ideal '" + n + "'");
}

const GradedModule& InstanceFile::module(const std::string& n) const {
  for (const auto& [k, v] : modules)
    if (k == n) return v;
  throw std::invalid_argument("unknown module '" + n + "'");
}

const MonomialPrime& InstanceFile::prime(const std::string& n) const {
  for (const auto& [k, v] : primes)
    if (k == n) return v;
  throw std::invalid_argument("unknown prime '" + n + "'");
}

std::string InstanceFile::canonical() const { return serialize_instance(*this); }

Vec parse_vec(const std::string& text, int rank) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  Vec out;
  for (const auto& part : split(t, ',')) out.push_back(parse_int(part, 0));
  if (rank >= 0 && static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("expected a vector of length " + std::to_string(rank) + ": " + text);
  return out;
}

Pattern parse_pattern(const std::string& text, int rank) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{' && t.back() == '}') t = t.substr(1, t.size() - 2);
  Pattern p = Pattern::empty(rank);
  t = trim(t);
  if (t.empty()) return p;
  for (const auto& part : split(t, ',')) {
    std::int64_t i = parse_int(part, 0);
    if (i < 1 || i > rank) throw std::invalid_argument("pattern index out of range: " + part);
    p.add(static_cast<int>(i) - 1);
  }
  return p;
}

Monomial parse_monomial(const std::string& text, const GradingSpec& g) {
  std::string t = trim(text);
  Expo e(g.nvars(), 0);
  if (t == "1") return Monomial(e);
  for (const auto& factor : split(t, '*')) {
    std::string f = trim(factor);
    if (f.empty()) throw std::invalid_argument("empty factor in monomial '" + text + "'");
    std::string name = f;
    std::int64_t exp = 1;
    size_t caret = f.find('^');
    if (caret != std::string::npos) {
      name = trim(f.substr(0, caret));
      exp = parse_int(f.substr(caret + 1), 0);
      if (exp < 0) throw std::invalid_argument("negative exponent in '" + text + "'");
    }
    int var = -1;
    for (int v = 0; v < g.nvars(); ++v)
      if (g.var_name(v) == name) {
        var = v;
        break;
      }
    if (var < 0) throw std::invalid_argument("unknown variable '" + name + "' in monomial '" + text + "'");
    e[var] += exp;
  }
  return Monomial(e);
}

InstanceFile parse_instance(const std::string& text) {
  InstanceFile out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;

  std::vector<std::string> vars;
  std::vector<int> colors;
  FieldSpec field = FieldSpec::rationals();

  struct RawSection {
    std::string kind, name;
    int line;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> entries;
  };
  std::vector<RawSection> sections;

  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    size_t hash = t.find('#');
    if (hash != std::string::npos) t = trim(t.substr(0, hash));
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError(lineno, static_cast<int>(t.size()), "unterminated section header");
      auto inner = trim(t.substr(1, t.size() - 2));
      auto parts = split_ws(inner);
      if (parts.empty() || parts.size() > 2) throw ParseError(lineno, 1, "bad section header '" + t + "'");
      RawSection s;
      s.kind = parts[0];
      s.name = parts.size() == 2 ? parts[1] : "";
      s.line = lineno;
      if (s.kind != "ring" && s.kind != "ideal" && s.kind != "module" && s.kind != "prime" &&
          s.kind != "task" && s.kind != "instance")
        throw ParseError(lineno, 1, "unknown section kind '" + s.kind + "'");
      if (s.kind != "ring" && s.kind != "instance" && s.name.empty())
        throw ParseError(lineno, 1, s.kind + " section requires a name");
      sections.push_back(std::move(s));
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected 'key = value'");
    if (sections.empty()) throw ParseError(lineno, 1, "entry outside any section");
    sections.back().entries.emplace_back(lineno,
                                         std::make_pair(trim(t.substr(0, eq)), trim(t.substr(eq + 1))));
  }

  // the ring must be processed first
  for (const auto& s : sections) {
    if (s.kind != "ring") continue;
    if (!vars.empty()) throw ParseError(s.line, 1, "duplicate ring section");
    for (const auto& [ln, kv] : s.entries) {
      if (kv.first == "vars") {
        vars = split_ws(kv.second);
        if (vars.empty()) throw ParseError(ln, 1, "ring needs at least one variable");
      } else if (kv.first == "colors") {
        for (const auto& c : split_ws(kv.second)) colors.push_back(static_cast<int>(parse_int(c, ln)));
      } else if (kv.first == "field") {
        try {
          field = parse_field(kv.second);
        } catch (const std::exception& e) {
          throw ParseError(ln, 1, e.what());
        }
      } else {
        throw ParseError(ln, 1, "unknown ring key '" + kv.first + "'");
      }
    }
  }
  if (vars.empty()) throw ParseError(1, 1, "missing [ring] section");
  if (colors.size() != vars.size()) throw ParseError(1, 1, "colors must match variables");
  int rank = 0;
  for (int c : colors) rank = std::max(rank, c);
  if (rank == 0) throw ParseError(1, 1, "at least one variable must carry a positive color");
  try {
    out.ring = GradingSpec(vars, colors, rank, field);
  } catch (const std::exception& e) {
    throw ParseError(1, 1, e.what());
  }

  for (const auto& s : sections) {
    if (s.kind == "ring") continue;
    if (s.kind == "instance") {
      out.name = s.name;
      continue;
    }
    if (s.kind == "ideal") {
      std::vector<Monomial> gens;
      for (const auto& [ln, kv] : s.entries) {
        if (kv.first != "gens") throw ParseError(ln, 1, "unknown ideal key '" + kv.first + "'");
        if (trim(kv.second).empty()) continue;  // zero ideal
        for (const auto& part : split(kv.second, ',')) {
          try {
            gens.push_back(parse_monomial(part, out.ring));
          } catch (const std::exception& e) {
            throw ParseError(ln, 1, e.what());
          }
        }
      }
      out.ideals.emplace_back(s.name, MonomialIdeal::make(out.ring.nvars(), std::move(gens)));
    } else if (s.kind == "module") {
      std::vector<Summand> summands;
      for (const auto& [ln, kv] : s.entries) {
        if (kv.first != "summand") throw ParseError(ln, 1, "unknown module key '" + kv.first + "'");
        // form: (shift) ideal-name
        std::string v = trim(kv.second);
        size_t close = v.find(')');
        if (v.empty() || v.front() != '(' || close == std::string::npos)
          throw ParseError(ln, 1, "summand must look like '(shift...) idealname'");
        Vec shift;
        try {
          shift = parse_vec(v.substr(0, close + 1), out.ring.nvars());
        } catch (const std::exception& e) {
          throw ParseError(ln, 1, e.what());
        }
        std::string iname = trim(v.substr(close + 1));
        try {
          summands.push_back(Summand{shift, out.ideal(iname)});
        } catch (const std::exception& e) {
          throw ParseError(ln, 1, e.what());
        }
      }
      try {
        out.modules.emplace_back(s.name, GradedModule(out.ring, std::move(summands)));
      } catch (const std::exception& e) {
        throw ParseError(s.line, 1, e.what());
      }
    } else if (s.kind == "prime") {
      Pattern vs = Pattern::empty(out.ring.nvars());
      for (const auto& [ln, kv] : s.entries) {
        if (kv.first != "vars") throw ParseError(ln, 1, "unknown prime key '" + kv.first + "'");
        for (const auto& name : split_ws(kv.second)) {
          int var = -1;
          for (int v = 0; v < out.ring.nvars(); ++v)
            if (out.ring.var_name(v) == name) var = v;
          if (var < 0) throw ParseError(ln, 1, "unknown variable '" + name + "'");
          vs.add(var);
        }
      }
      out.primes.emplace_back(s.name, MonomialPrime(out.ring.nvars(), vs));
    } else if (s.kind == "task") {
      TaskSpec task;
      task.name = s.name;
      for (const auto& [ln, kv] : s.entries) {
        (void)ln;
        task.params.push_back(kv);
      }
      out.tasks.push_back(std::move(task));
    }
  }
  return out;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  InstanceFile f = parse_instance(ss.str());
  if (f.name.empty()) {
    size_t slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    f.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::ostringstream os;
  if (!f.name.empty()) os << "[instance " << f.name << "]\n\n";
  os << "[ring]\n";
  os << "vars =";
  for (const auto& v : f.ring.var_names()) os << " " << v;
  os << "\n";
  os << "colors =";
  for (int c : f.ring.colors()) os << " " << c;
  os << "\n";
  os << "field = " << f.ring.field().to_string() << "\n";
  for (const auto& [name, ideal] : f.ideals) {
    os << "\n[ideal " << name << "]\n";
    os << "gens = ";
    for (size_t i = 0; i < ideal.gens().size(); ++i) {
      if (i) os << ", ";
      os << ideal.gens()[i].to_string(f.ring);
    }
    os << "\n";
  }
  for (const auto& [name, mod] : f.modules) {
    os << "\n[module " << name << "]\n";
    for (const auto& s : mod.summands()) {
      os << "summand = " << vec_to_string(s.shift) << " ";
      // find the ideal name (first match)
      std::string iname;
      for (const auto& [n2, i2] : f.ideals)
        if (i2 == s.ideal) {
          iname = n2;
          break;
        }
      os << iname << "\n";
    }
  }
  for (const auto& [name, p] : f.primes) {
    os << "\n[prime " << name << "]\n";
    os << "vars =";
    for (int v : p.vars.indices()) os << " " << f.ring.var_name(v);
    os << "\n";
  }
  for (const auto& t : f.tasks) {
    os << "\n[task " << t.name << "]\n";
    for (const auto& [k, v] : t.params) os << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace mlc
