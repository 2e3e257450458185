#pragma once

#include <map>

#include "mlc/module.hpp"

namespace mlc {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                           ": " + msg),
        line(line_),
        column(column_) {}
};

struct TaskSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // ordered key/value

  const std::string* find(const std::string& key) const;
  std::string get(const std::string& key) const;  // throws when missing
};

struct InstanceFile {
  std::string name;
  GradingSpec ring;
  std::vector<std::pair<std::string, MonomialIdeal>> ideals;
  std::vector<std::pair<std::string, GradedModule>> modules;
  std::vector<std::pair<std::string, MonomialPrime>> primes;
  std::vector<TaskSpec> tasks;

  const MonomialIdeal& ideal(const std::string& name) const;
  const GradedModule& module(const std::string& name) const;
  const MonomialPrime& prime(const std::string& name) const;
  std::string canonical() const;  // serialization used for hashing
};

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& f);

// helpers shared with the CLI
Vec parse_vec(const std::string& text, int rank);
Pattern parse_pattern(const std::string& text, int rank);
Monomial parse_monomial(const std::string& text, const GradingSpec& g);

}  // namespace mlc
