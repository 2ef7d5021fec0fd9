// Copyright 2026 The qpost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpost/theorems/config.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "qpost/hamlib/hamiltonian_io.hpp"
#include "qpost/theorems/instances.hpp"
#include "qpost/theorems/report.hpp"

namespace qpost::thm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int out{};
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(v) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view v) {
  std::istringstream in{std::string(v)};
  in.imbue(std::locale::classic());
  double out = 0.0;
  char extra = 0;
  if (!(in >> out) || (in >> extra) || !std::isfinite(out)) {
    throw ConfigError("'" + std::string(key) + "' expects a real number, got '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" + std::string(v) + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'");
  if (key == "instance") {
    cfg.instance = std::string(value);
  } else if (key == "m_prime") {
    const int v = parse_int<int>(key, value);
    require(v >= 1 && v <= 9, "m_prime must be in [1, 9]");
    cfg.m_prime = v;
  } else if (key == "k") {
    const int v = parse_int<int>(key, value);
    require(v >= 1 && v <= 8, "k must be in [1, 8]");
    cfg.k = v;
  } else if (key == "s") {
    const int v = parse_int<int>(key, value);
    require(v >= 1 && v <= 40, "s must be in [1, 40]");
    cfg.s = v;
  } else if (key == "kappa") {
    const double v = parse_real(key, value);
    require(v > 0.0, "kappa must be positive");
    cfg.kappa = v;
  } else if (key == "c") {
    const double v = parse_real(key, value);
    require(v >= 1.0, "c must be at least 1");
    cfg.c = v;
  } else if (key == "delta") {
    const double v = parse_real(key, value);
    require(v > 0.0 && v < 0.5, "delta must lie in (0, 1/2)");
    cfg.delta = v;
  } else if (key == "r") {
    const double v = parse_real(key, value);
    require(v > 0.0 && v <= 1.0, "r must lie in (0, 1]");
    cfg.r = v;
  } else if (key == "directions") {
    const int v = parse_int<int>(key, value);
    require(v >= 1 && v <= 1000, "directions must be in [1, 1000]");
    cfg.directions = v;
  } else if (key == "seed") {
    cfg.seed = parse_int<std::uint64_t>(key, value);
  } else if (key == "subsets") {
    const int v = parse_int<int>(key, value);
    require(v >= 0 && v <= 100000, "subsets must be in [0, 100000]");
    cfg.subsets = v;
  } else if (key == "k_prime") {
    const int v = parse_int<int>(key, value);
    require(v >= 0 && v <= 30, "k_prime must be in [0, 30]");
    cfg.k_prime = v;
  } else if (key == "inject") {
    cfg.inject = parse_bool(key, value);
  } else if (key == "mode") {
    if (value == "pure") {
      cfg.mode = ModeSelection::Pure;
    } else if (value == "mixed") {
      cfg.mode = ModeSelection::Mixed;
    } else if (value == "both") {
      cfg.mode = ModeSelection::Both;
    } else {
      throw ConfigError("mode must be pure, mixed or both");
    }
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_override(ExperimentConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
  apply_setting(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

ExperimentConfig parse_config(std::string_view text, const std::string& base_dir) {
  ExperimentConfig cfg;
  cfg.base_dir = base_dir;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto cpos = raw.find_first_of("%#"); cpos != std::string::npos) raw.resize(cpos);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
    }
    try {
      apply_setting(cfg, trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  const auto parent = std::filesystem::path(path).parent_path();
  return parse_config(ss.str(), parent.empty() ? "." : parent.string());
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "instance = " << cfg.instance << '\n';
  if (cfg.m_prime) out << "m_prime = " << *cfg.m_prime << '\n';
  if (cfg.k) out << "k = " << *cfg.k << '\n';
  if (cfg.s) out << "s = " << *cfg.s << '\n';
  out << "kappa = " << format_double(cfg.kappa) << '\n';
  if (cfg.c) out << "c = " << format_double(*cfg.c) << '\n';
  if (cfg.delta) out << "delta = " << format_double(*cfg.delta) << '\n';
  out << "r = " << format_double(cfg.r) << '\n';
  out << "directions = " << cfg.directions << '\n';
  out << "seed = " << cfg.seed << '\n';
  out << "subsets = " << cfg.subsets << '\n';
  out << "k_prime = " << cfg.k_prime << '\n';
  out << "inject = " << (cfg.inject ? "true" : "false") << '\n';
  out << "mode = " << (cfg.mode == ModeSelection::Pure ? "pure" : cfg.mode == ModeSelection::Mixed ? "mixed" : "both")
      << '\n';
  return out.str();
}

ResolvedInstance resolve_instance(const ExperimentConfig& cfg) {
  if (const InstanceSpec* spec = find_builtin(cfg.instance)) {
    return {spec->id, "builtin", ham::parse_hamiltonian(spec->text), cfg.m_prime.value_or(spec->m_prime),
            cfg.k.value_or(spec->k)};
  }
  std::filesystem::path p(cfg.instance);
  if (p.is_relative()) p = std::filesystem::path(cfg.base_dir) / p;
  if (!std::filesystem::exists(p)) {
    throw ConfigError("instance '" + cfg.instance + "' is neither a builtin id nor an existing file");
  }
  return {p.stem().string(), p.lexically_normal().generic_string(), ham::load_hamiltonian(p.string()),
          cfg.m_prime.value_or(1), cfg.k.value_or(1)};
}

}  // namespace qpost::thm
