// Copyright 2026 The qutrit-resources Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qres/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace qres {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value, const std::string& why = {}) {
  throw ConfigError(ExitCode::invalid_value,
                    "config: invalid value '" + value + "' for '" + key + "'" + (why.empty() ? "" : ": " + why));
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double x = 0.0;
  const char* first = t.data();
  if (!t.empty() && t.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(x)) {
    throw ConfigError(ExitCode::syntax, "config: '" + key + "' expects a number, got '" + text + "'");
  }
  return x;
}

long long parse_integer(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ConfigError(ExitCode::syntax, "config: '" + key + "' expects an integer, got '" + text + "'");
  }
  return x;
}

std::vector<std::string> split(const std::string& s, const std::string& delims) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (delims.find(c) != std::string::npos) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

std::string format_complex(Complex z) {
  std::string s = format_double(z.real());
  const std::string im = format_double(z.imag());
  s += (im.front() == '-' ? "" : "+") + im + "i";
  return s;
}

std::string basis_name(BasisMode b) { return b == BasisMode::numeric ? "numeric" : "perturbative"; }
std::string mode_name(EvolutionMode m) { return m == EvolutionMode::lindblad ? "lindblad" : "unitary"; }

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  auto real = [](double RunConfig::*field) {
    return Setter([field](RunConfig& c, const std::string& k, const std::string& v) { c.*field = parse_double(k, v); });
  };
  auto optional_real = [](std::optional<double> RunConfig::*field) {
    return Setter([field](RunConfig& c, const std::string& k, const std::string& v) {
      if (trim(v).empty() || trim(v) == "none")
        c.*field = std::nullopt;
      else
        c.*field = parse_double(k, v);
    });
  };
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"ej_over_ec", real(&RunConfig::ej_over_ec)},
      {"gamma", real(&RunConfig::gamma)},
      {"fock_dim",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         c.fock_dim = static_cast<int>(parse_integer(k, v));
       }},
      {"basis",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         const std::string t = trim(v);
         if (t == "numeric")
           c.basis = BasisMode::numeric;
         else if (t == "perturbative")
           c.basis = BasisMode::perturbative;
         else
           bad_value(k, v, "expected numeric or perturbative");
       }},
      {"kappa1", real(&RunConfig::kappa1)},
      {"kappa2", real(&RunConfig::kappa2)},
      {"beta1", real(&RunConfig::beta1)},
      {"beta2", real(&RunConfig::beta2)},
      {"cutoff_factor", real(&RunConfig::cutoff_factor)},
      {"t_max", real(&RunConfig::t_max)},
      {"dt", real(&RunConfig::dt)},
      {"initial_state", [](RunConfig& c, const std::string&, const std::string& v) { c.initial_state = trim(v); }},
      {"custom_amplitudes",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         c.custom_amplitudes.clear();
         for (const std::string& tok : split(v, ",[]")) {
           try {
             c.custom_amplitudes.push_back(parse_complex(tok));
           } catch (const Error&) {
             throw ConfigError(ExitCode::syntax, "config: '" + k + "' has a malformed amplitude '" + tok + "'");
           }
         }
       }},
      {"state_file", [](RunConfig& c, const std::string&, const std::string& v) { c.state_file = trim(v); }},
      {"mode",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         const std::string t = trim(v);
         if (t == "lindblad")
           c.mode = EvolutionMode::lindblad;
         else if (t == "unitary")
           c.mode = EvolutionMode::unitary;
         else
           bad_value(k, v, "expected lindblad or unitary");
       }},
      {"seed",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         const std::string t = trim(v);
         std::uint64_t x = 0;
         const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
         if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
           throw ConfigError(ExitCode::syntax, "config: '" + k + "' expects an unsigned integer, got '" + v + "'");
         }
         c.seed = x;
       }},
      {"stride",
       [](RunConfig& c, const std::string& k, const std::string& v) {
         c.stride = static_cast<int>(parse_integer(k, v));
       }},
      {"c_g", optional_real(&RunConfig::c_g)},
      {"c_1", optional_real(&RunConfig::c_1)},
      {"c_2", optional_real(&RunConfig::c_2)},
      {"capacitance_scale", real(&RunConfig::capacitance_scale)},
  };
  return table;
}

ComplexVector basis_ket(int i, int j) {
  ComplexVector v = ComplexVector::Zero(9);
  v(3 * i + j) = 1.0;
  return v;
}

ComplexVector local(Complex a0, Complex a1) {
  ComplexVector v = ComplexVector::Zero(3);
  v(0) = a0;
  v(1) = a1;
  return v / v.norm();
}

ComplexMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(ExitCode::missing_file, "state file not found: " + path);
  std::vector<std::vector<Complex>> rows;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    std::vector<Complex> row;
    for (const std::string& tok : split(line, " \t,")) {
      try {
        row.push_back(parse_complex(tok));
      } catch (const Error&) {
        throw ConfigError(ExitCode::syntax, "state file " + path + ": malformed entry '" + tok + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != 9) throw ConfigError(ExitCode::syntax, "state file " + path + ": expected 9 rows");
  ComplexMatrix m(9, 9);
  for (int r = 0; r < 9; ++r) {
    if (rows[r].size() != 9) throw ConfigError(ExitCode::syntax, "state file " + path + ": expected 9 columns");
    for (int c = 0; c < 9; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

Complex parse_complex(const std::string& text) {
  std::string t = trim(text);
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw DomainError("empty complex number");
  auto number = [&](const std::string& s) {
    if (s == "+" || s == "") return 1.0;
    if (s == "-") return -1.0;
    double x = 0.0;
    const char* first = s.data();
    if (s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw DomainError("malformed complex number '" + text + "'");
    return x;
  };
  const char last = t.back();
  if (last != 'i' && last != 'j') return {number(t), 0.0};
  t.pop_back();
  // Split at the sign that starts the imaginary part (not an exponent sign).
  std::size_t cut = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, number(t)};
  return {number(t.substr(0, cut)), number(t.substr(cut))};
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, setter] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

void RunConfig::set(const std::string& key, const std::string& value) {
  for (const auto& [name, setter] : setters()) {
    if (name == key) {
      setter(*this, key, value);
      return;
    }
  }
  throw ConfigError(ExitCode::syntax, "config: unknown key '" + key + "'");
}

void RunConfig::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError(ExitCode::invalid_value, "config: " + what); };
  if (!(ej_over_ec > 0.0)) fail("ej_over_ec must be positive");
  if (!(gamma >= 0.0)) fail("gamma must be non-negative");
  if (fock_dim < 6) fail("fock_dim must be at least 6");
  if (!(kappa1 > 0.0) || !(kappa2 > 0.0)) fail("kappa1 and kappa2 must be positive");
  if (!(beta1 > 0.0) || !(beta2 > 0.0)) fail("beta1 and beta2 must be positive");
  if (!(cutoff_factor > 0.0)) fail("cutoff_factor must be positive");
  if (!(dt > 0.0)) fail("dt must be positive");
  if (!(dt < t_max)) fail("dt must be smaller than t_max");
  if (stride < 1) fail("stride must be at least 1");
  if (!(capacitance_scale > 0.0)) fail("capacitance_scale must be positive");
  const int caps = c_g.has_value() + c_1.has_value() + c_2.has_value();
  if (caps != 0 && caps != 3) fail("c_g, c_1 and c_2 must be given together");
  if (caps == 3 && (!(*c_g > 0.0) || !(*c_1 > 0.0) || !(*c_2 > 0.0))) fail("capacitances must be positive");
  if (initial_state == "custom" && custom_amplitudes.size() != 9) fail("custom initial state needs 9 amplitudes");
  if (initial_state == "file" && state_file.empty()) fail("initial_state = file needs state_file");
}

std::vector<std::pair<std::string, std::string>> RunConfig::entries() const {
  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("ej_over_ec", format_double(ej_over_ec));
  e.emplace_back("gamma", format_double(gamma));
  e.emplace_back("fock_dim", std::to_string(fock_dim));
  e.emplace_back("basis", basis_name(basis));
  e.emplace_back("kappa1", format_double(kappa1));
  e.emplace_back("kappa2", format_double(kappa2));
  e.emplace_back("beta1", format_double(beta1));
  e.emplace_back("beta2", format_double(beta2));
  e.emplace_back("cutoff_factor", format_double(cutoff_factor));
  e.emplace_back("t_max", format_double(t_max));
  e.emplace_back("dt", format_double(dt));
  e.emplace_back("initial_state", initial_state);
  if (!custom_amplitudes.empty()) {
    std::string s;
    for (std::size_t k = 0; k < custom_amplitudes.size(); ++k)
      s += (k ? ", " : "") + format_complex(custom_amplitudes[k]);
    e.emplace_back("custom_amplitudes", s);
  }
  if (!state_file.empty()) e.emplace_back("state_file", state_file);
  e.emplace_back("mode", mode_name(mode));
  e.emplace_back("seed", std::to_string(seed));
  e.emplace_back("stride", std::to_string(stride));
  if (c_g) e.emplace_back("c_g", format_double(*c_g));
  if (c_1) e.emplace_back("c_1", format_double(*c_1));
  if (c_2) e.emplace_back("c_2", format_double(*c_2));
  e.emplace_back("capacitance_scale", format_double(capacitance_scale));
  return e;
}

CircuitParams RunConfig::circuit() const {
  CircuitParams p;
  p.e_c = 1.0;
  p.e_j = ej_over_ec;
  p.gamma = gamma;
  if (c_g && c_1 && c_2) p.gamma = coupling_from_capacitances(*c_g, *c_1, *c_2, CapacitanceUnits{capacitance_scale});
  p.fock_dim = fock_dim;
  p.basis = basis;
  return p;
}

BathParams RunConfig::bath(int index, double omega01) const {
  if (index != 1 && index != 2) throw DomainError("bath index must be 1 or 2");
  const double kappa = index == 1 ? kappa1 : kappa2;
  const double beta = index == 1 ? beta1 : beta2;
  return BathParams{kappa * omega01, beta / omega01, cutoff_factor * omega01};
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(ExitCode::syntax, "config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(ExitCode::missing_file, "config file not found: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

RunConfig read_metadata(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(ExitCode::missing_file, "output file not found: " + path);
  std::string text;
  std::string line;
  while (std::getline(in, line) && !line.empty() && line.front() == '#') {
    std::string body = trim(line.substr(1));
    if (body.empty() || body.front() == '@') continue;
    text += body + '\n';
  }
  return parse_config_text(text);
}

DensityMatrix initial_state(const RunConfig& config) {
  const std::string& name = config.initial_state;
  const double r2 = 1.0 / std::sqrt(2.0);
  if (name.size() == 2 && name[0] >= '0' && name[0] <= '2' && name[1] >= '0' && name[1] <= '2') {
    return DensityMatrix::pure(basis_ket(name[0] - '0', name[1] - '0'));
  }
  if (name == "++") {
    const ComplexVector plus = local(r2, r2);
    return DensityMatrix::pure(ComplexVector(tensor_product(plus, plus)));
  }
  if (name == "bell01") return DensityMatrix::pure(r2 * (basis_ket(0, 1) + basis_ket(1, 0)));
  if (name == "bell12") return DensityMatrix::pure(r2 * (basis_ket(1, 2) + basis_ket(2, 1)));
  if (name == "fig5opt") {
    const ComplexVector a = local({-0.256, -0.492}, {-0.479, 0.680});
    const ComplexVector b = local({-0.395, 0.392}, {-0.768, -0.316});
    return product_state(DensityMatrix::pure(a), DensityMatrix::pure(b));
  }
  if (name == "custom") {
    if (config.custom_amplitudes.size() != 9) {
      throw ConfigError(ExitCode::invalid_value, "custom initial state needs exactly 9 amplitudes");
    }
    ComplexVector v(9);
    for (int k = 0; k < 9; ++k) v(k) = config.custom_amplitudes[k];
    try {
      return DensityMatrix::pure(v);
    } catch (const InvalidStateError& e) {
      throw ConfigError(ExitCode::invalid_value, e.what());
    }
  }
  if (name == "file") {
    try {
      return DensityMatrix::from_matrix(read_state_file(config.state_file));
    } catch (const InvalidStateError& e) {
      throw ConfigError(ExitCode::invalid_value, std::string("state file: ") + e.what());
    }
  }
  throw ConfigError(ExitCode::invalid_value, "unknown initial state '" + name + "'");
}

}  // namespace qres
