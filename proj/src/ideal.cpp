#include "canreg/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace canreg {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

MonomialIdeal MonomialIdeal::minimalize(int n, std::vector<Exponents> raw_gens) {
  for (const auto& g : raw_gens) {
    if (static_cast<int>(g.size()) != n)
      throw input_error("generator has wrong number of variables");
    for (int e : g)
      if (e < 0) throw input_error("negative exponent in generator");
  }
  std::sort(raw_gens.begin(), raw_gens.end());
  raw_gens.erase(std::unique(raw_gens.begin(), raw_gens.end()), raw_gens.end());
  std::vector<Exponents> minimal;
  for (const auto& g : raw_gens) {
    bool redundant = false;
    for (const auto& h : raw_gens) {
      if (h != g && divides(h, g)) { redundant = true; break; }
    }
    // equal duplicates already removed, so strict divisibility suffices
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal(n, std::move(minimal));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 &&
         std::all_of(gens_[0].begin(), gens_[0].end(),
                     [](int e) { return e == 0; });
}

bool MonomialIdeal::contains(const Exponents& u) const {
  for (const auto& g : gens_)
    if (divides(g, u)) return true;
  return false;
}

bool MonomialIdeal::localized_nonzero(Subset lambda, const Multidegree& a) const {
  if ((a.negative_support() & ~lambda) != 0) return false;
  for (const auto& g : gens_) {
    bool survives = false;
    for (int j = 0; j < n_; ++j) {
      if ((lambda >> j) & 1) continue;
      if (g[static_cast<std::size_t>(j)] > a[j]) { survives = true; break; }
    }
    if (!survives) return false;
  }
  return true;
}

Exponents MonomialIdeal::rho() const {
  if (is_unit()) throw input_error("unit ideal not supported");
  Exponents r(static_cast<std::size_t>(n_), 0);
  for (const auto& g : gens_)
    for (int j = 0; j < n_; ++j)
      r[static_cast<std::size_t>(j)] =
          std::max(r[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j)]);
  return r;
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Exponents parse_vector_form(const std::string& line, int lineno) {
  Exponents out;
  std::string body = line.substr(1, line.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = strip(tok);
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw input_error("line " + std::to_string(lineno) +
                        ": bad exponent '" + tok + "'");
    }
  }
  return out;
}

Exponents parse_symbolic_form(const std::string& line, int n, int lineno) {
  Exponents out(static_cast<std::size_t>(n), 0);
  std::stringstream ss(line);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = strip(factor);
    if (factor == "1" && line == "1")
      throw input_error("line " + std::to_string(lineno) +
                        ": unit ideal not supported");
    if (factor.empty() || factor[0] != 'x')
      throw input_error("line " + std::to_string(lineno) +
                        ": bad factor '" + factor + "'");
    std::size_t caret = factor.find('^');
    std::string idx_str =
        caret == std::string::npos ? factor.substr(1) : factor.substr(1, caret - 1);
    int idx, exp = 1;
    try {
      idx = std::stoi(idx_str);
      if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
    } catch (const std::exception&) {
      throw input_error("line " + std::to_string(lineno) +
                        ": bad factor '" + factor + "'");
    }
    if (idx < 1 || idx > n)
      throw input_error("line " + std::to_string(lineno) + ": variable x" +
                        std::to_string(idx) + " out of range (n = " +
                        std::to_string(n) + ")");
    if (exp < 0)
      throw input_error("line " + std::to_string(lineno) +
                        ": negative exponent");
    out[static_cast<std::size_t>(idx - 1)] += exp;
  }
  return out;
}

}  // namespace

MonomialIdeal parse_ideal(std::istream& in) {
  std::string line;
  int n = -1;
  int lineno = 0;
  std::vector<Exponents> gens;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (n < 0) {
      std::size_t eq = line.find('=');
      std::string key = eq == std::string::npos ? "" : strip(line.substr(0, eq));
      if (key != "n")
        throw input_error("line " + std::to_string(lineno) +
                          ": expected header 'n = <count>'");
      try {
        n = std::stoi(strip(line.substr(eq + 1)));
      } catch (const std::exception&) {
        throw input_error("line " + std::to_string(lineno) + ": bad variable count");
      }
      if (n < 1) throw input_error("variable count must be positive");
      continue;
    }
    Exponents g;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw input_error("line " + std::to_string(lineno) + ": unterminated '['");
      g = parse_vector_form(line, lineno);
      if (static_cast<int>(g.size()) != n)
        throw input_error("line " + std::to_string(lineno) +
                          ": expected " + std::to_string(n) + " exponents");
      for (int e : g)
        if (e < 0)
          throw input_error("line " + std::to_string(lineno) +
                            ": negative exponent");
    } else {
      g = parse_symbolic_form(line, n, lineno);
    }
    gens.push_back(std::move(g));
  }
  if (n < 0) throw input_error("missing header line 'n = <count>'");
  return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_ideal(in);
}

std::string to_text(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "n = " << ideal.n() << "\n";
  for (const auto& g : ideal.gens()) {
    out << "[";
    for (std::size_t j = 0; j < g.size(); ++j)
      out << (j ? "," : "") << g[j];
    out << "]\n";
  }
  return out.str();
}

}  // namespace canreg
