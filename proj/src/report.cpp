#include "hompoisson/report.hpp"

#include <sstream>

namespace hompoisson {

namespace {

bool labels_are_basis(const Witness& w, const std::vector<std::string>& basis) {
  if (basis.empty() || !w.symbolic_residual.empty()) return false;
  for (auto i : w.basis) {
    if (i >= basis.size()) return false;
  }
  return true;
}

std::string tuple_text(const Witness& w, const std::vector<std::string>& basis) {
  std::ostringstream out;
  const bool named = labels_are_basis(w, basis);
  out << '(';
  for (std::size_t i = 0; i < w.basis.size(); ++i) {
    if (i) out << ", ";
    if (named) {
      out << basis[w.basis[i]];
    } else {
      out << w.basis[i];
    }
  }
  out << ')';
  return out.str();
}

}  // namespace

std::string format_vector(const Vector& v, const std::vector<std::string>& basis) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Rational& c = v[i];
    if (is_zero(c)) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) out << to_string(mag) << '*';
    if (i < basis.size()) {
      out << basis[i];
    } else {
      out << 'e' << i + 1;
    }
  }
  if (first) return "0";
  return out.str();
}

nlohmann::ordered_json report_to_json(const CheckReport& report, const std::vector<std::string>& basis) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["passed"] = report.passed;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json jw;
    jw["basis"] = w.basis;
    if (labels_are_basis(w, basis)) {
      std::vector<std::string> labels;
      for (auto i : w.basis) labels.push_back(basis[i]);
      jw["labels"] = labels;
    }
    std::vector<std::string> residual;
    for (const auto& c : w.residual.entries()) residual.push_back(to_string(c));
    jw["residual"] = residual;
    if (!w.symbolic_residual.empty()) {
      std::vector<std::string> symbolic;
      for (const auto& p : w.symbolic_residual) symbolic.push_back(to_string(p));
      jw["symbolic_residual"] = symbolic;
    }
    j["witnesses"].push_back(std::move(jw));
  }
  if (!report.parts.empty()) {
    j["parts"] = nlohmann::ordered_json::array();
    for (const auto& p : report.parts) j["parts"].push_back(report_to_json(p, basis));
  }
  return j;
}

void print_report(std::ostream& out, const CheckReport& report, const std::vector<std::string>& basis, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << (report.passed ? "PASS " : "FAIL ") << report.identity << '\n';
  if (report.parts.empty()) {
    for (const auto& w : report.witnesses) {
      out << pad << "  witness " << tuple_text(w, basis) << ": ";
      if (!w.symbolic_residual.empty()) {
        out << '[';
        for (std::size_t i = 0; i < w.symbolic_residual.size(); ++i) {
          out << (i ? ", " : "") << to_string(w.symbolic_residual[i]);
        }
        out << ']';
      } else {
        out << format_vector(w.residual, basis);
      }
      out << '\n';
    }
  }
  for (const auto& p : report.parts) print_report(out, p, basis, indent + 1);
}

}  // namespace hompoisson
