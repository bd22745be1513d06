#include "hompoisson/spec_file.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "hompoisson/error.hpp"

namespace hompoisson {

namespace {

constexpr std::string_view kSpecHeader = "hompoisson-algebra";
constexpr std::string_view kMapHeader = "hompoisson-map";
constexpr std::string_view kVersion = "1";
constexpr std::size_t kMaxDim = 4096;

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

Rational rational_field(const std::string& tok, std::size_t line) {
  try {
    return parse_rational(tok);
  } catch (const ParseError& e) {
    throw ParseError("not an exact rational: '" + tok + "'", line);
  }
}

std::size_t count_field(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  if (tok.empty() || tok.size() > 9) throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    throw ParseError("'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " field(s), got " +
                         std::to_string(line.tokens.size() - 1),
                     line.number);
  }
}

void expect_header(const std::vector<Line>& lines, std::string_view header) {
  if (lines.empty()) throw ParseError("empty file, expected '" + std::string(header) + " 1'", 1);
  const Line& first = lines.front();
  if (first.tokens[0] != header) {
    throw ParseError("expected header '" + std::string(header) + "', got '" + first.tokens[0] + "'", first.number);
  }
  expect_arity(first, 2);
  if (first.tokens[1] != kVersion) {
    throw ParseError("unsupported format version '" + first.tokens[1] + "'", first.number);
  }
}

std::size_t parse_dim(const Line& line) {
  expect_arity(line, 2);
  std::size_t dim = count_field(line.tokens[1], line.number, "dimension");
  if (dim == 0 || dim > kMaxDim) throw ParseError("dimension must be in 1.." + std::to_string(kMaxDim), line.number);
  return dim;
}

/// Reads `dim` rows of `dim` rationals starting at lines[start].
LinearMap parse_rows(const std::vector<Line>& lines, std::size_t start, std::size_t dim, std::size_t anchor_line) {
  if (start + dim > lines.size()) throw ParseError("expected " + std::to_string(dim) + " matrix rows", anchor_line);
  std::vector<Rational> rows;
  rows.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Line& line = lines[start + r];
    if (line.tokens.size() != dim) {
      throw ParseError("matrix row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                           std::to_string(dim),
                       line.number);
    }
    for (const auto& tok : line.tokens) rows.push_back(rational_field(tok, line.number));
  }
  return LinearMap::from_rows(dim, std::move(rows));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("error writing '" + path.string() + "'");
}

void emit_tensor(std::ostringstream& out, const char* keyword, const Trilinear& t) {
  t.for_each_nonzero([&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    out << keyword << ' ' << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << to_string(v) << '\n';
  });
}

void emit_rows(std::ostringstream& out, const LinearMap& m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out << (c ? " " : "") << to_string(m.at(r, c));
    out << '\n';
  }
}

std::string emit_common(SpecKind kind, const std::vector<std::string>& basis, const Trilinear& mu,
                        const Trilinear* bracket, const LinearMap& alpha, std::optional<bool> commutative) {
  for (const auto& name : basis) {
    if (name.find_first_of(" \t\r\n#") != std::string::npos) {
      throw Error("basis name '" + name + "' cannot be written to a spec file");
    }
  }
  std::ostringstream out;
  out << kSpecHeader << ' ' << kVersion << '\n';
  out << "kind " << (kind == SpecKind::poisson ? "poisson" : "algebra") << '\n';
  out << "dim " << basis.size() << '\n';
  out << "basis";
  for (const auto& name : basis) out << ' ' << name;
  out << '\n';
  if (commutative) out << "commutative " << (*commutative ? "true" : "false") << '\n';
  emit_tensor(out, "mu", mu);
  if (bracket) emit_tensor(out, "bracket", *bracket);
  if (!alpha.is_identity()) {
    out << "alpha\n";
    emit_rows(out, alpha);
  }
  return out.str();
}

}  // namespace

AlgebraSpec parse_spec_text(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  expect_header(lines, kSpecHeader);

  std::optional<SpecKind> kind;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  bool commutative = false;
  std::optional<LinearMap> alpha;
  Trilinear mu;
  Trilinear bracket;
  std::size_t bracket_line = 0;
  std::size_t commutative_line = 0;
  std::set<std::string> seen;
  std::set<std::array<std::size_t, 4>> entries;

  auto need_dim = [&](const Line& line) {
    if (!dim) throw ParseError("'" + line.tokens[0] + "' before 'dim'", line.number);
    return *dim;
  };
  auto once = [&](const Line& line) {
    if (!seen.insert(line.tokens[0]).second) throw ParseError("duplicate '" + line.tokens[0] + "'", line.number);
  };

  for (std::size_t idx = 1; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const std::string& key = line.tokens[0];
    if (key == "kind") {
      once(line);
      expect_arity(line, 2);
      if (line.tokens[1] == "poisson") {
        kind = SpecKind::poisson;
      } else if (line.tokens[1] == "algebra") {
        kind = SpecKind::algebra;
      } else {
        throw ParseError("kind must be 'poisson' or 'algebra', got '" + line.tokens[1] + "'", line.number);
      }
    } else if (key == "dim") {
      once(line);
      dim = parse_dim(line);
      mu = Trilinear(*dim);
      bracket = Trilinear(*dim);
    } else if (key == "basis") {
      once(line);
      const std::size_t n = need_dim(line);
      expect_arity(line, n + 1);
      basis.assign(line.tokens.begin() + 1, line.tokens.end());
      std::set<std::string> unique(basis.begin(), basis.end());
      if (unique.size() != basis.size()) throw ParseError("basis names must be unique", line.number);
    } else if (key == "commutative") {
      once(line);
      expect_arity(line, 2);
      if (line.tokens[1] != "true" && line.tokens[1] != "false") {
        throw ParseError("commutative must be 'true' or 'false'", line.number);
      }
      commutative = line.tokens[1] == "true";
      commutative_line = line.number;
    } else if (key == "mu" || key == "bracket") {
      const std::size_t n = need_dim(line);
      expect_arity(line, 5);
      std::array<std::size_t, 3> ijk{};
      for (std::size_t f = 0; f < 3; ++f) {
        std::size_t v = count_field(line.tokens[f + 1], line.number, "index");
        if (v == 0 || v > n) {
          throw ParseError("index " + line.tokens[f + 1] + " out of range 1.." + std::to_string(n), line.number);
        }
        ijk[f] = v - 1;
      }
      const std::size_t which = key == "mu" ? 0 : 1;
      if (!entries.insert({which, ijk[0], ijk[1], ijk[2]}).second) {
        throw ParseError("duplicate " + key + " entry", line.number);
      }
      Rational value = rational_field(line.tokens[4], line.number);
      if (which == 0) {
        mu.set(ijk[0], ijk[1], ijk[2], value);
      } else {
        bracket.set(ijk[0], ijk[1], ijk[2], value);
        if (bracket_line == 0) bracket_line = line.number;
      }
    } else if (key == "alpha") {
      once(line);
      const std::size_t n = need_dim(line);
      if (line.tokens.size() == 2 && line.tokens[1] == "identity") {
        alpha = LinearMap::identity(n);
      } else {
        expect_arity(line, 1);
        alpha = parse_rows(lines, idx + 1, n, line.number);
        idx += n;
      }
    } else {
      throw ParseError("unknown directive '" + key + "'", line.number);
    }
  }

  if (!dim) throw ParseError("missing 'dim'", lines.back().number);
  if (!kind) kind = SpecKind::poisson;
  if (*kind == SpecKind::algebra) {
    if (bracket_line != 0) throw ParseError("'bracket' entries in an algebra-kind spec", bracket_line);
    if (commutative_line != 0) throw ParseError("'commutative' in an algebra-kind spec", commutative_line);
  }
  if (basis.empty()) basis = default_basis(*dim);
  if (!alpha) alpha = LinearMap::identity(*dim);
  return AlgebraSpec{*kind, HomPoissonAlgebra(std::move(basis), std::move(bracket), std::move(mu), std::move(*alpha),
                                              commutative)};
}

AlgebraSpec parse_spec(const std::filesystem::path& path) { return parse_spec_text(read_file(path)); }

std::string emit_spec_text(const HomPoissonAlgebra& a) {
  return emit_common(SpecKind::poisson, a.basis(), a.mu(), &a.bracket(), a.alpha(), a.commutative());
}

std::string emit_spec_text(const HomAlgebra& a) {
  return emit_common(SpecKind::algebra, a.basis(), a.mu(), nullptr, a.alpha(), std::nullopt);
}

void emit_spec(const HomPoissonAlgebra& a, const std::filesystem::path& path) { write_file(path, emit_spec_text(a)); }

void emit_spec(const HomAlgebra& a, const std::filesystem::path& path) { write_file(path, emit_spec_text(a)); }

LinearMap parse_map_text(std::string_view text) {
  const std::vector<Line> lines = tokenize(text);
  expect_header(lines, kMapHeader);
  if (lines.size() < 2 || lines[1].tokens[0] != "dim") {
    throw ParseError("expected 'dim' after the header", lines.size() < 2 ? lines[0].number : lines[1].number);
  }
  const std::size_t dim = parse_dim(lines[1]);
  LinearMap m = parse_rows(lines, 2, dim, lines[1].number);
  if (lines.size() > 2 + dim) throw ParseError("trailing content after the matrix", lines[2 + dim].number);
  return m;
}

LinearMap parse_map(const std::filesystem::path& path) { return parse_map_text(read_file(path)); }

std::string emit_map_text(const LinearMap& m) {
  std::ostringstream out;
  out << kMapHeader << ' ' << kVersion << '\n' << "dim " << m.dim() << '\n';
  emit_rows(out, m);
  return out.str();
}

void emit_map(const LinearMap& m, const std::filesystem::path& path) { write_file(path, emit_map_text(m)); }

}  // namespace hompoisson
