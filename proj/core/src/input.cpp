#include "biquad/input.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace biquad {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t line, std::size_t column) : s_(text), line_(line), col0_(column) {}

  QuadraticForm parse() {
    QuadraticForm::Coefficients c;
    for (auto& x : c) x = 0;
    skip_ws();
    if (at_end()) fail("empty form", pos_);
    bool first = true;
    while (!at_end()) {
      BigInt sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'", pos_);
      }
      first = false;
      const std::size_t term_start = pos_;
      auto [coeff, degree, index] = parse_term();
      if (degree != 2) fail("non-quadratic monomial", term_start);
      c[index] += sign * coeff;
      skip_ws();
    }
    try {
      return QuadraticForm(std::move(c));
    } catch (const std::invalid_argument&) {
      fail("form has no nonzero coefficient", 0);
    }
  }

 private:
  struct Term {
    BigInt coeff;
    unsigned degree;
    std::size_t index;
  };

  Term parse_term() {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = read_integer();
      have_coeff = true;
      skip_ws();
    }
    std::array<unsigned, kVariables> exps{};
    bool have_var = false;
    while (!at_end()) {
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!have_coeff && !have_var) fail("unexpected '*'", pos_);
        ++pos_;
        skip_ws();
        if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable after '*'", pos_);
      }
      if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        break;
      }
      const char name = peek();
      std::size_t var = kVariables;
      for (std::size_t k = 0; k < kVariables; ++k)
        if (kVariableNames[k] == name) var = k;
      if (var == kVariables) fail(std::string("unknown variable '") + name + "'", pos_);
      ++pos_;
      unsigned e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'", pos_);
        const std::size_t at = pos_;
        BigInt big = read_integer();
        if (big > 64) fail("non-quadratic monomial", at);
        e = static_cast<unsigned>(big.get_ui());
      }
      exps[var] += e;
      have_var = true;
      skip_ws();
    }
    if (!have_coeff && !have_var) fail("expected a term", pos_);
    unsigned degree = 0;
    std::size_t i = kVariables;
    std::size_t j = kVariables;
    for (std::size_t k = 0; k < kVariables; ++k) {
      degree += exps[k];
      for (unsigned m = 0; m < exps[k]; ++m) {
        if (i == kVariables) {
          i = k;
        } else if (j == kVariables) {
          j = k;
        }
      }
    }
    std::size_t index = degree == 2 ? monomial_index(i, j) : 0;
    return {coeff, degree, index};
  }

  BigInt read_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return parse_integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, line_, col0_ + at); }

  std::string_view s_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<BigInt> parse_integer_list(std::string_view text, std::size_t expected, std::size_t line,
                                       std::size_t column) {
  std::vector<BigInt> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    try {
      out.push_back(parse_integer(std::string(item)));
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer '" + std::string(item) + "'", line, column + start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " comma-separated integers", line, column);
  return out;
}

std::uint64_t parse_prime(std::string_view text, std::size_t line, std::size_t column) {
  BigInt p;
  try {
    p = parse_integer(std::string(text));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad prime '" + std::string(text) + "'", line, column);
  }
  if (p < 2 || p >= BigInt(static_cast<unsigned long>(PrimeField::kMaxModulus)) ||
      !is_prime_u64(p.get_ui()))
    throw ParseError("p must be a prime below 2^32", line, column);
  return p.get_ui();
}

void parse_witness(std::string_view body, std::size_t line, std::size_t column, PencilInput& in,
                   std::size_t& kind_count) {
  // Tokens separated by whitespace: kind, then key=value pairs.
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    std::size_t start = i;
    while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    if (i > start) tokens.push_back({body.substr(start, i - start), column + start});
  }
  if (tokens.empty()) throw ParseError("empty WITNESS line", line, column);
  const std::string_view kind = tokens[0].first;
  if (kind != "fano" && kind != "singular")
    throw ParseError("unknown witness kind '" + std::string(kind) + "'", line, tokens[0].second);
  std::optional<std::uint64_t> prime;
  std::optional<std::pair<std::string_view, std::size_t>> chart;
  std::optional<std::pair<std::string_view, std::size_t>> coords;
  for (std::size_t t = 1; t < tokens.size(); ++t) {
    auto [tok, col] = tokens[t];
    std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line, col);
    std::string_view key = tok.substr(0, eq);
    std::string_view value = tok.substr(eq + 1);
    if (key == "p") {
      prime = parse_prime(value, line, col + eq + 1);
    } else if (key == "chart" && kind == "fano") {
      chart = {value, col + eq + 1};
    } else if (key == "coords") {
      coords = {value, col + eq + 1};
    } else {
      throw ParseError("unknown witness field '" + std::string(key) + "'", line, col);
    }
  }
  if (!prime) throw ParseError("witness needs p=<prime>", line, column);
  if (!coords) throw ParseError("witness needs coords=...", line, column);
  const PrimeField F(*prime);
  if (kind == "fano") {
    if (!chart) throw ParseError("fano witness needs chart=<i>,<j>", line, column);
    auto piv = parse_integer_list(chart->first, 2, line, chart->second);
    if (piv[0] < 0 || piv[1] < 0 || piv[0] >= piv[1] || piv[1] > 5)
      throw ParseError("chart pivots must satisfy 0 <= i < j <= 5", line, chart->second);
    FanoWitnessInput w{*prime, GrassmannChart(piv[0].get_ui(), piv[1].get_ui()), {}};
    auto xs = parse_integer_list(coords->first, kChartParameters, line, coords->second);
    for (std::size_t k = 0; k < kChartParameters; ++k) w.coords[k] = F.reduce(xs[k]);
    in.fano_witnesses.push_back(w);
  } else {
    SingularWitnessInput w{*prime, {}};
    auto xs = parse_integer_list(coords->first, kVariables, line, coords->second);
    for (std::size_t k = 0; k < kVariables; ++k) w.coords[k] = F.reduce(xs[k]);
    in.singular_witnesses.push_back(w);
  }
  ++kind_count;
}

}  // namespace

QuadraticForm parse_form(std::string_view text, std::size_t line, std::size_t column) {
  return FormParser(text, line, column).parse();
}

PencilInput parse_input(std::string_view text) {
  std::optional<QuadraticForm> q1;
  std::optional<QuadraticForm> q2;
  PencilInput scratch{QuadraticForm::sum_of_squares(), QuadraticForm::sum_of_squares(), {}, {}};
  std::size_t witness_count = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == std::string_view::npos ? text.npos : nl - start);
    ++line_no;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view content = trim(raw);
    if (content.empty() || content.front() == '#') continue;
    const std::size_t indent = static_cast<std::size_t>(content.data() - raw.data());
    std::size_t colon = content.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'Q1:', 'Q2:' or 'WITNESS:'", line_no, indent + 1);
    std::string_view key = trim(content.substr(0, colon));
    std::string_view body = content.substr(colon + 1);
    const std::size_t body_col = indent + colon + 2;
    if (key == "Q1" || key == "Q2") {
      auto& slot = key == "Q1" ? q1 : q2;
      if (slot) throw ParseError("duplicate " + std::string(key) + " line", line_no, indent + 1);
      slot = parse_form(body, line_no, body_col);
    } else if (key == "WITNESS") {
      parse_witness(body, line_no, body_col, scratch, witness_count);
    } else {
      throw ParseError("unknown line key '" + std::string(key) + "'", line_no, indent + 1);
    }
  }
  if (!q1) throw ParseError("missing Q1 line", line_no, 1);
  if (!q2) throw ParseError("missing Q2 line", line_no, 1);
  return PencilInput{*q1, *q2, std::move(scratch.fano_witnesses), std::move(scratch.singular_witnesses)};
}

PencilInput read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string format_input(const PencilInput& in) {
  std::ostringstream out;
  out << "Q1: " << in.q1.to_string() << '\n';
  out << "Q2: " << in.q2.to_string() << '\n';
  for (const auto& w : in.fano_witnesses) {
    out << "WITNESS: fano p=" << w.prime << " chart=" << w.chart.to_string() << " coords=";
    for (std::size_t k = 0; k < w.coords.size(); ++k) out << (k ? "," : "") << w.coords[k];
    out << '\n';
  }
  for (const auto& w : in.singular_witnesses) {
    out << "WITNESS: singular p=" << w.prime << " coords=";
    for (std::size_t k = 0; k < w.coords.size(); ++k) out << (k ? "," : "") << w.coords[k];
    out << '\n';
  }
  return out.str();
}

}  // namespace biquad
