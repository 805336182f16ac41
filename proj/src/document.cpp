#include "pdquad/document.hpp"

#include <cctype>
#include <map>
#include <set>

#include "pdquad/parse.hpp"

namespace pdquad {
namespace {

struct Span {
  std::string text;
  int line = 0;
  int column = 0;
};

struct Section {
  Span header;               // the text after the key on the key line
  std::vector<Span> body;    // indented continuation lines
  int line = 0;
};

bool blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

Span trimmed(std::string_view s, int line, int column) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {"", line, column + static_cast<int>(s.size())};
  const auto e = s.find_last_not_of(" \t\r");
  return {std::string(s.substr(b, e - b + 1)), line, column + static_cast<int>(b)};
}

std::map<std::string, Section> split_sections(std::string_view text) {
  static const std::set<std::string> keys{"ring", "order", "gens", "primes", "matrix"};
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (blank(line)) {
      if (end == text.size()) break;
      continue;
    }
    if (line[0] == ' ' || line[0] == '\t') {
      if (!current) throw ParseError("indented line outside a section", line_no, 1);
      current->body.push_back(trimmed(line, line_no, 1));
      if (end == text.size()) break;
      continue;
    }
    std::size_t k = 0;
    while (k < line.size() && (std::isalnum(static_cast<unsigned char>(line[k])) || line[k] == '_')) ++k;
    const std::string key(line.substr(0, k));
    if (!keys.count(key))
      throw ParseError("unknown section '" + (key.empty() ? std::string(line.substr(0, 1)) : key) + "'", line_no, 1);
    if (sections.count(key)) throw ParseError("duplicate section '" + key + "'", line_no, 1);
    std::size_t rest = k;
    if (key == "gens" || key == "primes" || key == "matrix") {
      while (rest < line.size() && (line[rest] == ' ' || line[rest] == '\t')) ++rest;
      if (rest >= line.size() || line[rest] != ':')
        throw ParseError("expected ':' after '" + key + "'", line_no, static_cast<int>(rest) + 1);
      ++rest;
    }
    if (key != "ring" && !sections.count("ring")) throw ParseError("the ring line must come first", line_no, 1);
    Section s;
    s.line = line_no;
    s.header = trimmed(line.substr(rest), line_no, static_cast<int>(rest) + 1);
    current = &sections.emplace(key, std::move(s)).first->second;
    if (end == text.size()) break;
  }
  if (!sections.count("ring")) throw ParseError("missing ring line", line_no > 0 ? line_no : 1, 1);
  return sections;
}

struct RingSpec {
  std::optional<std::uint32_t> characteristic;  // empty for QQ
  std::vector<std::string> variables;
};

RingSpec parse_ring(const Span& s) {
  RingSpec spec;
  const auto open = s.text.find('[');
  if (open == std::string::npos || s.text.back() != ']')
    throw ParseError("expected ring of the form GF(p)[x,y,...] or QQ[x,y,...]", s.line, s.column);
  std::string field;
  for (char c : s.text.substr(0, open))
    if (c != ' ') field += c;
  if (field == "QQ") {
  } else if (field.size() > 4 && field.rfind("GF(", 0) == 0 && field.back() == ')') {
    const std::string digits = field.substr(3, field.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw ParseError("bad characteristic '" + digits + "'", s.line, s.column + 3);
    const auto p = std::stoull(digits);
    if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
      throw ParseError("characteristic " + digits + " is not a prime below 2^31", s.line, s.column + 3);
    spec.characteristic = static_cast<std::uint32_t>(p);
  } else {
    throw ParseError("unknown field '" + field + "'; use GF(p) or QQ", s.line, s.column);
  }
  const std::string inner = s.text.substr(open + 1, s.text.size() - open - 2);
  std::set<std::string> seen;
  for (const auto& item : split_top_level(inner, s.column + static_cast<int>(open) + 1)) {
    const Span v = trimmed(item.text, s.line, item.column);
    const bool ident = !v.text.empty() && !std::isdigit(static_cast<unsigned char>(v.text[0])) &&
                       std::all_of(v.text.begin(), v.text.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) throw ParseError("bad variable name '" + v.text + "'", v.line, v.column);
    if (!seen.insert(v.text).second) throw ParseError("variable '" + v.text + "' declared twice", v.line, v.column);
    spec.variables.push_back(v.text);
  }
  if (spec.variables.empty()) throw ParseError("the ring needs at least one variable", s.line, s.column);
  return spec;
}

MonomialOrder parse_order(const Span& s) {
  if (s.text == "grevlex") return MonomialOrder::grevlex();
  if (s.text == "lex") return MonomialOrder::lex();
  throw ParseError("unknown order '" + s.text + "'; use grevlex or lex", s.line, s.column);
}

template <class F>
std::vector<Polynomial<F>> parse_list(const RingPtr<F>& R, const Span& s, bool allow_trailing_comma) {
  std::vector<Polynomial<F>> out;
  if (s.text.empty()) return out;
  auto items = split_top_level(s.text, s.column);
  if (allow_trailing_comma && items.size() > 1 && blank(items.back().text)) items.pop_back();
  for (const auto& item : items) {
    const Span t = trimmed(item.text, s.line, item.column);
    if (t.text.empty()) throw ParseError("empty entry in list", t.line, t.column);
    out.push_back(parse_polynomial(R, t.text, t.line, t.column));
  }
  return out;
}

template <class F>
IdealDocument<F> build(F field, const RingSpec& spec, const std::map<std::string, Section>& sections) {
  IdealDocument<F> doc;
  MonomialOrder order = MonomialOrder::grevlex();
  if (auto it = sections.find("order"); it != sections.end()) {
    if (!it->second.body.empty())
      throw ParseError("order takes a single word", it->second.body.front().line, it->second.body.front().column);
    order = parse_order(it->second.header);
  }
  doc.ring = make_ring(std::move(field), spec.variables, order);

  if (auto it = sections.find("gens"); it != sections.end()) {
    doc.has_gens = true;
    const Section& s = it->second;
    const bool more = !s.body.empty();
    doc.gens = parse_list(doc.ring, s.header, more);
    for (std::size_t i = 0; i < s.body.size(); ++i) {
      auto part = parse_list(doc.ring, s.body[i], i + 1 < s.body.size());
      doc.gens.insert(doc.gens.end(), part.begin(), part.end());
    }
  }
  if (auto it = sections.find("primes"); it != sections.end()) {
    const Section& s = it->second;
    if (!s.header.text.empty()) throw ParseError("primes are listed one per indented line", s.header.line, s.header.column);
    for (const auto& line : s.body) {
      auto gens = parse_list(doc.ring, line, false);
      doc.primes.push_back(std::move(gens));
    }
    if (doc.primes.empty()) throw ParseError("empty primes block", s.line, 1);
  }
  if (auto it = sections.find("matrix"); it != sections.end()) {
    const Section& s = it->second;
    if (!s.header.text.empty()) throw ParseError("matrix rows go on indented lines", s.header.line, s.header.column);
    if (s.body.size() != 2) throw ParseError("the matrix needs exactly two rows", s.line, 1);
    const auto top = parse_list(doc.ring, s.body[0], false);
    const auto bottom = parse_list(doc.ring, s.body[1], false);
    try {
      doc.matrix = LinearMatrix<F>::from_rows(doc.ring, top, bottom);
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), s.body[0].line, s.body[0].column);
    }
  }
  if (!doc.has_gens && !doc.matrix) throw ParseError("the document needs gens or a matrix", sections.at("ring").line, 1);
  return doc;
}

template <class F>
std::string join(const std::vector<Polynomial<F>>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

}  // namespace

template <class F>
Ideal<F> IdealDocument<F>::ideal() const {
  if (has_gens || !matrix) return Ideal<F>(ring, gens);
  return ideal_from_minors(*matrix);
}

template <class F>
std::vector<Ideal<F>> IdealDocument<F>::prime_ideals() const {
  std::vector<Ideal<F>> out;
  for (const auto& p : primes) out.emplace_back(ring, p);
  return out;
}

AnyDocument parse_document(std::string_view text) {
  const auto sections = split_sections(text);
  const RingSpec spec = parse_ring(sections.at("ring").header);
  if (spec.characteristic) return build(PrimeField(*spec.characteristic), spec, sections);
  return build(RationalField(), spec, sections);
}

template <class F>
std::string print_document(const IdealDocument<F>& doc) {
  const auto& R = *doc.ring;
  std::string s = "ring " + R.field().name() + "[";
  for (std::size_t i = 0; i < R.num_variables(); ++i) s += (i ? "," : "") + R.variable_names()[i];
  s += "]\norder " + R.order().name() + "\n";
  if (doc.has_gens) s += "gens: " + join(doc.gens) + "\n";
  if (!doc.primes.empty()) {
    s += "primes:\n";
    for (const auto& p : doc.primes) s += "  " + join(p) + "\n";
  }
  if (doc.matrix) {
    s += "matrix:\n";
    for (std::size_t r = 0; r < 2; ++r) {
      std::vector<Polynomial<F>> row;
      for (std::size_t c = 0; c < doc.matrix->num_columns(); ++c) row.push_back(doc.matrix->entry(r, c));
      s += "  " + join(row) + "\n";
    }
  }
  return s;
}

std::string print_document(const AnyDocument& doc) {
  return std::visit([](const auto& d) { return print_document(d); }, doc);
}

template <class F>
IdealDocument<F> make_document(const Ideal<F>& I, std::vector<Ideal<F>> primes) {
  IdealDocument<F> doc;
  doc.ring = I.ring();
  doc.gens = I.generators();
  doc.has_gens = true;
  for (const auto& p : primes) doc.primes.push_back(p.generators());
  return doc;
}

#define PDQUAD_DOCUMENT_INSTANTIATE(F)                                             \
  template struct IdealDocument<F>;                                                \
  template std::string print_document(const IdealDocument<F>&);                    \
  template IdealDocument<F> make_document(const Ideal<F>&, std::vector<Ideal<F>>);

PDQUAD_DOCUMENT_INSTANTIATE(PrimeField)
PDQUAD_DOCUMENT_INSTANTIATE(RationalField)

}  // namespace pdquad
