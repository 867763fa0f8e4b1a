#include "liftfb/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "liftfb/errors.hpp"

namespace liftfb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

bool is_rational_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  auto digits = [&](std::size_t* pos) {
    if (*pos < s.size() && (s[*pos] == '+' || s[*pos] == '-')) ++*pos;
    const std::size_t start = *pos;
    while (*pos < s.size() && std::isdigit(static_cast<unsigned char>(s[*pos]))) ++*pos;
    return *pos > start;
  };
  if (!digits(&i)) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  if (!digits(&i)) return false;
  return i == s.size();
}

long long parse_int(const std::string& text, const char* what) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError(std::string("empty ") + what, 1, 1);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (errno != 0 || end == t.c_str() || *end != '\0') {
    throw ParseError(std::string("bad ") + what + ": " + t, 1, 1);
  }
  return v;
}

}  // namespace

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_poly(const LaurentPoly& p) {
  std::string out;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    if (!out.empty()) out += ",";
    out += std::to_string(it->first) + ":" + it->second.str();
  }
  return out;
}

std::string format_matrix(const PolyMatrix& m) {
  return format_poly(m.e[0][0]) + "; " + format_poly(m.e[0][1]) + "; " +
         format_poly(m.e[1][0]) + "; " + format_poly(m.e[1][1]);
}

std::string format_step(const LiftingStep& s) {
  switch (s.kind) {
    case StepKind::Upper:
      return "U:" + format_poly(s.filter);
    case StepKind::Lower:
      return "L:" + format_poly(s.filter);
    case StepKind::Scale:
      return "S:" + s.scale_k.str();
  }
  return "";
}

std::string format_cascade(const Cascade& c) {
  std::string steps;
  for (const auto& s : c.steps) {
    if (!steps.empty()) steps += ",";
    steps += format_step(s);
  }
  const bool ident = c.base == PolyMatrix::identity();
  return "K=" + c.scale.str() + "; steps=[" + steps + "]; base=" +
         (ident ? std::string("I") : format_matrix(c.base));
}

std::string format_token(const Token& t) {
  return (t.side == Side::U ? "U:" : "L:") + format_poly(t.filter);
}

std::string format_word(const GroupWord& w) {
  std::string out;
  for (const auto& t : w.tokens) {
    if (!out.empty()) out += ",";
    out += format_token(t);
  }
  return out;
}

std::string format_scaled(const ScaledElement& g) {
  return "K=" + g.gain.str() + "; word=" + format_word(g.word);
}

std::string format_coset_id(const HSCosetId& id) {
  return "base=" + format_matrix(id.base) + "; word=" + format_word(id.word) +
         "; scheme=" + (id.scheme == CosetScheme::C ? "C" : "S");
}

std::string format_signal(const Signal& x) {
  std::string out = "origin=" + std::to_string(x.origin) + "\n";
  for (const auto& s : x.samples) out += s.str() + "\n";
  return out;
}

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  if (!is_rational_literal(t)) throw ParseError("bad rational: '" + t + "'", 1, 1);
  try {
    return Rational::parse(t);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

LaurentPoly parse_poly(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) return LaurentPoly();
  std::vector<LaurentPoly::Term> terms;
  for (const std::string& piece : split(t, ',')) {
    const std::string p = trim(piece);
    const auto colon = p.find(':');
    if (colon == std::string::npos) {
      throw ParseError("polynomial term missing ':': '" + p + "'", 1, 1);
    }
    const long long e = parse_int(p.substr(0, colon), "exponent");
    terms.emplace_back(e, parse_rational(p.substr(colon + 1)));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

PolyMatrix parse_matrix(const std::string& text) {
  const std::string t = trim(text);
  if (t == "I") return PolyMatrix::identity();
  const auto fields = split(t, ';');
  if (fields.size() != 4) {
    throw ParseError("matrix needs four ';'-separated polynomials", 1, 1);
  }
  return PolyMatrix(parse_poly(fields[0]), parse_poly(fields[1]), parse_poly(fields[2]),
                    parse_poly(fields[3]));
}

namespace {

// Steps and words share the "U:...,L:..." shape where the payloads may
// themselves contain commas; a chunk starting with a tag opens a new entry.
std::vector<std::pair<char, std::string>> parse_tagged_list(const std::string& text,
                                                            bool allow_scale) {
  std::vector<std::pair<char, std::string>> entries;
  const std::string t = trim(text);
  if (t.empty()) return entries;
  for (const std::string& raw_chunk : split(t, ',')) {
    const std::string chunk = trim(raw_chunk);
    const bool opens = chunk.size() >= 2 && chunk[1] == ':' &&
                       (chunk[0] == 'U' || chunk[0] == 'L' || chunk[0] == 'S');
    if (opens) {
      if (chunk[0] == 'S' && !allow_scale) {
        throw ParseError("scale entries are not allowed here", 1, 1);
      }
      entries.emplace_back(chunk[0], chunk.substr(2));
    } else if (!entries.empty()) {
      entries.back().second += "," + chunk;
    } else {
      throw ParseError("list entry must start with U:, L:" +
                           std::string(allow_scale ? ", or S:" : ""),
                       1, 1);
    }
  }
  return entries;
}

}  // namespace

RawCascade parse_cascade(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("K=", 0) != 0) throw ParseError("cascade must start with 'K='", 1, 1);
  const auto semi = t.find(';');
  if (semi == std::string::npos) throw ParseError("cascade is missing '; steps=[...]'", 1, 1);
  RawCascade c;
  c.scale = parse_rational(t.substr(2, semi - 2));
  std::string rest = trim(t.substr(semi + 1));
  if (rest.rfind("steps=[", 0) != 0) throw ParseError("cascade is missing 'steps=['", 1, 1);
  const auto close = rest.find(']');
  if (close == std::string::npos) throw ParseError("unterminated steps list", 1, 1);
  for (const auto& [tag, payload] : parse_tagged_list(rest.substr(7, close - 7), true)) {
    switch (tag) {
      case 'U':
        c.steps.push_back(LiftingStep::upper(parse_poly(payload)));
        break;
      case 'L':
        c.steps.push_back(LiftingStep::lower(parse_poly(payload)));
        break;
      default:
        c.steps.push_back(LiftingStep::scaling(parse_rational(payload)));
        break;
    }
  }
  rest = trim(rest.substr(close + 1));
  if (rest.rfind(";", 0) == 0) rest = trim(rest.substr(1));
  if (rest.rfind("base=", 0) != 0) throw ParseError("cascade is missing 'base='", 1, 1);
  c.base = parse_matrix(rest.substr(5));
  return c;
}

GroupWord parse_word(const std::string& text) {
  std::vector<Token> tokens;
  for (const auto& [tag, payload] : parse_tagged_list(text, false)) {
    tokens.push_back(Token{tag == 'U' ? Side::U : Side::L, parse_poly(payload)});
  }
  return word_simplify(std::move(tokens));
}

ScaledElement parse_scaled(const std::string& text) {
  const std::string t = trim(text);
  if (t.rfind("K=", 0) != 0) throw ParseError("scaled element must start with 'K='", 1, 1);
  const auto semi = t.find(';');
  if (semi == std::string::npos) {
    throw ParseError("scaled element is missing '; word='", 1, 1);
  }
  ScaledElement g;
  g.gain = parse_rational(t.substr(2, semi - 2));
  if (g.gain.is_zero()) throw ParseError("scaled element requires K != 0", 1, 1);
  std::string rest = trim(t.substr(semi + 1));
  if (rest.rfind("word=", 0) != 0) throw ParseError("scaled element is missing 'word='", 1, 1);
  g.word = parse_word(rest.substr(5));
  return g;
}

const char* to_string(SpecKind k) {
  switch (k) {
    case SpecKind::Filters:
      return "filters";
    case SpecKind::Matrix:
      return "matrix";
    case SpecKind::Cascade:
      return "cascade";
    case SpecKind::Word:
      return "word";
    case SpecKind::Scaled:
      return "scaled";
    case SpecKind::SignalData:
      return "signal";
    case SpecKind::Basis:
      return "basis";
  }
  return "?";
}

SpecFile parse_spec_file(const std::string& content) {
  struct Line {
    std::string text;
    int number;
  };
  std::vector<Line> lines;
  {
    std::istringstream in(content);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      const std::string t = trim(raw);
      if (t.empty() || t[0] == '#') continue;
      lines.push_back({t, n});
    }
  }
  if (lines.empty()) throw ParseError("empty input", 1, 1);
  const Line& head = lines.front();
  if (head.text.rfind("kind=", 0) != 0) {
    throw ParseError("first line must be 'kind=<kind>'", head.number, 1);
  }
  const std::string kind = trim(head.text.substr(5));
  SpecFile f;
  auto at = [&](std::size_t i) -> const Line& {
    if (i >= lines.size()) {
      throw ParseError("unexpected end of input", lines.back().number, 1);
    }
    return lines[i];
  };
  auto reparse = [](const Line& ln, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln.number, e.column());
    }
  };
  if (kind == "filters") {
    f.kind = SpecKind::Filters;
    bool h0 = false, h1 = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line& ln = at(i);
      if (ln.text.rfind("h0=", 0) == 0) {
        f.filters.lowpass = reparse(ln, [&] { return parse_poly(ln.text.substr(3)); });
        h0 = true;
      } else if (ln.text.rfind("h1=", 0) == 0) {
        f.filters.highpass = reparse(ln, [&] { return parse_poly(ln.text.substr(3)); });
        h1 = true;
      } else {
        throw ParseError("filters payload lines must be 'h0=' or 'h1='", ln.number, 1);
      }
    }
    if (!h0 || !h1) throw ParseError("filters input needs both h0= and h1=", head.number, 1);
  } else if (kind == "matrix") {
    f.kind = SpecKind::Matrix;
    const Line& ln = at(1);
    if (ln.text.rfind("m=", 0) != 0) throw ParseError("matrix payload must be 'm=<matrix>'", ln.number, 1);
    f.matrix = reparse(ln, [&] { return parse_matrix(ln.text.substr(2)); });
  } else if (kind == "cascade") {
    f.kind = SpecKind::Cascade;
    const Line& ln = at(1);
    f.cascade = reparse(ln, [&] { return parse_cascade(ln.text); });
  } else if (kind == "word") {
    f.kind = SpecKind::Word;
    const Line& ln = at(1);
    if (ln.text.rfind("w=", 0) != 0) throw ParseError("word payload must be 'w=<word>'", ln.number, 1);
    f.word = reparse(ln, [&] { return parse_word(ln.text.substr(2)); });
  } else if (kind == "scaled") {
    f.kind = SpecKind::Scaled;
    const Line& ln = at(1);
    f.scaled = reparse(ln, [&] { return parse_scaled(ln.text); });
  } else if (kind == "signal") {
    f.kind = SpecKind::SignalData;
    const Line& ln = at(1);
    if (ln.text.rfind("origin=", 0) != 0) {
      throw ParseError("signal payload must start with 'origin=<int>'", ln.number, 1);
    }
    f.signal.origin = reparse(ln, [&] { return parse_int(ln.text.substr(7), "origin"); });
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const Line& s = at(i);
      f.signal.samples.push_back(reparse(s, [&] { return parse_rational(s.text); }));
    }
  } else if (kind == "basis") {
    f.kind = SpecKind::Basis;
    const Line& ln = at(1);
    if (ln.text.rfind("class=", 0) != 0) {
      throw ParseError("basis payload must start with 'class=<P0|P1|Pa>'", ln.number, 1);
    }
    const std::string cls = trim(ln.text.substr(6));
    SymmetryClass sc;
    if (cls == "P0") {
      sc = SymmetryClass::P0;
    } else if (cls == "P1") {
      sc = SymmetryClass::P1;
    } else if (cls == "Pa") {
      sc = SymmetryClass::Pa;
    } else {
      throw ParseError("unknown basis class '" + cls + "'", ln.number, 7);
    }
    std::vector<LaurentPoly> elems;
    for (std::size_t i = 2; i < lines.size(); ++i) {
      const Line& s = at(i);
      elems.push_back(reparse(s, [&] { return parse_poly(s.text); }));
    }
    f.basis = make_basis(sc, std::move(elems));
  } else {
    throw ParseError("unknown kind '" + kind + "'", head.number, 6);
  }
  return f;
}

}  // namespace liftfb
