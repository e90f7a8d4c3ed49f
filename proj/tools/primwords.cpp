// primwords: command-line front end over the C API in primwords.h.
//
// Exit status: 0 success, 1 domain error (bad word/rational, value outside
// an operation's domain, cross-check disagreement), 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "primwords.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultMaxLevel = 8;
constexpr int kMaxLevelCap = 20;

struct DomainFailure {
  std::string message;
};

void check(pw_status s) {
  if (s != PW_OK) throw DomainFailure{pw_last_error()};
}

struct WordDeleter {
  void operator()(pw_word* w) const { pw_word_free(w); }
};
struct ListDeleter {
  void operator()(pw_word_list* l) const { pw_word_list_free(l); }
};
struct DiagramDeleter {
  void operator()(pw_diagram* d) const { pw_diagram_free(d); }
};
struct StringDeleter {
  void operator()(char* s) const { pw_string_free(s); }
};
using WordPtr = std::unique_ptr<pw_word, WordDeleter>;
using ListPtr = std::unique_ptr<pw_word_list, ListDeleter>;
using DiagramPtr = std::unique_ptr<pw_diagram, DiagramDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) { return StringPtr(s).get(); }

std::string text_of(const pw_word* w) {
  char* s = nullptr;
  check(pw_word_text(w, &s));
  return take(s);
}

pw_rational parse_rational(const std::string& text) {
  pw_rational r{};
  check(pw_rational_parse(text.c_str(), &r));
  return r;
}

std::string fmt(pw_rational x) { return std::to_string(x.p) + "/" + std::to_string(x.q); }

WordPtr parse_word(const std::string& text) {
  pw_word* w = nullptr;
  check(pw_word_parse(text.c_str(), &w));
  return WordPtr(w);
}

WordPtr scheme_word(pw_rational x, pw_scheme scheme) {
  pw_word* w = nullptr;
  check(pw_scheme_word(x, scheme, &w));
  return WordPtr(w);
}

bool is_base(pw_rational x) { return x.q == 0 || x.p == 0; }

std::optional<std::vector<int64_t>> continued_fraction(pw_rational x) {
  if (x.q == 0 || x.p < 0) return std::nullopt;
  size_t len = 0;
  pw_continued_fraction(x, nullptr, 0, &len);
  std::vector<int64_t> digits(len);
  check(pw_continued_fraction(x, digits.data(), digits.size(), &len));
  return digits;
}

template <typename T, typename F>
std::vector<T> sized_query(F f) {
  size_t len = 0;
  const pw_status s = f(nullptr, 0, &len);
  if (s != PW_OK && s != PW_ERR_BUFFER) check(s);
  std::vector<T> out(len);
  check(f(out.data(), out.size(), &len));
  return out;
}

std::string join_cf(const std::optional<std::vector<int64_t>>& cf) {
  if (!cf) return "none";
  std::string s = "[";
  for (size_t i = 0; i < cf->size(); ++i) s += (i ? "," : "") + std::to_string((*cf)[i]);
  return s + "]";
}

std::string join_rationals(const std::vector<pw_rational>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s;
}

json rationals_json(const std::vector<pw_rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(fmt(x));
  return a;
}

std::string swap_letters(std::string s) {
  for (auto& c : s) {
    switch (c) {
      case 'A': c = 'B'; break;
      case 'B': c = 'A'; break;
      case 'a': c = 'b'; break;
      case 'b': c = 'a'; break;
      default: break;
    }
  }
  return s;
}

json exponents_json(const pw_word* w) {
  pw_word* core = nullptr;
  pw_word* conj = nullptr;
  check(pw_word_cyclic_reduce(w, &core, &conj));
  WordPtr core_ptr(core);
  WordPtr conj_ptr(conj);
  char slope_class = 0;
  int sign = 0;
  size_t len = 0;
  const pw_status s = pw_primitive_exponents(core, &slope_class, &sign, nullptr, 0, &len);
  if (s != PW_OK && s != PW_ERR_BUFFER) return nullptr;
  std::vector<int64_t> values(len);
  check(pw_primitive_exponents(core, &slope_class, &sign, values.data(), values.size(), &len));
  return {{"slope_class", slope_class == 'B' ? "B-heavy" : "A-heavy"}, {"separator_sign", sign}, {"exponents", values}};
}

int64_t farey_level(pw_rational x) {
  int64_t lev = 0;
  check(pw_farey_level(x, &lev));
  return lev;
}

struct Output {
  std::string format;
  std::string command;
  std::string input;

  void emit(const std::string& text, const json& result) const {
    if (format == "json") {
      json env;
      env["command"] = command;
      env["input"] = input;
      env["result"] = result;
      env["version"] = pw_version();
      std::cout << env.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

// word <p/q>
int cmd_word(const Output& out, const std::string& rational, const std::string& scheme) {
  const pw_rational x = parse_rational(rational);
  const auto cf = continued_fraction(x);
  const int64_t lev = x.p < 0 ? farey_level({-x.p, x.q}) : farey_level(x);
  json result;
  result["rational"] = fmt(x);
  result["scheme"] = scheme.empty() ? "all" : scheme;
  std::vector<std::string> tokens;

  const auto w = scheme_word(x, PW_SCHEME_W);
  if (scheme.empty() || scheme == "w") {
    tokens.push_back("W=" + text_of(w.get()));
    result["W"] = text_of(w.get());
  }
  if (scheme.empty() || scheme == "e") {
    const auto e = scheme_word(x, PW_SCHEME_E);
    tokens.push_back("E=" + text_of(e.get()));
    result["E"] = text_of(e.get());
  }
  if (scheme == "cf") {
    const auto c = scheme_word(x, PW_SCHEME_CF);
    tokens.push_back("CF=" + text_of(c.get()));
    result["CF"] = text_of(c.get());
  }
  if (scheme == "v") {
    if (is_base(x) || x.p == x.q || x.p < 0) {
      throw DomainFailure{"V recursion needs a positive slope other than 0/1, 1/0 and 1/1, got " + fmt(x)};
    }
    // Below 1 the recursion runs on q/p with A and B exchanged.
    const bool swapped = x.p < x.q;
    pw_word_list* raw = nullptr;
    check(pw_v_sequence(swapped ? pw_rational{x.q, x.p} : x, &raw));
    ListPtr list(raw);
    size_t n = 0;
    check(pw_word_list_size(list.get(), &n));
    json vs = json::array();
    for (size_t i = 0; i < n; ++i) {
      const pw_word* v = nullptr;
      check(pw_word_list_at(list.get(), i, &v));
      std::string t = text_of(v);
      if (swapped) t = swap_letters(t);
      tokens.push_back("V" + std::to_string(static_cast<long>(i) - 1) + "=" + t);
      vs.push_back(t);
    }
    result["V"] = vs;
    result["generators_swapped"] = swapped;
  }
  tokens.push_back("cf=" + join_cf(cf));
  tokens.push_back("level=" + std::to_string(lev));
  result["cf"] = cf ? json(*cf) : json(nullptr);
  result["level"] = lev;
  result["exponents"] = is_base(x) ? json(nullptr) : exponents_json(w.get());

  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) text += (i ? " " : "") + tokens[i];
  out.emit(text, result);
  return 0;
}

int cmd_check(const Output& out, const std::string& word_text) {
  const auto w = parse_word(word_text);
  pw_verdict v{};
  check(pw_is_primitive(w.get(), &v));
  json result;
  result["word"] = text_of(w.get());
  result["primitive"] = v.primitive != 0;
  std::string text;
  if (v.primitive) {
    result["rational"] = fmt(v.slope);
    result["rotation"] = v.rotation;
    result["symmetry"] = pw_symmetry_name(v.symmetry);
    text = "primitive p/q=" + fmt(v.slope);
  } else {
    result["reason"] = pw_reject_reason_name(v.reason);
    text = "not primitive";
  }
  out.emit(text, result);
  return 0;
}

int cmd_palindrome(const Output& out, const std::string& rational) {
  const pw_rational x = parse_rational(rational);
  pw_word* first = nullptr;
  pw_word* second = nullptr;
  check(pw_palindromic_parts(x, &first, &second));
  WordPtr f(first);
  WordPtr s(second);
  const auto e = scheme_word(x, PW_SCHEME_E);
  json result;
  result["rational"] = fmt(x);
  result["E"] = text_of(e.get());
  std::string text;
  if (s) {
    result["kind"] = "palindrome_pair";
    result["first"] = text_of(f.get());
    result["second"] = text_of(s.get());
    text = "pair " + text_of(f.get()) + " " + text_of(s.get());
  } else {
    result["kind"] = "single_palindrome";
    result["first"] = text_of(f.get());
    result["second"] = nullptr;
    text = "single " + text_of(f.get());
  }
  out.emit(text, result);
  return 0;
}

int cmd_farey(const Output& out, const std::string& rational) {
  const pw_rational x = parse_rational(rational);
  const auto sequence = sized_query<pw_rational>(
      [&](pw_rational* buf, size_t cap, size_t* len) { return pw_farey_sequence(x, buf, cap, len); });
  const auto cf = continued_fraction(x);
  std::vector<pw_rational> approx;
  if (cf) {
    approx = sized_query<pw_rational>(
        [&](pw_rational* buf, size_t cap, size_t* len) { return pw_approximants(x, buf, cap, len); });
  }
  json result;
  result["rational"] = fmt(x);
  result["sequence"] = rationals_json(sequence);
  result["level"] = farey_level(x);
  std::string neighbors = "none";
  if (!is_base(x)) {
    pw_rational lo{}, hi{};
    check(pw_distinguished_neighbors(x, &lo, &hi));
    result["neighbors"] = {fmt(lo), fmt(hi)};
    neighbors = fmt(lo) + "," + fmt(hi);
  } else {
    result["neighbors"] = nullptr;
  }
  result["approximants"] = rationals_json(approx);
  result["cf"] = cf ? json(*cf) : json(nullptr);
  const std::string text = "sequence=" + join_rationals(sequence) + " level=" + std::to_string(farey_level(x)) +
                           " neighbors=" + neighbors + " approximants=" + join_rationals(approx) +
                           " cf=" + join_cf(cf);
  out.emit(text, result);
  return 0;
}

int cmd_cutseq(const Output& out, const std::string& rational, const std::string& word_text, const std::string& start,
               const std::string& svg_path) {
  if (rational.empty() == word_text.empty()) throw CLI::ValidationError("cutseq needs exactly one of <p/q> or --word");
  json result;
  WordPtr word;
  if (!rational.empty()) {
    const pw_rational x = parse_rational(rational);
    pw_start kind = PW_START_LOWEST_A;
    uint64_t offset = 0;
    if (start == "lowest-a") {
      kind = PW_START_LOWEST_A;
    } else if (start == "bottom") {
      kind = PW_START_RIGHTMOST_BOTTOM;
    } else if (start == "middle") {
      kind = PW_START_MIDDLE;
    } else {
      kind = PW_START_OFFSET;
      offset = std::stoull(start);
    }
    pw_word* w = nullptr;
    check(pw_cutting_word(x, kind, offset, &w));
    word.reset(w);
    result["rational"] = fmt(x);
    result["start"] = start;
  } else {
    const auto raw = parse_word(word_text);
    pw_word* core = nullptr;
    pw_word* conj = nullptr;
    check(pw_word_cyclic_reduce(raw.get(), &core, &conj));
    WordPtr conj_ptr(conj);
    word.reset(core);
    result["rational"] = nullptr;
  }
  pw_diagram* raw_diagram = nullptr;
  check(pw_diagram_build(word.get(), &raw_diagram));
  DiagramPtr diagram(raw_diagram);
  pw_counts counts{};
  check(pw_diagram_counts(diagram.get(), &counts));
  int simple = 0;
  check(pw_diagram_is_simple(diagram.get(), &simple));
  char* dj = nullptr;
  check(pw_diagram_json(diagram.get(), &dj));
  result["word"] = text_of(word.get());
  result["diagram"] = json::parse(take(dj));
  if (!svg_path.empty()) {
    char* svg = nullptr;
    check(pw_diagram_svg(diagram.get(), &svg));
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw DomainFailure{"cannot write SVG file " + svg_path};
    f << take(svg);
    result["svg"] = svg_path;
  }
  const std::string text = "word=" + text_of(word.get()) + " vertical=" + std::to_string(counts.vertical) +
                           " horizontal=" + std::to_string(counts.horizontal) +
                           " corner=" + std::to_string(counts.corner) + " simple=" + (simple ? "true" : "false");
  out.emit(text, result);
  return 0;
}

int cmd_associates(const Output& out, const std::string& a, const std::string& b) {
  const pw_rational x = parse_rational(a);
  const pw_rational y = parse_rational(b);
  int assoc = 0;
  check(pw_associates(x, y, &assoc));
  int64_t det = 0;
  check(pw_determinant(x, y, &det));
  const auto wx = scheme_word(x, PW_SCHEME_W);
  const auto wy = scheme_word(y, PW_SCHEME_W);
  int generating = 0;
  check(pw_is_generating_pair(wx.get(), wy.get(), &generating));
  json result;
  result["x"] = fmt(x);
  result["y"] = fmt(y);
  result["determinant"] = det;
  result["associates"] = assoc != 0;
  result["generating_pair"] = generating != 0;
  result["W_x"] = text_of(wx.get());
  result["W_y"] = text_of(wy.get());
  const std::string text = std::string(assoc ? "associates" : "not associates") + " det=" +
                           std::to_string(det < 0 ? -det : det) + " generating=" + (generating ? "true" : "false");
  out.emit(text, result);
  return 0;
}

int cmd_enumerate(const Output& out, int max_level) {
  if (max_level < 0 || max_level > kMaxLevelCap) {
    throw CLI::ValidationError("--max-level must be between 0 and " + std::to_string(kMaxLevelCap));
  }
  struct Ctx {
    const Output* out;
    json items = json::array();
  } ctx{&out};
  const auto visit = [](void* raw, const pw_enumerated* item) -> int {
    auto* c = static_cast<Ctx*>(raw);
    const std::string w = text_of(item->w);
    const std::string e = text_of(item->e);
    if (c->out->format == "json") {
      c->items.push_back({{"rational", fmt(item->slope)}, {"W", w}, {"E", e}, {"level", item->level}});
    } else {
      std::cout << fmt(item->slope) << '\t' << w << '\t' << e << '\t' << item->level << '\n';
    }
    return 0;
  };
  check(pw_enumerate(max_level, visit, &ctx));
  if (out.format == "json") out.emit("", {{"max_level", max_level}, {"items", ctx.items}});
  return 0;
}

int cmd_cross_check(const Output& out, unsigned max_len) {
  char* raw = nullptr;
  int ok = 0;
  check(pw_cross_check(max_len, 20, &raw, &ok));
  const json report = json::parse(take(raw));
  const std::string text =
      "checked=" + report["checked"].dump() + " primitives=" + report["primitives"].dump() +
      " disagreements=" + report["disagreement_count"].dump() + " pairs=" + report["pairs_checked"].dump() +
      " neighbor_pairs=" + report["neighbor_pairs"].dump() +
      " pair_disagreements=" + report["pair_disagreement_count"].dump();
  out.emit(text, report);
  return ok ? 0 : 1;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (size_t i = 0; i < args.size(); ++i) s += (i ? " " : "") + args[i];
  return s;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Primitive words, palindromes and Farey arithmetic in the free group F(A, B)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pw_version()));

  std::string format = "text";
  if (const char* env = std::getenv("PRIMWORDS_FORMAT"); env != nullptr && *env != '\0') format = env;
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(choices));
  };

  std::string rational, rational2, word_text, scheme, start = "lowest-a", svg_path;
  int max_level = kDefaultMaxLevel;
  unsigned max_len = 0;

  auto* word = app.add_subcommand("word", "Words, exponents, continued fraction and level of p/q");
  word->add_option("rational", rational, "p/q")->required();
  word->add_option("--scheme", scheme, "w, e, cf or v")->check(CLI::IsMember({"w", "e", "cf", "v"}));
  add_format(word, {"text", "json"});

  auto* chk = app.add_subcommand("check", "Primitivity verdict for a word");
  chk->add_option("word", word_text, "word over A, B, a, b")->required();
  add_format(chk, {"text", "json"});

  auto* pal = app.add_subcommand("palindrome", "Palindromic factorisation of E(p/q)");
  pal->add_option("rational", rational, "p/q")->required();
  add_format(pal, {"text", "json"});

  auto* farey = app.add_subcommand("farey", "Farey sequence, level, distinguished neighbours, approximants");
  farey->add_option("rational", rational, "p/q")->required();
  add_format(farey, {"text", "json"});

  auto* cut = app.add_subcommand("cutseq", "Cutting word and strand census");
  cut->add_option("rational", rational, "p/q");
  cut->add_option("--word", word_text, "diagram an arbitrary word instead");
  cut->add_option("--start", start, "lowest-a, bottom, middle or an offset")
      ->check(CLI::IsMember({"lowest-a", "bottom", "middle"}) | CLI::NonNegativeNumber);
  cut->add_option("--svg", svg_path, "write the strand diagram as SVG");
  add_format(cut, {"text", "json"});

  auto* assoc = app.add_subcommand("associates", "Neighbour and generating-pair verdict");
  assoc->add_option("x", rational, "p/q")->required();
  assoc->add_option("y", rational2, "r/s")->required();
  add_format(assoc, {"text", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "All primitive words up to a Farey level");
  enumerate->add_option("--max-level", max_level, "level bound (at most 20)")->capture_default_str();
  add_format(enumerate, {"text", "json", "tsv"});

  auto* cross = app.add_subcommand("cross-check", "Compare the decision procedure with the oracles");
  cross->add_option("--max-len", max_len, "longest word checked (at most 14)")->required();
  add_format(cross, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (format != "text" && format != "json" && !(format == "tsv" && sub == enumerate)) {
    std::cerr << "unsupported format '" << format << "' for " << sub->get_name() << "\n";
    return 2;
  }
  const Output out{format, sub->get_name(), join_args(std::vector<std::string>(argv + 2, argv + argc))};

  try {
    if (sub == word) return cmd_word(out, rational, scheme);
    if (sub == chk) return cmd_check(out, word_text);
    if (sub == pal) return cmd_palindrome(out, rational);
    if (sub == farey) return cmd_farey(out, rational);
    if (sub == cut) return cmd_cutseq(out, rational, word_text, start, svg_path);
    if (sub == assoc) return cmd_associates(out, rational, rational2);
    if (sub == enumerate) return cmd_enumerate(out, max_level);
    if (sub == cross) return cmd_cross_check(out, max_len);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return 2;
}

int main(int argc, char** argv) { return run(argc, argv); }
